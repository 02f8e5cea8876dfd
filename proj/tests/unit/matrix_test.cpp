#include "helpers.hpp"

#include "ranklab/errors.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("rank small cases") {
    CHECK(rank(Matrix::zero(3, 3)) == 0);
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(ints(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(Matrix(0, 3)) == 0);
}

TEST_CASE("fraction-free rank equals naive rank and the construction rank") {
    Rng rng = makeRng(21);
    for (int t = 0; t < 150; ++t) {
        const std::size_t rows = randomIndex(rng, 1, 6), cols = randomIndex(rng, 1, 6);
        const std::size_t r = randomIndex(rng, 0, std::min(rows, cols));
        const Matrix m = randomOfRank(rows, cols, r, rng);
        CHECK(rank(m) == r);
        CHECK(rankNaive(m) == r);
    }
}

TEST_CASE("block assembly and transposes") {
    const Matrix i2 = Matrix::identity(2), z2 = Matrix::zero(2, 2);
    CHECK(blockAssemble({{i2, z2}, {z2, i2}}) == Matrix::identity(4));
    const Matrix m = ints(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(blockAssemble({{m}}) == m);
    const Matrix one = ints(1, 1, {1}), zero = ints(1, 1, {0});
    // N = [-I, 0, X; 0, I, Y; X, Y, 0] with X = Y = I_1
    CHECK(blockAssemble({{-one, zero, one}, {zero, one, one}, {one, one, zero}}) ==
          ints(3, 3, {-1, 0, 1, 0, 1, 1, 1, 1, 0}));
    CHECK_THROWS_AS(blockAssemble({{i2, m}, {m, i2}}), UsageError);
    const Matrix im = Matrix(1, 1, {Scalar::imaginaryUnit()});
    CHECK(im.conjTranspose() == Matrix(1, 1, {-Scalar::imaginaryUnit()}));
    CHECK(ints(2, 2, {1, 2, 0, 1}).conjTranspose() == ints(2, 2, {1, 0, 2, 1}));
}

TEST_CASE("inverse") {
    CHECK(inverse(ints(2, 2, {1, 1, 0, 1})) == ints(2, 2, {1, -1, 0, 1}));
    CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
    const Matrix d = Matrix::diagonal({Scalar(2), Scalar::rational(Rational(1, 2))});
    CHECK(inverse(d) == Matrix::diagonal({Scalar::rational(Rational(1, 2)), Scalar(2)}));
    CHECK_THROWS_AS(inverse(ints(2, 2, {1, 2, 2, 4})), SingularMatrixError);
    Rng rng = makeRng(4);
    for (int t = 0; t < 30; ++t) {
        const Matrix m = randomNonsingular(randomIndex(rng, 1, 5), rng);
        CHECK(m * inverse(m) == m.eye());
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernelBasis(Matrix::zero(2, 2)).cols() == 2);
    CHECK(kernelBasis(Matrix::identity(3)).cols() == 0);
    const Matrix ones = ints(2, 2, {1, 1, 1, 1});
    const Matrix k = kernelBasis(ones);
    CHECK(k.cols() == 1);
    CHECK((ones * k).isZero());
    CHECK(rangeEqual(k, ints(2, 1, {1, -1})));
    Rng rng = makeRng(5);
    for (int t = 0; t < 40; ++t) {
        const Matrix m = randomOfRank(4, 5, randomIndex(rng, 0, 4), rng);
        const Matrix kb = kernelBasis(m);
        CHECK(kb.cols() == 5 - rank(m));
        CHECK((m * kb).isZero());
        CHECK(rank(kb) == kb.cols());
    }
}

TEST_CASE("range and null space relations") {
    const Matrix e1 = ints(3, 1, {1, 0, 0}), e2 = ints(3, 1, {0, 1, 0}), e3 = ints(3, 1, {0, 0, 1});
    CHECK(rangeIntersectionDim(Matrix::identity(3), Matrix::identity(3)) == 3);
    CHECK(rangeIntersectionDim(e1, e2) == 0);
    CHECK(rangeIntersectionDim(hcat(e1, e2), hcat(e2, e3)) == 1);
    CHECK(rangeEqual(rangeIntersectionBasis(hcat(e1, e2), hcat(e2, e3)), e2));
    CHECK(rangeContained(Matrix::zero(3, 2), e1));
    CHECK_FALSE(rangeEqual(e1, e2));
    Rng rng = makeRng(6);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = randomOfRank(4, 3, randomIndex(rng, 0, 3), rng);
        CHECK(rangeEqual(a, a * randomNonsingular(3, rng)));
        CHECK(nullspaceEqual(a, randomNonsingular(4, rng) * a));
    }
}

TEST_CASE("linear matrix systems") {
    Rng rng = makeRng(7);
    const Matrix i3 = Matrix::identity(3);
    // (I - M) X = 0 with M = I leaves X free; with M = 0 forces X = 0
    const MatrixEquation free{{{0, i3 - i3, i3}}, Matrix::zero(3, 3)};
    const std::vector<Matrix> any = solveLinearMatrixSystem({free}, {{3, 3}}, rng);
    CHECK(any[0].rows() == 3);
    const MatrixEquation forced{{{0, i3, i3}}, Matrix::zero(3, 3)};
    CHECK(solveLinearMatrixSystem({forced}, {{3, 3}}, rng)[0].isZero());
    // A X B + C Y = D, checked by substitution
    for (int t = 0; t < 20; ++t) {
        const Matrix a = randomMatrix(2, 3, rng, 2), b = randomMatrix(2, 2, rng, 2), c = randomMatrix(2, 2, rng, 2);
        const Matrix x0 = randomMatrix(3, 2, rng, 2), y0 = randomMatrix(2, 2, rng, 2);
        const Matrix d = a * x0 * b + c * y0;
        const MatrixEquation eq{{{0, a, b}, {1, c, Matrix::identity(2)}}, d};
        const std::vector<Matrix> s = solveLinearMatrixSystem({eq}, {{3, 2}, {2, 2}}, rng);
        CHECK(a * s[0] * b + c * s[1] == d);
    }
    const MatrixEquation none{{{0, Matrix::zero(2, 2), Matrix::identity(2)}}, Matrix::identity(2)};
    CHECK_THROWS_AS(solveLinearMatrixSystem({none}, {{2, 2}}, rng), NoSolutionError);
}

TEST_CASE("kronecker vectorization identity") {
    Rng rng = makeRng(8);
    const Matrix l = randomMatrix(2, 3, rng, 2), x = randomMatrix(3, 2, rng, 2), r = randomMatrix(2, 2, rng, 2);
    const Matrix k = kronecker(r.transpose(), l);
    // vec stacks columns
    std::vector<Scalar> vx, vy;
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < x.rows(); ++i) vx.push_back(x(i, j));
    const Matrix y = l * x * r;
    for (std::size_t j = 0; j < y.cols(); ++j)
        for (std::size_t i = 0; i < y.rows(); ++i) vy.push_back(y(i, j));
    CHECK(k * Matrix(vx.size(), 1, vx) == Matrix(vy.size(), 1, vy));
}
