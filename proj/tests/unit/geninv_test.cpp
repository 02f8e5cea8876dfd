#include "helpers.hpp"

#include "ranklab/errors.hpp"
#include "ranklab/geninv.hpp"

#include <doctest.h>

using namespace testing;

namespace {

bool penrose(const Matrix& a, const Matrix& x) {
    return a * x * a == a && x * a * x == x && (a * x).conjTranspose() == a * x && (x * a).conjTranspose() == x * a;
}

Scalar half() { return Scalar::rational(Rational(1, 2)); }

}  // namespace

TEST_CASE("Moore-Penrose examples") {
    const Matrix d = ints(2, 2, {1, 0, 0, 0});
    CHECK(moorePenrose(d) == d);
    CHECK(moorePenrose(ints(2, 1, {1, 1})) == Matrix(1, 2, {half(), half()}));
    CHECK(moorePenrose(Matrix::zero(2, 3)) == Matrix::zero(3, 2));
}

TEST_CASE("Moore-Penrose satisfies the four equations") {
    for (std::uint32_t d : {0u, 5u}) {
        const FieldSpec f = FieldSpec::withRadicand(d);
        Rng rng = makeRng(31, {d});
        for (int t = 0; t < 40; ++t) {
            const std::size_t rows = randomIndex(rng, 1, 5), cols = randomIndex(rng, 1, 5);
            Matrix a = randomOfRank(rows, cols, randomIndex(rng, 0, std::min(rows, cols)), rng, f);
            if (f.extended()) a = a + Scalar::sqrtRadicand(f) * randomOfRank(rows, cols, 1, rng, f);
            CHECK(penrose(a, moorePenrose(a)));
        }
    }
}

TEST_CASE("projector triple") {
    const ProjectorTriple id = projectorTriple(Matrix::identity(2));
    CHECK(id.P == Matrix::identity(2));
    CHECK(id.E.isZero());
    CHECK(id.F.isZero());
    const ProjectorTriple col = projectorTriple(ints(2, 1, {1, 1}));
    CHECK(col.P == Matrix(2, 2, {half(), half(), half(), half()}));
    CHECK(col.E == Matrix::identity(2) - col.P);
    CHECK(col.F == Matrix::zero(1, 1));
    const ProjectorTriple zero = projectorTriple(Matrix::zero(2, 3));
    CHECK(zero.P.isZero());
    CHECK(zero.E == Matrix::identity(2));
    CHECK(zero.F == Matrix::identity(3));
}

TEST_CASE("generalized inverse samples") {
    Rng rng = makeRng(32);
    const Matrix a = randomOfRank(3, 2, 1, rng);
    CHECK(genInverseFrom(a, Matrix::zero(2, 3), Matrix::zero(2, 3)) == moorePenrose(a));
    const Matrix n = randomNonsingular(3, rng);
    CHECK(sampleGenInverse(n, GInverseClass::One, rng).inverse == inverse(n));
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = randomIndex(rng, 1, 4), cols = randomIndex(rng, 1, 4);
        const Matrix m = randomOfRank(rows, cols, randomIndex(rng, 0, std::min(rows, cols)), rng);
        const GenInverseSample one = sampleGenInverse(m, GInverseClass::One, rng);
        CHECK(m * one.inverse * m == m);
        CHECK(genInverseFrom(m, one.U, one.V) == one.inverse);
        const Matrix x13 = sampleGenInverse(m, GInverseClass::OneThree, rng).inverse;
        CHECK(m * x13 * m == m);
        CHECK((m * x13).conjTranspose() == m * x13);
        const Matrix x14 = sampleGenInverse(m, GInverseClass::OneFour, rng).inverse;
        CHECK(m * x14 * m == m);
        CHECK((x14 * m).conjTranspose() == x14 * m);
    }
}

TEST_CASE("index, Drazin and group inverse") {
    const Matrix nil = ints(2, 2, {0, 1, 0, 0});
    CHECK(matrixIndex(Matrix::identity(2)) == 0);
    CHECK(matrixIndex(Matrix::zero(3, 3)) == 1);
    CHECK(matrixIndex(nil) == 2);
    CHECK(drazin(nil).isZero());
    const Matrix idem = ints(2, 2, {1, 1, 0, 0});
    CHECK(drazin(idem) == idem);
    Rng rng = makeRng(33);
    const Matrix n = randomNonsingular(3, rng);
    CHECK(drazin(n) == inverse(n));
    const Matrix half2 = Matrix::diagonal({half(), Scalar(0)});
    CHECK(groupInverse(Matrix::diagonal({Scalar(2), Scalar(0)})) == half2);
    CHECK(groupInverse(Matrix::identity(2)) == Matrix::identity(2));
    CHECK_THROWS_AS(groupInverse(nil), NotGroupInvertibleError);
}

TEST_CASE("Drazin equations and power independence") {
    Rng rng = makeRng(34);
    for (int t = 0; t < 40; ++t) {
        const std::size_t m = randomIndex(rng, 1, 4);
        // mix a nilpotent block into a random similarity so the index varies
        std::vector<Scalar> d(m * m, Scalar(0));
        const std::size_t chain = randomIndex(rng, 0, m - 1);
        for (std::size_t i = 0; i < chain; ++i) d[i * m + i + 1] = Scalar(1);
        for (std::size_t i = chain + 1; i < m; ++i) d[i * m + i] = randomGaussianInt(rng, 2);
        const Matrix p = randomNonsingular(m, rng);
        const Matrix a = p * Matrix(m, m, d) * inverse(p);
        const unsigned k = matrixIndex(a);
        const Matrix x = drazin(a);
        CHECK(x * a * x == x);
        CHECK(a * x == x * a);
        CHECK(a.pow(k + 1) * x == a.pow(k));
        CHECK(drazinWithPower(a, k + 1) == x);
    }
}
