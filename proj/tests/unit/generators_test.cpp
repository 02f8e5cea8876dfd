#include "helpers.hpp"

#include "ranklab/errors.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/geninv.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("idempotents of prescribed rank") {
    Rng rng = makeRng(41);
    CHECK(randomIdempotent(3, 0, rng).isZero());
    CHECK(randomIdempotent(3, 3, rng) == Matrix::identity(3));
    CHECK_THROWS_AS(randomIdempotent(2, 3, rng), UsageError);
    // P diag(1, 0) P^-1 with P = [[1, 1], [0, 1]]
    const Matrix p = ints(2, 2, {1, 1, 0, 1});
    const Matrix a = p * ints(2, 2, {1, 0, 0, 0}) * inverse(p);
    CHECK(a == ints(2, 2, {1, -1, 0, 0}));
    for (int t = 0; t < 50; ++t) {
        const std::size_t m = randomIndex(rng, 1, 5), k = randomIndex(rng, 0, m);
        const Matrix e = randomIdempotent(m, k, rng);
        CHECK(e * e == e);
        CHECK(rank(e) == k);
    }
}

TEST_CASE("orthogonal projectors") {
    Rng rng = makeRng(42);
    CHECK(randomProjector(3, 3, rng) == Matrix::identity(3));
    CHECK(randomProjector(3, 0, rng).isZero());
    for (int t = 0; t < 30; ++t) {
        const std::size_t m = randomIndex(rng, 1, 4), k = randomIndex(rng, 0, m);
        const Matrix p = randomProjector(m, k, rng);
        CHECK(p * p == p);
        CHECK(p.conjTranspose() == p);
        CHECK(rank(p) == k);
    }
    const Matrix u = randomUnitary(3, rng);
    CHECK(u * u.conjTranspose() == Matrix::identity(3));
}

TEST_CASE("derived idempotents") {
    const Scalar i = Scalar::imaginaryUnit();
    const Matrix skew = Matrix::diagonal({i, -i});
    CHECK(derivedIdempotent(DerivedRule::SkewInvolutionPlus, skew) == ints(2, 2, {0, 0, 0, 1}));
    const Matrix swap = ints(2, 2, {0, 1, 1, 0});
    const Matrix plus = derivedIdempotent(DerivedRule::InvolutionPlus, swap);
    CHECK(plus * plus == plus);
    CHECK_THROWS_AS(derivedIdempotent(DerivedRule::InvolutionPlus, ints(2, 2, {1, 1, 0, 1})), PreconditionError);
    Rng rng = makeRng(43);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = randomMatrix(2, 3, rng, 2), b = randomMatrix(3, 2, rng, 2);
        const Matrix e = derivedIdempotent(DerivedRule::ProductBAdagA, a, b);
        CHECK(e * e == e);
    }
}

TEST_CASE("pair flavours") {
    Rng rng = makeRng(44);
    for (std::size_t t = 0; t < 60; ++t) {
        const PairFlavor fl = flavorForTrial(t);
        const MatrixPair p = randomIdempotentPair(3, rng, fl);
        CHECK(p.A * p.A == p.A);
        CHECK(p.B * p.B == p.B);
        if (fl == PairFlavor::Commuting) CHECK(p.A * p.B == p.B * p.A);
        if (fl == PairFlavor::Disjoint) CHECK((p.A * p.B).isZero());
        if (fl == PairFlavor::Complementary) CHECK(p.A + p.B == Matrix::identity(3));
        if (fl == PairFlavor::SharedRange) CHECK(rangeEqual(p.A, p.B));
        const MatrixPair q = randomProjectorPair(3, rng, fl);
        CHECK(q.A.conjTranspose() == q.A);
        CHECK(q.B * q.B == q.B);
    }
    const std::vector<Matrix> fam = randomIdempotentFamily(3, 3, rng, true);
    CHECK(fam[0] * fam[1] == fam[1] * fam[0]);
    CHECK(fam[1] * fam[2] == fam[2] * fam[1]);
}

TEST_CASE("equation systems are satisfied by substitution") {
    Rng rng = makeRng(45);
    for (EquationKind k : {EquationKind::Z1, EquationKind::Z8, EquationKind::Z11})
        for (int t = 0; t < 15; ++t) {
            const EquationSample s = sampleEquationSolutions(k, randomIndex(rng, 2, 4), rng);
            CHECK(satisfiesSystem(s));
            if (k == EquationKind::Z1) {
                CHECK(s.M * s.X == s.X);
                CHECK(s.Y * s.M == s.Y);
                CHECK(s.M * s.Y == s.X * s.M);
            }
            if (k == EquationKind::Z11) {
                CHECK(s.A * s.X == s.X);
                CHECK(s.B * s.Y == s.Y);
            }
        }
    // X = AB, Y = BA from idempotents satisfy the z11 conditions
    const MatrixPair p = randomIdempotentPair(3, rng, PairFlavor::Independent);
    const EquationSample s{EquationKind::Z11, Matrix(), p.A, p.B, p.A * p.B, p.B * p.A};
    CHECK(satisfiesSystem(s));
    CHECK(rangeContained(s.A * s.Y, s.X));
    CHECK(rangeContained(s.B * s.X, s.Y));
}
