#include "helpers.hpp"

#include "ranklab/errors.hpp"
#include "ranklab/extremal.hpp"
#include "ranklab/geninv.hpp"

#include <doctest.h>

using namespace testing;

namespace {

PencilFamily family(FamilyId id, long lambda, std::vector<Matrix> inputs) {
    PencilFamily f;
    f.id = id;
    f.lambda = Scalar(lambda);
    f.inputs = std::move(inputs);
    return f;
}

const Matrix e1 = Matrix::fromInts(2, 1, {1, 0});
const Matrix e2 = Matrix::fromInts(2, 1, {0, 1});

// Ranks of A - B1 X1 C1 - B2 X2 C2 over random X1, X2.
std::pair<std::size_t, std::size_t> sampledLMVF(const Matrix& a, const Matrix& b1, const Matrix& c1, const Matrix& b2,
                                                const Matrix& c2, Rng& rng, int draws) {
    std::size_t lo = SIZE_MAX, hi = 0;
    for (int t = 0; t < draws; ++t) {
        const Matrix x1 = randomMatrix(b1.cols(), c1.rows(), rng, 2), x2 = randomMatrix(b2.cols(), c2.rows(), rng, 2);
        const std::size_t r = rank(a - b1 * x1 * c1 - b2 * x2 * c2);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return {lo, hi};
}

Matrix ranked(std::size_t r, std::size_t c, Rng& rng) { return randomOfRank(r, c, randomIndex(rng, 0, std::min(r, c)), rng); }

}  // namespace

TEST_CASE("two-term linear function bounds") {
    Rng rng = makeRng(61);
    const Matrix a = randomOfRank(3, 4, 2, rng);
    const Bounds constant = evalTwoTermLMVFBounds(a, Matrix::zero(3, 2), Matrix::zero(2, 4), Matrix::zero(3, 1),
                                                  Matrix::zero(1, 4));
    CHECK(constant == Bounds{2, 2});
    // A - X over all X
    const Bounds free = evalTwoTermLMVFBounds(a, Matrix::identity(3), Matrix::identity(4), Matrix::zero(3, 1),
                                              Matrix::zero(1, 4));
    CHECK(free.min == 0);
    CHECK(free.max == 3);
    CHECK_THROWS_AS(evalTwoTermLMVFBounds(a, Matrix::zero(2, 2), Matrix::zero(2, 4), Matrix::zero(3, 1),
                                          Matrix::zero(1, 4)),
                    UsageError);
    for (int t = 0; t < 40; ++t) {
        const std::size_t p = randomIndex(rng, 2, 4), q = randomIndex(rng, 2, 4);
        const Matrix a0 = ranked(p, q, rng);
        const Matrix b1 = ranked(p, randomIndex(rng, 1, 3), rng), c1 = ranked(randomIndex(rng, 1, 3), q, rng);
        const Matrix b2 = ranked(p, randomIndex(rng, 1, 3), rng), c2 = ranked(randomIndex(rng, 1, 3), q, rng);
        const Bounds b = evalTwoTermLMVFBounds(a0, b1, c1, b2, c2);
        const auto [lo, hi] = sampledLMVF(a0, b1, c1, b2, c2, rng, 200);
        CHECK(b.min <= lo);
        CHECK(hi == b.max);
    }
}

TEST_CASE("one-term generalized inverse bounds") {
    Rng rng = makeRng(62);
    for (int t = 0; t < 30; ++t) {
        const Matrix a = ranked(3, 3, rng), b = ranked(3, 2, rng), d = ranked(2, 2, rng);
        CHECK(evalOneTermGInverseBounds(a, b, Matrix::zero(2, 3), d) == Bounds{rank(d), rank(d)});
        const Matrix n = randomNonsingular(3, rng), c = ranked(2, 3, rng);
        const std::size_t fixed = rank(d - c * inverse(n) * b);
        CHECK(evalOneTermGInverseBounds(n, b, c, d) == Bounds{fixed, fixed});
        // sampled D - C A- B
        const Bounds bd = evalOneTermGInverseBounds(a, b, c, d);
        std::size_t lo = SIZE_MAX, hi = 0;
        for (int s = 0; s < 100; ++s) {
            const std::size_t r = rank(d - c * sampleGenInverse(a, GInverseClass::One, rng).inverse * b);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        CHECK(bd.min <= lo);
        CHECK(hi == bd.max);
    }
    const Matrix zero = Matrix::zero(3, 3), b = randomMatrix(3, 2, rng), c = randomMatrix(2, 3, rng), d = randomMatrix(2, 2, rng);
    const Bounds bz = evalOneTermGInverseBounds(zero, b, c, d);
    for (int s = 0; s < 50; ++s) {
        const std::size_t r = rank(d - c * sampleGenInverse(zero, GInverseClass::One, rng).inverse * b);
        CHECK(r >= bz.min);
        CHECK(r <= bz.max);
    }
}

TEST_CASE("closed forms at the documented points") {
    const Matrix z = Matrix::zero(2, 2);
    CHECK(evalPencilBounds(family(FamilyId::TN44, 3, {z, z})) == Bounds{2, 2});
    CHECK(evalPencilBounds(family(FamilyId::TN44, 0, {e1, e2})) == Bounds{2, 1});
    CHECK(evalPencilBounds(family(FamilyId::T9, 0, {Matrix::identity(3)})) == Bounds{0, 0});
    CHECK_THROWS_AS(evalPencilBounds(family(FamilyId::TN45, -1, {e1, e2})), UsageError);
    CHECK_THROWS_AS(evalPencilBounds(family(FamilyId::T7, 1, {e1, e1.transpose()})), UsageError);
    CHECK_THROWS_AS(evalPencilBounds(family(FamilyId::TN44, 0, {e1, Matrix::zero(3, 1)})), UsageError);
    CHECK_THROWS_AS(evalPencilBounds(family(FamilyId::T8, 0, {e1})), UsageError);
    CHECK(parseFamily("T10") == FamilyId::T10);
    CHECK_FALSE(parseFamily("T11"));
    CHECK(allFamilies().size() == 11);
}

TEST_CASE("closed forms equal the two-term lemma through the parametrization") {
    for (FamilyId id : allFamilies())
        for (const Regime& g : regimes(id))
            for (std::size_t i = 0; i < 12; ++i) {
                Rng rng = makeRng(63, {std::uint64_t(id), tagOf(g.name), i});
                const PencilFamily f = randomFamilyInstance(id, 2 + i % 3, g, rng);
                const std::optional<Bounds> p = parametrizedBounds(f);
                if (id == FamilyId::Z41 || id == FamilyId::Z44) {
                    CHECK_FALSE(p);
                    continue;
                }
                REQUIRE(p);
                CHECK_MESSAGE(*p == evalPencilBounds(f), familyName(id), " ", g.name);
            }
}

TEST_CASE("one-term formula reproduces the Z39 family") {
    Rng rng = makeRng(64);
    for (int t = 0; t < 30; ++t) {
        const PencilFamily f = randomFamilyInstance(FamilyId::Z39, 3, regimes(FamilyId::Z39)[0], rng);
        const Matrix &a = f.inputs[0], &b = f.inputs[1];
        // AA-B = D - C A- B with D = 0, C = -A
        CHECK(evalOneTermGInverseBounds(a, b, -a, Matrix::zero(a.rows(), b.cols())) == evalPencilBounds(f));
    }
}

TEST_CASE("Z44 minimum is the triple range intersection") {
    Rng rng = makeRng(65);
    for (int t = 0; t < 40; ++t) {
        const PencilFamily f = randomFamilyInstance(FamilyId::Z44, 2 + t % 3, regimes(FamilyId::Z44)[0], rng);
        const Matrix &a = f.inputs[0], &b = f.inputs[1], &c = f.inputs[2];
        const Matrix ab = hcat(a, b), ac = hcat(a, c), bc = hcat(b, c);
        CHECK(evalPencilBounds(f).min == rangeIntersectionDim(rangeIntersectionBasis(ab, ac), bc));
    }
}

TEST_CASE("sampling") {
    Rng rng = makeRng(66);
    const Matrix z = Matrix::zero(2, 2);
    for (int t = 0; t < 10; ++t) CHECK(samplePencilRank(family(FamilyId::TN44, 0, {z, z}), rng) == 0);
    const Matrix n = randomNonsingular(3, rng);
    const std::size_t first = samplePencilRank(family(FamilyId::T8, 1, {n}), rng);
    for (int t = 0; t < 10; ++t) CHECK(samplePencilRank(family(FamilyId::T8, 1, {n}), rng) == first);
    // the MP point of AA- + BB- for e1, e2 is I
    const PencilFamily f = family(FamilyId::TN44, 0, {e1, e2});
    CHECK(rank(pencilValue(f, {moorePenrose(e1), moorePenrose(e2)})) == 2);
}

TEST_CASE("certification") {
    Rng rng = makeRng(67);
    const Matrix z = Matrix::zero(2, 2);
    const Certification zero = certifyBounds(family(FamilyId::TN44, 0, {z, z}), 4, rng);
    CHECK(zero.bounds == Bounds{0, 0});
    CHECK(zero.maxAttained);
    CHECK(zero.minAttained);

    const Certification c = certifyBounds(family(FamilyId::TN44, 0, {e1, e2}), 16, rng);
    CHECK(c.outOfBounds.empty());
    CHECK(c.observedMin >= 1);
    CHECK(c.observedMax <= 2);
    CHECK(c.maxAttained);

    // B = C = 0: M = N, but the two inverses are drawn independently, so MM- - NN- ranges over 0..1 here
    const Matrix a = randomOfRank(2, 2, 1, rng), d = randomOfRank(1, 2, 1, rng);
    const PencilFamily t10 = family(FamilyId::T10, 0, {a, Matrix::zero(2, 2), Matrix::zero(1, 2), d});
    const Certification ct = certifyBounds(t10, 16, rng);
    CHECK(ct.bounds == Bounds{1, 0});
    const Matrix mp = moorePenrose(inverseBases(t10)[0]);
    CHECK(rank(pencilValue(t10, {mp, mp})) == 0);
    CHECK(ct.maxAttained);
    CHECK(ct.minAttained);
    CHECK(ct.outOfBounds.empty());
    CHECK_THROWS_AS(certifyBounds(t10, 0, rng), UsageError);
}

TEST_CASE("T8 and T9 agree in shared and independent inverse modes") {
    for (FamilyId id : {FamilyId::T8, FamilyId::T9})
        for (const Regime& g : regimes(id)) {
            Rng rng = makeRng(68, {std::uint64_t(id), tagOf(g.name)});
            PencilFamily f = randomFamilyInstance(id, 3, g, rng);
            f.sharedInverse = false;
            const Certification indep = certifyBounds(f, 16, rng);
            f.sharedInverse = true;
            const Certification shared = certifyBounds(f, 16, rng);
            CHECK(indep.outOfBounds.empty());
            CHECK(shared.outOfBounds.empty());
            CHECK(indep.bounds == shared.bounds);
        }
}

TEST_CASE("nonsingular for every choice of inverses, re-derived from the bounds") {
    // lambda outside {0, -1, -2}: always nonsingular iff one range contains the other
    Rng rng = makeRng(69);
    for (int t = 0; t < 40; ++t) {
        PencilFamily f = randomFamilyInstance(FamilyId::TN44, 3, regimes(FamilyId::TN44)[0], rng);
        const Matrix &a = f.inputs[0], &b = f.inputs[1];
        const bool nested = rangeContained(a, b) || rangeContained(b, a);
        const Certification c = certifyBounds(f, 16, rng);
        CHECK(c.outOfBounds.empty());
        if (nested) CHECK(c.observedMin == 3);
        else CHECK(c.bounds.min < 3);
        CHECK(parametrizedBounds(f) == std::optional<Bounds>(c.bounds));
    }
    // R(A) strictly inside R(B) already forces nonsingularity, so R(A) = R(B) is not necessary
    const PencilFamily strict = family(FamilyId::TN44, 1, {e1, Matrix::identity(2)});
    CHECK_FALSE(rangeEqual(e1, Matrix::identity(2)));
    CHECK(evalPencilBounds(strict) == Bounds{2, 2});
    CHECK(certifyBounds(strict, 16, rng).observedMin == 2);

    // lambda = 0: nonsingular for all iff r(A) = m or r(B) = m; invariant iff nested ranges
    for (int t = 0; t < 40; ++t) {
        const PencilFamily f = randomFamilyInstance(FamilyId::TN44, 3, regimes(FamilyId::TN44)[1], rng);
        const Matrix &a = f.inputs[0], &b = f.inputs[1];
        const Bounds bd = evalPencilBounds(f);
        CHECK((bd.min == 3) == (rank(a) == 3 || rank(b) == 3));
        CHECK((bd.min == bd.max) == (rangeContained(a, b) || rangeContained(b, a)));
    }
}
