#include "helpers.hpp"

#include "ranklab/catalog.hpp"
#include "ranklab/errors.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/io.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

namespace {

Instance pair(const Matrix& a, const Matrix& b, unsigned k = 1) {
    Instance in;
    in.m = a.rows();
    in.k = k;
    in.field = a.field();
    in.matrices = {{"A", a}, {"B", b}};
    return in;
}

Outcome run(std::string_view id, const Instance& in) { return evaluate(findEntry(id), in).outcome; }

const Matrix e11 = Matrix::fromInts(2, 2, {1, 0, 0, 0});
const Matrix e22 = Matrix::fromInts(2, 2, {0, 0, 0, 1});

}  // namespace

TEST_CASE("registry") {
    std::set<std::string> ids;
    for (const CatalogEntry& e : catalog()) {
        CHECK_MESSAGE(ids.insert(e.id).second, e.id);
        CHECK(!e.statement.empty());
        CHECK(static_cast<bool>(e.check));
        if (e.erratum) CHECK(!e.erratum->note.empty());
    }
    CHECK(ids.size() > 200);
    CHECK(findEntry("v31").id == "v31");
    CHECK_THROWS_AS(findEntry("nosuch"), UsageError);
    const std::vector<std::string> errata = erratumIds();
    for (const char* required : {"v310", "T4c", "TN45b3"})
        CHECK(std::find(errata.begin(), errata.end(), required) != errata.end());
}

TEST_CASE("hand instances") {
    Rng rng = makeRng(51);
    const Matrix a = randomIdempotent(3, 2, rng);
    CHECK(run("v31", pair(a, a)) == Outcome::Pass);
    CHECK(run("hh25", pair(e11, e22)) == Outcome::Pass);
    CHECK(run("v35", pair(e11, e22)) == Outcome::Pass);
    CHECK(run("T4a", pair(e11, e22)) == Outcome::Pass);
    CHECK(run("v38", pair(a, a)) == Outcome::Pass);
    for (unsigned k : {1u, 2u, 3u}) CHECK(run("z16", pair(a, a, k)) == Outcome::Pass);
    CHECK(run("w62", pair(a, a)) == Outcome::Pass);
    CHECK(run("TK311a", pair(e11, e22)) == Outcome::Pass);

    const Matrix e1 = Matrix::fromInts(2, 1, {1, 0});
    CHECK(run("TW28b", pair(e1, e1)) == Outcome::Pass);

    Instance dd = pair(Matrix::identity(2), Matrix::identity(2));
    dd.scalars = {{"alpha", Scalar(1)}, {"beta", Scalar(1)}};
    CHECK(run("dd37", dd) == Outcome::Pass);
    Instance ff = pair(a, randomIdempotent(3, 1, rng));
    ff.scalars = {{"alpha", Scalar(1)}, {"beta", Scalar(2)}};
    CHECK(run("ff31", ff) == Outcome::Pass);

    Instance triple;
    triple.m = 2;
    triple.matrices = {{"A", Matrix::identity(2)}, {"B", Matrix::identity(2)}, {"C", Matrix::identity(2)}};
    CHECK(run("3108", triple) == Outcome::Pass);
}

TEST_CASE("a wrong identity is reported with its inputs") {
    // the printed w24 sign fails on some pair; the literal check is kept for the audit
    const CatalogEntry& e = findEntry("w24");
    REQUIRE(e.erratum);
    REQUIRE(static_cast<bool>(e.erratum->literalCheck));
    Rng rng = makeRng(52);
    bool literalFailed = false;
    for (int t = 0; t < 60 && !literalFailed; ++t) {
        const MatrixPair p = randomIdempotentPair(3, rng, PairFlavor::Independent);
        CHECK(evaluate(e, pair(p.A, p.B)).outcome == Outcome::Pass);
        literalFailed = e.erratum->literalCheck(pair(p.A, p.B)).outcome == Outcome::Fail;
    }
    CHECK(literalFailed);
}

TEST_CASE("derived rank equalities agree on shared instances") {
    Rng rng = makeRng(53);
    for (std::size_t t = 0; t < 30; ++t) {
        const MatrixPair p = randomIdempotentPair(3, rng, flavorForTrial(t));
        for (unsigned k : {1u, 2u}) {
            const Instance in = pair(p.A, p.B, k);
            CHECK(run("z20", in) == run("z21", in));
            CHECK(run("z22", in) == run("z23", in));
        }
    }
}

TEST_CASE("subspace verdicts are stable under a change of basis") {
    Rng rng = makeRng(54);
    for (std::size_t t = 0; t < 20; ++t) {
        const MatrixPair p = randomIdempotentPair(3, rng, flavorForTrial(t));
        const Matrix s = randomNonsingular(3, rng);
        const Matrix si = inverse(s);
        for (const char* id : {"w62", "TK311a", "TK311c", "TK34a"}) {
            CHECK(run(id, pair(p.A, p.B, 2)) == Outcome::Pass);
            CHECK(run(id, pair(s * p.A * si, s * p.B * si, 2)) == Outcome::Pass);
        }
    }
}

TEST_CASE("suites") {
    SuiteConfig c;
    c.entries = {"v31"};
    c.dimLo = c.dimHi = 3;
    c.trials = 10;
    c.seed = 7;
    const Report r = runSuite(c);
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].passes == 10);
    CHECK(r.totalFails() == 0);

    SuiteConfig empty;
    empty.trials = 5;
    CHECK(runSuite(empty).entries.empty());

    c.entries = {"v31", "w3", "z16"};
    c.dimLo = 2;
    CHECK(reportJson(runSuite(c)) == reportJson(runSuite(c)));

    SuiteConfig bad;
    bad.entries = {"v36"};
    bad.field = 0;
    CHECK_THROWS_AS(selectEntries(bad), ConfigurationError);
    bad.entries = {"nosuch"};
    CHECK_THROWS(selectEntries(bad));
}

TEST_CASE("sqrt entries run in their own field") {
    SuiteConfig c;
    c.entries = {"v36", "3112k1"};
    c.dimLo = 2;
    c.dimHi = 3;
    c.trials = 4;
    const Report r = runSuite(c);
    for (const EntryReport& e : r.entries) {
        CHECK(e.fails == 0);
        CHECK(e.passes > 0);
    }
}
