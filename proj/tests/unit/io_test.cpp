#include "helpers.hpp"

#include "ranklab/errors.hpp"
#include "ranklab/io.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace testing;
using nlohmann::json;

TEST_CASE("report payload carries exact counterexamples") {
    Report r;
    r.config.entries = {"x"};
    r.config.seed = 5;
    Instance in;
    in.m = 2;
    in.seed = 5;
    in.matrices = {{"A", Matrix(2, 2, {Scalar::rational(Rational(1, 3)), Scalar::imaginaryUnit(), Scalar(0), Scalar(1)})}};
    in.scalars = {{"alpha", Scalar::rational(Rational(-2, 5))}};
    r.entries.push_back({"x", 3, 1, 0, {{in, std::int64_t(2), std::int64_t(3)}}});
    const json j = json::parse(reportJson(r));
    CHECK(j["meta"]["seed"] == 5);
    CHECK(j["entries"][0]["fails"] == 1);
    const json& f = j["entries"][0]["failures"][0];
    CHECK(f["lhs"] == 2);
    CHECK(f["inputs"]["matrices"]["A"]["entries"][0] == json::array({"1/3", "i"}));
    CHECK(f["inputs"]["scalars"]["alpha"] == "-2/5");
    CHECK_FALSE(j.contains("audit"));
}

TEST_CASE("index covers the catalog") {
    const json j = json::parse(catalogIndexJson());
    CHECK(j["entries"].size() == catalog().size());
    CHECK(j["entries"][0].contains("checker"));
    CHECK(j["entries"][0].contains("statement"));
}

TEST_CASE("generated instances") {
    GenRequest q;
    q.kind = "idempotent-pair";
    q.m = 3;
    q.ranks = {1, 2};
    q.seed = 9;
    const json a = json::parse(generateInstanceJson(q));
    CHECK(a["checks"]["idempotent"] == true);
    CHECK(a["ranks"] == json::array({1, 2}));
    CHECK(generateInstanceJson(q) == generateInstanceJson(q));

    q.kind = "projector-pair";
    q.m = 2;
    q.ranks = {0, 2};
    const json p = json::parse(generateInstanceJson(q));
    CHECK(p["matrices"]["A"]["entries"] == json::array({json::array({"0", "0"}), json::array({"0", "0"})}));
    CHECK(p["matrices"]["B"]["entries"] == json::array({json::array({"1", "0"}), json::array({"0", "1"})}));

    q.kind = "star-pair";
    q.ranks = {};
    CHECK(json::parse(generateInstanceJson(q))["checks"]["conjugateTranspose"] == true);

    q.kind = "equation-system";
    for (const char* s : {"z1", "z8", "z11"}) {
        q.system = s;
        CHECK(json::parse(generateInstanceJson(q))["checks"]["satisfiesSystem"] == true);
    }
    q.kind = "idempotent-pair";
    q.ranks = {3, 1};
    CHECK_THROWS_AS(generateInstanceJson(q), UsageError);
    q.kind = "nope";
    CHECK_THROWS_AS(generateInstanceJson(q), UsageError);
}

TEST_CASE("certification document") {
    ExtremalConfig c;
    c.families = {FamilyId::TN44, FamilyId::T8};
    c.dimLo = c.dimHi = 2;
    c.trials = 4;
    const std::vector<CertificationRecord> recs = runExtremal(c);
    CHECK(recs.size() == 4 + 4 * 2);
    const json j = json::parse(certificationJson(c, recs));
    CHECK(j["summary"]["violations"] == 0);
    CHECK(j["certifications"][0]["family"] == "TN44");
    CHECK(j["certifications"][4]["inverses"] == "shared");
    CHECK(j["certifications"][5]["inverses"] == "independent");
    CHECK(certificationJson(c, recs) == certificationJson(c, runExtremal(c)));
}
