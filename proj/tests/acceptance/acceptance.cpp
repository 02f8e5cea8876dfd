// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "ranklab/catalog.hpp"
#include "ranklab/extremal.hpp"
#include "ranklab/geninv.hpp"
#include "ranklab/io.hpp"
#include "ranklab/random.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ranklab;
using Clock = std::chrono::steady_clock;

struct Result {
    bool ok;
    std::string detail;
};

double seconds(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

std::vector<std::string> idsMatching(const char* pattern) {
    const std::regex re(pattern);
    std::vector<std::string> out;
    for (const CatalogEntry& e : catalog())
        if (!e.auditOnly && std::regex_match(e.id, re)) out.push_back(e.id);
    return out;
}

struct Tally {
    std::size_t entries = 0, passes = 0, fails = 0, misses = 0, silent = 0;
    std::string firstFail;

    void add(const Report& r) {
        for (const EntryReport& e : r.entries) {
            ++entries;
            passes += e.passes;
            fails += e.fails;
            misses += e.misses;
            if (e.passes == 0) ++silent;
            if (e.fails > 0 && firstFail.empty()) firstFail = e.id;
        }
    }

    std::string str() const {
        std::ostringstream os;
        os << entries << " entry runs, " << passes << " passes, " << fails << " fails, " << misses << " misses";
        if (!firstFail.empty()) os << " (first failing: " << firstFail << ")";
        return os.str();
    }
};

SuiteConfig suite(std::vector<std::string> ids, std::size_t lo, std::size_t hi, std::size_t trials, std::uint64_t seed) {
    SuiteConfig c;
    c.allEntries = ids.empty();
    c.entries = std::move(ids);
    c.dimLo = lo;
    c.dimHi = hi;
    c.trials = trials;
    c.seed = seed;
    return c;
}

std::string seedOneReport;

Result catalogSoundness() {
    const auto start = Clock::now();
    Tally t;
    for (std::uint64_t seed : {1, 2}) {
        const Report r = runSuite(suite({}, 2, 5, 25, seed));
        t.add(r);
        if (seed == 1) seedOneReport = reportJson(r);
    }
    const double s = seconds(start);
    std::ostringstream os;
    os << t.str() << ", " << static_cast<int>(s) << " s";
    return {t.fails == 0 && t.silent == 0 && s < 300.0, os.str()};
}

bool penroseSubset(const Matrix& a, const Matrix& x, GInverseClass cls) {
    if (a * x * a != a) return false;
    if (cls == GInverseClass::OneThree) return (a * x).conjTranspose() == a * x;
    if (cls == GInverseClass::OneFour) return (x * a).conjTranspose() == x * a;
    return true;
}

Result penroseSuite() {
    Rng rng = makeRng(2024, {tagOf("penrose")});
    std::size_t bad = 0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t rows = randomIndex(rng, 1, 6), cols = randomIndex(rng, 1, 6);
        const Matrix a = randomOfRank(rows, cols, randomIndex(rng, 0, std::min(rows, cols)), rng);
        const Matrix x = moorePenrose(a);
        const bool four = a * x * a == a && x * a * x == x && (a * x).conjTranspose() == a * x &&
                          (x * a).conjTranspose() == x * a;
        bool samples = true;
        for (GInverseClass cls : {GInverseClass::One, GInverseClass::OneThree, GInverseClass::OneFour})
            samples = samples && penroseSubset(a, sampleGenInverse(a, cls, rng).inverse, cls);
        bad += (four && samples) ? 0 : 1;
    }
    return {bad == 0, "300 matrices up to 6x6, " + std::to_string(bad) + " violations"};
}

Result drazinSuite() {
    Rng rng = makeRng(2024, {tagOf("drazin")});
    std::size_t bad = 0, nontrivial = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = randomIndex(rng, 1, 6);
        Matrix a = randomOfRank(m, m, randomIndex(rng, 0, m), rng);
        if (t % 2 == 0) {
            // similarity of a nilpotent chain plus an invertible block, so the index reaches past 1
            std::vector<Scalar> d(m * m, Scalar(0));
            const std::size_t chain = randomIndex(rng, 0, m - 1);
            for (std::size_t i = 0; i < chain; ++i) d[i * m + i + 1] = Scalar(1);
            for (std::size_t i = chain + 1; i < m; ++i) d[i * m + i] = randomNonzeroRational(rng, 3);
            const Matrix p = randomNonsingular(m, rng);
            a = p * Matrix(m, m, d) * inverse(p);
        }
        const unsigned k = matrixIndex(a);
        nontrivial += k >= 2 ? 1 : 0;
        const Matrix x = drazin(a);
        const bool ok = x * a * x == x && a * x == x * a && a.pow(k + 1) * x == a.pow(k) && drazinWithPower(a, k + 1) == x;
        bad += ok ? 0 : 1;
    }
    return {bad == 0, "200 square matrices (" + std::to_string(nontrivial) + " of index >= 2), " + std::to_string(bad) +
                          " violations"};
}

Result rankOracle() {
    Rng rng = makeRng(2024, {tagOf("rank")});
    std::size_t bad = 0, deficient = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t rows = randomIndex(rng, 1, 7), cols = randomIndex(rng, 1, 7);
        const Matrix m = t % 3 == 0 ? randomMatrix(rows, cols, rng, 3)
                                    : randomOfRank(rows, cols, randomIndex(rng, 0, std::min(rows, cols)), rng);
        const std::size_t r = rank(m);
        deficient += r < std::min(rows, cols) ? 1 : 0;
        bad += r == rankNaive(m) ? 0 : 1;
    }
    return {bad == 0, "500 matrices (" + std::to_string(deficient) + " rank-deficient), " + std::to_string(bad) +
                          " disagreements"};
}

std::vector<CertificationRecord> extremalRuns;

Result extremalSoundness() {
    const auto start = Clock::now();
    ExtremalConfig c;
    c.dimLo = 2;
    c.dimHi = 4;
    c.instances = 17;  // 51 instances per family and regime
    c.trials = 16;
    c.seed = 5;
    extremalRuns = runExtremal(c);
    std::size_t violations = 0, draws = 0;
    std::string first;
    for (const CertificationRecord& r : extremalRuns) {
        draws += r.cert.draws;
        if (!r.cert.outOfBounds.empty()) {
            ++violations;
            if (first.empty()) first = std::string(familyName(r.family.id)) + " " + r.regime;
        }
    }
    std::ostringstream os;
    os << extremalRuns.size() << " certifications, " << draws << " sampled ranks, " << violations << " violations";
    if (!first.empty()) os << " (first: " << first << ")";
    os << ", " << static_cast<int>(seconds(start)) << " s";
    return {violations == 0 && !extremalRuns.empty(), os.str()};
}

Result maxAttainment() {
    std::size_t misses = 0;
    for (const CertificationRecord& r : extremalRuns) misses += r.cert.maxAttained ? 0 : 1;
    return {misses == 0 && !extremalRuns.empty(),
            std::to_string(misses) + " anomalies in " + std::to_string(extremalRuns.size()) + " certifications"};
}

Result sqrtEntries() {
    const std::vector<std::string> ids = {"v36",    "vv321",  "3112k1", "3112k3", "3112k4",
                                          "3112k5", "3112k0", "3112k2", "3112k6"};
    Tally t;
    std::string fields;
    for (const std::string& id : ids) {
        t.add(runSuite(suite({id}, 2, 4, 25, 3)));
        fields += id + ":" + std::to_string(findEntry(id).radicand) + " ";
    }
    return {t.fails == 0 && t.silent == 0, t.str() + "; radicands " + fields};
}

Result subspaceEntries() {
    const std::vector<std::string> ids = idsMatching(R"(w6[2-6][a-z]*|TK311[a-e]|3112[a-f])");
    Tally t;
    t.add(runSuite(suite(ids, 2, 5, 25, 4)));
    return {t.fails == 0 && t.silent == 0 && ids.size() >= 20, t.str() + " (100 instances per entry)"};
}

Result projectorEntries() {
    const std::vector<std::string> ids = idsMatching(R"(w(4[89]|5[0-9]|6[01])|CTmp[1-4])");
    Tally t;
    t.add(runSuite(suite(ids, 2, 5, 25, 6)));
    return {t.fails == 0 && t.silent == 0 && ids.size() >= 14, t.str() + " (100 projector pairs per entry)"};
}

Result determinism() {
    if (seedOneReport.empty()) return {false, "criterion 1 produced no report"};
    const std::string again = reportJson(runSuite(suite({}, 2, 5, 25, 1)));
    return {again == seedOneReport, std::to_string(again.size()) + " bytes, " +
                                        (again == seedOneReport ? "identical" : "different")};
}

Result auditMode() {
    const std::vector<std::string> errata = erratumIds();
    SuiteConfig c = suite(errata, 2, 4, 10, 8);
    c.audit = true;
    const Report r = runSuite(c);
    std::vector<std::string> listed;
    std::size_t evaluable = 0, literalFails = 0;
    for (const AuditRecord& a : r.audit) {
        listed.push_back(a.id);
        evaluable += a.evaluable ? 1 : 0;
        literalFails += a.literalFails;
    }
    bool named = true;
    for (const char* id : {"v310", "T4c", "TN45b3"}) named = named && std::count(listed.begin(), listed.end(), id) == 1;
    const bool ok = !listed.empty() && listed == errata && named;
    return {ok, std::to_string(listed.size()) + " annotations (" + std::to_string(evaluable) +
                    " evaluable, " + std::to_string(literalFails) + " literal fails), list " +
                    (listed == errata ? "matches" : "differs from") + " the catalog"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
        {"catalog soundness, dims 2..5, 25 trials, seeds 1 and 2", catalogSoundness},
        {"Penrose equations for MP and sampled inverses", penroseSuite},
        {"Drazin equations and power independence", drazinSuite},
        {"fraction-free rank equals naive rank", rankOracle},
        {"extremal soundness, all families and regimes", extremalSoundness},
        {"generic max attainment", maxAttainment},
        {"sqrt-extension entries", sqrtEntries},
        {"subspace identities", subspaceEntries},
        {"projector MP identities", projectorEntries},
        {"deterministic reports", determinism},
        {"audit mode lists every annotation", auditMode},
    };
    int failed = 0;
    int n = 0;
    for (const auto& [name, fn] : criteria) {
        ++n;
        Result r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failed += r.ok ? 0 : 1;
        std::printf("[%s] %2d %s: %s\n", r.ok ? "PASS" : "FAIL", n, name, r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", n - failed, n);
    return failed == 0 ? 0 : 1;
}
