// ranklab: run catalog suites, extremal certifications and instance generation.
// Exit codes: 0 ok, 1 a check failed or a bound was violated, 2 usage or configuration error.

#include "ranklab/catalog.hpp"
#include "ranklab/errors.hpp"
#include "ranklab/extremal.hpp"
#include "ranklab/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

namespace {

using namespace ranklab;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Common {
    std::string dims;
    std::size_t dimCap = 8;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> field;
    std::string out;
};

std::pair<std::size_t, std::size_t> parseDims(const std::string& text, std::size_t cap) {
    static const std::regex re(R"((\d+)\.\.(\d+)|(\d+))");
    std::smatch mt;
    if (!std::regex_match(text, mt, re)) throw UsageError("dims must look like A..B, got '" + text + "'");
    const std::size_t lo = std::stoul(mt[1].matched ? mt[1].str() : mt[3].str());
    const std::size_t hi = mt[2].matched ? std::stoul(mt[2].str()) : lo;
    if (lo < 1 || lo > hi) throw UsageError("dims range '" + text + "' is empty or starts below 1");
    if (hi > cap) throw UsageError("dims above the cap " + std::to_string(cap) + " (raise it with --dim-cap)");
    return {lo, hi};
}

std::uint64_t resolveSeed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("RANKLAB_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (*env == '\0' || *end != '\0') throw UsageError(std::string("RANKLAB_SEED is not an integer: ") + env);
        return v;
    }
    return 1;
}

std::vector<std::string> splitList(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const std::string& item : raw) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) out.push_back(part);
    }
    return out;
}

// Whole document or nothing: written to a sibling temp file, then renamed.
void emit(const std::string& doc, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << doc;
        std::cout.flush();
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ConfigurationError("cannot write " + tmp);
        f << doc;
        if (!f.flush()) throw ConfigurationError("cannot write " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void addCommon(CLI::App* cmd, Common& c, const std::string& defaultDims) {
    c.dims = defaultDims;
    cmd->add_option("--dims", c.dims, "order range A..B")->capture_default_str();
    cmd->add_option("--dim-cap", c.dimCap, "largest order accepted")->capture_default_str();
    cmd->add_option("--seed", c.seed, "64-bit seed (falls back to RANKLAB_SEED, then 1)");
    cmd->add_option("--field", c.field, "radicand d of Q(i)(sqrt d); 0 for Q(i)");
    cmd->add_option("--out", c.out, "output path (stdout when omitted)");
}

int runCheck(const Common& c, const std::vector<std::string>& entries, std::size_t trials, bool audit,
             const std::vector<unsigned>& kSweep) {
    SuiteConfig cfg;
    cfg.entries = splitList(entries);
    cfg.allEntries = cfg.entries.empty();
    std::tie(cfg.dimLo, cfg.dimHi) = parseDims(c.dims, c.dimCap);
    if (trials < 1) throw UsageError("trials must be at least 1");
    cfg.trials = trials;
    cfg.seed = resolveSeed(c.seed);
    cfg.field = c.field;
    cfg.audit = audit;
    if (!kSweep.empty()) cfg.kSweep = kSweep;
    for (unsigned k : cfg.kSweep)
        if (k < 1) throw UsageError("k-sweep values must be at least 1");
    const Report report = runSuite(cfg);
    emit(reportJson(report), c.out);
    if (report.totalFails() > 0) {
        std::cerr << "ranklab: " << report.totalFails() << " failing instance(s)\n";
        return kFailed;
    }
    return kOk;
}

int runExtremalCmd(const Common& c, const std::vector<std::string>& families, std::size_t trials,
                   std::size_t instances) {
    ExtremalConfig cfg;
    for (const std::string& name : splitList(families)) {
        const std::optional<FamilyId> id = parseFamily(name);
        if (!id) throw UsageError("unknown family '" + name + "'");
        cfg.families.push_back(*id);
    }
    std::tie(cfg.dimLo, cfg.dimHi) = parseDims(c.dims, c.dimCap);
    if (trials < 1 || instances < 1) throw UsageError("trials and instances must be at least 1");
    cfg.trials = trials;
    cfg.instances = instances;
    cfg.seed = resolveSeed(c.seed);
    cfg.radicand = c.field.value_or(0);
    FieldSpec::withRadicand(cfg.radicand);
    const std::vector<CertificationRecord> records = runExtremal(cfg);
    emit(certificationJson(cfg, records), c.out);
    std::size_t violations = 0, anomalies = 0;
    for (const CertificationRecord& r : records) {
        violations += r.cert.outOfBounds.empty() ? 0 : 1;
        anomalies += r.cert.maxAttained ? 0 : 1;
    }
    if (anomalies > 0) std::cerr << "ranklab: max not attained on " << anomalies << " instance(s)\n";
    if (violations > 0) {
        std::cerr << "ranklab: " << violations << " certification(s) with out-of-bounds ranks\n";
        return kFailed;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized-inverse rank laboratory"};
    app.require_subcommand(1);

    Common checkOpts, extOpts, genOpts, reportOpts;
    std::vector<std::string> entries, families;
    std::size_t checkTrials = 25, extTrials = 16, instances = 1;
    bool audit = false;
    std::vector<unsigned> kSweep;

    CLI::App* check = app.add_subcommand("check", "verify catalog entries on random instances");
    addCommon(check, checkOpts, "2..5");
    check->add_option("--entries", entries, "comma-separated ids (all non-audit entries when omitted)");
    check->add_option("--trials", checkTrials, "instances per entry and order")->capture_default_str();
    check->add_flag("--audit", audit, "also evaluate the printed reading of annotated entries");
    check->add_option("--k-sweep", kSweep, "powers k for k-dependent entries")->delimiter(',');

    CLI::App* ext = app.add_subcommand("extremal", "certify max/min rank formulas by sampling");
    addCommon(ext, extOpts, "2..4");
    ext->add_option("--family", families, "comma-separated families (all when omitted)");
    ext->add_option("--trials", extTrials, "draws per instance")->capture_default_str();
    ext->add_option("--instances", instances, "instances per family, regime and order")->capture_default_str();

    GenRequest gen;
    std::string ranksText;
    CLI::App* genCmd = app.add_subcommand("gen", "emit one generated instance");
    genCmd->add_option("--kind", gen.kind, "instance kind")->required();
    genCmd->add_option("--m", gen.m, "order")->capture_default_str();
    genCmd->add_option("--ranks", ranksText, "comma-separated ranks");
    genCmd->add_option("--count", gen.count, "family size for idempotent-family")->capture_default_str();
    genCmd->add_option("--system", gen.system, "z1, z8 or z11 for equation-system")->capture_default_str();
    genCmd->add_option("--seed", genOpts.seed, "64-bit seed (falls back to RANKLAB_SEED, then 1)");
    genCmd->add_option("--field", genOpts.field, "radicand d");
    genCmd->add_option("--out", genOpts.out, "output path");

    CLI::App* report = app.add_subcommand("report", "emit the catalog index");
    report->add_option("--out", reportOpts.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*check) return runCheck(checkOpts, entries, checkTrials, audit, kSweep);
        if (*ext) return runExtremalCmd(extOpts, families, extTrials, instances);
        if (*genCmd) {
            for (const std::string& r : splitList({ranksText})) {
                std::size_t used = 0;
                const unsigned long v = std::stoul(r, &used);
                if (used != r.size()) throw UsageError("bad rank '" + r + "'");
                gen.ranks.push_back(v);
            }
            gen.seed = resolveSeed(genOpts.seed);
            gen.radicand = genOpts.field.value_or(0);
            emit(generateInstanceJson(gen), genOpts.out);
            return kOk;
        }
        emit(catalogIndexJson(), reportOpts.out);
        return kOk;
    } catch (const UsageError& e) {
        std::cerr << "ranklab: " << e.what() << "\n";
        return kUsage;
    } catch (const ConfigurationError& e) {
        std::cerr << "ranklab: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ranklab: bad number: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "ranklab: internal error: " << e.what() << "\n";
        return kFailed;
    }
}
