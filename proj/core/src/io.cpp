#include "ranklab/io.hpp"

#include "ranklab/errors.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/geninv.hpp"
#include "ranklab/random.hpp"

#include <json.hpp>

namespace ranklab {

namespace {

using Json = nlohmann::ordered_json;

Json matrixJson(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json fieldJson(FieldSpec f) { return f.radicand(); }

Json detailJson(const Detail& d) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, Matrix>) {
                return matrixJson(x);
            } else if constexpr (std::is_same_v<T, std::vector<bool>>) {
                Json a = Json::array();
                for (bool b : x) a.push_back(b);
                return a;
            } else {
                return x;
            }
        },
        d);
}

Json instanceJson(const Instance& in) {
    Json mats = Json::object();
    for (const auto& [name, m] : in.matrices) mats[name] = matrixJson(m);
    Json scalars = Json::object();
    for (const auto& [name, s] : in.scalars) scalars[name] = s.str();
    return Json{{"m", in.m},          {"k", in.k},         {"seed", in.seed},       {"trial", in.trial},
                {"attempt", in.attempt}, {"field", fieldJson(in.field)}, {"matrices", std::move(mats)},
                {"scalars", std::move(scalars)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string reportJson(const Report& report) {
    const SuiteConfig& c = report.config;
    Json meta{{"seed", c.seed},
              {"dims", {c.dimLo, c.dimHi}},
              {"trials", c.trials},
              {"field", c.field ? Json(*c.field) : Json(nullptr)},
              {"kSweep", c.kSweep},
              {"audit", c.audit}};
    Json entries = Json::array();
    for (const EntryReport& e : report.entries) {
        Json failures = Json::array();
        for (const FailureRecord& f : e.failures)
            failures.push_back(Json{{"inputs", instanceJson(f.inputs)}, {"lhs", detailJson(f.lhs)}, {"rhs", detailJson(f.rhs)}});
        entries.push_back(Json{{"id", e.id},
                               {"passes", e.passes},
                               {"fails", e.fails},
                               {"misses", e.misses},
                               {"failures", std::move(failures)}});
    }
    Json out{{"meta", std::move(meta)}, {"entries", std::move(entries)}};
    if (c.audit) {
        Json audit = Json::array();
        for (const AuditRecord& a : report.audit)
            audit.push_back(Json{{"id", a.id},
                                 {"note", a.note},
                                 {"literal", a.literal},
                                 {"corrected", a.corrected},
                                 {"evaluable", a.evaluable},
                                 {"literalPasses", a.literalPasses},
                                 {"literalFails", a.literalFails},
                                 {"literalMisses", a.literalMisses},
                                 {"correctedPasses", a.correctedPasses},
                                 {"correctedFails", a.correctedFails}});
        out["audit"] = std::move(audit);
    }
    return dump(out);
}

std::string certificationJson(const ExtremalConfig& config, const std::vector<CertificationRecord>& records) {
    Json families = Json::array();
    for (FamilyId id : config.families.empty() ? allFamilies() : config.families)
        families.push_back(std::string(familyName(id)));
    Json meta{{"seed", config.seed},           {"dims", {config.dimLo, config.dimHi}},
              {"trials", config.trials},       {"instances", config.instances},
              {"field", config.radicand},      {"families", std::move(families)}};

    std::size_t violations = 0, maxMisses = 0, minMisses = 0;
    Json certs = Json::array();
    for (const CertificationRecord& r : records) {
        const Certification& c = r.cert;
        const FamilyId id = r.family.id;
        Json j{{"family", std::string(familyName(id))},
               {"regime", r.regime},
               {"lambda", usesLambda(id) ? Json(r.family.lambda.str()) : Json(nullptr)},
               {"m", r.m},
               {"instance", r.instance}};
        if (id == FamilyId::T8 || id == FamilyId::T9) j["inverses"] = r.family.sharedInverse ? "shared" : "independent";
        j["bounds"] = Json{{"max", c.bounds.max}, {"min", c.bounds.min}};
        j["observed"] = Json{{"max", c.observedMax}, {"min", c.observedMin}};
        j["maxAttained"] = c.maxAttained;
        j["minAttained"] = c.minAttained;
        j["trials"] = config.trials;
        j["seed"] = config.seed;
        j["draws"] = c.draws;
        j["violations"] = c.outOfBounds;
        // counterexamples and anomalies carry their inputs
        if (!c.outOfBounds.empty() || !c.maxAttained) {
            Json inputs = Json::object();
            const std::vector<std::string> names = familyInputs(id);
            for (std::size_t k = 0; k < names.size(); ++k) inputs[names[k]] = matrixJson(r.family.inputs[k]);
            j["inputs"] = std::move(inputs);
        }
        violations += c.outOfBounds.empty() ? 0 : 1;
        maxMisses += c.maxAttained ? 0 : 1;
        minMisses += c.minAttained ? 0 : 1;
        certs.push_back(std::move(j));
    }
    Json summary{{"certifications", records.size()},
                 {"violations", violations},
                 {"maxAnomalies", maxMisses},
                 {"minUnattained", minMisses}};
    return dump(Json{{"meta", std::move(meta)}, {"certifications", std::move(certs)}, {"summary", std::move(summary)}});
}

std::string catalogIndexJson() {
    Json entries = Json::array();
    for (const CatalogEntry& e : catalog()) {
        Json j{{"id", e.id},
               {"checker", checkerName(e.checker)},
               {"inputClass", inputClassName(e.input)},
               {"statement", e.statement},
               {"usesK", e.usesK},
               {"field", e.radicand},
               {"auditOnly", e.auditOnly},
               {"erratum", e.erratum ? Json(e.erratum->note) : Json(nullptr)}};
        entries.push_back(std::move(j));
    }
    return dump(Json{{"entries", std::move(entries)}});
}

namespace {

std::vector<std::size_t> ranksFor(const GenRequest& q, std::size_t count, Rng& rng) {
    if (q.ranks.empty()) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back(randomIndex(rng, 0, q.m));
        return out;
    }
    if (q.ranks.size() != count)
        throw UsageError("gen: " + q.kind + " needs " + std::to_string(count) + " ranks");
    for (std::size_t r : q.ranks)
        if (r > q.m) throw UsageError("gen: rank " + std::to_string(r) + " exceeds m = " + std::to_string(q.m));
    return q.ranks;
}

}  // namespace

std::string generateInstanceJson(const GenRequest& q) {
    if (q.m < 1) throw UsageError("gen: m must be positive");
    const FieldSpec field = FieldSpec::withRadicand(q.radicand);
    Rng rng = makeRng(q.seed, {tagOf("gen"), tagOf(q.kind), q.m});
    std::vector<std::pair<std::string, Matrix>> mats;
    Json checks = Json::object();
    std::vector<std::size_t> ranks;

    auto idempotents = [&](std::size_t count, bool projector) {
        ranks = ranksFor(q, count, rng);
        for (std::size_t i = 0; i < count; ++i) {
            const std::string name = count > 3 ? "A" + std::to_string(i + 1) : std::string(1, char('A' + i));
            mats.emplace_back(name, projector ? randomProjector(q.m, ranks[i], rng, field)
                                              : randomIdempotent(q.m, ranks[i], rng, field));
        }
        bool idem = true, herm = true;
        for (const auto& [name, a] : mats) {
            idem = idem && isIdempotent(a);
            herm = herm && isHermitian(a);
        }
        checks["idempotent"] = idem;
        if (projector) checks["hermitian"] = herm;
    };

    if (q.kind == "idempotent-pair") {
        idempotents(2, false);
    } else if (q.kind == "idempotent-triple") {
        idempotents(3, false);
    } else if (q.kind == "projector-pair") {
        idempotents(2, true);
    } else if (q.kind == "idempotent-family") {
        if (q.count < 2) throw UsageError("gen: idempotent-family needs count >= 2");
        idempotents(q.count, false);
    } else if (q.kind == "star-pair") {
        ranks = ranksFor(q, 1, rng);
        const Matrix a = randomIdempotent(q.m, ranks[0], rng, field);
        mats = {{"A", a}, {"B", a.conjTranspose()}};
        checks["idempotent"] = isIdempotent(a);
        checks["conjugateTranspose"] = mats[1].second == a.conjTranspose();
    } else if (q.kind == "equation-system") {
        EquationKind kind;
        if (q.system == "z1") kind = EquationKind::Z1;
        else if (q.system == "z8") kind = EquationKind::Z8;
        else if (q.system == "z11") kind = EquationKind::Z11;
        else throw UsageError("gen: unknown system '" + q.system + "' (z1, z8, z11)");
        const EquationSample s = sampleEquationSolutions(kind, q.m, rng, field);
        if (kind == EquationKind::Z1) mats = {{"M", s.M}, {"X", s.X}, {"Y", s.Y}};
        else mats = {{"A", s.A}, {"B", s.B}, {"X", s.X}, {"Y", s.Y}};
        checks["satisfiesSystem"] = satisfiesSystem(s);
    } else {
        std::string known;
        for (const std::string& k : instanceKinds()) known += (known.empty() ? "" : ", ") + k;
        throw UsageError("gen: unknown kind '" + q.kind + "' (" + known + ")");
    }

    Json mj = Json::object();
    for (const auto& [name, m] : mats) mj[name] = matrixJson(m);
    Json out{{"kind", q.kind}, {"m", q.m}, {"seed", q.seed}, {"field", q.radicand}};
    if (q.kind == "equation-system") out["system"] = q.system;
    else out["ranks"] = ranks;
    out["matrices"] = std::move(mj);
    out["checks"] = std::move(checks);
    return dump(out);
}

}  // namespace ranklab
