#include "ranklab/catalog.hpp"

#include "ranklab/errors.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/geninv.hpp"
#include "ranklab/random.hpp"

#include "support.hpp"

#include <algorithm>
#include <unordered_map>

namespace ranklab {

const char* checkerName(CheckerKind k) {
    switch (k) {
        case CheckerKind::MatrixIdentity: return "matrix-identity";
        case CheckerKind::RankEquality: return "rank-equality";
        case CheckerKind::SubspaceIdentity: return "subspace-identity";
        case CheckerKind::FactEquivalence: return "fact-equivalence";
        case CheckerKind::ConditionalInverse: return "conditional-inverse-identity";
    }
    return "?";
}

const char* inputClassName(InputClass c) {
    switch (c) {
        case InputClass::Square: return "square";
        case InputClass::RectPair: return "rect-pair";
        case InputClass::RectQuad: return "rect-quad";
        case InputClass::IdempotentPair: return "idempotent-pair";
        case InputClass::IdempotentTriple: return "idempotent-triple";
        case InputClass::CommutingTriple: return "commuting-triple";
        case InputClass::IdempotentFamily: return "idempotent-family";
        case InputClass::ProjectorPair: return "projector-pair";
        case InputClass::StarIdempotent: return "star-pair";
        case InputClass::EquationZ1: return "equation-system-z1";
        case InputClass::EquationZ8: return "equation-system-z8";
        case InputClass::EquationZ11: return "equation-system-z11";
        case InputClass::RowPair: return "row-pair";
        case InputClass::RowPairGInverse: return "row-pair-ginverse";
        case InputClass::RowTriple: return "row-triple";
        case InputClass::RowTripleGInverse: return "row-triple-ginverse";
        case InputClass::MatrixPair: return "matrix-pair";
    }
    return "?";
}

const Matrix& Instance::mat(std::string_view name) const {
    for (const auto& [n, mtx] : matrices)
        if (n == name) return mtx;
    throw UsageError("instance has no matrix " + std::string(name));
}

const Scalar& Instance::scalar(std::string_view name) const {
    for (const auto& [n, s] : scalars)
        if (n == name) return s;
    throw UsageError("instance has no scalar " + std::string(name));
}

bool Instance::has(std::string_view name) const {
    return std::any_of(matrices.begin(), matrices.end(), [&](const auto& p) { return p.first == name; });
}

std::vector<Matrix> Instance::family() const {
    std::vector<Matrix> out;
    for (std::size_t i = 1;; ++i) {
        const std::string name = "A" + std::to_string(i);
        if (!has(name)) break;
        out.push_back(mat(name));
    }
    return out;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        detail::registerRankEntries(v);
        detail::registerPairIdentityEntries(v);
        detail::registerInverseEntries(v);
        detail::registerSubspaceEntries(v);
        detail::registerStarEntries(v);
        detail::registerTripleSumEntries(v);
        detail::registerPencilFactEntries(v);
        return v;
    }();
    return entries;
}

const CatalogEntry& findEntry(std::string_view id) {
    static const std::unordered_map<std::string, std::size_t> index = [] {
        std::unordered_map<std::string, std::size_t> idx;
        const auto& all = catalog();
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (!idx.emplace(all[i].id, i).second) throw UsageError("duplicate catalog id " + all[i].id);
        }
        return idx;
    }();
    auto it = index.find(std::string(id));
    if (it == index.end()) throw UsageError("unknown entry id: " + std::string(id));
    return catalog()[it->second];
}

std::vector<std::string> erratumIds() {
    std::vector<std::string> out;
    for (const CatalogEntry& e : catalog())
        if (e.erratum) out.push_back(e.id);
    return out;
}

namespace {

Matrix upperJordanLike(std::size_t m, Rng& rng, FieldSpec f) {
    // diagonal from {0, 1, -1, 2, i, -i}, random 0/1 superdiagonal
    static const long re[] = {0, 1, -1, 2, 0, 0};
    static const long im[] = {0, 0, 0, 0, 1, -1};
    std::vector<Scalar> e(m * m, Scalar(f));
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t c = randomIndex(rng, 0, 5);
        e[i * m + i] = Scalar::complex(re[c], im[c], f);
        if (i + 1 < m && randomIndex(rng, 0, 1) == 1) e[i * m + i + 1] = Scalar(1, f);
    }
    const Matrix j(m, m, std::move(e), f);
    const Matrix p = randomNonsingular(m, rng, f);
    return p * j * inverse(p);
}

Matrix anyRank(std::size_t rows, std::size_t cols, Rng& rng, FieldSpec f) {
    return randomOfRank(rows, cols, randomIndex(rng, 0, std::min(rows, cols)), rng, f);
}

// Columns of `basis` selected by `pick`, mixed by a full-rank factor.
Matrix spanOf(const Matrix& basis, const std::vector<std::size_t>& pick, std::size_t cols, Rng& rng, FieldSpec f) {
    const std::size_t m = basis.rows();
    if (pick.empty()) return Matrix(m, cols, f);
    std::vector<Scalar> e(m * pick.size(), Scalar(f));
    for (std::size_t j = 0; j < pick.size(); ++j)
        for (std::size_t i = 0; i < m; ++i) e[i * pick.size() + j] = basis(i, pick[j]);
    const Matrix sub(m, pick.size(), std::move(e), f);
    return sub * randomOfRank(pick.size(), cols, std::min(pick.size(), cols), rng, f);
}

std::vector<std::size_t> randomSubset(std::size_t m, Rng& rng) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i)
        if (randomIndex(rng, 0, 1) == 1) s.push_back(i);
    return s;
}

// Row-sharing blocks with structured column spaces.
std::vector<Matrix> rowFamily(std::size_t m, std::size_t count, std::size_t trial, Rng& rng, FieldSpec f) {
    std::vector<std::size_t> cols(count);
    for (auto& c : cols) c = randomIndex(rng, 1, m + 1);
    std::vector<Matrix> out;
    switch (trial % 6) {
        case 1: {  // nested: later blocks live inside the first
            out.push_back(anyRank(m, cols[0], rng, f));
            for (std::size_t i = 1; i < count; ++i) out.push_back(out[0] * anyRank(cols[0], cols[i], rng, f));
            break;
        }
        case 2: {  // pairwise disjoint ranges inside one frame
            const Matrix p = randomNonsingular(m, rng, f);
            std::size_t next = 0;
            for (std::size_t i = 0; i < count; ++i) {
                const std::size_t take = randomIndex(rng, 0, m - next);
                std::vector<std::size_t> pick;
                for (std::size_t j = 0; j < take; ++j) pick.push_back(next + j);
                next += take;
                out.push_back(spanOf(p, pick, cols[i], rng, f));
            }
            break;
        }
        case 3: {  // one block is zero
            for (std::size_t i = 0; i < count; ++i) out.push_back(anyRank(m, cols[i], rng, f));
            const std::size_t z = randomIndex(rng, 0, count - 1);
            out[z] = Matrix(m, cols[z], f);
            break;
        }
        case 4: {  // coordinate subspaces of one unitary frame: projectors commute
            const Matrix u = randomUnitary(m, rng, f);
            for (std::size_t i = 0; i < count; ++i) out.push_back(spanOf(u, randomSubset(m, rng), cols[i], rng, f));
            break;
        }
        case 5: {  // equal ranges
            const std::size_t r = randomIndex(rng, 0, m);
            const Matrix fcr = randomFullColumnRank(m, r, rng, f);
            for (std::size_t i = 0; i < count; ++i) {
                const std::size_t c = std::max(cols[i], r);
                out.push_back(fcr * randomOfRank(r, c, r, rng, f));
            }
            break;
        }
        default:
            for (std::size_t i = 0; i < count; ++i) out.push_back(anyRank(m, cols[i], rng, f));
            break;
    }
    return out;
}

Matrix gInverse(const Matrix& a, Rng& rng) { return sampleGenInverse(a, GInverseClass::One, rng).inverse; }

}  // namespace

Instance generateInstance(InputClass cls, std::size_t m, std::size_t trial, Rng& rng, FieldSpec f) {
    Instance in;
    in.m = m;
    in.trial = trial;
    in.field = f;
    auto put = [&in](std::string name, Matrix value) { in.matrices.emplace_back(std::move(name), std::move(value)); };
    switch (cls) {
        case InputClass::Square:
            put("A", trial % 3 == 0 ? anyRank(m, m, rng, f) : upperJordanLike(m, rng, f));
            break;
        case InputClass::RectPair: {
            const std::size_t n = randomIndex(rng, 1, m + 1);
            Matrix a = anyRank(m, n, rng, f);
            Matrix b = trial % 2 == 0 ? anyRank(n, m, rng, f) : gInverse(a, rng);
            put("A", std::move(a));
            put("B", std::move(b));
            break;
        }
        case InputClass::RectQuad: {
            const std::size_t n = randomIndex(rng, 1, m + 1);
            const std::size_t p = randomIndex(rng, 1, m + 1);
            const std::size_t q = randomIndex(rng, 1, m + 1);
            put("A", anyRank(m, n, rng, f));
            put("B", anyRank(p, q, rng, f));
            put("X", anyRank(n, p, rng, f));
            put("Y", anyRank(q, m, rng, f));
            break;
        }
        case InputClass::IdempotentPair: {
            MatrixPair ab = randomIdempotentPair(m, rng, flavorForTrial(trial), f);
            put("A", std::move(ab.A));
            put("B", std::move(ab.B));
            break;
        }
        case InputClass::IdempotentTriple: {
            std::vector<Matrix> abc;
            switch (trial % 4) {
                case 1: abc = randomIdempotentFamily(m, 3, rng, true, f); break;
                case 2: {
                    MatrixPair ab = randomIdempotentPair(m, rng, flavorForTrial(trial / 4), f);
                    abc = {ab.A, ab.B, randomIdempotent(m, randomIndex(rng, 0, m), rng, f)};
                    break;
                }
                case 3: {
                    MatrixPair ab = randomIdempotentPair(m, rng, PairFlavor::Disjoint, f);
                    abc = {ab.A, ab.B, ab.A.eye() - ab.A - ab.B};
                    break;
                }
                default: abc = randomIdempotentFamily(m, 3, rng, false, f); break;
            }
            put("A", abc[0]);
            put("B", abc[1]);
            put("C", abc[2]);
            break;
        }
        case InputClass::CommutingTriple: {
            std::vector<Matrix> abc = randomIdempotentFamily(m, 3, rng, true, f);
            put("A", abc[0]);
            put("B", abc[1]);
            put("C", abc[2]);
            break;
        }
        case InputClass::IdempotentFamily: {
            const std::size_t count = 2 + trial % 3;
            std::vector<Matrix> fam = randomIdempotentFamily(m, count, rng, (trial / 3) % 2 == 1, f);
            for (std::size_t i = 0; i < count; ++i) put("A" + std::to_string(i + 1), fam[i]);
            break;
        }
        case InputClass::ProjectorPair: {
            MatrixPair ab = randomProjectorPair(m, rng, flavorForTrial(trial), f);
            put("A", std::move(ab.A));
            put("B", std::move(ab.B));
            break;
        }
        case InputClass::StarIdempotent: {
            Matrix a;
            switch (trial % 3) {
                case 1: a = randomProjector(m, randomIndex(rng, 0, m), rng, f); break;
                case 2: {
                    const Matrix q = randomProjector(m, randomIndex(rng, 0, m), rng, f);
                    a = q + q * randomMatrix(m, m, rng, 2, f) * (q.eye() - q);
                    break;
                }
                default: a = randomIdempotent(m, randomIndex(rng, 0, m), rng, f); break;
            }
            Matrix b = a.conjTranspose();
            put("A", std::move(a));
            put("B", std::move(b));
            break;
        }
        case InputClass::EquationZ1:
        case InputClass::EquationZ8:
        case InputClass::EquationZ11: {
            const EquationKind kind = cls == InputClass::EquationZ1   ? EquationKind::Z1
                                      : cls == InputClass::EquationZ8 ? EquationKind::Z8
                                                                      : EquationKind::Z11;
            EquationSample s = sampleEquationSolutions(kind, m, rng, f);
            if (kind == EquationKind::Z1) {
                put("M", std::move(s.M));
            } else {
                put("A", std::move(s.A));
                put("B", std::move(s.B));
            }
            put("X", std::move(s.X));
            put("Y", std::move(s.Y));
            break;
        }
        case InputClass::RowPair:
        case InputClass::RowPairGInverse:
        case InputClass::MatrixPair: {
            std::vector<Matrix> ab = rowFamily(m, 2, trial, rng, f);
            const bool mn = cls == InputClass::MatrixPair;
            put(mn ? "M" : "A", ab[0]);
            put(mn ? "N" : "B", ab[1]);
            if (cls == InputClass::RowPairGInverse) {
                put("Ag", gInverse(ab[0], rng));
                put("Bg", gInverse(ab[1], rng));
            }
            break;
        }
        case InputClass::RowTriple:
        case InputClass::RowTripleGInverse: {
            std::vector<Matrix> abc = rowFamily(m, 3, trial, rng, f);
            put("A", abc[0]);
            put("B", abc[1]);
            put("C", abc[2]);
            if (cls == InputClass::RowTripleGInverse) {
                put("Ag", gInverse(abc[0], rng));
                put("Bg", gInverse(abc[1], rng));
                put("Cg", gInverse(abc[2], rng));
            }
            break;
        }
    }
    return in;
}

Verdict evaluate(const CatalogEntry& entry, const Instance& in) {
    try {
        return entry.check(in);
    } catch (const Error& e) {
        return {Outcome::Fail, std::string("error: ") + e.what(), std::monostate{}};
    }
}

std::size_t Report::totalFails() const {
    std::size_t n = 0;
    for (const EntryReport& e : entries) n += e.fails;
    return n;
}

namespace {

FieldSpec fieldFor(const CatalogEntry& e, const SuiteConfig& config) {
    if (e.radicand != 0) return FieldSpec::withRadicand(e.radicand);
    if (config.field) return FieldSpec::withRadicand(*config.field);
    return {};
}

void drawScalars(const CatalogEntry& e, Instance& in, Rng& rng) {
    for (const ScalarParam& p : e.scalars)
        in.scalars.emplace_back(p.name, randomNonzeroRational(rng, 3, in.field, p.excluded));
}

}  // namespace

std::vector<const CatalogEntry*> selectEntries(const SuiteConfig& config) {
    std::vector<const CatalogEntry*> out;
    if (config.allEntries) {
        for (const CatalogEntry& e : catalog())
            if (config.audit || !e.auditOnly) out.push_back(&e);
    } else {
        for (const std::string& id : config.entries) out.push_back(&findEntry(id));
    }
    if (config.field) {
        if (!FieldSpec::isValidRadicand(*config.field))
            throw ConfigurationError("field radicand " + std::to_string(*config.field) + " is not squarefree");
        for (const CatalogEntry* e : out) {
            if (e->radicand != 0 && e->radicand != *config.field) {
                throw ConfigurationError("entry " + e->id + " needs sqrt(" + std::to_string(e->radicand) +
                                         ") but the run is fixed to field " + std::to_string(*config.field));
            }
        }
    }
    if (config.dimLo < 1 || config.dimLo > config.dimHi) throw UsageError("bad dimension range");
    if (config.trials < 1) throw UsageError("trials must be positive");
    if (config.kSweep.empty()) throw UsageError("empty k sweep");
    return out;
}

Report runSuite(const SuiteConfig& config) {
    const std::vector<const CatalogEntry*> selected = selectEntries(config);
    Report report;
    report.config = config;
    for (const CatalogEntry* e : selected) {
        EntryReport er;
        er.id = e->id;
        AuditRecord ar;
        const bool auditing = config.audit && e->erratum.has_value();
        if (auditing) {
            ar.id = e->id;
            ar.note = e->erratum->note;
            ar.literal = e->erratum->literal;
            ar.corrected = e->erratum->corrected;
            ar.evaluable = static_cast<bool>(e->erratum->literalCheck);
        }
        const FieldSpec field = fieldFor(*e, config);
        for (std::size_t m = config.dimLo; m <= config.dimHi; ++m) {
            for (std::size_t t = 0; t < config.trials; ++t) {
                Rng rng = makeRng(config.seed, {tagOf(e->id), m, t});
                bool settled = false;
                for (std::size_t a = 0; a < config.resampleBudget && !settled; ++a) {
                    Instance in = generateInstance(e->input, m, t, rng, field);
                    in.seed = config.seed;
                    in.attempt = a;
                    in.k = e->usesK ? config.kSweep[t % config.kSweep.size()] : 1;
                    drawScalars(*e, in, rng);
                    Verdict v = evaluate(*e, in);
                    if (v.outcome == Outcome::Miss) continue;
                    settled = true;
                    if (auditing) {
                        (v.outcome == Outcome::Pass ? ar.correctedPasses : ar.correctedFails)++;
                        if (ar.evaluable) {
                            Outcome lit = Outcome::Miss;
                            try {
                                lit = e->erratum->literalCheck(in).outcome;
                            } catch (const Error&) {
                            }
                            if (lit == Outcome::Pass) ++ar.literalPasses;
                            else if (lit == Outcome::Fail) ++ar.literalFails;
                            else ++ar.literalMisses;
                        }
                    }
                    if (v.outcome == Outcome::Pass) {
                        ++er.passes;
                    } else {
                        ++er.fails;
                        if (er.failures.size() < config.maxFailuresPerEntry)
                            er.failures.push_back({std::move(in), std::move(v.lhs), std::move(v.rhs)});
                    }
                }
                if (!settled) ++er.misses;
            }
        }
        report.entries.push_back(std::move(er));
        if (auditing) report.audit.push_back(std::move(ar));
    }
    return report;
}

}  // namespace ranklab
