#include "ranklab/extremal.hpp"

#include "ranklab/errors.hpp"
#include "ranklab/geninv.hpp"
#include "ranklab/random.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace ranklab {

namespace {

using Z = long;

Z r(const Matrix& m) { return static_cast<Z>(rank(m)); }

std::size_t nat(Z v) {
    if (v < 0) throw Error("extremal: negative rank bound");
    return static_cast<std::size_t>(v);
}

Matrix zeros(std::size_t rows, std::size_t cols, FieldSpec f) { return Matrix::zero(rows, cols, f); }

void need(bool ok, const char* what) {
    if (!ok) throw UsageError(std::string("extremal: ") + what);
}

}  // namespace

Bounds evalTwoTermLMVFBounds(const Matrix& a, const Matrix& b1, const Matrix& c1, const Matrix& b2,
                             const Matrix& c2) {
    need(b1.rows() == a.rows() && b2.rows() == a.rows(), "B1, B2 must have the rows of A");
    need(c1.cols() == a.cols() && c2.cols() == a.cols(), "C1, C2 must have the columns of A");
    const FieldSpec f = a.field();
    const Matrix z1 = zeros(c1.rows(), b1.cols(), f);
    const Matrix z2 = zeros(c2.rows(), b2.cols(), f);
    const Matrix z21 = zeros(c2.rows(), b1.cols(), f);
    const Matrix z12 = zeros(c1.rows(), b2.cols(), f);

    const Z rowAll = r(hcat({a, b1, b2}));
    const Z colAll = r(vcat({a, c1, c2}));
    const Z mixed12 = r(blockAssemble({{a, b1}, {c2, z21}}));
    const Z mixed21 = r(blockAssemble({{a, b2}, {c1, z12}}));

    const Z first = mixed12 - r(blockAssemble({{a, b1, b2}, {c2, z21, z2}})) -
                    r(blockAssemble({{a, b1}, {c1, z1}, {c2, z21}}));
    const Z second = mixed21 - r(blockAssemble({{a, b1, b2}, {c1, z1, z12}})) -
                     r(blockAssemble({{a, b2}, {c1, z12}, {c2, z2}}));

    Bounds out;
    out.max = nat(std::min({rowAll, colAll, mixed12, mixed21}));
    out.min = nat(colAll + rowAll + std::max(first, second));
    return out;
}

Bounds evalOneTermGInverseBounds(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    need(b.rows() == a.rows(), "B must have the rows of A");
    need(c.cols() == a.cols(), "C must have the columns of A");
    need(d.rows() == c.rows() && d.cols() == b.cols(), "D must be rows(C) x cols(B)");
    const FieldSpec f = a.field();
    const Z ra = r(a);
    const Z rcd = r(hcat(c, d));
    const Z rbd = r(vcat(b, d));
    const Z rm = r(blockAssemble({{a, b}, {c, d}}));
    const Z wide = r(blockAssemble({{a, zeros(a.rows(), c.cols(), f), b}, {zeros(c.rows(), a.cols(), f), c, d}}));
    const Z tall = r(blockAssemble(
        {{a, zeros(a.rows(), b.cols(), f)}, {zeros(b.rows(), a.cols(), f), b}, {c, d}}));
    Bounds out;
    out.max = nat(std::min({rcd, rbd, rm - ra}));
    out.min = nat(ra + rcd + rbd + rm - wide - tall);
    return out;
}

namespace {

struct FamilyInfo {
    FamilyId id;
    const char* name;
    std::vector<std::string> inputs;
    bool lambda;
};

const std::vector<FamilyInfo>& infos() {
    static const std::vector<FamilyInfo> all = {
        {FamilyId::TN44, "TN44", {"A", "B"}, true},   {FamilyId::TN45, "TN45", {"A", "B"}, true},
        {FamilyId::TN46, "TN46", {"A", "C"}, true},   {FamilyId::T7, "T7", {"A", "C"}, true},
        {FamilyId::T8, "T8", {"A"}, true},            {FamilyId::T9, "T9", {"A"}, true},
        {FamilyId::T10, "T10", {"A", "B", "C", "D"}, true}, {FamilyId::TW28, "TW28", {"A", "B"}, false},
        {FamilyId::Z39, "Z39", {"A", "B"}, false},    {FamilyId::Z41, "Z41", {"A", "B"}, false},
        {FamilyId::Z44, "Z44", {"A", "B", "C"}, false},
    };
    return all;
}

const FamilyInfo& info(FamilyId id) {
    for (const FamilyInfo& i : infos())
        if (i.id == id) return i;
    throw UsageError("extremal: unknown family");
}

}  // namespace

std::string_view familyName(FamilyId id) { return info(id).name; }

std::optional<FamilyId> parseFamily(std::string_view name) {
    for (const FamilyInfo& i : infos())
        if (name == i.name) return i.id;
    return std::nullopt;
}

const std::vector<FamilyId>& allFamilies() {
    static const std::vector<FamilyId> ids = [] {
        std::vector<FamilyId> v;
        for (const FamilyInfo& i : infos()) v.push_back(i.id);
        return v;
    }();
    return ids;
}

bool usesLambda(FamilyId id) { return info(id).lambda; }

std::vector<std::string> familyInputs(FamilyId id) { return info(id).inputs; }

std::vector<Regime> regimes(FamilyId id) {
    const Regime sum3{"generic", std::nullopt, {0, -1, -2}};
    const Regime diff3{"generic", std::nullopt, {1, 0, -1}};
    auto at = [](long v) { return Regime{"lambda=" + std::to_string(v), v, {}}; };
    switch (id) {
        case FamilyId::TN44:
        case FamilyId::TN46:
        case FamilyId::T8:
            return {sum3, at(0), at(-1), at(-2)};
        case FamilyId::TN45:
        case FamilyId::T10:
            return {diff3, at(1), at(0)};
        case FamilyId::T7:
        case FamilyId::T9:
            return {diff3, at(0), at(-1)};
        default:
            return {Regime{"none", std::nullopt, {}}};
    }
}

namespace {

// Which branch lambda selects: the special value, or nullopt for the generic branch.
std::optional<long> branch(const PencilFamily& f) {
    const std::vector<Regime> rs = regimes(f.id);
    const FieldSpec field = f.lambda.field();
    for (const Regime& g : rs)
        if (g.value && f.lambda == Scalar(*g.value, field)) return g.value;
    for (long x : rs.front().excluded)
        if (f.lambda == Scalar(x, field))
            throw UsageError("extremal: " + std::string(familyName(f.id)) + " has no formula at lambda = " +
                             std::to_string(x));
    return std::nullopt;
}

void checkInputs(const PencilFamily& f) {
    const auto& names = info(f.id).inputs;
    need(f.inputs.size() == names.size(), "wrong number of inputs for the family");
    const FieldSpec field = f.inputs.front().field();
    for (const Matrix& x : f.inputs) need(x.field() == field, "inputs must share one field");
    if (usesLambda(f.id)) need(f.lambda.field() == field, "lambda must be in the inputs' field");
    const Matrix& a = f.inputs[0];
    switch (f.id) {
        case FamilyId::TN44:
        case FamilyId::TN45:
        case FamilyId::TW28:
        case FamilyId::Z39:
        case FamilyId::Z41:
            need(f.inputs[1].rows() == a.rows(), "A and B need the same number of rows");
            break;
        case FamilyId::TN46:
        case FamilyId::T7:
            need(f.inputs[1].cols() == a.rows(), "C must be p x m for A m x n");
            break;
        case FamilyId::T8:
        case FamilyId::T9:
            need(a.isSquare(), "A must be square");
            break;
        case FamilyId::T10: {
            const Matrix &b = f.inputs[1], &c = f.inputs[2], &d = f.inputs[3];
            need(b.rows() == a.rows() && c.cols() == a.cols() && d.rows() == c.rows() && d.cols() == b.cols(),
                 "blocks of M = [A, B; C, D] are not conformable");
            break;
        }
        case FamilyId::Z44:
            need(f.inputs[1].rows() == a.rows() && f.inputs[2].rows() == a.rows(),
                 "A, B, C need the same number of rows");
            break;
    }
}

struct T10Blocks {
    Matrix m, n;
    Z rM, rN, rA, rD, rAB, rCD, size;
};

T10Blocks t10(const PencilFamily& f) {
    const Matrix &a = f.inputs[0], &b = f.inputs[1], &c = f.inputs[2], &d = f.inputs[3];
    const FieldSpec fs = a.field();
    T10Blocks t{blockAssemble({{a, b}, {c, d}}),
                blockAssemble({{a, zeros(a.rows(), d.cols(), fs)}, {zeros(d.rows(), a.cols(), fs), d}}),
                0, 0, r(a), r(d), r(hcat(a, b)), r(hcat(c, d)), static_cast<Z>(a.rows() + c.rows())};
    t.rM = r(t.m);
    t.rN = r(t.n);
    return t;
}

Bounds make(Z max, Z min) { return Bounds{nat(max), nat(min)}; }

}  // namespace

Bounds evalPencilBounds(const PencilFamily& f) {
    checkInputs(f);
    const std::optional<long> lam = usesLambda(f.id) ? branch(f) : std::nullopt;
    const long lv = lam.value_or(0);
    const Matrix& a = f.inputs[0];
    const Z m = static_cast<Z>(a.rows());
    const Z ra = r(a);

    switch (f.id) {
        case FamilyId::TN44:
        case FamilyId::TN45: {
            const Matrix& b = f.inputs[1];
            const Z rb = r(b);
            const Z rab = r(hcat(a, b));
            const Z genericMin = std::max(m + ra - rab, m + rb - rab);
            if (f.id == FamilyId::TN44) {
                if (!lam) return make(m, genericMin);
                if (lv == 0) return make(rab, std::max(ra, rb));
                if (lv == -1) return make(m - std::abs(ra - rb), m + ra + rb - 2 * rab);
                return make(m + rab - ra - rb, std::max(m - ra, m - rb));
            }
            if (!lam) return make(m, genericMin);
            if (lv == 1) return make(std::min(m, m + ra - rb), m + ra - rab);
            return make(std::min(rab, m + rab - ra - rb), std::max(rab - ra, rab - rb));
        }
        case FamilyId::TN46:
        case FamilyId::T7:
        case FamilyId::T8:
        case FamilyId::T9: {
            const bool square = f.id == FamilyId::T8 || f.id == FamilyId::T9;
            const Matrix& c = square ? a : f.inputs[1];
            const Z rc = r(c);
            const Z rca = r(c * a);
            const Z genericMin = std::max(m - rca, ra + rc - rca);
            if (f.id == FamilyId::TN46 || f.id == FamilyId::T8) {
                if (!lam) return make(m, genericMin);
                if (lv == 0) return make(std::min(m, ra + rc), ra + rc - rca);
                if (lv == -1) return make(std::min(m + rca - ra, m + rca - rc), std::max(m + rca - ra - rc, rca));
                return make(std::min(m, 2 * m - ra - rc), m - rca);
            }
            if (!lam) return make(m, genericMin);
            if (lv == 0) return make(m - std::abs(ra + rc - m), ra + rc - 2 * rca);
            return make(m - ra + rca, std::max(m - ra, rc));
        }
        case FamilyId::T10: {
            const T10Blocks t = t10(f);
            if (!lam) return make(t.size, t.size - t.rAB - t.rCD + std::max(t.rM, t.rA + t.rD));
            if (lv == 1)
                return make(std::min(t.size, t.size + t.rM - t.rA - t.rD), t.size + t.rM - t.rAB - t.rCD);
            return make(t.rAB + t.rCD + std::min<Z>(0, t.size - t.rM - t.rA - t.rD),
                        t.rAB + t.rCD - std::min(t.rM, t.rA + t.rD));
        }
        case FamilyId::TW28:
        case FamilyId::Z41: {
            const Z rb = r(f.inputs[1]);
            const Z rab = r(hcat(a, f.inputs[1]));
            return make(rab - std::abs(ra - rb), ra + rb - rab);
        }
        case FamilyId::Z39: {
            const Z rb = r(f.inputs[1]);
            return make(std::min(ra, rb), ra + rb - r(hcat(a, f.inputs[1])));
        }
        case FamilyId::Z44: {
            const Matrix &b = f.inputs[1], &c = f.inputs[2];
            const Z rb = r(b), rc = r(c);
            const Z rab = r(hcat(a, b)), rac = r(hcat(a, c)), rbc = r(hcat(b, c));
            const Z rabc = r(hcat({a, b, c}));
            const Z max = rabc + std::min(ra, rbc) + std::min(rb, rac) + std::min(rc, rab) - ra - rb - rc;
            return make(max, rab + rac + rbc - 2 * rabc);
        }
    }
    throw UsageError("extremal: unknown family");
}

std::optional<Bounds> parametrizedBounds(const PencilFamily& f) {
    checkInputs(f);
    if (usesLambda(f.id)) branch(f);
    const Matrix& a = f.inputs[0];
    const FieldSpec fs = a.field();
    switch (f.id) {
        case FamilyId::TN44:
        case FamilyId::TN45: {
            const Matrix& b = f.inputs[1];
            const ProjectorTriple pa = projectorTriple(a), pb = projectorTriple(b);
            const long s = f.id == FamilyId::TN44 ? 1 : -1;
            return evalTwoTermLMVFBounds(f.lambda * a.eye() + pa.P + s * pb.P, a, pa.E, b, pb.E);
        }
        case FamilyId::TN46:
        case FamilyId::T7:
        case FamilyId::T8:
        case FamilyId::T9: {
            const bool square = f.id == FamilyId::T8 || f.id == FamilyId::T9;
            const Matrix& c = square ? a : f.inputs[1];
            const ProjectorTriple pa = projectorTriple(a), pc = projectorTriple(c);
            const long s = (f.id == FamilyId::TN46 || f.id == FamilyId::T8) ? 1 : -1;
            const Matrix cc = moorePenrose(c) * c;
            return evalTwoTermLMVFBounds(f.lambda * a.eye() + pa.P + s * cc, a, pa.E, pc.F, c);
        }
        case FamilyId::T10: {
            const T10Blocks t = t10(f);
            const ProjectorTriple pm = projectorTriple(t.m), pn = projectorTriple(t.n);
            return evalTwoTermLMVFBounds(f.lambda * t.m.eye() + pm.P - pn.P, t.m, pm.E, t.n, pn.E);
        }
        case FamilyId::TW28: {
            // [A, B] - [A, B][A-; B-][A, B] = -[BB-A, AA-B]
            const Matrix& b = f.inputs[1];
            const ProjectorTriple pa = projectorTriple(a), pb = projectorTriple(b);
            const Matrix base = hcat(pb.P * a, pa.P * b);
            return evalTwoTermLMVFBounds(base, b, hcat(pb.E * a, zeros(a.rows(), b.cols(), fs)), a,
                                         hcat(zeros(a.rows(), a.cols(), fs), pa.E * b));
        }
        case FamilyId::Z39: {
            const Matrix& b = f.inputs[1];
            const ProjectorTriple pa = projectorTriple(a);
            return evalTwoTermLMVFBounds(pa.P * b, a, pa.E * b, zeros(a.rows(), 1, fs), zeros(1, b.cols(), fs));
        }
        default:
            return std::nullopt;
    }
}

std::vector<Matrix> inverseBases(const PencilFamily& f) {
    switch (f.id) {
        case FamilyId::T8:
        case FamilyId::T9:
            if (f.sharedInverse) return {f.inputs[0]};
            return {f.inputs[0], f.inputs[0]};
        case FamilyId::T10: {
            const T10Blocks t = t10(f);
            return {t.m, t.n};
        }
        default:
            return f.inputs;
    }
}

Matrix pencilValue(const PencilFamily& f, const std::vector<Matrix>& x) {
    const std::vector<Matrix>& in = f.inputs;
    const Matrix& a = in[0];
    switch (f.id) {
        case FamilyId::TN44:
            return f.lambda * a.eye() + a * x[0] + in[1] * x[1];
        case FamilyId::TN45:
            return f.lambda * a.eye() + a * x[0] - in[1] * x[1];
        case FamilyId::TN46:
            return f.lambda * a.eye() + a * x[0] + x[1] * in[1];
        case FamilyId::T7:
            return f.lambda * a.eye() + a * x[0] - x[1] * in[1];
        case FamilyId::T8:
            return f.lambda * a.eye() + a * x[0] + x.back() * a;
        case FamilyId::T9:
            return f.lambda * a.eye() + a * x[0] - x.back() * a;
        case FamilyId::T10: {
            const T10Blocks t = t10(f);
            return f.lambda * t.m.eye() + t.m * x[0] - t.n * x[1];
        }
        case FamilyId::TW28: {
            const Matrix ab = hcat(a, in[1]);
            return ab - ab * vcat(x[0], x[1]) * ab;
        }
        case FamilyId::Z39:
            return a * x[0] * in[1];
        case FamilyId::Z41: {
            const Matrix pa = a * x[0], pb = in[1] * x[1];
            return hcat(pa * pb, pb * pa);
        }
        case FamilyId::Z44: {
            const Matrix &b = in[1], &c = in[2];
            return hcat({a * x[0] * hcat(b, c), b * x[1] * hcat(a, c), c * x[2] * hcat(a, b)});
        }
    }
    throw UsageError("extremal: unknown family");
}

namespace {

// A- = A^+ + F_A U + V E_A with the projectors computed once.
struct Slot {
    Matrix pinv, F, E;
    std::size_t rows, cols;  // shape of U and V (n x m for A m x n)
};

struct Sampler {
    const PencilFamily& family;
    std::vector<Slot> slots;
    FieldSpec field;

    explicit Sampler(const PencilFamily& f) : family(f), field(f.inputs.front().field()) {
        for (const Matrix& base : inverseBases(f)) {
            const ProjectorTriple p = projectorTriple(base);
            slots.push_back({moorePenrose(base), p.F, p.E, base.cols(), base.rows()});
        }
    }

    // One coordinate list per slot: U entries then V entries, row-major.
    using Draw = std::vector<std::vector<Scalar>>;

    Draw zero() const {
        Draw d;
        for (const Slot& s : slots) d.emplace_back(2 * s.rows * s.cols, Scalar(0, field));
        return d;
    }

    Draw random(Rng& rng) const {
        Draw d;
        for (const Slot& s : slots) {
            std::vector<Scalar> v;
            for (std::size_t i = 0; i < 2 * s.rows * s.cols; ++i) v.push_back(randomGaussianInt(rng, 2, field));
            d.push_back(std::move(v));
        }
        return d;
    }

    std::size_t rankAt(const Draw& d) const {
        std::vector<Matrix> inv;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            const Slot& s = slots[k];
            const std::size_t half = s.rows * s.cols;
            const Matrix u(s.rows, s.cols, std::vector<Scalar>(d[k].begin(), d[k].begin() + half), field);
            const Matrix v(s.rows, s.cols, std::vector<Scalar>(d[k].begin() + half, d[k].end()), field);
            inv.push_back(s.pinv + s.F * u + v * s.E);
        }
        return rank(pencilValue(family, inv));
    }
};

}  // namespace

std::size_t samplePencilRank(const PencilFamily& f, Rng& rng) {
    checkInputs(f);
    std::vector<Matrix> inv;
    for (const Matrix& base : inverseBases(f)) inv.push_back(sampleGenInverse(base, GInverseClass::One, rng).inverse);
    return rank(pencilValue(f, inv));
}

Certification certifyBounds(const PencilFamily& f, std::size_t trials, Rng& rng) {
    need(trials >= 1, "trials must be at least 1");
    Certification c;
    c.bounds = evalPencilBounds(f);
    const Sampler s(f);

    c.observedMin = SIZE_MAX;
    auto record = [&](std::size_t rk) {
        ++c.draws;
        c.observedMin = std::min(c.observedMin, rk);
        c.observedMax = std::max(c.observedMax, rk);
        if (rk < c.bounds.min || rk > c.bounds.max) c.outOfBounds.push_back(rk);
    };

    Sampler::Draw best;
    std::size_t bestRank = SIZE_MAX;
    for (std::size_t t = 0; t < trials; ++t) {
        Sampler::Draw d = s.random(rng);
        const std::size_t rk = s.rankAt(d);
        record(rk);
        if (rk < bestRank) {
            bestRank = rk;
            best = std::move(d);
        }
    }
    c.maxAttained = c.observedMax == c.bounds.max;

    // greedy search for the minimum: the MP point, zeroed U/V blocks, then single entries
    auto attained = [&] { return c.observedMin <= c.bounds.min; };
    if (!attained()) {
        Sampler::Draw d = s.zero();
        const std::size_t rk = s.rankAt(d);
        record(rk);
        if (rk < bestRank) {
            bestRank = rk;
            best = std::move(d);
        }
    }
    for (std::size_t k = 0; k < best.size() && !attained(); ++k) {
        const std::size_t half = best[k].size() / 2;
        for (std::size_t part = 0; part < 2 && !attained(); ++part) {
            Sampler::Draw d = best;
            std::fill(d[k].begin() + part * half, d[k].begin() + (part + 1) * half, Scalar(0, f.inputs[0].field()));
            const std::size_t rk = s.rankAt(d);
            record(rk);
            if (rk <= bestRank) {
                bestRank = rk;
                best = std::move(d);
            }
        }
    }
    const std::array<long, 4> moves = {0, 1, -1, 2};
    std::size_t budget = 400;
    for (std::size_t k = 0; k < best.size() && !attained() && budget > 0; ++k) {
        for (std::size_t i = 0; i < best[k].size() && !attained() && budget > 0; ++i) {
            for (long v : moves) {
                const Scalar x(v, f.inputs[0].field());
                if (best[k][i] == x) continue;
                Sampler::Draw d = best;
                d[k][i] = x;
                const std::size_t rk = s.rankAt(d);
                record(rk);
                --budget;
                if (rk < bestRank) {
                    bestRank = rk;
                    best = std::move(d);
                    break;
                }
                if (attained() || budget == 0) break;
            }
        }
    }
    c.minAttained = attained();
    return c;
}

namespace {

// Second matrix of a pair, m x cols, drawn in relation to a (m x n).
Matrix companion(const Matrix& a, std::size_t cols, Rng& rng, FieldSpec f) {
    const std::size_t m = a.rows();
    switch (randomIndex(rng, 0, 5)) {
        case 0:
            return zeros(m, cols, f);
        case 1:  // R(B) inside R(A)
            return a * randomMatrix(a.cols(), cols, rng, 2, f);
        case 2:  // R(B) = R(A) when possible
            return cols >= a.cols() ? hcat(a, a * randomMatrix(a.cols(), cols - a.cols(), rng, 2, f))
                                    : a * randomMatrix(a.cols(), cols, rng, 2, f);
        case 3:
            return randomOfRank(m, cols, std::min(m, cols), rng, f);
        default:
            return randomOfRank(m, cols, randomIndex(rng, 0, std::min(m, cols)), rng, f);
    }
}

Matrix randomRanked(std::size_t rows, std::size_t cols, Rng& rng, FieldSpec f) {
    return randomOfRank(rows, cols, randomIndex(rng, 0, std::min(rows, cols)), rng, f);
}

// p x m, related to a (m x n) through CA.
Matrix leftCompanion(const Matrix& a, std::size_t p, Rng& rng, FieldSpec f) {
    const std::size_t m = a.rows();
    switch (randomIndex(rng, 0, 4)) {
        case 0:  // CA = 0
            return randomMatrix(p, m, rng, 2, f) * projectorTriple(a).E;
        case 1:
            return p == a.cols() ? a.conjTranspose() : randomRanked(p, m, rng, f);
        case 2:
            return randomOfRank(p, m, std::min(p, m), rng, f);
        default:
            return randomRanked(p, m, rng, f);
    }
}

Matrix squareFlavour(std::size_t m, Rng& rng, FieldSpec f) {
    const Matrix s = randomNonsingular(m, rng, f);
    const std::size_t k = randomIndex(rng, 0, m);
    switch (randomIndex(rng, 0, 3)) {
        case 0: {  // nilpotent Jordan chain of length k+1
            std::vector<Scalar> d(m * m, Scalar(0, f));
            for (std::size_t i = 0; i + 1 < m && i < k; ++i) d[i * m + i + 1] = Scalar(1, f);
            return s * Matrix(m, m, d, f) * inverse(s);
        }
        case 1: {  // idempotent of rank k
            std::vector<Scalar> d(m, Scalar(0, f));
            for (std::size_t i = 0; i < k; ++i) d[i] = Scalar(1, f);
            return s * Matrix::diagonal(d, f) * inverse(s);
        }
        default:
            return randomOfRank(m, m, k, rng, f);
    }
}

}  // namespace

PencilFamily randomFamilyInstance(FamilyId id, std::size_t m, const Regime& regime, Rng& rng, FieldSpec field) {
    need(m >= 1, "order must be positive");
    PencilFamily f;
    f.id = id;
    if (regime.value) {
        f.lambda = Scalar(*regime.value, field);
    } else if (usesLambda(id)) {
        std::vector<Rational> ex;
        for (long x : regime.excluded) ex.emplace_back(x);
        f.lambda = randomNonzeroRational(rng, 3, field, ex);
    } else {
        f.lambda = Scalar(0, field);
    }
    auto width = [&] { return randomIndex(rng, 1, m + 1); };
    switch (id) {
        case FamilyId::TN44:
        case FamilyId::TN45:
        case FamilyId::TW28:
        case FamilyId::Z39:
        case FamilyId::Z41: {
            Matrix a = randomRanked(m, width(), rng, field);
            Matrix b = companion(a, width(), rng, field);
            if (randomIndex(rng, 0, 1)) std::swap(a, b);
            f.inputs = {a, b};
            break;
        }
        case FamilyId::TN46:
        case FamilyId::T7: {
            Matrix a = randomRanked(m, width(), rng, field);
            f.inputs = {a, leftCompanion(a, width(), rng, field)};
            break;
        }
        case FamilyId::T8:
        case FamilyId::T9:
            f.inputs = {squareFlavour(m, rng, field)};
            break;
        case FamilyId::T10: {
            const std::size_t l = randomIndex(rng, 1, m), n = width(), k = width();
            Matrix a = randomRanked(m, n, rng, field);
            Matrix b = companion(a, k, rng, field);
            Matrix c = randomRanked(l, n, rng, field);
            Matrix d = randomRanked(l, k, rng, field);
            switch (randomIndex(rng, 0, 3)) {
                case 0:
                    b = zeros(m, k, field);
                    c = zeros(l, n, field);
                    break;
                case 1:  // M of low rank
                    c = randomMatrix(l, m, rng, 2, field) * a;
                    d = randomMatrix(l, m, rng, 2, field) * b;
                    break;
                default:
                    break;
            }
            f.inputs = {a, b, c, d};
            break;
        }
        case FamilyId::Z44: {
            Matrix a = randomRanked(m, width(), rng, field);
            Matrix b = companion(a, width(), rng, field);
            Matrix c = randomIndex(rng, 0, 1) ? hcat(a, b) * randomMatrix(a.cols() + b.cols(), width(), rng, 2, field)
                                              : randomRanked(m, width(), rng, field);
            f.inputs = {a, b, c};
            break;
        }
    }
    return f;
}

std::vector<CertificationRecord> runExtremal(const ExtremalConfig& config) {
    need(config.dimLo >= 1 && config.dimLo <= config.dimHi, "bad order range");
    need(config.trials >= 1 && config.instances >= 1, "trials and instances must be positive");
    const FieldSpec field = FieldSpec::withRadicand(config.radicand);
    const std::vector<FamilyId>& ids = config.families.empty() ? allFamilies() : config.families;
    std::vector<CertificationRecord> out;
    for (FamilyId id : ids) {
        const bool twoModes = id == FamilyId::T8 || id == FamilyId::T9;
        for (const Regime& g : regimes(id))
            for (std::size_t m = config.dimLo; m <= config.dimHi; ++m)
                for (std::size_t i = 0; i < config.instances; ++i)
                    for (int mode = 0; mode < (twoModes ? 2 : 1); ++mode) {
                        Rng rng = makeRng(config.seed, {tagOf(familyName(id)), tagOf(g.name), m, i});
                        CertificationRecord rec;
                        rec.family = randomFamilyInstance(id, m, g, rng, field);
                        rec.family.sharedInverse = mode == 0;
                        rec.regime = g.name;
                        rec.m = m;
                        rec.instance = i;
                        rec.cert = certifyBounds(rec.family, config.trials, rng);
                        out.push_back(std::move(rec));
                    }
    }
    return out;
}

}  // namespace ranklab
