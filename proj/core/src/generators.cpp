#include "ranklab/generators.hpp"

#include "ranklab/errors.hpp"
#include "ranklab/geninv.hpp"
#include "ranklab/random.hpp"

#include <algorithm>
#include <numeric>

namespace ranklab {

namespace {

Matrix diagPattern(const std::vector<int>& bits, FieldSpec field) {
    std::vector<Scalar> d;
    d.reserve(bits.size());
    for (int b : bits) d.emplace_back(b, field);
    return Matrix::diagonal(d, field);
}

std::vector<int> randomBits(std::size_t m, Rng& rng) {
    std::vector<int> bits(m);
    for (auto& b : bits) b = static_cast<int>(randomIndex(rng, 0, 1));
    return bits;
}

Matrix conjugateBy(const Matrix& p, const Matrix& core) { return p * core * inverse(p); }

// P diag(I_k, D) P^{-1}; D = 0 half of the time, which gives an idempotent.
Matrix idempotentAdjacent(std::size_t m, Rng& rng, FieldSpec field) {
    const std::size_t k = randomIndex(rng, 0, m);
    std::vector<std::vector<Matrix>> grid{{Matrix::identity(k, field), Matrix(k, m - k, field)},
                                          {Matrix(m - k, k, field), Matrix(m - k, m - k, field)}};
    if (randomIndex(rng, 0, 1) == 1) grid[1][1] = randomMatrix(m - k, m - k, rng, 2, field);
    const Matrix core = blockAssemble(grid);
    return conjugateBy(randomNonsingular(m, rng, field), core);
}

Matrix eigenOneSolution(const Matrix& a, std::size_t cols, Rng& rng) {
    // columns drawn from N(A - I)
    const Matrix k = kernelBasis(a - a.eye());
    if (k.cols() == 0) return Matrix(a.rows(), cols, a.field());
    return k * randomMatrix(k.cols(), cols, rng, 2, a.field());
}

}  // namespace

Matrix randomIdempotent(std::size_t m, std::size_t k, Rng& rng, FieldSpec field) {
    if (k > m) throw UsageError("idempotent rank exceeds order");
    if (k == 0) return Matrix(m, m, field);
    if (k == m) return Matrix::identity(m, field);
    std::vector<int> bits(m, 0);
    std::fill(bits.begin(), bits.begin() + static_cast<long>(k), 1);
    return conjugateBy(randomNonsingular(m, rng, field), diagPattern(bits, field));
}

Matrix randomProjector(std::size_t m, std::size_t k, Rng& rng, FieldSpec field) {
    if (k > m) throw UsageError("projector rank exceeds order");
    if (k == 0) return Matrix(m, m, field);
    if (k == m) return Matrix::identity(m, field);
    const Matrix b = randomFullColumnRank(m, k, rng, field);
    const Matrix bs = b.conjTranspose();
    return b * inverse(bs * b) * bs;
}

Matrix randomUnitary(std::size_t m, Rng& rng, FieldSpec field) {
    Matrix h = randomMatrix(m, m, rng, 2, field);
    const Matrix s = h - h.conjTranspose();
    const Matrix id = Matrix::identity(m, field);
    return (id - s) * inverse(id + s);
}

Matrix derivedIdempotent(DerivedRule rule, const Matrix& a, const Matrix& b, const Matrix& c) {
    const FieldSpec f = a.field();
    const Scalar half = Scalar::rational(Rational(1, 2), f);
    auto requireSquare = [&a] {
        if (!a.isSquare()) throw PreconditionError("source must be square");
    };
    switch (rule) {
        case DerivedRule::NegSquare:
            requireSquare();
            if (a * a != -a) throw PreconditionError("A^2 = -A fails");
            return -a;
        case DerivedRule::InvolutionPlus:
        case DerivedRule::InvolutionMinus:
            requireSquare();
            if (a * a != a.eye()) throw PreconditionError("A^2 = I fails");
            return half * (rule == DerivedRule::InvolutionPlus ? a.eye() + a : a.eye() - a);
        case DerivedRule::SkewInvolutionPlus:
        case DerivedRule::SkewInvolutionMinus: {
            requireSquare();
            if (a * a != -a.eye()) throw PreconditionError("A^2 = -I fails");
            const Matrix ia = Scalar::imaginaryUnit(f) * a;
            return half * (rule == DerivedRule::SkewInvolutionPlus ? a.eye() + ia : a.eye() - ia);
        }
        case DerivedRule::ProductBAdagA:
            if (a.cols() != b.rows() || b.cols() != a.rows()) throw PreconditionError("A, B not conformable");
            return b * moorePenrose(a * b) * a;
        case DerivedRule::TripleProductLeft:
        case DerivedRule::TripleProductRight: {
            if (a.cols() != b.rows() || b.cols() != c.rows() || c.cols() != a.rows())
                throw PreconditionError("A, B, C not conformable");
            const Matrix t = moorePenrose(a * b * c);
            return rule == DerivedRule::TripleProductLeft ? b * c * t * a : c * t * a * b;
        }
    }
    throw UsageError("unknown rule");
}

const char* flavorName(PairFlavor f) {
    switch (f) {
        case PairFlavor::Independent: return "independent";
        case PairFlavor::Commuting: return "commuting";
        case PairFlavor::Equal: return "equal";
        case PairFlavor::Disjoint: return "disjoint";
        case PairFlavor::SharedRange: return "shared-range";
        case PairFlavor::Complementary: return "complementary";
    }
    return "?";
}

PairFlavor flavorForTrial(std::size_t trial) {
    // independent pairs dominate; the structured ones make fact clauses true now and then
    static constexpr PairFlavor cycle[] = {
        PairFlavor::Independent, PairFlavor::Commuting,   PairFlavor::Independent, PairFlavor::Equal,
        PairFlavor::Independent, PairFlavor::Disjoint,    PairFlavor::Independent, PairFlavor::SharedRange,
        PairFlavor::Independent, PairFlavor::Complementary,
    };
    return cycle[trial % std::size(cycle)];
}

MatrixPair randomIdempotentPair(std::size_t m, Rng& rng, PairFlavor flavor, FieldSpec field) {
    switch (flavor) {
        case PairFlavor::Independent: {
            Matrix a = randomIdempotent(m, randomIndex(rng, 0, m), rng, field);
            Matrix b = randomIdempotent(m, randomIndex(rng, 0, m), rng, field);
            return {a, b};
        }
        case PairFlavor::Commuting: {
            const Matrix p = randomNonsingular(m, rng, field);
            const Matrix pi = inverse(p);
            return {p * diagPattern(randomBits(m, rng), field) * pi, p * diagPattern(randomBits(m, rng), field) * pi};
        }
        case PairFlavor::Equal: {
            Matrix a = randomIdempotent(m, randomIndex(rng, 0, m), rng, field);
            return {a, a};
        }
        case PairFlavor::Disjoint: {
            const std::size_t k = randomIndex(rng, 0, m);
            const Matrix p = randomNonsingular(m, rng, field);
            const Matrix pi = inverse(p);
            const Matrix inner = randomIdempotent(m - k, randomIndex(rng, 0, m - k), rng, field);
            const Matrix a = blockAssemble({{Matrix::identity(k, field), Matrix(k, m - k, field)},
                                            {Matrix(m - k, k, field), Matrix(m - k, m - k, field)}});
            const Matrix b = blockAssemble(
                {{Matrix(k, k, field), Matrix(k, m - k, field)}, {Matrix(m - k, k, field), inner}});
            return {p * a * pi, p * b * pi};
        }
        case PairFlavor::SharedRange: {
            const Matrix a = randomIdempotent(m, randomIndex(rng, 0, m), rng, field);
            const Matrix x = randomMatrix(m, m, rng, 2, field);
            return {a, a + a * x * (a.eye() - a)};
        }
        case PairFlavor::Complementary: {
            const Matrix a = randomIdempotent(m, randomIndex(rng, 0, m), rng, field);
            return {a, a.eye() - a};
        }
    }
    throw UsageError("unknown flavor");
}

MatrixPair randomProjectorPair(std::size_t m, Rng& rng, PairFlavor flavor, FieldSpec field) {
    switch (flavor) {
        case PairFlavor::Commuting:
        case PairFlavor::Disjoint:
        case PairFlavor::Complementary: {
            const Matrix u = randomUnitary(m, rng, field);
            const Matrix us = u.conjTranspose();
            std::vector<int> a = randomBits(m, rng);
            std::vector<int> b = randomBits(m, rng);
            if (flavor != PairFlavor::Commuting)
                for (std::size_t i = 0; i < m; ++i) b[i] = a[i] ? 0 : (flavor == PairFlavor::Complementary ? 1 : b[i]);
            return {u * diagPattern(a, field) * us, u * diagPattern(b, field) * us};
        }
        case PairFlavor::Equal:
        case PairFlavor::SharedRange: {
            Matrix a = randomProjector(m, randomIndex(rng, 0, m), rng, field);
            return {a, a};
        }
        case PairFlavor::Independent:
            break;
    }
    Matrix a = randomProjector(m, randomIndex(rng, 0, m), rng, field);
    Matrix b = randomProjector(m, randomIndex(rng, 0, m), rng, field);
    return {a, b};
}

std::vector<Matrix> randomIdempotentFamily(std::size_t m, std::size_t count, Rng& rng, bool commuting,
                                           FieldSpec field) {
    std::vector<Matrix> out;
    out.reserve(count);
    if (commuting) {
        const Matrix p = randomNonsingular(m, rng, field);
        const Matrix pi = inverse(p);
        for (std::size_t i = 0; i < count; ++i) out.push_back(p * diagPattern(randomBits(m, rng), field) * pi);
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) out.push_back(randomIdempotent(m, randomIndex(rng, 0, m), rng, field));
    return out;
}

EquationSample sampleEquationSolutions(EquationKind kind, std::size_t m, Rng& rng, FieldSpec field) {
    EquationSample s{kind, {}, {}, {}, {}, {}};
    switch (kind) {
        case EquationKind::Z1: {
            s.M = idempotentAdjacent(m, rng, field);
            s.A = s.B = s.M;
            const Matrix id = Matrix::identity(m, field);
            // MX - X = 0, YM - Y = 0, MY - XM = 0
            std::vector<MatrixEquation> eqs{
                {{{0, s.M, id}, {0, -id, id}}, Matrix(m, m, field)},
                {{{1, id, s.M}, {1, -id, id}}, Matrix(m, m, field)},
                {{{1, s.M, id}, {0, -id, s.M}}, Matrix(m, m, field)},
            };
            auto sol = solveLinearMatrixSystem(eqs, {{m, m}, {m, m}}, rng, field);
            s.X = sol[0];
            s.Y = sol[1];
            return s;
        }
        case EquationKind::Z8: {
            s.A = idempotentAdjacent(m, rng, field);
            s.B = idempotentAdjacent(m, rng, field);
            const Matrix id = Matrix::identity(m, field);
            std::vector<MatrixEquation> eqs{
                {{{0, s.A, id}, {0, -id, id}}, Matrix(m, m, field)},
                {{{1, id, s.B}, {1, -id, id}}, Matrix(m, m, field)},
                {{{1, s.A, id}, {0, -id, s.B}}, Matrix(m, m, field)},
            };
            auto sol = solveLinearMatrixSystem(eqs, {{m, m}, {m, m}}, rng, field);
            s.X = sol[0];
            s.Y = sol[1];
            return s;
        }
        case EquationKind::Z11:
            break;
    }
    // Z11: structured instances from an idempotent pair, otherwise eigenvalue-one columns
    // filtered by the two range conditions.
    if (randomIndex(rng, 0, 1) == 0) {
        const MatrixPair ab = randomIdempotentPair(m, rng, flavorForTrial(randomIndex(rng, 0, 9)), field);
        s.A = ab.A;
        s.B = ab.B;
        const unsigned j = static_cast<unsigned>(randomIndex(rng, 0, 2));
        const Matrix abj = (s.A * s.B).pow(j);
        const Matrix baj = (s.B * s.A).pow(j);
        if (randomIndex(rng, 0, 1) == 0) {
            s.X = abj * s.A;
            s.Y = baj * s.B;
        } else {
            s.X = abj * s.A * s.B;
            s.Y = baj * s.B * s.A;
        }
        return s;
    }
    for (int attempt = 0; attempt < 32; ++attempt) {
        s.A = idempotentAdjacent(m, rng, field);
        s.B = idempotentAdjacent(m, rng, field);
        s.X = eigenOneSolution(s.A, randomIndex(rng, 1, m + 1), rng);
        s.Y = eigenOneSolution(s.B, randomIndex(rng, 1, m + 1), rng);
        if (satisfiesSystem(s)) return s;
    }
    s.X = Matrix(m, 1, field);
    s.Y = Matrix(m, 1, field);
    return s;
}

bool satisfiesSystem(const EquationSample& s) {
    switch (s.kind) {
        case EquationKind::Z1:
            return s.M * s.X == s.X && s.Y * s.M == s.Y && s.M * s.Y == s.X * s.M;
        case EquationKind::Z8:
            return s.A * s.X == s.X && s.Y * s.B == s.Y && s.A * s.Y == s.X * s.B;
        case EquationKind::Z11:
            return s.A * s.X == s.X && s.B * s.Y == s.Y && rangeContained(s.A * s.Y, s.X) &&
                   rangeContained(s.B * s.X, s.Y);
    }
    return false;
}

const std::vector<std::string>& instanceKinds() {
    static const std::vector<std::string> kinds{"idempotent-pair",  "idempotent-triple", "projector-pair",
                                                "idempotent-family", "equation-system",   "star-pair"};
    return kinds;
}

}  // namespace ranklab
