#pragma once

#include "ranklab/matrix.hpp"

#include <string>
#include <vector>

namespace ranklab {

/// P diag(I_k, 0) P^{-1} with P rejection sampled.
Matrix randomIdempotent(std::size_t m, std::size_t k, Rng& rng, FieldSpec field = {});

/// B (B*B)^{-1} B* with B of full column rank k.
Matrix randomProjector(std::size_t m, std::size_t k, Rng& rng, FieldSpec field = {});

/// Cayley transform (I - S)(I + S)^{-1} of a random skew-Hermitian S; exact and unitary.
Matrix randomUnitary(std::size_t m, Rng& rng, FieldSpec field = {});

enum class DerivedRule {
    NegSquare,          // A^2 = -A       ->  -A
    InvolutionPlus,     // A^2 = I        ->  (I + A)/2
    InvolutionMinus,    // A^2 = I        ->  (I - A)/2
    SkewInvolutionPlus, // A^2 = -I       ->  (I + iA)/2
    SkewInvolutionMinus,// A^2 = -I       ->  (I - iA)/2
    ProductBAdagA,      // B (AB)^dagger A
    TripleProductLeft,  // BC (ABC)^dagger A
    TripleProductRight, // C (ABC)^dagger AB
};

/// Throws PreconditionError if the source does not satisfy the rule's hypothesis.
Matrix derivedIdempotent(DerivedRule rule, const Matrix& a, const Matrix& b = {}, const Matrix& c = {});

enum class PairFlavor {
    Independent,
    Commuting,      // one shared P, 0/1 diagonal patterns
    Equal,          // B = A
    Disjoint,       // AB = BA = 0
    SharedRange,    // R(A) = R(B), B = A + A X (I - A)
    Complementary,  // B = I - A
};

const char* flavorName(PairFlavor f);
PairFlavor flavorForTrial(std::size_t trial);

struct MatrixPair {
    Matrix A;
    Matrix B;
};

MatrixPair randomIdempotentPair(std::size_t m, Rng& rng, PairFlavor flavor, FieldSpec field = {});

/// Orthogonal projector pair. Commuting pairs share one unitary frame; Disjoint gives AB = 0.
MatrixPair randomProjectorPair(std::size_t m, Rng& rng, PairFlavor flavor, FieldSpec field = {});

/// Independent idempotents, or simultaneously diagonalizable ones when `commuting`.
std::vector<Matrix> randomIdempotentFamily(std::size_t m, std::size_t count, Rng& rng, bool commuting,
                                           FieldSpec field = {});

enum class EquationKind { Z1, Z8, Z11 };

/// Coefficients and one sampled (X, Y). Z1 fills M only (A = B = M).
struct EquationSample {
    EquationKind kind;
    Matrix M;
    Matrix A;
    Matrix B;
    Matrix X;
    Matrix Y;
};

EquationSample sampleEquationSolutions(EquationKind kind, std::size_t m, Rng& rng, FieldSpec field = {});

/// Substitution check of the system (ranges included for Z11).
bool satisfiesSystem(const EquationSample& s);

/// Kinds accepted by the gen command.
const std::vector<std::string>& instanceKinds();

}  // namespace ranklab
