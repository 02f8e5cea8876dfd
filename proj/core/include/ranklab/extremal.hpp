#pragma once

// Maximum and minimum ranks of matrix expressions over the choice of generalized inverses:
// closed forms, the two-variable linear matrix function formulas, and a sampling certifier.

#include "ranklab/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ranklab {

struct Bounds {
    std::size_t max = 0;
    std::size_t min = 0;
    bool operator==(const Bounds&) const = default;
};

/// max/min over X1, X2 of r(A - B1 X1 C1 - B2 X2 C2).
Bounds evalTwoTermLMVFBounds(const Matrix& a, const Matrix& b1, const Matrix& c1, const Matrix& b2,
                             const Matrix& c2);

/// max/min over A^- of r(D - C A^- B).
Bounds evalOneTermGInverseBounds(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

enum class FamilyId { TN44, TN45, TN46, T7, T8, T9, T10, TW28, Z39, Z41, Z44 };

std::string_view familyName(FamilyId id);
std::optional<FamilyId> parseFamily(std::string_view name);
const std::vector<FamilyId>& allFamilies();
/// Families whose expression contains lambda I.
bool usesLambda(FamilyId id);
/// Names of the inputs, in order.
std::vector<std::string> familyInputs(FamilyId id);

// Inputs:
//   TN44, TN45    A (m x n), B (m x p)      lambda I + AA- +- BB-
//   TN46, T7      A (m x n), C (p x m)      lambda I + AA- +- C-C
//   T8, T9        A (m x m)                 lambda I + AA- +- A-A
//   T10           A, B, C, D blocks         lambda I + MM- - NN-, M = [A, B; C, D], N = diag(A, D)
//   TW28          A, B                      [A, B] - [A, B][A-; B-][A, B]
//   Z39           A, B                      AA-B
//   Z41           A, B                      [AA-BB-, BB-AA-]
//   Z44           A, B, C                   [AA-[B, C], BB-[A, C], CC-[A, B]]
struct PencilFamily {
    FamilyId id = FamilyId::TN44;
    Scalar lambda;
    std::vector<Matrix> inputs;
    bool sharedInverse = true;  // T8, T9: the same A- in both terms
};

/// A lambda branch of a theorem; `value` is empty for the generic branch, which avoids `excluded`.
struct Regime {
    std::string name;
    std::optional<long> value;
    std::vector<long> excluded;
};
std::vector<Regime> regimes(FamilyId id);

/// Closed-form bounds. Throws UsageError for shape mismatches and for a lambda with no formula.
Bounds evalPencilBounds(const PencilFamily& f);

/// The bounds recomputed from the A- = A^+ + F_A U + V E_A parametrization through
/// evalTwoTermLMVFBounds; empty for the families that are not linear in the free matrices.
std::optional<Bounds> parametrizedBounds(const PencilFamily& f);

/// The expression at the given inner inverses (one per inverted matrix, see inverseBases).
Matrix pencilValue(const PencilFamily& f, const std::vector<Matrix>& inverses);
/// The matrices whose generalized inverses enter the expression.
std::vector<Matrix> inverseBases(const PencilFamily& f);

/// Rank at one random draw of the inner inverses.
std::size_t samplePencilRank(const PencilFamily& f, Rng& rng);

struct Certification {
    Bounds bounds;
    std::size_t observedMin = 0;
    std::size_t observedMax = 0;
    bool maxAttained = false;
    bool minAttained = false;
    std::size_t draws = 0;
    std::vector<std::size_t> outOfBounds;  // sampled ranks outside [min, max]
};

/// `trials` random draws plus a greedy search toward the minimum.
Certification certifyBounds(const PencilFamily& f, std::size_t trials, Rng& rng);

/// Random inputs of order m for the regime; lambda drawn when the regime is generic.
PencilFamily randomFamilyInstance(FamilyId id, std::size_t m, const Regime& regime, Rng& rng, FieldSpec field = {});

struct ExtremalConfig {
    std::vector<FamilyId> families;  // empty: all
    std::size_t dimLo = 2;
    std::size_t dimHi = 4;
    std::size_t trials = 16;
    std::size_t instances = 1;  // per family, regime and order
    std::uint64_t seed = 1;
    std::uint32_t radicand = 0;
};

struct CertificationRecord {
    PencilFamily family;
    std::string regime;
    std::size_t m = 0;
    std::size_t instance = 0;
    Certification cert;
};

/// Every family x regime x order x instance; T8 and T9 run once per inverse mode.
/// Each record draws from its own stream, so the result does not depend on the family list.
std::vector<CertificationRecord> runExtremal(const ExtremalConfig& config);

}  // namespace ranklab
