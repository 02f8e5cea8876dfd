#pragma once

#include "ranklab/matrix.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ranklab {

enum class Outcome { Pass, Fail, Miss };

enum class CheckerKind { MatrixIdentity, RankEquality, SubspaceIdentity, FactEquivalence, ConditionalInverse };

enum class InputClass {
    Square,            // A (m x m), general
    RectPair,          // A (m x n), B (n x m)
    RectQuad,          // A (m x n), B (p x q), X (n x p), Y (q x m)
    IdempotentPair,    // A, B idempotent (flavored)
    IdempotentTriple,  // A, B, C idempotent (mixed)
    CommutingTriple,   // A, B, C idempotent, pairwise commuting
    IdempotentFamily,  // A1 .. Ak idempotent, k in 2..4
    ProjectorPair,     // A, B orthogonal projectors
    StarIdempotent,    // A idempotent, B = A*
    EquationZ1,        // M, X, Y with MX = X, YM = Y, MY = XM
    EquationZ8,        // A, B, X, Y with AX = X, YB = Y, AY = XB
    EquationZ11,       // A, B, X, Y with AX = X, BY = Y and the two range conditions
    RowPair,           // A (m x n), B (m x p)
    RowPairGInverse,   // RowPair plus one {1}-inverse each
    RowTriple,         // A, B, C with m rows
    RowTripleGInverse, // RowTriple plus one {1}-inverse each
    MatrixPair,        // M (m x n), N (m x p), unstructured
};

const char* checkerName(CheckerKind k);
const char* inputClassName(InputClass c);

/// Left/right value of one check. Ranks are integers, facts are clause vectors.
using Detail = std::variant<std::monostate, std::int64_t, bool, Matrix, std::vector<std::int64_t>, std::vector<bool>,
                            std::string>;

struct Verdict {
    Outcome outcome = Outcome::Pass;
    Detail lhs;
    Detail rhs;
};

/// One generated input. Names are the symbols used in the entry statement.
struct Instance {
    std::size_t m = 0;
    unsigned k = 1;
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    std::size_t attempt = 0;
    FieldSpec field;
    std::vector<std::pair<std::string, Matrix>> matrices;
    std::vector<std::pair<std::string, Scalar>> scalars;

    const Matrix& mat(std::string_view name) const;
    const Scalar& scalar(std::string_view name) const;
    bool has(std::string_view name) const;
    /// A1, A2, ... of a family instance.
    std::vector<Matrix> family() const;
};

using CheckFn = std::function<Verdict(const Instance&)>;

/// Scalar parameter drawn as a small nonzero rational, excluded values removed.
struct ScalarParam {
    std::string name;
    std::vector<Rational> excluded;
};

/// A suspected misprint: the entry checks the corrected reading; `literal` evaluates the
/// reading as written (empty when it cannot be evaluated at all).
struct Erratum {
    std::string note;
    std::string literal;
    std::string corrected;
    CheckFn literalCheck;
};

struct CatalogEntry {
    std::string id;
    std::string statement;
    InputClass input = InputClass::IdempotentPair;
    CheckerKind checker = CheckerKind::RankEquality;
    bool usesK = false;
    std::uint32_t radicand = 0;
    std::vector<ScalarParam> scalars;
    bool auditOnly = false;
    std::optional<Erratum> erratum;
    CheckFn check;
};

/// Every entry in registration order.
const std::vector<CatalogEntry>& catalog();
/// Throws UsageError for an unknown id.
const CatalogEntry& findEntry(std::string_view id);

/// Draws the matrices of one instance (scalars are added by the runner).
Instance generateInstance(InputClass cls, std::size_t m, std::size_t trial, Rng& rng, FieldSpec field);

/// Runs the entry's check; exceptions from the arithmetic layer become a Fail with the message.
Verdict evaluate(const CatalogEntry& entry, const Instance& in);

struct SuiteConfig {
    std::vector<std::string> entries;  // empty with allEntries=false means nothing to do
    bool allEntries = false;
    std::size_t dimLo = 2;
    std::size_t dimHi = 5;
    std::size_t trials = 25;
    std::uint64_t seed = 1;
    std::optional<std::uint32_t> field;
    std::vector<unsigned> kSweep{1, 2, 3};
    bool audit = false;
    std::size_t maxFailuresPerEntry = 5;
    std::size_t resampleBudget = 16;
};

struct FailureRecord {
    Instance inputs;
    Detail lhs;
    Detail rhs;
};

struct EntryReport {
    std::string id;
    std::size_t passes = 0;
    std::size_t fails = 0;
    std::size_t misses = 0;
    std::vector<FailureRecord> failures;
};

struct AuditRecord {
    std::string id;
    std::string note;
    std::string literal;
    std::string corrected;
    bool evaluable = false;
    std::size_t literalPasses = 0;
    std::size_t literalFails = 0;
    std::size_t literalMisses = 0;  // instances where the literal reading is not conformable
    std::size_t correctedPasses = 0;
    std::size_t correctedFails = 0;
};

struct Report {
    SuiteConfig config;
    std::vector<EntryReport> entries;
    std::vector<AuditRecord> audit;

    std::size_t totalFails() const;
};

/// Validates ids and field compatibility (ConfigurationError) before any work.
std::vector<const CatalogEntry*> selectEntries(const SuiteConfig& config);

Report runSuite(const SuiteConfig& config);

/// Ids of entries that carry an erratum annotation, in catalog order.
std::vector<std::string> erratumIds();

}  // namespace ranklab
