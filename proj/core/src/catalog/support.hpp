#pragma once

// Shared vocabulary for catalog entries. Internal to the core library.

#include "ranklab/catalog.hpp"
#include "ranklab/errors.hpp"
#include "ranklab/geninv.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ranklab::detail {

void registerRankEntries(std::vector<CatalogEntry>& v);
void registerPairIdentityEntries(std::vector<CatalogEntry>& v);
void registerInverseEntries(std::vector<CatalogEntry>& v);
void registerSubspaceEntries(std::vector<CatalogEntry>& v);
void registerStarEntries(std::vector<CatalogEntry>& v);
void registerTripleSumEntries(std::vector<CatalogEntry>& v);
void registerPencilFactEntries(std::vector<CatalogEntry>& v);

// I + aX + bY = (I + aX)(I - l XY)(I + bY) and its consequences, on the pair or the star class.
void registerVetterEntries(std::vector<CatalogEntry>& v, InputClass input, const std::string& prefix,
                           const std::string& second, const std::array<const char*, 5>& ids);

using I64 = std::int64_t;

inline I64 r(const Matrix& m) { return static_cast<I64>(rank(m)); }

inline Scalar q(long num, long den, FieldSpec f) { return Scalar::rational(Rational(num, den), f); }

inline Verdict pass(Detail l, Detail rr) { return {Outcome::Pass, std::move(l), std::move(rr)}; }
inline Verdict fail(Detail l, Detail rr) { return {Outcome::Fail, std::move(l), std::move(rr)}; }
inline Verdict miss() { return {Outcome::Miss, std::monostate{}, std::monostate{}}; }

inline Verdict rankEq(I64 lhs, I64 rhs) { return lhs == rhs ? pass(lhs, rhs) : fail(lhs, rhs); }

inline Verdict matEq(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() && lhs == rhs) return pass(std::monostate{}, std::monostate{});
    return fail(lhs, rhs);
}

/// Every value equal to the first.
inline Verdict rankChain(std::vector<I64> values) {
    for (I64 x : values)
        if (x != values.front()) return fail(values.front(), values);
    return pass(values.front(), values);
}

inline Verdict matChain(const std::vector<Matrix>& values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        Verdict v = matEq(values.front(), values[i]);
        if (v.outcome != Outcome::Pass) return v;
    }
    return pass(std::monostate{}, std::monostate{});
}

/// All clauses share one truth value.
inline Verdict iff(std::vector<bool> clauses) {
    const bool first = clauses.front();
    for (bool c : clauses)
        if (c != first) return fail(first, clauses);
    return pass(first, clauses);
}

inline Verdict implies(bool a, bool b) { return (!a || b) ? pass(a, b) : fail(a, b); }

inline Verdict holds(bool claim) { return claim ? pass(true, true) : fail(false, true); }

/// R(lhs) = R(rhs) for basis (or spanning) matrices.
inline Verdict sameSpace(const Matrix& lhs, const Matrix& rhs) {
    return rangeEqual(lhs, rhs) ? pass(std::monostate{}, std::monostate{}) : fail(lhs, rhs);
}

/// R(lhs) contained in R(rhs).
inline Verdict inSpace(const Matrix& lhs, const Matrix& rhs) {
    return rangeContained(lhs, rhs) ? pass(std::monostate{}, std::monostate{}) : fail(lhs, rhs);
}

/// First non-passing verdict, else pass.
inline Verdict allOf(std::initializer_list<Verdict> parts) {
    for (const Verdict& v : parts)
        if (v.outcome != Outcome::Pass) return v;
    return pass(std::monostate{}, std::monostate{});
}

inline Matrix nul(const Matrix& m) { return kernelBasis(m); }
inline Matrix cap(const Matrix& a, const Matrix& b) { return rangeIntersectionBasis(a, b); }
inline Matrix sum(const Matrix& a, const Matrix& b) { return hcat(a, b); }
inline bool trivial(const Matrix& basis) { return rank(basis) == 0; }
inline bool disjointRanges(const Matrix& a, const Matrix& b) { return trivial(cap(a, b)); }

inline bool nonsingular(const Matrix& m) { return isNonsingular(m); }

/// Appends an entry and returns it for further tweaks. The reference is valid until the next add.
inline CatalogEntry& add(std::vector<CatalogEntry>& v, std::string id, std::string statement, InputClass input,
                         CheckerKind checker, CheckFn check) {
    CatalogEntry e;
    e.id = std::move(id);
    e.statement = std::move(statement);
    e.input = input;
    e.checker = checker;
    e.check = std::move(check);
    v.push_back(std::move(e));
    return v.back();
}

inline CatalogEntry& withErratum(CatalogEntry& e, std::string note, std::string literal, std::string corrected,
                                 CheckFn literalCheck = {}) {
    e.erratum = Erratum{std::move(note), std::move(literal), std::move(corrected), std::move(literalCheck)};
    return e;
}

}  // namespace ranklab::detail

// Binds the usual names of a two-matrix instance.
#define RL_PAIR(in)                        \
    const Matrix& A = (in).mat("A");       \
    const Matrix& B = (in).mat("B");       \
    const Matrix I = A.eye();              \
    const FieldSpec F = A.field();         \
    const unsigned k = (in).k;             \
    (void)I;                               \
    (void)F;                               \
    (void)k

#define RL_TRIPLE(in)                      \
    RL_PAIR(in);                           \
    const Matrix& C = (in).mat("C")
