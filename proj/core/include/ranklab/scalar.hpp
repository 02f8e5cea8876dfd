#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ranklab {

using Rational = mpq_class;

/// The field Q(i)(sqrt d). radicand 0 means plain Gaussian rationals Q(i).
class FieldSpec {
public:
    constexpr FieldSpec() = default;

    /// Validates d: 0, or squarefree and >= 2. Throws UsageError otherwise.
    static FieldSpec withRadicand(std::uint32_t d);

    /// True for 0 and for squarefree d >= 2.
    static bool isValidRadicand(std::uint64_t d);

    constexpr std::uint32_t radicand() const { return radicand_; }
    constexpr bool extended() const { return radicand_ != 0; }

    friend constexpr bool operator==(FieldSpec a, FieldSpec b) { return a.radicand_ == b.radicand_; }

    std::string str() const;

private:
    constexpr explicit FieldSpec(std::uint32_t d) : radicand_(d) {}
    std::uint32_t radicand_ = 0;
};

/// Splits n = s^2 * f with f squarefree; returns {s, f}.
std::pair<std::uint64_t, std::uint64_t> squarefreeDecompose(std::uint64_t n);

/// Element (a_re + a_im i) + (b_re + b_im i) sqrt(d) of Q(i)(sqrt d).
///
/// Every component is a canonical GMP rational, so equality is component-wise.
/// Operations between scalars of different fields throw UsageError.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(FieldSpec field) : field_(field) {}
    explicit Scalar(long value, FieldSpec field = {}) : re_(value), field_(field) {}

    static Scalar rational(const Rational& re, FieldSpec field = {});
    static Scalar complex(const Rational& re, const Rational& im, FieldSpec field = {});
    static Scalar make(const Rational& re, const Rational& im, const Rational& sqrtRe,
                       const Rational& sqrtIm, FieldSpec field);
    static Scalar imaginaryUnit(FieldSpec field = {});
    /// sqrt(d) itself; requires an extended field.
    static Scalar sqrtRadicand(FieldSpec field);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Rational& sqrtRe() const { return sqrtRe_; }
    const Rational& sqrtIm() const { return sqrtIm_; }
    FieldSpec field() const { return field_; }

    bool isZero() const;
    bool isOne() const;

    Scalar conj() const;
    Scalar inverse() const;

    /// Re-tags a Q(i) scalar as an element of a larger field.
    Scalar lifted(FieldSpec target) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& y);
    Scalar& operator-=(const Scalar& y);
    Scalar& operator*=(const Scalar& y);
    Scalar& operator/=(const Scalar& y);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// Canonical text, e.g. "1/2-3*i+2*sqrt(5)-1/3*i*sqrt(5)"; zero is "0".
    std::string str() const;
    static Scalar parse(std::string_view text, FieldSpec field = {});

private:
    void requireSameField(const Scalar& y) const;

    Rational re_;
    Rational im_;
    Rational sqrtRe_;
    Rational sqrtIm_;
    FieldSpec field_;
};

}  // namespace ranklab
