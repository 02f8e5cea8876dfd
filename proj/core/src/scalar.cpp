#include "ranklab/scalar.hpp"

#include "ranklab/errors.hpp"

#include <cctype>
#include <utility>

namespace ranklab {

std::pair<std::uint64_t, std::uint64_t> squarefreeDecompose(std::uint64_t n) {
    std::uint64_t square = 1;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            square *= p;
        }
    }
    return {square, rest};
}

bool FieldSpec::isValidRadicand(std::uint64_t d) {
    if (d == 0) return true;
    if (d < 2) return false;
    return squarefreeDecompose(d).first == 1;
}

FieldSpec FieldSpec::withRadicand(std::uint32_t d) {
    if (!isValidRadicand(d)) {
        throw UsageError("radicand " + std::to_string(d) + " is not 0 or a squarefree integer >= 2");
    }
    return FieldSpec(d);
}

std::string FieldSpec::str() const {
    return radicand_ == 0 ? std::string("Q(i)") : "Q(i)(sqrt(" + std::to_string(radicand_) + "))";
}

Scalar Scalar::rational(const Rational& re, FieldSpec field) {
    Scalar s(field);
    s.re_ = re;
    s.re_.canonicalize();
    return s;
}

Scalar Scalar::complex(const Rational& re, const Rational& im, FieldSpec field) {
    Scalar s(field);
    s.re_ = re;
    s.im_ = im;
    s.re_.canonicalize();
    s.im_.canonicalize();
    return s;
}

Scalar Scalar::make(const Rational& re, const Rational& im, const Rational& sqrtRe,
                    const Rational& sqrtIm, FieldSpec field) {
    Scalar s = complex(re, im, field);
    if (!field.extended() && (sgn(sqrtRe) != 0 || sgn(sqrtIm) != 0)) {
        throw UsageError("sqrt component given for a field without extension");
    }
    s.sqrtRe_ = sqrtRe;
    s.sqrtIm_ = sqrtIm;
    s.sqrtRe_.canonicalize();
    s.sqrtIm_.canonicalize();
    return s;
}

Scalar Scalar::imaginaryUnit(FieldSpec field) { return complex(0, 1, field); }

Scalar Scalar::sqrtRadicand(FieldSpec field) {
    if (!field.extended()) throw UsageError("sqrt(d) requested in " + field.str());
    return make(0, 0, 1, 0, field);
}

bool Scalar::isZero() const {
    return sgn(re_) == 0 && sgn(im_) == 0 && sgn(sqrtRe_) == 0 && sgn(sqrtIm_) == 0;
}

bool Scalar::isOne() const {
    return re_ == 1 && sgn(im_) == 0 && sgn(sqrtRe_) == 0 && sgn(sqrtIm_) == 0;
}

void Scalar::requireSameField(const Scalar& y) const {
    if (!(field_ == y.field_)) {
        throw UsageError("field mismatch: " + field_.str() + " vs " + y.field_.str());
    }
}

Scalar Scalar::conj() const {
    Scalar s = *this;
    s.im_ = -s.im_;
    s.sqrtIm_ = -s.sqrtIm_;
    return s;
}

Scalar Scalar::lifted(FieldSpec target) const {
    if (field_ == target) return *this;
    if (field_.extended()) {
        throw UsageError("cannot move a scalar of " + field_.str() + " into " + target.str());
    }
    Scalar s = *this;
    s.field_ = target;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.re_ = -s.re_;
    s.im_ = -s.im_;
    s.sqrtRe_ = -s.sqrtRe_;
    s.sqrtIm_ = -s.sqrtIm_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& y) {
    requireSameField(y);
    re_ += y.re_;
    im_ += y.im_;
    if (field_.extended()) {
        sqrtRe_ += y.sqrtRe_;
        sqrtIm_ += y.sqrtIm_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
    requireSameField(y);
    re_ -= y.re_;
    im_ -= y.im_;
    if (field_.extended()) {
        sqrtRe_ -= y.sqrtRe_;
        sqrtIm_ -= y.sqrtIm_;
    }
    return *this;
}

namespace {

// (a + b i)(c + e i)
inline void complexMul(const Rational& a, const Rational& b, const Rational& c, const Rational& e,
                       Rational& outRe, Rational& outIm) {
    if (sgn(b) == 0 && sgn(e) == 0) {
        outRe = a * c;
        outIm = 0;
        return;
    }
    Rational re = a * c - b * e;
    outIm = a * e + b * c;
    outRe = std::move(re);
}

}  // namespace

Scalar& Scalar::operator*=(const Scalar& y) {
    requireSameField(y);
    if (!field_.extended()) {
        complexMul(Rational(re_), Rational(im_), y.re_, y.im_, re_, im_);
        return *this;
    }
    // (p + q s)(u + v s) = (pu + qv d) + (pv + qu) s with s = sqrt(d), p, q, u, v complex.
    Rational puRe, puIm, qvRe, qvIm, pvRe, pvIm, quRe, quIm;
    complexMul(re_, im_, y.re_, y.im_, puRe, puIm);
    complexMul(sqrtRe_, sqrtIm_, y.sqrtRe_, y.sqrtIm_, qvRe, qvIm);
    complexMul(re_, im_, y.sqrtRe_, y.sqrtIm_, pvRe, pvIm);
    complexMul(sqrtRe_, sqrtIm_, y.re_, y.im_, quRe, quIm);
    const Rational d(static_cast<unsigned long>(field_.radicand()));
    re_ = puRe + qvRe * d;
    im_ = puIm + qvIm * d;
    sqrtRe_ = pvRe + quRe;
    sqrtIm_ = pvIm + quIm;
    return *this;
}

Scalar Scalar::inverse() const {
    if (isZero()) throw ArithmeticError("division by zero");
    // Complex reciprocal (a + b i)^-1 = (a - b i)/(a^2 + b^2).
    auto complexInverse = [](const Rational& a, const Rational& b, Rational& outRe, Rational& outIm) {
        if (sgn(b) == 0) {
            outRe = 1 / a;
            outIm = 0;
            return;
        }
        Rational norm = a * a + b * b;
        outRe = a / norm;
        outIm = -b / norm;
    };
    Scalar out(field_);
    if (!field_.extended() || (sgn(sqrtRe_) == 0 && sgn(sqrtIm_) == 0)) {
        complexInverse(re_, im_, out.re_, out.im_);
        return out;
    }
    // (p + q s)^-1 = (p - q s) / (p^2 - q^2 d)
    Rational p2Re, p2Im, q2Re, q2Im;
    complexMul(re_, im_, re_, im_, p2Re, p2Im);
    complexMul(sqrtRe_, sqrtIm_, sqrtRe_, sqrtIm_, q2Re, q2Im);
    const Rational d(static_cast<unsigned long>(field_.radicand()));
    Rational normRe = p2Re - q2Re * d;
    Rational normIm = p2Im - q2Im * d;
    Rational invRe, invIm;
    complexInverse(normRe, normIm, invRe, invIm);
    complexMul(re_, im_, invRe, invIm, out.re_, out.im_);
    complexMul(-sqrtRe_, -sqrtIm_, invRe, invIm, out.sqrtRe_, out.sqrtIm_);
    return out;
}

Scalar& Scalar::operator/=(const Scalar& y) {
    requireSameField(y);
    if (y.isZero()) throw ArithmeticError("division by zero");
    if (!field_.extended() && sgn(y.im_) == 0) {
        re_ /= y.re_;
        im_ /= y.re_;
        return *this;
    }
    return *this *= y.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
    return x.field_ == y.field_ && x.re_ == y.re_ && x.im_ == y.im_ && x.sqrtRe_ == y.sqrtRe_ &&
           x.sqrtIm_ == y.sqrtIm_;
}

std::string Scalar::str() const {
    std::string out;
    auto term = [&out](const Rational& c, const std::string& unit) {
        if (sgn(c) == 0) return;
        std::string body = c.get_str() + unit;
        if (!unit.empty() && abs(c) == 1) body = (sgn(c) < 0 ? "-" : "") + unit.substr(1);
        if (!out.empty() && body.front() != '-') out += '+';
        out += body;
    };
    const std::string root = field_.extended() ? "*sqrt(" + std::to_string(field_.radicand()) + ")" : "";
    term(re_, "");
    term(im_, "*i");
    term(sqrtRe_, root);
    term(sqrtIm_, "*i" + root);
    return out.empty() ? std::string("0") : out;
}

namespace {

[[noreturn]] void badText(std::string_view text, const std::string& why) {
    throw UsageError("cannot parse scalar \"" + std::string(text) + "\": " + why);
}

bool consume(std::string_view& s, std::string_view token) {
    if (s.substr(0, token.size()) == token) {
        s.remove_prefix(token.size());
        return true;
    }
    return false;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, FieldSpec field) {
    std::string_view s = text;
    Rational parts[4];
    bool seen[4] = {false, false, false, false};
    if (s.empty()) badText(text, "empty");
    while (!s.empty()) {
        bool negative = false;
        if (s.front() == '+' || s.front() == '-') {
            negative = s.front() == '-';
            s.remove_prefix(1);
        }
        std::size_t len = 0;
        while (len < s.size() && (std::isdigit(static_cast<unsigned char>(s[len])) || s[len] == '/')) ++len;
        Rational coeff(1);
        if (len > 0) {
            std::string digits(s.substr(0, len));
            if (digits.front() == '/' || digits.back() == '/' || digits.find('/') != digits.rfind('/')) {
                badText(text, "malformed rational");
            }
            try {
                coeff = Rational(digits, 10);
            } catch (const std::invalid_argument&) {
                badText(text, "malformed rational");
            }
            if (digits.find('/') != std::string::npos && coeff.get_den() == 0) badText(text, "zero denominator");
            coeff.canonicalize();
            s.remove_prefix(len);
        }
        bool imaginary = false;
        bool radical = false;
        if (len == 0) {
            // Bare unit such as "i" or "sqrt(5)".
            if (consume(s, "i")) imaginary = true;
        } else if (consume(s, "*i")) {
            imaginary = true;
        }
        std::string_view before = s;
        if (consume(s, len == 0 && !imaginary ? "sqrt(" : "*sqrt(")) {
            std::size_t close = s.find(')');
            if (close == std::string_view::npos) badText(text, "unterminated sqrt");
            std::string digits(s.substr(0, close));
            if (digits.empty()) badText(text, "empty radicand");
            for (char c : digits) {
                if (!std::isdigit(static_cast<unsigned char>(c))) badText(text, "bad radicand");
            }
            if (std::stoull(digits) != field.radicand() || !field.extended()) {
                badText(text, "radicand does not match field " + field.str());
            }
            s.remove_prefix(close + 1);
            radical = true;
        } else {
            s = before;
        }
        if (len == 0 && !imaginary && !radical) badText(text, "expected a term");
        const int slot = (radical ? 2 : 0) + (imaginary ? 1 : 0);
        if (seen[slot]) badText(text, "repeated term");
        seen[slot] = true;
        parts[slot] = negative ? Rational(-coeff) : coeff;
        if (!s.empty() && s.front() != '+' && s.front() != '-') badText(text, "unexpected character");
    }
    return make(parts[0], parts[1], parts[2], parts[3], field);
}

}  // namespace ranklab
