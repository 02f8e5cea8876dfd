// Two-scalar factorizations of I + aA + bB, and sums over three idempotents A, B, C with M = A + B + C.

#include "support.hpp"

#include <array>

namespace ranklab::detail {

namespace {

using IC = InputClass;
using CK = CheckerKind;

struct Vetter {
    Matrix I, left, right, whole;  // I + aA, I + bB, I + aA + bB
    Matrix ab, ba;                 // lambda AB, lambda BA
};

Vetter vetter(const Instance& in) {
    RL_PAIR(in);
    const Scalar a = in.scalar("alpha");
    const Scalar b = in.scalar("beta");
    const Scalar one(1, F);
    const Scalar lambda = (a * b) / ((one + a) * (one + b));
    return {I, I + a * A, I + b * B, I + a * A + b * B, lambda * (A * B), lambda * (B * A)};
}

std::vector<ScalarParam> offMinusOne() {
    const std::vector<Rational> ex{Rational(-1)};
    return {{"alpha", ex}, {"beta", ex}};
}

struct Sums {
    Matrix I, M, S;        // S = aA + bB + cC
    Matrix plus, minus;    // sums of (X + Y)^2 and (X - Y)^2 over pairs
    Matrix pairs;          // AB + BA + AC + CA + BC + CB
    FieldSpec F;
    I64 m;
};

Sums sums(const Instance& in, bool scaled) {
    RL_TRIPLE(in);
    Sums s{I, A + B + C, Matrix(A.rows(), A.cols(), F), {}, {}, {}, F, static_cast<I64>(in.m)};
    if (scaled) s.S = in.scalar("alpha") * A + in.scalar("beta") * B + in.scalar("gamma") * C;
    auto sq = [](const Matrix& x) { return x * x; };
    s.plus = sq(A + B) + sq(A + C) + sq(B + C);
    s.minus = sq(A - B) + sq(A - C) + sq(B - C);
    s.pairs = A * B + B * A + A * C + C * A + B * C + C * B;
    return s;
}

Matrix eyeTimes(const Sums& s, long num, long den) { return q(num, den, s.F) * s.I; }

std::vector<ScalarParam> alphaBetaGamma() { return {{"alpha", {}}, {"beta", {}}, {"gamma", {}}}; }

// The three scaled combinations: left product, right product, sandwich.
struct Scaled {
    Matrix left, right, sandwich;
};

Scaled scaled(const Instance& in) {
    RL_TRIPLE(in);
    const Scalar a = in.scalar("alpha");
    const Scalar b = in.scalar("beta");
    const Scalar c = in.scalar("gamma");
    return {a * (A * B + A * C) + b * (B * A + B * C) + c * (C * A + C * B),
            a * (B * A + C * A) + b * (A * B + C * B) + c * (A * C + B * C),
            a * ((B + C) * A * (B + C)) + b * ((A + C) * B * (A + C)) + c * ((A + B) * C * (A + B))};
}

CatalogEntry& triple(std::vector<CatalogEntry>& v, const std::string& id, const std::string& statement, CK kind,
                     CheckFn fn, bool withScalars = false) {
    CatalogEntry& e = add(v, id, statement, IC::IdempotentTriple, kind, std::move(fn));
    if (withScalars) e.scalars = alphaBetaGamma();
    return e;
}

void identities(std::vector<CatalogEntry>& v) {
    triple(
        v, "397", "alpha(AB + AC) + beta(BA + BC) + gamma(CA + CB) = (alpha A + beta B + gamma C)(M - I)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Sums s = sums(in, true);
            return matEq(scaled(in).left, s.S * (s.M - s.I));
        },
        true);
    triple(
        v, "398", "alpha(BA + CA) + beta(AB + CB) + gamma(AC + BC) = (M - I)(alpha A + beta B + gamma C)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Sums s = sums(in, true);
            return matEq(scaled(in).right, (s.M - s.I) * s.S);
        },
        true);
    triple(
        v, "399",
        "(alpha + beta)(AB + BA) + (alpha + gamma)(AC + CA) + (beta + gamma)(BC + CB) = "
        "(alpha A + beta B + gamma C)(M - I) + (M - I)(alpha A + beta B + gamma C)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            RL_TRIPLE(in);
            const Sums s = sums(in, true);
            const Scalar a = in.scalar("alpha");
            const Scalar b = in.scalar("beta");
            const Scalar c = in.scalar("gamma");
            const Matrix lhs = (a + b) * (A * B + B * A) + (a + c) * (A * C + C * A) + (b + c) * (B * C + C * B);
            return matEq(lhs, s.S * (s.M - s.I) + (s.M - s.I) * s.S);
        },
        true);
    triple(
        v, "3100",
        "(alpha - beta)(AB - BA) + (alpha - gamma)(AC - CA) + (beta - gamma)(BC - CB) = "
        "(alpha A + beta B + gamma C)M - M(alpha A + beta B + gamma C)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            RL_TRIPLE(in);
            const Sums s = sums(in, true);
            const Scalar a = in.scalar("alpha");
            const Scalar b = in.scalar("beta");
            const Scalar c = in.scalar("gamma");
            const Matrix lhs = (a - b) * (A * B - B * A) + (a - c) * (A * C - C * A) + (b - c) * (B * C - C * B);
            return matEq(lhs, s.S * s.M - s.M * s.S);
        },
        true);
    triple(
        v, "3100a",
        "alpha(B + C)A(B + C) + beta(A + C)B(A + C) + gamma(A + B)C(A + B) = (M - I)(alpha A + beta B + gamma C)(M - I)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Sums s = sums(in, true);
            return matEq(scaled(in).sandwich, (s.M - s.I) * s.S * (s.M - s.I));
        },
        true);
    triple(v, "3106", "(A + B)^2 + (A + C)^2 + (B + C)^2 = M(I + M)", CK::MatrixIdentity, [](const Instance& in) {
        const Sums s = sums(in, false);
        return matEq(s.plus, s.M * (s.I + s.M));
    });
    triple(v, "3107", "(A - B)^2 + (A - C)^2 + (B - C)^2 = M(3I - M) = (9/4)I - (M - (3/2)I)^2", CK::MatrixIdentity,
           [](const Instance& in) {
               const Sums s = sums(in, false);
               const Matrix h = s.M - eyeTimes(s, 3, 2);
               return matChain({s.minus, s.M * (3 * s.I - s.M), eyeTimes(s, 9, 4) - h * h});
           });
    triple(v, "3108", "AB + BA + AC + CA + BC + CB = M(M - I) = (M - I/2)^2 - I/4", CK::MatrixIdentity,
           [](const Instance& in) {
               const Sums s = sums(in, false);
               const Matrix h = s.M - eyeTimes(s, 1, 2);
               return matChain({s.pairs, s.M * (s.M - s.I), h * h - eyeTimes(s, 1, 4)});
           });
    triple(v, "3109", "(AB + BA + AC + CA + BC + CB)^k = M^k (M - I)^k", CK::MatrixIdentity, [](const Instance& in) {
        const Sums s = sums(in, false);
        return matEq(s.pairs.pow(in.k), s.M.pow(in.k) * (s.M - s.I).pow(in.k));
    }).usesK = true;
}

// (sqrt(4k + 1) + 1)/2 and (sqrt(4k + 1) - 1)/2; rational when 4k + 1 is a square
std::pair<Scalar, Scalar> roots(unsigned k, FieldSpec f) {
    static const int squareRoots[] = {1, -1, 3, -1, -1, -1, 5};
    const Scalar root = squareRoots[k] > 0 ? Scalar(squareRoots[k], f) : Scalar::sqrtRadicand(f);
    const Scalar h = q(1, 2, f);
    const Scalar one(1, f);
    return {h * (root + one), h * (root - one)};
}

const unsigned radicands[] = {0, 5, 0, 13, 17, 21, 0};

void ranks(std::vector<CatalogEntry>& v) {
    triple(v, "3110", "r[(A + B)^2 + (A + C)^2 + (B + C)^2] = r(M) + r(I + M) - m = dim[R(M) cap R(I + M)]",
           CK::RankEquality, [](const Instance& in) {
               const Sums s = sums(in, false);
               return rankChain({r(s.plus), r(s.M) + r(s.I + s.M) - s.m, r(cap(s.M, s.I + s.M))});
           });
    triple(v, "3111", "r[(A - B)^2 + (A - C)^2 + (B - C)^2] = r(M) + r(3I - M) - m = dim[R(M) cap R(3I - M)]",
           CK::RankEquality, [](const Instance& in) {
               const Sums s = sums(in, false);
               const Matrix t = 3 * s.I - s.M;
               return rankChain({r(s.minus), r(s.M) + r(t) - s.m, r(cap(s.M, t))});
           });
    for (unsigned k = 0; k <= 6; ++k) {
        const std::string kk = std::to_string(k);
        const std::string root = "sqrt(" + std::to_string(4 * k + 1) + ")";
        triple(v, "3112k" + kk,
               "r(" + kk + "I - AB - BA - AC - CA - BC - CB) = r[(" + root + " + 1)/2 I - M] + r[(" + root +
                   " - 1)/2 I + M] - m",
               CK::RankEquality,
               [k](const Instance& in) {
                   const Sums s = sums(in, false);
                   const auto [hi, lo] = roots(k, s.F);
                   return rankEq(r(static_cast<long>(k) * s.I - s.pairs),
                                 r(hi * s.I - s.M) + r(lo * s.I + s.M) - s.m);
               })
            .radicand = radicands[k];
    }
}

void subspaces(std::vector<CatalogEntry>& v) {
    triple(v, "3112a", "R[(A + B)^2 + (A + C)^2 + (B + C)^2] = R(M) cap R(I + M)", CK::SubspaceIdentity,
           [](const Instance& in) {
               const Sums s = sums(in, false);
               return sameSpace(s.plus, cap(s.M, s.I + s.M));
           });
    triple(v, "3112b", "R[(A - B)^2 + (A - C)^2 + (B - C)^2] = R(M) cap R(3I - M)", CK::SubspaceIdentity,
           [](const Instance& in) {
               const Sums s = sums(in, false);
               return sameSpace(s.minus, cap(s.M, 3 * s.I - s.M));
           });
    triple(v, "3112c", "R(AB + BA + AC + CA + BC + CB) = R(M) cap R(I - M)", CK::SubspaceIdentity,
           [](const Instance& in) {
               const Sums s = sums(in, false);
               return sameSpace(s.pairs, cap(s.M, s.I - s.M));
           });

    // null spaces: M and the second factor commute, so the kernels add
    struct Null {
        const char* id;
        const char* statement;
        const char* literal;
        int shape;
    };
    static const Null nulls[] = {
        {"3112d", "N[(A + B)^2 + (A + C)^2 + (B + C)^2] = N(M) + N(I + M)",
         "N[(A + B)^2 + (A + C)^2 + (B + C)^2] = R(N) cap N(I + M)", 0},
        {"3112e", "N[(A - B)^2 + (A - C)^2 + (B - C)^2] = N(M) + N(3I - M)",
         "N[(A - B)^2 + (A - C)^2 + (B - C)^2] = N(M) cap N(3I - M)", 1},
        {"3112f", "N(AB + BA + AC + CA + BC + CB) = N(M) + N(I - M)",
         "N(AB + BA + AC + CA + BC + CB) = N(M) cap N(I - M)", 2},
    };
    for (const Null& n : nulls) {
        auto check = [n](bool asCap) {
            return [n, asCap](const Instance& in) {
                const Sums s = sums(in, false);
                const Matrix& x = n.shape == 0 ? s.plus : n.shape == 1 ? s.minus : s.pairs;
                const Matrix other = n.shape == 0 ? s.I + s.M : n.shape == 1 ? 3 * s.I - s.M : s.I - s.M;
                const Matrix a = nul(s.M);
                const Matrix b = nul(other);
                return sameSpace(nul(x), asCap ? cap(a, b) : sum(a, b));
            };
        };
        CatalogEntry& e = triple(v, n.id, n.statement, CK::SubspaceIdentity, check(false));
        // "R(N)" names no matrix in scope, so that reading has nothing to evaluate
        if (n.shape == 0)
            withErratum(e, "undefined R(N) and an intersection where the null spaces add", n.literal, n.statement);
        else
            withErratum(e, "null spaces of commuting factors add; the intersection is trivial", n.literal,
                        n.statement, check(true));
    }
}

void facts(std::vector<CatalogEntry>& v) {
    triple(
        v, "TH313a",
        "each of the five scaled combinations vanishes exactly when its factored form does",
        CK::FactEquivalence,
        [](const Instance& in) {
            RL_TRIPLE(in);
            const Sums s = sums(in, true);
            const Scaled c = scaled(in);
            const Scalar a = in.scalar("alpha");
            const Scalar b = in.scalar("beta");
            const Scalar g = in.scalar("gamma");
            const Matrix sym = (a + b) * (A * B + B * A) + (a + g) * (A * C + C * A) + (b + g) * (B * C + C * B);
            const Matrix skew = (a - b) * (A * B - B * A) + (a - g) * (A * C - C * A) + (b - g) * (B * C - C * B);
            const Matrix n = s.M - s.I;
            return allOf({iff({c.left.isZero(), (s.S * n).isZero()}), iff({c.right.isZero(), (n * s.S).isZero()}),
                          iff({sym.isZero(), (s.S * n + n * s.S).isZero()}), iff({skew.isZero(), s.S * s.M == s.M * s.S}),
                          iff({c.sandwich.isZero(), (n * s.S * n).isZero()})});
        },
        true);

    struct Level {
        const char* id;
        const char* statement;
        bool plus;  // sum of (X + Y)^2, else (X - Y)^2
        long num, den;
        long rnum, rden;  // right-hand constant: M^2 + M, or (2M - 3I)^2
    };
    static const Level levels[] = {
        {"TH313b1", "(A + B)^2 + (A + C)^2 + (B + C)^2 = 0 <=> M^2 + M = 0", true, 0, 1, 0, 1},
        {"TH313b2", "(A + B)^2 + (A + C)^2 + (B + C)^2 = I <=> M^2 + M = I", true, 1, 1, 1, 1},
        {"TH313b3", "(A - B)^2 + (A - C)^2 + (B - C)^2 = 0 <=> (2M - 3I)^2 = 9I", false, 0, 1, 9, 1},
        {"TH313b4", "(A - B)^2 + (A - C)^2 + (B - C)^2 = (9/8)I <=> (2M - 3I)^2 = (9/2)I", false, 9, 8, 9, 2},
        {"TH313b5", "(A - B)^2 + (A - C)^2 + (B - C)^2 = 3I <=> (2M - 3I)^2 = -3I", false, 3, 1, -3, 1},
        {"TH313b6", "(A - B)^2 + (A - C)^2 + (B - C)^2 = (9/4)I <=> (2M - 3I)^2 = 0", false, 9, 4, 0, 1},
    };
    auto level = [](const Level& l, long rnum, long rden) {
        return [l, rnum, rden](const Instance& in) {
            const Sums s = sums(in, false);
            const Matrix lhs = l.plus ? s.plus : s.minus;
            const Matrix t = 2 * s.M - 3 * s.I;
            const Matrix rhs = l.plus ? s.M * s.M + s.M : t * t;
            return iff({lhs == eyeTimes(s, l.num, l.den), rhs == eyeTimes(s, rnum, rden)});
        };
    };
    for (const Level& l : levels) {
        CatalogEntry& e = triple(v, l.id, l.statement, CK::FactEquivalence, level(l, l.rnum, l.rden));
        if (std::string(l.id) == "TH313b4")
            withErratum(e, "right-hand constant repeats the value of the previous line",
                        "(A - B)^2 + (A - C)^2 + (B - C)^2 = (9/8)I <=> (2M - 3I)^2 = 9I",
                        "(A - B)^2 + (A - C)^2 + (B - C)^2 = (9/8)I <=> (2M - 3I)^2 = (9/2)I", level(l, 9, 1));
    }
    triple(v, "TH313b7", "AB + BA + AC + CA + BC + CB = kI <=> (I - 2M)^2 = (4k + 1)I, k = 0, ..., 6",
           CK::FactEquivalence, [](const Instance& in) {
               const Sums s = sums(in, false);
               const Matrix t = s.I - 2 * s.M;
               const Matrix t2 = t * t;
               for (long k = 0; k <= 6; ++k) {
                   Verdict v = iff({s.pairs == k * s.I, t2 == (4 * k + 1) * s.I});
                   if (v.outcome != Outcome::Pass) return v;
               }
               return pass(std::monostate{}, std::monostate{});
           });

    CatalogEntry& c = triple(
        v, "TH313c",
        "alpha(AB + AC) + beta(BA + BC) + gamma(CA + CB) nonsingular <=> alpha(BA + CA) + beta(AB + CB) + "
        "gamma(AC + BC) nonsingular <=> alpha(B + C)A(B + C) + beta(A + C)B(A + C) + gamma(A + B)C(A + B) "
        "nonsingular <=> alpha A + beta B + gamma C and M - I both nonsingular",
        CK::FactEquivalence,
        [](const Instance& in) {
            const Sums s = sums(in, true);
            const Scaled c = scaled(in);
            return iff({nonsingular(c.left), nonsingular(c.right), nonsingular(c.sandwich),
                        nonsingular(s.S) && nonsingular(s.M - s.I)});
        },
        true);
    withErratum(c, "third clause names a matrix without a predicate",
                "... <=> alpha(B + C)A(B + C) + beta(A + C)B(A + C) + gamma(A + B)C(A + B) <=> ...",
                "... <=> alpha(B + C)A(B + C) + beta(A + C)B(A + C) + gamma(A + B)C(A + B) nonsingular <=> ...");

    auto conditional = [&v](const char* id, const char* statement, int shape) -> CatalogEntry& {
        return triple(
            v, id, statement, CK::ConditionalInverse,
            [shape](const Instance& in) {
                const Sums s = sums(in, true);
                const Matrix n = s.M - s.I;
                if (!nonsingular(s.S) || !nonsingular(n)) return miss();
                const Scaled c = scaled(in);
                const Matrix si = inverse(s.S);
                const Matrix ni = inverse(n);
                switch (shape) {
                    case 0: return matEq(inverse(c.left), ni * si);
                    case 1: return matEq(inverse(c.right), si * ni);
                    default: return matEq(inverse(c.sandwich), ni * si * ni);
                }
            },
            true);
    };
    conditional("TH313c1", "[alpha(AB + AC) + beta(BA + BC) + gamma(CA + CB)]^-1 = (M - I)^-1 (alpha A + beta B + gamma C)^-1",
            0);
    withErratum(conditional("TH313c2",
                        "[alpha(BA + CA) + beta(AB + CB) + gamma(AC + BC)]^-1 = (alpha A + beta B + gamma C)^-1 (M - I)^-1",
                        1),
                "stray comma between the two factors", "(alpha A + beta B + gamma C)^-1, (M - I)^-1",
                "(alpha A + beta B + gamma C)^-1 (M - I)^-1");
    conditional("TH313c3",
            "[alpha(B + C)A(B + C) + beta(A + C)B(A + C) + gamma(A + B)C(A + B)]^-1 = "
            "(M - I)^-1 (alpha A + beta B + gamma C)^-1 (M - I)^-1",
            2);

    triple(v, "TH313d1", "r[(A + B)^2 + (A + C)^2 + (B + C)^2] = m <=> r(M) = r(I + M) = m", CK::FactEquivalence,
           [](const Instance& in) {
               const Sums s = sums(in, false);
               return iff({r(s.plus) == s.m, r(s.M) == s.m && r(s.I + s.M) == s.m});
           });
    triple(v, "TH313d2", "r[(A - B)^2 + (A - C)^2 + (B - C)^2] = m <=> r(M) = r(3I - M) = m", CK::FactEquivalence,
           [](const Instance& in) {
               const Sums s = sums(in, false);
               return iff({r(s.minus) == s.m, r(s.M) == s.m && r(3 * s.I - s.M) == s.m});
           });
    for (unsigned k = 0; k <= 6; ++k) {
        const std::string kk = std::to_string(k);
        const std::string root = "sqrt(" + std::to_string(4 * k + 1) + ")";
        triple(v, "TH313d3k" + kk,
               "r(" + kk + "I - AB - BA - AC - CA - BC - CB) = m <=> r[(" + root + " + 1)/2 I - M] = r[(" + root +
                   " - 1)/2 I + M] = m",
               CK::FactEquivalence,
               [k](const Instance& in) {
                   const Sums s = sums(in, false);
                   const auto [hi, lo] = roots(k, s.F);
                   return iff({r(static_cast<long>(k) * s.I - s.pairs) == s.m,
                               r(hi * s.I - s.M) == s.m && r(lo * s.I + s.M) == s.m});
               })
            .radicand = radicands[k];
    }
}

}  // namespace

void registerVetterEntries(std::vector<CatalogEntry>& v, InputClass input, const std::string& prefix,
                           const std::string& second, const std::array<const char*, 5>& ids) {
    const std::string& b = second;
    const std::string lambda = "l = alpha beta / ((1 + alpha)(1 + beta))";
    const std::string whole = "I + alpha A + beta " + b;
    auto entry = [&](int i, const std::string& statement, CK kind, CheckFn fn) -> CatalogEntry& {
        CatalogEntry& e = add(v, prefix + ids[i], statement, input, kind, std::move(fn));
        e.scalars = offMinusOne();
        return e;
    };
    entry(0, whole + " = (I + alpha A)(I - l A" + b + ")(I + beta " + b + "), " + lambda, CK::MatrixIdentity,
          [](const Instance& in) {
              const Vetter t = vetter(in);
              return matEq(t.whole, t.left * (t.I - t.ab) * t.right);
          });
    entry(1, whole + " = (I + beta " + b + ")(I - l " + b + "A)(I + alpha A), " + lambda, CK::MatrixIdentity,
          [](const Instance& in) {
              const Vetter t = vetter(in);
              return matEq(t.whole, t.right * (t.I - t.ba) * t.left);
          });
    entry(2, "(I - l A" + b + ")^-1 = (I + beta " + b + ")(" + whole + ")^-1 (I + alpha A)", CK::ConditionalInverse,
          [](const Instance& in) {
              const Vetter t = vetter(in);
              const Matrix x = t.I - t.ab;
              if (!nonsingular(x)) return miss();
              return matEq(inverse(x), t.right * inverse(t.whole) * t.left);
          });
    entry(3, "(I - l " + b + "A)^-1 = (I + alpha A)(" + whole + ")^-1 (I + beta " + b + ")", CK::ConditionalInverse,
          [](const Instance& in) {
              const Vetter t = vetter(in);
              const Matrix x = t.I - t.ba;
              if (!nonsingular(x)) return miss();
              return matEq(inverse(x), t.left * inverse(t.whole) * t.right);
          });
    CatalogEntry& f = entry(4, "I - l A" + b + " nonsingular <=> " + whole + " nonsingular", CK::FactEquivalence,
                            [](const Instance& in) {
                                const Vetter t = vetter(in);
                                return iff({nonsingular(t.I - t.ab), nonsingular(t.whole)});
                            });
    withErratum(f, "signs of the scalar terms are flipped relative to the factorization",
                "I - l A" + b + " nonsingular <=> I - alpha A - beta " + b + " nonsingular",
                "I - l A" + b + " nonsingular <=> " + whole + " nonsingular", [](const Instance& in) {
                    RL_PAIR(in);
                    const Vetter t = vetter(in);
                    const Matrix flipped = I - in.scalar("alpha") * A - in.scalar("beta") * B;
                    return iff({nonsingular(t.I - t.ab), nonsingular(flipped)});
                });
}

void registerTripleSumEntries(std::vector<CatalogEntry>& v) {
    registerVetterEntries(v, IC::IdempotentPair, "", "B", {"391", "392", "393", "394", "TH312"});
    identities(v);
    ranks(v);
    subspaces(v);
    facts(v);
}

}  // namespace ranklab::detail
