// An idempotent A together with A*: the rank lines and facts that read differently from the
// generic pair versions, range/null facts, and the product factorizations with two scalars.

#include "support.hpp"

namespace ranklab::detail {

namespace {

using IC = InputClass;
using CK = CheckerKind;

struct Star {
    Matrix A, S, I;  // S = A*
    FieldSpec F;
    I64 m;
};

Star bind(const Instance& in) {
    const Matrix& a = in.mat("A");
    return {a, in.mat("B"), a.eye(), a.field(), static_cast<I64>(in.m)};
}

Matrix eyeTimes(const Star& s, long num, long den) { return q(num, den, s.F) * s.I; }

// r[(sqrt5 - 1)/2 I + X] and r[(sqrt5 + 1)/2 I - X]
std::pair<I64, I64> goldenRanks(const Star& s, const Matrix& x) {
    const Scalar root = Scalar::sqrtRadicand(s.F);
    const Scalar h = q(1, 2, s.F);
    const Scalar one(1, s.F);
    return {r((h * (root - one)) * s.I + x), r((h * (root + one)) * s.I - x)};
}

CatalogEntry& star(std::vector<CatalogEntry>& v, const char* id, const char* statement, CK kind, CheckFn fn) {
    return add(v, id, statement, IC::StarIdempotent, kind, std::move(fn));
}

void identities(std::vector<CatalogEntry>& v) {
    star(v, "TL31i1", "(A - A*)^2 + (A + A* - I)^2 = I", CK::MatrixIdentity, [](const Instance& in) {
        const Star s = bind(in);
        const Matrix d = s.A - s.S;
        const Matrix t = s.A + s.S - s.I;
        return matEq(d * d + t * t, s.I);
    });
    star(v, "TL31i2", "AA* + A*A + I/4 = (A + A* - I/2)^2", CK::MatrixIdentity, [](const Instance& in) {
        const Star s = bind(in);
        const Matrix h = s.A + s.S - eyeTimes(s, 1, 2);
        return matEq(s.A * s.S + s.S * s.A + eyeTimes(s, 1, 4), h * h);
    });
    star(v, "TL31r1", "r(A - A*) = r(A + A*) + r(2I - A - A*) - m", CK::RankEquality, [](const Instance& in) {
        const Star s = bind(in);
        return rankEq(r(s.A - s.S), r(s.A + s.S) + r(2 * s.I - s.A - s.S) - s.m);
    });
    star(v, "TL31r2", "r(I - A - A*) = 2r(I + A - A*) - m", CK::RankEquality, [](const Instance& in) {
        const Star s = bind(in);
        return rankEq(r(s.I - s.A - s.S), 2 * r(s.I + s.A - s.S) - s.m);
    });
    star(v, "TL31r3", "r(AA* + A*A) = r[A, A*] = r(I - A - A*) + r(A + A*) - m", CK::RankEquality,
         [](const Instance& in) {
             const Star s = bind(in);
             return rankChain({r(s.A * s.S + s.S * s.A), r(hcat(s.A, s.S)),
                               r(s.I - s.A - s.S) + r(s.A + s.S) - s.m});
         });
    star(v, "TL31r4", "r(I - AA* - A*A) = r[(sqrt5 - 1)/2 I + A + A*] + r[(sqrt5 + 1)/2 I - A - A*] - m",
         CK::RankEquality, [](const Instance& in) {
             const Star s = bind(in);
             const auto [lo, hi] = goldenRanks(s, s.A + s.S);
             return rankEq(r(s.I - s.A * s.S - s.S * s.A), lo + hi - s.m);
         })
        .radicand = 5;
    star(v, "TL31r5", "r(2I - AA* - A*A) = r(I + A + A*) + r(2I - A - A*) - m", CK::RankEquality,
         [](const Instance& in) {
             const Star s = bind(in);
             return rankEq(r(2 * s.I - s.A * s.S - s.S * s.A), r(s.I + s.A + s.S) + r(2 * s.I - s.A - s.S) - s.m);
         });
}

void facts(std::vector<CatalogEntry>& v) {
    star(v, "TL31f1", "A = A* <=> (I - A - A*)^2 = I <=> r(A + A*) + r(2I - A - A*) = m", CK::FactEquivalence,
         [](const Instance& in) {
             const Star s = bind(in);
             const Matrix t = s.I - s.A - s.S;
             return iff({s.A == s.S, t * t == s.I, r(s.A + s.S) + r(2 * s.I - s.A - s.S) == s.m});
         });
    star(v, "TL31f2", "(A - A*)^2 = I/2 <=> (I - A - A*)^2 = I/2", CK::FactEquivalence, [](const Instance& in) {
        const Star s = bind(in);
        const Matrix d = s.A - s.S;
        const Matrix t = s.I - s.A - s.S;
        return iff({d * d == eyeTimes(s, 1, 2), t * t == eyeTimes(s, 1, 2)});
    });
    auto& f3 = star(v, "TL31f3", "(A - A*)^2 = I <=> (I - A - A*)^2 = 0 <=> r(I + A - A*) + r(I - A + A*) = m",
                    CK::FactEquivalence, [](const Instance& in) {
                        const Star s = bind(in);
                        const Matrix d = s.A - s.S;
                        const Matrix t = s.I - s.A - s.S;
                        return iff({d * d == s.I, (t * t).isZero(), r(s.I + s.A - s.S) + r(s.I - s.A + s.S) == s.m});
                    });
    withErratum(f3, "last clause is a bare expression; the comparison with m is missing",
                "<=> r(I + A - A*) + r(I - A + A*) - m", "<=> r(I + A - A*) + r(I - A + A*) = m");

    struct Level {
        const char* id;
        const char* statement;
        long num, den, snum, sden;
    };
    static const Level levels[] = {
        {"TL31f4", "AA* + A*A = -2I <=> (A + A* - I/2)^2 = (-7/4)I", -2, 1, -7, 4},
        {"TL31f5", "AA* + A*A = -I <=> (A + A* - I/2)^2 = (-3/4)I", -1, 1, -3, 4},
        {"TL31f6", "AA* + A*A = (-1/4)I <=> (A + A* - I/2)^2 = 0", -1, 4, 0, 1},
        {"TL31f8", "AA* + A*A = (3/4)I <=> (A + A* - I/2)^2 = I", 3, 4, 1, 1},
    };
    for (const Level& l : levels) {
        star(v, l.id, l.statement, CK::FactEquivalence, [l](const Instance& in) {
            const Star s = bind(in);
            const Matrix h = s.A + s.S - eyeTimes(s, 1, 2);
            return iff({s.A * s.S + s.S * s.A == eyeTimes(s, l.num, l.den), h * h == eyeTimes(s, l.snum, l.sden)});
        });
    }
    star(v, "TL31f7", "AA* + A*A = 0 <=> (A + A* - I/2)^2 = I/4 <=> r(I - A - A*) + r(A + A*) = m",
         CK::FactEquivalence, [](const Instance& in) {
             const Star s = bind(in);
             const Matrix h = s.A + s.S - eyeTimes(s, 1, 2);
             return iff({(s.A * s.S + s.S * s.A).isZero(), h * h == eyeTimes(s, 1, 4),
                         r(s.I - s.A - s.S) + r(s.A + s.S) == s.m});
         });
    star(v, "TL31f9",
         "AA* + A*A = I <=> (A + A* - I/2)^2 = (5/4)I <=> r[(sqrt5 - 1)/2 I + A + A*] + r[(sqrt5 + 1)/2 I - A - A*] = m",
         CK::FactEquivalence, [](const Instance& in) {
             const Star s = bind(in);
             const Matrix h = s.A + s.S - eyeTimes(s, 1, 2);
             const auto [lo, hi] = goldenRanks(s, s.A + s.S);
             return iff({s.A * s.S + s.S * s.A == s.I, h * h == eyeTimes(s, 5, 4), lo + hi == s.m});
         })
        .radicand = 5;
    star(v, "TL31f10", "AA* + A*A = 2I <=> (A + A* - I/2)^2 = (9/4)I <=> r(I + A + A*) + r(2I - A - A*) = m",
         CK::FactEquivalence, [](const Instance& in) {
             const Star s = bind(in);
             const Matrix h = s.A + s.S - eyeTimes(s, 1, 2);
             return iff({s.A * s.S + s.S * s.A == 2 * s.I, h * h == eyeTimes(s, 9, 4),
                         r(s.I + s.A + s.S) + r(2 * s.I - s.A - s.S) == s.m});
         });

    star(v, "TL31g1", "r(A - A*) = m <=> r(A + A*) = r(2I - A - A*) = m", CK::FactEquivalence,
         [](const Instance& in) {
             const Star s = bind(in);
             return iff({r(s.A - s.S) == s.m, r(s.A + s.S) == s.m && r(2 * s.I - s.A - s.S) == s.m});
         });
    star(v, "TL31g2", "r(I - A - A*) = m <=> r(I + A - A*) = m", CK::FactEquivalence, [](const Instance& in) {
        const Star s = bind(in);
        return iff({r(s.I - s.A - s.S) == s.m, r(s.I + s.A - s.S) == s.m});
    });
    star(v, "TL31g3", "r(AA* + A*A) = r[A, A*] = m <=> r(A + A*) = r(I - A - A*) = m", CK::FactEquivalence,
         [](const Instance& in) {
             const Star s = bind(in);
             return iff({r(s.A * s.S + s.S * s.A) == s.m && r(hcat(s.A, s.S)) == s.m,
                         r(s.A + s.S) == s.m && r(s.I - s.A - s.S) == s.m});
         });
    star(v, "TL31g4", "r(I - AA* - A*A) = m <=> r[(sqrt5 - 1)/2 I + A + A*] = r[(sqrt5 + 1)/2 I - A - A*] = m",
         CK::FactEquivalence, [](const Instance& in) {
             const Star s = bind(in);
             const auto [lo, hi] = goldenRanks(s, s.A + s.S);
             return iff({r(s.I - s.A * s.S - s.S * s.A) == s.m, lo == s.m && hi == s.m});
         })
        .radicand = 5;
    star(v, "TL31g5", "r(2I - AA* - A*A) = m <=> r(I + A + A*) = r(2I - A - A*) = m", CK::FactEquivalence,
         [](const Instance& in) {
             const Star s = bind(in);
             return iff({r(2 * s.I - s.A * s.S - s.S * s.A) == s.m,
                         r(s.I + s.A + s.S) == s.m && r(2 * s.I - s.A - s.S) == s.m});
         });
}

void subspaces(std::vector<CatalogEntry>& v) {
    star(v, "TL319a", "R(AA* - A*A) in R(A - A*) and R(AA* - A*A) in R(A + A* - I)", CK::SubspaceIdentity,
         [](const Instance& in) {
             const Star s = bind(in);
             const Matrix x = s.A * s.S - s.S * s.A;
             return allOf({inSpace(x, s.A - s.S), inSpace(x, s.A + s.S - s.I)});
         });
    star(v, "TL319b", "R(AA* + A*A) in R(A + A*) and R(AA* + A*A) in R(A + A* - I)", CK::SubspaceIdentity,
         [](const Instance& in) {
             const Star s = bind(in);
             const Matrix x = s.A * s.S + s.S * s.A;
             return allOf({inSpace(x, s.A + s.S), inSpace(x, s.A + s.S - s.I)});
         });
    star(v, "TL319c", "N(A - A*) in N(AA* - A*A) and N(A + A* - I) in N(AA* - A*A)", CK::SubspaceIdentity,
         [](const Instance& in) {
             const Star s = bind(in);
             const Matrix x = s.A * s.S - s.S * s.A;
             return allOf({holds(nullspaceContained(s.A - s.S, x)), holds(nullspaceContained(s.A + s.S - s.I, x))});
         });
    star(v, "TL319d", "N(A + A*) in N(AA* + A*A) and N(A + A* - I) in N(AA* + A*A)", CK::SubspaceIdentity,
         [](const Instance& in) {
             const Star s = bind(in);
             const Matrix x = s.A * s.S + s.S * s.A;
             return allOf({holds(nullspaceContained(s.A + s.S, x)), holds(nullspaceContained(s.A + s.S - s.I, x))});
         });
    star(v, "TL319e", "R(AA* +- A*A) = R(A +- A*) cap R(A + A* - I)", CK::SubspaceIdentity, [](const Instance& in) {
        const Star s = bind(in);
        const Matrix t = s.A + s.S - s.I;
        return allOf({sameSpace(s.A * s.S + s.S * s.A, cap(s.A + s.S, t)),
                      sameSpace(s.A * s.S - s.S * s.A, cap(s.A - s.S, t))});
    });
    star(v, "TL319f", "R(AA*A +- A*AA*) = R(A +- A*) cap R(A + A* - I)", CK::SubspaceIdentity,
         [](const Instance& in) {
             const Star s = bind(in);
             const Matrix t = s.A + s.S - s.I;
             const Matrix x = s.A * s.S * s.A;
             const Matrix y = s.S * s.A * s.S;
             return allOf({sameSpace(x + y, cap(s.A + s.S, t)), sameSpace(x - y, cap(s.A - s.S, t))});
         });
    // null-space versions: the spaces add
    auto nullSum = [](bool triple, bool asCap) {
        return [triple, asCap](const Instance& in) {
            const Star s = bind(in);
            const Matrix t = nul(s.A + s.S - s.I);
            const Matrix plus = triple ? s.A * s.S * s.A + s.S * s.A * s.S : s.A * s.S + s.S * s.A;
            const Matrix minus = triple ? s.A * s.S * s.A - s.S * s.A * s.S : s.A * s.S - s.S * s.A;
            auto join = [&](const Matrix& a) { return asCap ? cap(a, t) : sum(a, t); };
            return allOf({sameSpace(nul(plus), join(nul(s.A + s.S))), sameSpace(nul(minus), join(nul(s.A - s.S)))});
        };
    };
    withErratum(star(v, "TL319g", "N(AA* +- A*A) = N(A +- A*) + N(A + A* - I)", CK::SubspaceIdentity,
                     nullSum(false, false)),
                "null spaces of commuting factors add; the intersection is trivial",
                "N(AA* +- A*A) = N(A +- A*) cap N(A + A* - I)", "N(AA* +- A*A) = N(A +- A*) + N(A + A* - I)",
                nullSum(false, true));
    withErratum(star(v, "TL319h", "N(AA*A +- A*AA*) = N(A +- A*) + N(A + A* - I)", CK::SubspaceIdentity,
                     nullSum(true, false)),
                "null spaces of commuting factors add; the intersection is trivial",
                "N(AA*A +- A*AA*) = N(A +- A*) cap N(A + A* - I)", "N(AA*A +- A*AA*) = N(A +- A*) + N(A + A* - I)",
                nullSum(true, true));
}

}  // namespace

void registerStarEntries(std::vector<CatalogEntry>& v) {
    identities(v);
    facts(v);
    subspaces(v);
    registerVetterEntries(v, IC::StarIdempotent, "", "A*", {"pp391", "pp392", "pp393", "pp394", "TL312"});
}

}  // namespace ranklab::detail
