// Identities and facts for two idempotents A, B of order m, with T = A + B - I.
// Most of them are registered a second time on the star class (B = A*).

#include "support.hpp"

namespace ranklab::detail {

namespace {

using IC = InputClass;
using CK = CheckerKind;

struct Pair {
    const Matrix& A;
    const Matrix& B;
    Matrix I;
    Matrix T;
    FieldSpec F;
    I64 m;
    unsigned k;
};

Pair bind(const Instance& in) {
    const Matrix& a = in.mat("A");
    const Matrix& b = in.mat("B");
    Matrix i = a.eye();
    Matrix t = a + b - i;
    return {a, b, std::move(i), std::move(t), a.field(), static_cast<I64>(in.m), in.k};
}

Matrix scaledEye(const Pair& p, long num, long den) { return q(num, den, p.F) * p.I; }

std::string starred(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == 'B') out += "A*";
        else out += c;
    }
    return out;
}

std::vector<ScalarParam> alphaBeta() { return {{"alpha", {}}, {"beta", {}}}; }

// Registers the pair entry and, when twin is non-empty, the same check on B = A*.
CatalogEntry& pairEntry(std::vector<CatalogEntry>& v, const std::string& id, const std::string& twin,
                        const std::string& statement, CK kind, CheckFn fn, bool usesK = false,
                        std::vector<ScalarParam> scalars = {}) {
    if (!twin.empty()) {
        CatalogEntry& t = add(v, twin, starred(statement), IC::StarIdempotent, kind, fn);
        t.usesK = usesK;
        t.scalars = scalars;
    }
    CatalogEntry& e = add(v, id, statement, IC::IdempotentPair, kind, std::move(fn));
    e.usesK = usesK;
    e.scalars = std::move(scalars);
    return e;
}

// Attaches the same erratum to the entry just registered by pairEntry and to its star twin.
void pairErratum(std::vector<CatalogEntry>& v, const std::string& note, const std::string& literal,
                 const std::string& corrected, CheckFn literalCheck) {
    CatalogEntry& e = v.back();
    CatalogEntry& twin = v[v.size() - 2];
    withErratum(e, note, literal, corrected, literalCheck);
    withErratum(twin, note, starred(literal), starred(corrected), std::move(literalCheck));
}

void katoIdentities(std::vector<CatalogEntry>& v) {
    pairEntry(v, "v31", "", "(A - B)^2 + (A + B - I)^2 = I", CK::MatrixIdentity, [](const Instance& in) {
        const Pair p = bind(in);
        const Matrix d = p.A - p.B;
        return matEq(d * d + p.T * p.T, p.I);
    });
    pairEntry(v, "v32", "", "AB + BA + I/4 = (A + B - I/2)^2", CK::MatrixIdentity, [](const Instance& in) {
        const Pair p = bind(in);
        const Matrix s = p.A + p.B - scaledEye(p, 1, 2);
        return matEq(p.A * p.B + p.B * p.A + scaledEye(p, 1, 4), s * s);
    });
    pairEntry(v, "v33", "", "r[(A - B)^2] = r(A + B) + r(2I - A - B) - m", CK::RankEquality, [](const Instance& in) {
        const Pair p = bind(in);
        const Matrix d = p.A - p.B;
        return rankEq(r(d * d), r(p.A + p.B) + r(2 * p.I - p.A - p.B) - p.m);
    });
    pairEntry(v, "v34", "", "r[(I - A - B)^2] = r(I + A - B) + r(I - A + B) - m", CK::RankEquality,
              [](const Instance& in) {
                  const Pair p = bind(in);
                  return rankEq(r(p.T * p.T), r(p.I + p.A - p.B) + r(p.I - p.A + p.B) - p.m);
              });
    pairEntry(v, "v35", "", "r(AB + BA) = r(I - A - B) + r(A + B) - m", CK::RankEquality, [](const Instance& in) {
        const Pair p = bind(in);
        return rankEq(r(p.A * p.B + p.B * p.A), r(p.T) + r(p.A + p.B) - p.m);
    });
    pairEntry(v, "v36", "", "r(I - AB - BA) = r[(sqrt5 - 1)/2 I + A + B] + r[(sqrt5 + 1)/2 I - A - B] - m",
              CK::RankEquality, [](const Instance& in) {
                  const Pair p = bind(in);
                  const Scalar s = Scalar::sqrtRadicand(p.F);
                  const Scalar h = q(1, 2, p.F);
                  return rankEq(r(p.I - p.A * p.B - p.B * p.A),
                                r((h * (s - Scalar(1, p.F))) * p.I + p.A + p.B) +
                                    r((h * (s + Scalar(1, p.F))) * p.I - p.A - p.B) - p.m);
              })
        .radicand = 5;
    pairEntry(v, "v37", "", "r(2I - AB - BA) = r(I + A + B) + r(2I - A - B) - m", CK::RankEquality,
              [](const Instance& in) {
                  const Pair p = bind(in);
                  return rankEq(r(2 * p.I - p.A * p.B - p.B * p.A),
                                r(p.I + p.A + p.B) + r(2 * p.I - p.A - p.B) - p.m);
              });
}

void katoFacts(std::vector<CatalogEntry>& v) {
    pairEntry(v, "v38", "", "(A - B)^2 = 0 <=> (I - A - B)^2 = I <=> r(A + B) + r(2I - A - B) = m",
              CK::FactEquivalence, [](const Instance& in) {
                  const Pair p = bind(in);
                  const Matrix d = p.A - p.B;
                  return iff({(d * d).isZero(), p.T * p.T == p.I, r(p.A + p.B) + r(2 * p.I - p.A - p.B) == p.m});
              });
    pairEntry(v, "v39", "", "(A - B)^2 = I/2 <=> (I - A - B)^2 = I/2", CK::FactEquivalence, [](const Instance& in) {
        const Pair p = bind(in);
        const Matrix d = p.A - p.B;
        const Matrix half = scaledEye(p, 1, 2);
        return iff({d * d == half, p.T * p.T == half});
    });
    auto& v310 = pairEntry(v, "v310", "", "(A - B)^2 = I <=> (I - A - B)^2 = 0 <=> r(I + A - B) + r(I - A + B) = m",
                           CK::FactEquivalence, [](const Instance& in) {
                               const Pair p = bind(in);
                               const Matrix d = p.A - p.B;
                               return iff({d * d == p.I, (p.T * p.T).isZero(),
                                           r(p.I + p.A - p.B) + r(p.I - p.A + p.B) == p.m});
                           });
    withErratum(v310, "last clause is a bare expression; the comparison with m is missing",
                "<=> r(I + A - B) + r(I - A + B) - m", "<=> r(I + A - B) + r(I - A + B) = m");

    // AB + BA = c I  <=>  (A + B - I/2)^2 = (c + 1/4) I
    struct Level {
        const char* id;
        long num, den;       // c
        long snum, sden;     // c + 1/4
    };
    static const Level levels[] = {
        {"v311", -2, 1, -7, 4}, {"v312", -1, 1, -3, 4}, {"v313", -1, 4, 0, 1}, {"v315", 3, 4, 1, 1}};
    for (const Level& l : levels) {
        const std::string c = l.den == 1 ? std::to_string(l.num) : std::to_string(l.num) + "/" + std::to_string(l.den);
        const std::string s =
            l.sden == 1 ? std::to_string(l.snum) : std::to_string(l.snum) + "/" + std::to_string(l.sden);
        pairEntry(v, l.id, "", "AB + BA = (" + c + ")I <=> (A + B - I/2)^2 = (" + s + ")I", CK::FactEquivalence,
                  [l](const Instance& in) {
                      const Pair p = bind(in);
                      const Matrix sh = p.A + p.B - scaledEye(p, 1, 2);
                      return iff({p.A * p.B + p.B * p.A == scaledEye(p, l.num, l.den),
                                  sh * sh == scaledEye(p, l.snum, l.sden)});
                  });
    }
    pairEntry(v, "v314", "", "AB + BA = 0 <=> (A + B - I/2)^2 = I/4 <=> r(I - A - B) + r(A + B) = m",
              CK::FactEquivalence, [](const Instance& in) {
                  const Pair p = bind(in);
                  const Matrix sh = p.A + p.B - scaledEye(p, 1, 2);
                  return iff({(p.A * p.B + p.B * p.A).isZero(), sh * sh == scaledEye(p, 1, 4),
                              r(p.T) + r(p.A + p.B) == p.m});
              });
    pairEntry(v, "v316", "",
              "AB + BA = I <=> (A + B - I/2)^2 = (5/4)I <=> r[(sqrt5 - 1)/2 I + A + B] + r[(sqrt5 + 1)/2 I - A - B] = m",
              CK::FactEquivalence, [](const Instance& in) {
                  const Pair p = bind(in);
                  const Matrix sh = p.A + p.B - scaledEye(p, 1, 2);
                  const Scalar s = Scalar::sqrtRadicand(p.F);
                  const Scalar h = q(1, 2, p.F);
                  const I64 sum = r((h * (s - Scalar(1, p.F))) * p.I + p.A + p.B) +
                                  r((h * (s + Scalar(1, p.F))) * p.I - p.A - p.B);
                  return iff({p.A * p.B + p.B * p.A == p.I, sh * sh == scaledEye(p, 5, 4), sum == p.m});
              })
        .radicand = 5;
    pairEntry(v, "v317", "", "AB + BA = 2I <=> (A + B - I/2)^2 = (9/4)I <=> r(I + A + B) + r(2I - A - B) = m",
              CK::FactEquivalence, [](const Instance& in) {
                  const Pair p = bind(in);
                  const Matrix sh = p.A + p.B - scaledEye(p, 1, 2);
                  return iff({p.A * p.B + p.B * p.A == 2 * p.I, sh * sh == scaledEye(p, 9, 4),
                              r(p.I + p.A + p.B) + r(2 * p.I - p.A - p.B) == p.m});
              });

    pairEntry(v, "vv318", "", "r(A - B) = m <=> r(A + B) = r(2I - A - B) = m", CK::FactEquivalence,
              [](const Instance& in) {
                  const Pair p = bind(in);
                  return iff({r(p.A - p.B) == p.m, r(p.A + p.B) == p.m && r(2 * p.I - p.A - p.B) == p.m});
              });
    pairEntry(v, "vv319", "", "r(I - A - B) = m <=> r(I + A - B) = r(I - A + B) = m", CK::FactEquivalence,
              [](const Instance& in) {
                  const Pair p = bind(in);
                  return iff({r(p.T) == p.m, r(p.I + p.A - p.B) == p.m && r(p.I - p.A + p.B) == p.m});
              });
    pairEntry(v, "vv320", "", "r(AB + BA) = m <=> r(I - A - B) = r(A + B) = m", CK::FactEquivalence,
              [](const Instance& in) {
                  const Pair p = bind(in);
                  return iff({r(p.A * p.B + p.B * p.A) == p.m, r(p.T) == p.m && r(p.A + p.B) == p.m});
              });
    pairEntry(v, "vv321", "",
              "r(I - AB - BA) = m <=> r[(sqrt5 - 1)/2 I + A + B] = r[(sqrt5 + 1)/2 I - A - B] = m",
              CK::FactEquivalence, [](const Instance& in) {
                  const Pair p = bind(in);
                  const Scalar s = Scalar::sqrtRadicand(p.F);
                  const Scalar h = q(1, 2, p.F);
                  return iff({r(p.I - p.A * p.B - p.B * p.A) == p.m,
                              r((h * (s - Scalar(1, p.F))) * p.I + p.A + p.B) == p.m &&
                                  r((h * (s + Scalar(1, p.F))) * p.I - p.A - p.B) == p.m});
              })
        .radicand = 5;
    pairEntry(v, "vv322", "", "r(2I - AB - BA) = m <=> r(I + A + B) = r(2I - A - B) = m", CK::FactEquivalence,
              [](const Instance& in) {
                  const Pair p = bind(in);
                  return iff({r(2 * p.I - p.A * p.B - p.B * p.A) == p.m,
                              r(p.I + p.A + p.B) == p.m && r(2 * p.I - p.A - p.B) == p.m});
              });
}

struct Combos {
    Scalar alpha, beta;
    Matrix ab, ba, aba, bab;
    Matrix left;   // alpha A + beta B
    Matrix right;  // beta A + alpha B
};

Combos combos(const Pair& p, const Instance& in) {
    Combos c{in.scalar("alpha"), in.scalar("beta"), p.A * p.B, p.B * p.A, {}, {}, {}, {}};
    c.aba = c.ab * p.A;
    c.bab = c.ba * p.B;
    c.left = c.alpha * p.A + c.beta * p.B;
    c.right = c.beta * p.A + c.alpha * p.B;
    return c;
}

void factorizations(std::vector<CatalogEntry>& v) {
    pairEntry(
        v, "ff31", "TL32-ff31", "alpha AB + beta BA = (alpha A + beta B)(A + B - I) = (A + B - I)(beta A + alpha B)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Combos c = combos(p, in);
            return matChain({c.alpha * c.ab + c.beta * c.ba, c.left * p.T, p.T * c.right});
        },
        false, alphaBeta());
    // even powers of T commute with A and B, so the scalars keep their places on both sides
    auto evenCheck = [](bool powered, bool swapped) {
        return [powered, swapped](const Instance& in) {
            const Pair p = bind(in);
            const Combos c = combos(p, in);
            const unsigned k = powered ? p.k : 1;
            const Matrix t = p.T.pow(2 * k);
            return matChain({c.alpha * c.aba.pow(k) + c.beta * c.bab.pow(k), c.left * t,
                             t * (swapped ? c.right : c.left)});
        };
    };
    const char* ff32 = "alpha ABA + beta BAB = (alpha A + beta B)(A + B - I)^2 = (A + B - I)^2(alpha A + beta B)";
    pairEntry(v, "ff32", "TL32-ff32", ff32, CK::MatrixIdentity, evenCheck(false, false), false, alphaBeta());
    pairErratum(v, "right-hand factor has alpha and beta exchanged",
                "alpha ABA + beta BAB = (alpha A + beta B)(A + B - I)^2 = (A + B - I)^2(beta A + alpha B)", ff32,
                evenCheck(false, true));
    pairEntry(
        v, "ff33", "TL32-ff33",
        "alpha (AB)^k + beta (BA)^k = (alpha A + beta B)(A + B - I)^(2k-1) = (A + B - I)^(2k-1)(beta A + alpha B)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Combos c = combos(p, in);
            const Matrix t = p.T.pow(2 * p.k - 1);
            return matChain({c.alpha * c.ab.pow(p.k) + c.beta * c.ba.pow(p.k), c.left * t, t * c.right});
        },
        true, alphaBeta());
    const char* ff34 =
        "alpha (ABA)^k + beta (BAB)^k = (alpha A + beta B)(A + B - I)^(2k) = (A + B - I)^(2k)(alpha A + beta B)";
    pairEntry(v, "ff34", "TL32-ff34", ff34, CK::MatrixIdentity, evenCheck(true, false), true, alphaBeta());
    pairErratum(v, "right-hand factor has alpha and beta exchanged",
                "alpha (ABA)^k + beta (BAB)^k = (alpha A + beta B)(A + B - I)^(2k) = (A + B - I)^(2k)(beta A + alpha B)",
                ff34, evenCheck(true, true));

    auto& chain = pairEntry(
        v, "TK32", "TL32",
        "alpha AB + beta BA, alpha ABA + beta BAB, alpha (AB)^k + beta (BA)^k, alpha (ABA)^k + beta (BAB)^k are "
        "nonsingular together, exactly when alpha A + beta B and A + B - I are both nonsingular",
        CK::FactEquivalence,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Combos c = combos(p, in);
            return iff({nonsingular(c.alpha * c.ab + c.beta * c.ba), nonsingular(c.alpha * c.aba + c.beta * c.bab),
                        nonsingular(c.alpha * c.ab.pow(p.k) + c.beta * c.ba.pow(p.k)),
                        nonsingular(c.alpha * c.aba.pow(p.k) + c.beta * c.bab.pow(p.k)),
                        nonsingular(c.left) && nonsingular(p.T)});
        },
        true, alphaBeta());
    withErratum(chain, "equivalence chain is garbled (a link is missing and one clause repeats)",
                "... nonsingular <=> alpha (AB)^k + beta (BA)^k is nonsingular alpha ABA + beta BAB is nonsingular "
                "<=> alpha (AB)^k + beta (BA)^k is nonsingular <=> ...",
                "all four combinations nonsingular <=> both alpha A + beta B and A + B - I nonsingular, pairwise");
    // the star twin carries the same garbled chain
    for (CatalogEntry& e : v)
        if (e.id == "TL32") e.erratum = chain.erratum;

    // (alpha X + beta Y)^-1 = T^-e (alpha A + beta B)^-1 = (beta A + alpha B)^-1 T^-e for odd e;
    // for even e the last factor is (alpha A + beta B)^-1 again
    struct Inv {
        const char* id;
        const char* twin;
        const char* statement;
        bool triple;      // ABA / BAB instead of AB / BA
        bool powered;     // uses k
        const char* literal = nullptr;
    };
    static const Inv invs[] = {
        {"dd37", "TL32-dd37",
         "(alpha AB + beta BA)^-1 = (A + B - I)^-1 (alpha A + beta B)^-1 = (beta A + alpha B)^-1 (A + B - I)^-1",
         false, false},
        {"dd38", "TL32-dd38",
         "(alpha ABA + beta BAB)^-1 = (A + B - I)^-2 (alpha A + beta B)^-1 = (alpha A + beta B)^-1 (A + B - I)^-2",
         true, false,
         "(alpha ABA + beta BAB)^-1 = (A + B - I)^-2 (alpha A + beta B)^-1 = (beta A + alpha B)^-1 (A + B - I)^-2"},
        {"dd39", "TL32-dd39",
         "[alpha (AB)^k + beta (BA)^k]^-1 = (A + B - I)^(-2k+1) (alpha A + beta B)^-1 = (beta A + alpha B)^-1 "
         "(A + B - I)^(-2k+1)",
         false, true},
        {"dd310", "TL32-dd310",
         "[alpha (ABA)^k + beta (BAB)^k]^-1 = (A + B - I)^(-2k) (alpha A + beta B)^-1 = (alpha A + beta B)^-1 "
         "(A + B - I)^(-2k)",
         true, true,
         "[alpha (ABA)^k + beta (BAB)^k]^-1 = (A + B - I)^(-2k) (alpha A + beta B)^-1 = (beta A + alpha B)^-1 "
         "(A + B - I)^(-2k)"},
    };
    for (const Inv& d : invs) {
        // swapped: the right-hand form uses (beta A + alpha B)
        auto check = [d](bool swapped) {
            return [d, swapped](const Instance& in) {
                const Pair p = bind(in);
                const Combos c = combos(p, in);
                if (!nonsingular(c.left) || !nonsingular(p.T)) return miss();
                const unsigned k = d.powered ? p.k : 1;
                const Matrix x = d.triple ? c.aba.pow(k) : c.ab.pow(k);
                const Matrix y = d.triple ? c.bab.pow(k) : c.ba.pow(k);
                const Matrix tinv = inverse(p.T).pow(d.triple ? 2 * k : 2 * k - 1);
                const Matrix& last = swapped ? c.right : c.left;
                if (!nonsingular(last)) return miss();
                return matChain({inverse(c.alpha * x + c.beta * y), tinv * inverse(c.left), inverse(last) * tinv});
            };
        };
        pairEntry(v, d.id, d.twin, d.statement, CK::ConditionalInverse, check(!d.triple), d.powered, alphaBeta());
        if (d.literal)
            pairErratum(v, "right-hand inverse has alpha and beta exchanged", d.literal, d.statement, check(true));
    }
}

int signOf(unsigned k) { return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1; }

// sum_{j=1..k} T^(2j-1) or T^(2j)
Matrix oddEvenSum(const Matrix& t, unsigned k, bool even) {
    Matrix s(t.rows(), t.cols(), t.field());
    for (unsigned j = 1; j <= k; ++j) s = s + t.pow(even ? 2 * j : 2 * j - 1);
    return s;
}

void commutators(std::vector<CatalogEntry>& v) {
    pairEntry(v, "w3", "TL33-w3", "AB - BA = (A - B)(A + B - I) = -(A + B - I)(A - B)", CK::MatrixIdentity,
              [](const Instance& in) {
                  const Pair p = bind(in);
                  const Matrix d = p.A - p.B;
                  return matChain({p.A * p.B - p.B * p.A, d * p.T, -(p.T * d)});
              });
    pairEntry(v, "w4", "TL33-w4", "AB + BA = (A + B)(A + B - I) = (A + B - I)(A + B)", CK::MatrixIdentity,
              [](const Instance& in) {
                  const Pair p = bind(in);
                  const Matrix s = p.A + p.B;
                  return matChain({p.A * p.B + p.B * p.A, s * p.T, p.T * s});
              });
    pairEntry(v, "w14", "TL33-w14", "ABA - BAB = (A - B)(A + B - I)^2 = (A + B - I)^2(A - B)", CK::MatrixIdentity,
              [](const Instance& in) {
                  const Pair p = bind(in);
                  const Matrix d = p.A - p.B;
                  const Matrix t2 = p.T * p.T;
                  return matChain({p.A * p.B * p.A - p.B * p.A * p.B, d * t2, t2 * d});
              });
    pairEntry(v, "w15", "TL33-w15", "ABA + BAB = (A + B)(A + B - I)^2 = (A + B - I)^2(A + B)", CK::MatrixIdentity,
              [](const Instance& in) {
                  const Pair p = bind(in);
                  const Matrix s = p.A + p.B;
                  const Matrix t2 = p.T * p.T;
                  return matChain({p.A * p.B * p.A + p.B * p.A * p.B, s * t2, t2 * s});
              });
    pairEntry(
        v, "w6", "TL33-w6",
        "(AB - BA)^k = (-1)^(k(k-1)/2) (A - B)^k (A + B - I)^k = (-1)^(k(k-1)/2) (I - A - B)^k (A - B)^k",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Matrix d = (p.A - p.B).pow(p.k);
            const long s = signOf(p.k);
            return matChain({(p.A * p.B - p.B * p.A).pow(p.k), s * (d * p.T.pow(p.k)), s * ((-p.T).pow(p.k) * d)});
        },
        true);
    pairEntry(
        v, "w7", "TL33-w7", "(AB + BA)^k = (A + B)^k (A + B - I)^k = (A + B - I)^k (A + B)^k", CK::MatrixIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Matrix s = (p.A + p.B).pow(p.k);
            const Matrix t = p.T.pow(p.k);
            return matChain({(p.A * p.B + p.B * p.A).pow(p.k), s * t, t * s});
        },
        true);
    pairEntry(
        v, "w8", "TL33-w8", "(ABA - BAB)^k = (A - B)^k (A + B - I)^(2k) = (A + B - I)^(2k) (A - B)^k",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Matrix d = (p.A - p.B).pow(p.k);
            const Matrix t = p.T.pow(2 * p.k);
            return matChain({(p.A * p.B * p.A - p.B * p.A * p.B).pow(p.k), d * t, t * d});
        },
        true);
    pairEntry(
        v, "w9", "TL33-w9", "(ABA + BAB)^k = (A + B)^k (A + B - I)^(2k) = (A + B - I)^(2k) (A + B)^k",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Matrix s = (p.A + p.B).pow(p.k);
            const Matrix t = p.T.pow(2 * p.k);
            return matChain({(p.A * p.B * p.A + p.B * p.A * p.B).pow(p.k), s * t, t * s});
        },
        true);
    pairEntry(
        v, "w10", "TL33-w10", "(AB)^k - (BA)^k = (A - B)(A + B - I)^(2k-1) = -(A + B - I)^(2k-1)(A - B)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Matrix d = p.A - p.B;
            const Matrix t = p.T.pow(2 * p.k - 1);
            return matChain({(p.A * p.B).pow(p.k) - (p.B * p.A).pow(p.k), d * t, -(t * d)});
        },
        true);
    pairEntry(
        v, "w11", "TL33-w11", "(AB)^k + (BA)^k = (A + B)(A + B - I)^(2k-1) = (A + B - I)^(2k-1)(A + B)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Matrix s = p.A + p.B;
            const Matrix t = p.T.pow(2 * p.k - 1);
            return matChain({(p.A * p.B).pow(p.k) + (p.B * p.A).pow(p.k), s * t, t * s});
        },
        true);
    pairEntry(
        v, "w12", "TL33-w12", "(ABA)^k - (BAB)^k = (A - B)(A + B - I)^(2k) = (A + B - I)^(2k)(A - B)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Matrix d = p.A - p.B;
            const Matrix t = p.T.pow(2 * p.k);
            return matChain({(p.A * p.B * p.A).pow(p.k) - (p.B * p.A * p.B).pow(p.k), d * t, t * d});
        },
        true);
    pairEntry(
        v, "w13", "TL33-w13", "(ABA)^k + (BAB)^k = (A + B)(A + B - I)^(2k) = (A + B - I)^(2k)(A + B)",
        CK::MatrixIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Matrix s = p.A + p.B;
            const Matrix t = p.T.pow(2 * p.k);
            return matChain({(p.A * p.B * p.A).pow(p.k) + (p.B * p.A * p.B).pow(p.k), s * t, t * s});
        },
        true);

    // telescoped sums
    struct Sum {
        const char* id;
        const char* twin;
        const char* statement;
        bool triple;
        int sign;
    };
    static const Sum sums[] = {
        {"TK33s1", "TL33s1",
         "sum_{j<=k} [(AB)^j - (BA)^j] = (A - B) sum_{j<=k} (A + B - I)^(2j-1) = sum_{j<=k} (A + B - I)^(2j-1) (B - A)",
         false, -1},
        {"TK33s2", "TL33s2",
         "sum_{j<=k} [(AB)^j + (BA)^j] = (A + B) sum_{j<=k} (A + B - I)^(2j-1) = sum_{j<=k} (A + B - I)^(2j-1) (A + B)",
         false, 1},
        {"TK33s3", "TL33s3",
         "sum_{j<=k} [(ABA)^j - (BAB)^j] = (A - B) sum_{j<=k} (A + B - I)^(2j) = sum_{j<=k} (A + B - I)^(2j) (A - B)",
         true, -1},
        {"TK33s4", "TL33s4",
         "sum_{j<=k} [(ABA)^j + (BAB)^j] = (A + B) sum_{j<=k} (A + B - I)^(2j) = sum_{j<=k} (A + B - I)^(2j) (A + B)",
         true, 1},
    };
    for (const Sum& s : sums) {
        pairEntry(
            v, s.id, s.twin, s.statement, CK::MatrixIdentity,
            [s](const Instance& in) {
                const Pair p = bind(in);
                const Matrix x = s.triple ? p.A * p.B * p.A : p.A * p.B;
                const Matrix y = s.triple ? p.B * p.A * p.B : p.B * p.A;
                Matrix lhs(p.A.rows(), p.A.cols(), p.F);
                for (unsigned j = 1; j <= p.k; ++j) lhs = lhs + x.pow(j) + s.sign * y.pow(j);
                const Matrix t = oddEvenSum(p.T, p.k, s.triple);
                const Matrix front = p.A + s.sign * p.B;
                // the odd-power difference flips to (B - A) on the right
                const Matrix back = (!s.triple && s.sign < 0) ? p.B - p.A : front;
                return matChain({lhs, front * t, t * back});
            },
            true);
    }
}

void products(std::vector<CatalogEntry>& v) {
    struct Prod {
        const char* id;
        const char* twin;
        const char* statement;
        int shape;
    };
    static const Prod prods[] = {
        {"w32", "TL37-w32", "A - ABA = A(A - B)^2 = (A - B)^2 A", 0},
        {"w33", "TL37-w33", "B - BAB = B(A - B)^2 = (A - B)^2 B", 1},
        {"w34", "TL37-w34", "(A - ABA)^k = A(A - B)^(2k) = (A - B)^(2k) A", 2},
        {"w35", "TL37-w35", "(B - BAB)^k = B(A - B)^(2k) = (A - B)^(2k) B", 3},
        {"w36", "TL37-w36", "ABA = A(A + B - I)^2 = (A + B - I)^2 A", 4},
        {"w37", "TL37-w37", "BAB = B(A + B - I)^2 = (A + B - I)^2 B", 5},
        {"w38", "TL37-w38", "(ABA)^k = A(A + B - I)^(2k) = (A + B - I)^(2k) A", 6},
        {"w39", "TL37-w39", "(BAB)^k = B(A + B - I)^(2k) = (A + B - I)^(2k) B", 7},
        {"w40", "TL37-w40", "(BA)^2 = BA(A + B - I)^2 = B(A + B - I)^2 A", 8},
        {"w41", "TL37-w41", "(AB)^2 = AB(A + B - I)^2 = A(A + B - I)^2 B", 9},
        {"w42", "TL37-w42", "(AB)^k = A(A + B - I)^(2k-2) B", 10},
        {"w43", "TL37-w43", "(BA)^k = B(A + B - I)^(2k-2) A", 11},
    };
    for (const Prod& d : prods) {
        const bool powered = d.shape == 2 || d.shape == 3 || d.shape == 6 || d.shape == 7 || d.shape >= 10;
        pairEntry(
            v, d.id, d.twin, d.statement, CK::MatrixIdentity,
            [d](const Instance& in) {
                const Pair p = bind(in);
                const Matrix& A = p.A;
                const Matrix& B = p.B;
                const Matrix d2 = (A - B) * (A - B);
                const Matrix t2 = p.T * p.T;
                const unsigned k = p.k;
                switch (d.shape) {
                    case 0: return matChain({A - A * B * A, A * d2, d2 * A});
                    case 1: return matChain({B - B * A * B, B * d2, d2 * B});
                    case 2: return matChain({(A - A * B * A).pow(k), A * d2.pow(k), d2.pow(k) * A});
                    case 3: return matChain({(B - B * A * B).pow(k), B * d2.pow(k), d2.pow(k) * B});
                    case 4: return matChain({A * B * A, A * t2, t2 * A});
                    case 5: return matChain({B * A * B, B * t2, t2 * B});
                    case 6: return matChain({(A * B * A).pow(k), A * t2.pow(k), t2.pow(k) * A});
                    case 7: return matChain({(B * A * B).pow(k), B * t2.pow(k), t2.pow(k) * B});
                    case 8: return matChain({(B * A).pow(2), B * A * t2, B * t2 * A});
                    case 9: return matChain({(A * B).pow(2), A * B * t2, A * t2 * B});
                    case 10: return matEq((A * B).pow(k), A * p.T.pow(2 * k - 2) * B);
                    default: return matEq((B * A).pow(k), B * p.T.pow(2 * k - 2) * A);
                }
            },
            powered);
        if (d.shape >= 10) {
            const bool ab = d.shape == 10;
            pairErratum(v, "exponent of A + B - I should be 2k - 2",
                        ab ? "(AB)^k = A(A + B - I)^k B" : "(BA)^k = B(A + B - I)^k A", d.statement,
                        [ab](const Instance& in) {
                            const Pair p = bind(in);
                            const Matrix& x = ab ? p.A : p.B;
                            const Matrix& y = ab ? p.B : p.A;
                            return matEq((x * y).pow(p.k), x * p.T.pow(p.k) * y);
                        });
        }
    }
}

void fullRankBlocks(std::vector<CatalogEntry>& v) {
    pairEntry(v, "eqm", "",
              "r[A + B, I + A - B] = r[A + B, I - A + B] = r[A - B, I + A + B] = r[A - B, I - A - B] = m",
              CK::RankEquality, [](const Instance& in) {
                  const Pair p = bind(in);
                  const Matrix s = p.A + p.B;
                  const Matrix d = p.A - p.B;
                  return rankChain({p.m, r(hcat(s, p.I + d)), r(hcat(s, p.I - d)), r(hcat(d, p.I + s)),
                                    r(hcat(d, p.I - s))});
              });
    auto chain = [](bool literal) {
        return [literal](const Instance& in) {
            const Pair p = bind(in);
            const I64 ra = r(p.A);
            const I64 rb = r(p.B);
            const I64 col = r(vcat(p.A, p.B));
            const I64 row = r(hcat(p.A, p.B));
            const I64 rab = r(p.A * p.B);
            const I64 rba = r(p.B * p.A);
            const I64 first = r(literal ? p.A + p.B : p.A - p.B);
            return iff({r(hcat(p.A - p.B, -p.T)) == first + r(p.T), col == ra + rb - rab && row == ra + rb - rba,
                        col == ra + rb - rba && row == ra + rb - rab});
        };
    };
    const char* tail =
        " <=> r[A; B] = r(A) + r(B) - r(AB) and r[A, B] = r(A) + r(B) - r(BA) <=> r[A; B] = r(A) + r(B) - r(BA) and "
        "r[A, B] = r(A) + r(B) - r(AB)";
    const std::string corrected = std::string("r[A - B, I - A - B] = r(A - B) + r(I - A - B)") + tail;
    CatalogEntry& e = pairEntry(v, "eqm-chain", "", corrected, CK::FactEquivalence, chain(false));
    withErratum(e, "first clause should add r(A - B), not r(A + B)",
                std::string("r[A - B, I - A - B] = r(A + B) + r(I - A - B)") + tail, corrected, chain(true));
}

}  // namespace

void registerPairIdentityEntries(std::vector<CatalogEntry>& v) {
    katoIdentities(v);
    katoFacts(v);
    factorizations(v);
    commutators(v);
    products(v);
    fullRankBlocks(v);
}

}  // namespace ranklab::detail
