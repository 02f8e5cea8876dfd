// Ranges and null spaces of expressions in two idempotents.

#include "support.hpp"

namespace ranklab::detail {

namespace {

using IC = InputClass;
using CK = CheckerKind;

struct Pair {
    Matrix A, B, I, T;
    unsigned k;
    I64 m;
};

Pair bind(const Instance& in) {
    const Matrix& a = in.mat("A");
    const Matrix& b = in.mat("B");
    return {a, b, a.eye(), a + b - a.eye(), in.k, static_cast<I64>(in.m)};
}

// N(X) = N(Y) + N(Z), or N(Y) cap N(Z) for the misprinted reading
bool nullSplits(const Matrix& x, const Matrix& y, const Matrix& z, bool asCap) {
    return rangeEqual(nul(x), asCap ? cap(nul(y), nul(z)) : sum(nul(y), nul(z)));
}

void inclusions(std::vector<CatalogEntry>& v) {
    auto inc = [&v](const char* id, const char* statement, CheckFn fn) {
        add(v, id, statement, IC::IdempotentPair, CK::SubspaceIdentity, std::move(fn)).usesK = true;
    };
    inc("TK34a", "R[(AB - BA)^k] in R[(A - B)^k] and R[(AB - BA)^k] in R[(A + B - I)^k]", [](const Instance& in) {
        const Pair p = bind(in);
        const Matrix x = (p.A * p.B - p.B * p.A).pow(p.k);
        return allOf({inSpace(x, (p.A - p.B).pow(p.k)), inSpace(x, p.T.pow(p.k))});
    });
    inc("TK34b", "R[(AB + BA)^k] in R[(A + B)^k] and R[(AB + BA)^k] in R[(A + B - I)^k]", [](const Instance& in) {
        const Pair p = bind(in);
        const Matrix x = (p.A * p.B + p.B * p.A).pow(p.k);
        return allOf({inSpace(x, (p.A + p.B).pow(p.k)), inSpace(x, p.T.pow(p.k))});
    });
    inc("TK34c", "N[(A - B)^k] in N[(AB - BA)^k] and N[(A + B - I)^k] in N[(AB - BA)^k]", [](const Instance& in) {
        const Pair p = bind(in);
        const Matrix x = (p.A * p.B - p.B * p.A).pow(p.k);
        return allOf({holds(nullspaceContained((p.A - p.B).pow(p.k), x)), holds(nullspaceContained(p.T.pow(p.k), x))});
    });
    inc("TK34d", "N[(A + B)^k] in N[(AB + BA)^k] and N[(A + B - I)^k] in N[(AB + BA)^k]", [](const Instance& in) {
        const Pair p = bind(in);
        const Matrix x = (p.A * p.B + p.B * p.A).pow(p.k);
        return allOf({holds(nullspaceContained((p.A + p.B).pow(p.k), x)), holds(nullspaceContained(p.T.pow(p.k), x))});
    });
}

void ranges(std::vector<CatalogEntry>& v) {
    add(v, "w62", "R(AB - BA) = R(A - B) cap R(I - A - B)", IC::IdempotentPair, CK::SubspaceIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            return sameSpace(p.A * p.B - p.B * p.A, cap(p.A - p.B, -p.T));
        });
    add(v, "w62i", "A - B nonsingular  =>  R(AB - BA) = R(I - A - B)", IC::IdempotentPair, CK::FactEquivalence,
        [](const Instance& in) {
            const Pair p = bind(in);
            return implies(nonsingular(p.A - p.B), rangeEqual(p.A * p.B - p.B * p.A, -p.T));
        });
    add(v, "w62ii", "A + B - I nonsingular  =>  R(AB - BA) = R(A - B)", IC::IdempotentPair, CK::FactEquivalence,
        [](const Instance& in) {
            const Pair p = bind(in);
            return implies(nonsingular(p.T), rangeEqual(p.A * p.B - p.B * p.A, p.A - p.B));
        });
    add(v, "w62iii", "AB - BA nonsingular <=> A - B and I - A - B both nonsingular", IC::IdempotentPair,
        CK::FactEquivalence, [](const Instance& in) {
            const Pair p = bind(in);
            return iff({nonsingular(p.A * p.B - p.B * p.A), nonsingular(p.A - p.B) && nonsingular(p.T)});
        });
    add(v, "w62iv",
        "AB = BA <=> R(A - B) cap R(I - A - B) = 0 <=> r[A; B] = r(A) + r(B) - r(AB) and r[A, B] = r(A) + r(B) - "
        "r(BA) <=> r[A; B] = r(A) + r(B) - r(BA) and r[A, B] = r(A) + r(B) - r(AB)",
        IC::IdempotentPair, CK::FactEquivalence, [](const Instance& in) {
            const Pair p = bind(in);
            const I64 ra = r(p.A);
            const I64 rb = r(p.B);
            const I64 col = r(vcat(p.A, p.B));
            const I64 row = r(hcat(p.A, p.B));
            const I64 rab = r(p.A * p.B);
            const I64 rba = r(p.B * p.A);
            return iff({p.A * p.B == p.B * p.A, disjointRanges(p.A - p.B, -p.T),
                        col == ra + rb - rab && row == ra + rb - rba, col == ra + rb - rba && row == ra + rb - rab});
        });
    add(v, "w63", "R(AB + BA) = R(A + B) cap R(A + B - I)", IC::IdempotentPair, CK::SubspaceIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            return sameSpace(p.A * p.B + p.B * p.A, cap(p.A + p.B, p.T));
        });
    add(v, "w64", "R(ABA + BAB) = R(A + B) cap R[(A + B - I)^2]", IC::IdempotentPair, CK::SubspaceIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            return sameSpace(p.A * p.B * p.A + p.B * p.A * p.B, cap(p.A + p.B, p.T * p.T));
        });
    add(v, "w65", "R(ABA - BAB) = R(A - B) cap R[(A + B - I)^2]", IC::IdempotentPair, CK::SubspaceIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            return sameSpace(p.A * p.B * p.A - p.B * p.A * p.B, cap(p.A - p.B, p.T * p.T));
        });
    add(v, "w66", "R[(AB - BA)^2] = R[(A - B)^2] cap R[(A + B - I)^2]", IC::IdempotentPair, CK::SubspaceIdentity,
        [](const Instance& in) {
            const Pair p = bind(in);
            const Matrix c = p.A * p.B - p.B * p.A;
            const Matrix d = p.A - p.B;
            return sameSpace(c * c, cap(d * d, p.T * p.T));
        });
    add(v, "w74", "r(AB + BA) = r(A + B) + r(A + B - I) - m", IC::IdempotentPair, CK::RankEquality,
        [](const Instance& in) {
            const Pair p = bind(in);
            return rankEq(r(p.A * p.B + p.B * p.A), r(p.A + p.B) + r(p.T) - p.m);
        });
    add(v, "w75", "dim[R(M) cap R(N)] = r(M) + r(N) - r[M, N]", IC::MatrixPair, CK::RankEquality,
        [](const Instance& in) {
            const Matrix& M = in.mat("M");
            const Matrix& N = in.mat("N");
            return rankEq(r(cap(M, N)), r(M) + r(N) - r(hcat(M, N)));
        });
}

void nullSpaces(std::vector<CatalogEntry>& v) {
    struct Null {
        const char* id;
        const char* statement;
        int shape;
    };
    static const Null nulls[] = {
        {"TK311a", "N(AB + BA) = N(A + B) + N(A + B - I)", 0},
        {"TK311b", "N(AB - BA) = N(A - B) + N(A + B - I)", 1},
        {"TK311c", "N(ABA + BAB) = N(A + B) + N[(A + B - I)^2]", 2},
        {"TK311d", "N(ABA - BAB) = N(A - B) + N[(A + B - I)^2]", 3},
        {"TK311e", "N[(AB - BA)^2] = N[(A - B)^2] + N[(A + B - I)^2]", 4},
    };
    for (const Null& n : nulls) {
        auto check = [n](bool asCap) {
            return [n, asCap](const Instance& in) {
                const Pair p = bind(in);
                const Matrix& A = p.A;
                const Matrix& B = p.B;
                const Matrix t2 = p.T * p.T;
                switch (n.shape) {
                    case 0: return holds(nullSplits(A * B + B * A, A + B, p.T, asCap));
                    case 1: return holds(nullSplits(A * B - B * A, A - B, p.T, asCap));
                    case 2: return holds(nullSplits(A * B * A + B * A * B, A + B, t2, asCap));
                    case 3: return holds(nullSplits(A * B * A - B * A * B, A - B, t2, asCap));
                    default: {
                        const Matrix c = A * B - B * A;
                        return holds(nullSplits(c * c, (A - B) * (A - B), t2, asCap));
                    }
                }
            };
        };
        std::string literal = n.statement;
        literal.replace(literal.rfind(" + N"), 4, " cap N");
        CatalogEntry& e = add(v, n.id, n.statement, IC::IdempotentPair, CK::SubspaceIdentity, check(false));
        withErratum(e, "null spaces of commuting factors add; the intersection is trivial", literal, n.statement,
                    check(true));
    }
}

}  // namespace

void registerSubspaceEntries(std::vector<CatalogEntry>& v) {
    inclusions(v);
    ranges(v);
    nullSpaces(v);
}

}  // namespace ranklab::detail
