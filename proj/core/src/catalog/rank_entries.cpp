// Block-matrix rank expansions: square and rectangular classics, equation systems,
// powers of products of two idempotents, families, projectors and {1}-inverses of [A, B].

#include "support.hpp"

#include "ranklab/random.hpp"

#include <cstdlib>

namespace ranklab::detail {

namespace {

using IC = InputClass;
using CK = CheckerKind;

Matrix projector(const Matrix& a) { return a * moorePenrose(a); }

// exists V with L V R = rhs
bool solvableFor(const Matrix& l, const Matrix& rr, const Matrix& rhs) {
    Rng rng = makeRng(0);
    try {
        solveLinearMatrixSystem({{{{0, l, rr}}, rhs}}, {{l.cols(), rr.rows()}}, rng, l.field());
        return true;
    } catch (const NoSolutionError&) {
        return false;
    }
}

// constant + L V R vanishes for every V
bool vanishesForAll(const Matrix& constant, const Matrix& l, const Matrix& rr) {
    return constant.isZero() && (l.isZero() || rr.isZero());
}

struct Products {
    Matrix ab, ba;  // (AB)^k, (BA)^k
    Matrix aba, bab;  // (AB)^k A, (BA)^k B
};

Products products(const Matrix& a, const Matrix& b, unsigned k) {
    Products p;
    p.ab = (a * b).pow(k);
    p.ba = (b * a).pow(k);
    p.aba = p.ab * a;
    p.bab = p.ba * b;
    return p;
}

// [A_i A_1, ..., 0, ..., A_i A_k]
Matrix hatProduct(const std::vector<Matrix>& fam, std::size_t i) {
    std::vector<std::vector<Matrix>> row(1);
    for (std::size_t j = 0; j < fam.size(); ++j)
        row[0].push_back(j == i ? Matrix(fam[i].rows(), fam[j].cols(), fam[i].field()) : fam[i] * fam[j]);
    return blockAssemble(row);
}

Matrix hcatAll(const std::vector<Matrix>& parts) {
    std::vector<std::vector<Matrix>> row(1, parts);
    return blockAssemble(row);
}

void basics(std::vector<CatalogEntry>& v) {
    add(v, "hh21", "r(I - A^2) = r(I + A) + r(I - A) - m", IC::Square, CK::RankEquality, [](const Instance& in) {
        const Matrix& A = in.mat("A");
        const Matrix I = A.eye();
        return rankEq(r(I - A * A), r(I + A) + r(I - A) - static_cast<I64>(in.m));
    });
    for (int s : {+1, -1}) {
        const std::string sign = s > 0 ? "+" : "-";
        add(v, "hh22" + sign, "r(A " + sign + " A^2) = r(A) + r(I " + sign + " A) - m", IC::Square, CK::RankEquality,
            [s](const Instance& in) {
                const Matrix& A = in.mat("A");
                const Matrix I = A.eye();
                return rankEq(r(A + s * (A * A)), r(A) + r(I + s * A) - static_cast<I64>(in.m));
            });
        add(v, "hh23" + sign, "r(A " + sign + " A^3) = r(A) + r(I " + sign + " A^2) - m", IC::Square,
            CK::RankEquality, [s](const Instance& in) {
                const Matrix& A = in.mat("A");
                const Matrix I = A.eye();
                const Matrix a2 = A * A;
                return rankEq(r(A + s * (a2 * A)), r(A) + r(I + s * a2) - static_cast<I64>(in.m));
            });
        add(v, "hh24" + sign, "r[A(I " + sign + " A)^2] = r(A) + r[(I " + sign + " A)^2] - m", IC::Square,
            CK::RankEquality, [s](const Instance& in) {
                const Matrix& A = in.mat("A");
                const Matrix t = A.eye() + s * A;
                const Matrix t2 = t * t;
                return rankEq(r(A * t2), r(A) + r(t2) - static_cast<I64>(in.m));
            });
    }
    add(v, "hh25", "r(I_m - AB) + n = r(I_n - BA) + m", IC::RectPair, CK::RankEquality, [](const Instance& in) {
        const Matrix& A = in.mat("A");
        const Matrix& B = in.mat("B");
        const I64 m = static_cast<I64>(A.rows());
        const I64 n = static_cast<I64>(A.cols());
        return rankEq(r(A.eye() - A * B) + n, r(B.eye() - B * A) + m);
    });
    add(v, "hh27", "r(A - AXBYA) + r(B) = r(B - BYAXB) + r(A)", IC::RectQuad, CK::RankEquality,
        [](const Instance& in) {
            const Matrix& A = in.mat("A");
            const Matrix& B = in.mat("B");
            const Matrix& X = in.mat("X");
            const Matrix& Y = in.mat("Y");
            return rankEq(r(A - A * X * B * Y * A) + r(B), r(B - B * Y * A * X * B) + r(A));
        });
    auto& hh28 = add(v, "hh28", "r(I - P - Q + QP) = m - r(P) - r(Q) + r(PQ)", IC::IdempotentPair, CK::RankEquality,
                     [](const Instance& in) {
                         RL_PAIR(in);
                         return rankEq(r(I - A - B + B * A), static_cast<I64>(in.m) - r(A) - r(B) + r(A * B));
                     });
    withErratum(hh28, "unbalanced bracket in the left-hand side", "r[(I - P - Q + QP) = ...",
                "r(I - P - Q + QP) = m - r(P) - r(Q) + r(PQ)");
}

void systems(std::vector<CatalogEntry>& v) {
    auto expansion = [](const Matrix& X, const Matrix& Y) {
        return rankEq(r(X - Y), r(vcat(X, Y)) + r(hcat(X, Y)) - r(X) - r(Y));
    };
    add(v, "z2", "MX = X, YM = Y, MY = XM  =>  r(X - Y) = r[X; Y] + r[X, Y] - r(X) - r(Y)", IC::EquationZ1,
        CK::RankEquality, [expansion](const Instance& in) {
            const Matrix& M = in.mat("M");
            const Matrix& X = in.mat("X");
            const Matrix& Y = in.mat("Y");
            if (!(M * X == X && Y * M == Y && M * Y == X * M)) return miss();
            return expansion(X, Y);
        });
    add(v, "z9", "AX = X, YB = Y, AY = XB  =>  r(X - Y) = r[X; Y] + r[X, Y] - r(X) - r(Y)", IC::EquationZ8,
        CK::RankEquality, [expansion](const Instance& in) {
            RL_PAIR(in);
            const Matrix& X = in.mat("X");
            const Matrix& Y = in.mat("Y");
            if (!(A * X == X && Y * B == Y && A * Y == X * B)) return miss();
            return expansion(X, Y);
        });
    add(v, "z12",
        "AX = X, BY = Y, R(X) >= R(AY), R(Y) >= R(BX)  =>  r[AY, BX] = r[X, Y] + r(AY) + r(BX) - r(X) - r(Y)",
        IC::EquationZ11, CK::RankEquality, [](const Instance& in) {
            RL_PAIR(in);
            const Matrix& X = in.mat("X");
            const Matrix& Y = in.mat("Y");
            const Matrix ay = A * Y;
            const Matrix bx = B * X;
            if (!(A * X == X && B * Y == Y && rangeContained(ay, X) && rangeContained(bx, Y))) return miss();
            return rankEq(r(hcat(ay, bx)), r(hcat(X, Y)) + r(ay) + r(bx) - r(X) - r(Y));
        });
}

void powers(std::vector<CatalogEntry>& v) {
    auto pw = [&v](std::string id, std::string statement, CK kind, CheckFn fn) -> CatalogEntry& {
        CatalogEntry& e = add(v, std::move(id), std::move(statement), IC::IdempotentPair, kind, std::move(fn));
        e.usesK = true;
        return e;
    };
    pw("z16", "r[(AB)^k, (BA)^k] = r[A, B] + r[(AB)^k] + r[(BA)^k] - r(A) - r(B)", CK::RankEquality,
       [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return rankEq(r(hcat(p.ab, p.ba)), r(hcat(A, B)) + r(p.ab) + r(p.ba) - r(A) - r(B));
       });
    pw("z17", "r[(AB)^kA, (BA)^kB] = r[A, B] + r[(AB)^kA] + r[(BA)^kB] - r(A) - r(B)", CK::RankEquality,
       [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return rankEq(r(hcat(p.aba, p.bab)), r(hcat(A, B)) + r(p.aba) + r(p.bab) - r(A) - r(B));
       });
    pw("z18", "r[(AB)^k; (BA)^k] = r[A; B] + r[(AB)^k] + r[(BA)^k] - r(A) - r(B)", CK::RankEquality,
       [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return rankEq(r(vcat(p.ab, p.ba)), r(vcat(A, B)) + r(p.ab) + r(p.ba) - r(A) - r(B));
       });
    pw("z19", "r[(AB)^kA; (BA)^kB] = r[A; B] + r[(AB)^kA] + r[(BA)^kB] - r(A) - r(B)", CK::RankEquality,
       [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return rankEq(r(vcat(p.aba, p.bab)), r(vcat(A, B)) + r(p.aba) + r(p.bab) - r(A) - r(B));
       });
    pw("z20", "r[(AB)^k - (BA)^k] = r[(AB)^k; (BA)^k] + r[(AB)^k, (BA)^k] - r[(AB)^k] - r[(BA)^k]",
       CK::RankEquality, [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return rankEq(r(p.ab - p.ba), r(vcat(p.ab, p.ba)) + r(hcat(p.ab, p.ba)) - r(p.ab) - r(p.ba));
       });
    pw("z21", "r[(AB)^k - (BA)^k] = r[A; B] + r[A, B] + r[(AB)^k] + r[(BA)^k] - 2r(A) - 2r(B)", CK::RankEquality,
       [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return rankEq(r(p.ab - p.ba),
                         r(vcat(A, B)) + r(hcat(A, B)) + r(p.ab) + r(p.ba) - 2 * r(A) - 2 * r(B));
       });
    pw("z22", "r[(AB)^kA - (BA)^kB] = r[(AB)^kA; (BA)^kB] + r[(AB)^kA, (BA)^kB] - r[(AB)^kA] - r[(BA)^kB]",
       CK::RankEquality, [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return rankEq(r(p.aba - p.bab),
                         r(vcat(p.aba, p.bab)) + r(hcat(p.aba, p.bab)) - r(p.aba) - r(p.bab));
       });
    pw("z23", "r[(AB)^kA - (BA)^kB] = r[A; B] + r[A, B] + r[(AB)^kA] + r[(BA)^kB] - 2r(A) - 2r(B)",
       CK::RankEquality, [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return rankEq(r(p.aba - p.bab),
                         r(vcat(A, B)) + r(hcat(A, B)) + r(p.aba) + r(p.bab) - 2 * r(A) - 2 * r(B));
       });

    pw("T4a",
       "r[(AB)^k, (BA)^k] = r[(AB)^k] + r[(BA)^k] <=> r[A, B] = r(A) + r(B) <=> R[(AB)^k] cap R[(BA)^k] = 0 "
       "<=> R(A) cap R(B) = 0",
       CK::FactEquivalence, [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return iff({r(hcat(p.ab, p.ba)) == r(p.ab) + r(p.ba), r(hcat(A, B)) == r(A) + r(B),
                       disjointRanges(p.ab, p.ba), disjointRanges(A, B)});
       });
    pw("T4b", "r[(AB)^k, (BA)^k] = r[A, B] <=> R[(AB)^k] = R(A) and R[(BA)^k] = R(B)", CK::FactEquivalence,
       [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return iff({r(hcat(p.ab, p.ba)) == r(hcat(A, B)), rangeEqual(p.ab, A) && rangeEqual(p.ba, B)});
       });
    auto& t4c = pw("T4c",
                   "(AB)^k = (BA)^k <=> R[(AB)^k] = R[(BA)^k] and R[(A*B*)^k] = R[(B*A*)^k] <=> "
                   "r[A, B] = r(A) + r(B) - r[(AB)^k] and r[A; B] = r(A) + r(B) - r[(BA)^k]",
                   CK::FactEquivalence, [](const Instance& in) {
                       RL_PAIR(in);
                       const Products p = products(A, B, k);
                       const Matrix as = A.conjTranspose();
                       const Matrix bs = B.conjTranspose();
                       return iff({p.ab == p.ba,
                                   rangeEqual(p.ab, p.ba) && rangeEqual((as * bs).pow(k), (bs * as).pow(k)),
                                   r(hcat(A, B)) == r(A) + r(B) - r(p.ab) &&
                                       r(vcat(A, B)) == r(A) + r(B) - r(p.ba)});
                   });
    withErratum(t4c, "stray symbol inside the second range in the middle clause", "R[(A*B*)^k] = R[(B*A*y)^k]",
                "R[(A*B*)^k] = R[(B*A*)^k]");
    pw("T4d",
       "r[(AB)^kA, (BA)^kB] = r[(AB)^kA] + r[(BA)^kB] <=> r[A, B] = r(A) + r(B) <=> "
       "R[(AB)^kA] cap R[(BA)^kB] = 0 <=> R(A) cap R(B) = 0",
       CK::FactEquivalence, [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return iff({r(hcat(p.aba, p.bab)) == r(p.aba) + r(p.bab), r(hcat(A, B)) == r(A) + r(B),
                       disjointRanges(p.aba, p.bab), disjointRanges(A, B)});
       });
    pw("T4e", "r[(AB)^kA, (BA)^kB] = r[A, B] <=> R[(AB)^kA] = R(A) and R[(BA)^kB] = R(B)", CK::FactEquivalence,
       [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           return iff({r(hcat(p.aba, p.bab)) == r(hcat(A, B)), rangeEqual(p.aba, A) && rangeEqual(p.bab, B)});
       });
    pw("T4f",
       "(AB)^kA = (BA)^kB <=> R[(AB)^kA] = R[(BA)^kB] and R[(A*B*)^kA*] = R[(B*A*)^kB*] <=> "
       "r[A, B] = r(A) + r(B) - r[(AB)^kA] and r[A; B] = r(A) + r(B) - r[(BA)^kB]",
       CK::FactEquivalence, [](const Instance& in) {
           RL_PAIR(in);
           const Products p = products(A, B, k);
           const Matrix as = A.conjTranspose();
           const Matrix bs = B.conjTranspose();
           return iff({p.aba == p.bab,
                       rangeEqual(p.aba, p.bab) && rangeEqual((as * bs).pow(k) * as, (bs * as).pow(k) * bs),
                       r(hcat(A, B)) == r(A) + r(B) - r(p.aba) && r(vcat(A, B)) == r(A) + r(B) - r(p.bab)});
       });
}

struct FamilyRanks {
    I64 lhs = 0;        // r[A1 H1, ..., Ak Hk]
    I64 sumHat = 0;     // sum r(Ai Hi)
    I64 whole = 0;      // r[A1, ..., Ak]
    I64 sumParts = 0;   // sum r(Ai)
    bool allZero = true;
    bool rangesKept = true;  // R(Ai Hi) = R(Ai) for all i
};

FamilyRanks familyRanks(const std::vector<Matrix>& fam) {
    FamilyRanks f;
    std::vector<Matrix> hats;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        hats.push_back(hatProduct(fam, i));
        f.sumHat += r(hats.back());
        f.sumParts += r(fam[i]);
        f.allZero = f.allZero && hats.back().isZero();
        f.rangesKept = f.rangesKept && rangeEqual(hats.back(), fam[i]);
    }
    f.lhs = r(hcatAll(hats));
    f.whole = r(hcatAll(fam));
    return f;
}

void families(std::vector<CatalogEntry>& v) {
    add(v, "z25", "r[A1 H1, ..., Ak Hk] = sum r(Ai Hi) + r[A1, ..., Ak] - sum r(Ai), Hi = [A1, .., 0, .., Ak]",
        IC::IdempotentFamily, CK::RankEquality, [](const Instance& in) {
            const FamilyRanks f = familyRanks(in.family());
            return rankEq(f.lhs, f.sumHat + f.whole - f.sumParts);
        });
    add(v, "Th25a", "r[A1 H1, ..., Ak Hk] = sum r(Ai Hi) <=> r[A1, ..., Ak] = sum r(Ai)", IC::IdempotentFamily,
        CK::FactEquivalence, [](const Instance& in) {
            const FamilyRanks f = familyRanks(in.family());
            return iff({f.lhs == f.sumHat, f.whole == f.sumParts});
        });
    add(v, "Th25b", "r[A1 H1, ..., Ak Hk] = r[A1, ..., Ak] <=> R(Ai Hi) = R(Ai) for all i", IC::IdempotentFamily,
        CK::FactEquivalence, [](const Instance& in) {
            const FamilyRanks f = familyRanks(in.family());
            return iff({f.lhs == f.whole, f.rangesKept});
        });
    add(v, "Th25c", "Ai Hi = 0 for all i  =>  r[A1, ..., Ak] = sum r(Ai)", IC::IdempotentFamily,
        CK::FactEquivalence, [](const Instance& in) {
            const FamilyRanks f = familyRanks(in.family());
            return implies(f.allZero, f.whole == f.sumParts);
        });
    add(v, "Th25d", "r[A1, ..., Ak] >= sum r(Ai) - sum r(Ai Hi)", IC::IdempotentFamily, CK::FactEquivalence,
        [](const Instance& in) {
            const FamilyRanks f = familyRanks(in.family());
            return holds(f.whole >= f.sumParts - f.sumHat);
        });

    auto tripleSix = [](const Matrix& A, const Matrix& B, const Matrix& C) {
        return hcat({A * B, A * C, B * A, B * C, C * A, C * B});
    };
    add(v, "z29",
        "r[A, B, C] = r(A) + r(B) + r(C) - r[AB, AC] - r[BA, BC] - r[CA, CB] + r[AB, AC, BA, BC, CA, CB]",
        IC::IdempotentTriple, CK::RankEquality, [tripleSix](const Instance& in) {
            RL_TRIPLE(in);
            return rankEq(r(hcat({A, B, C})), r(A) + r(B) + r(C) - r(hcat(A * B, A * C)) - r(hcat(B * A, B * C)) -
                                                  r(hcat(C * A, C * B)) + r(tripleSix(A, B, C)));
        });
    add(v, "z30",
        "AB = BA, AC = CA, BC = CB  =>  r[A, B, C] = r(A) + r(B) + r(C) - r[AB, AC] - r[BA, BC] - r[CA, CB] + "
        "r[AB, AC, BC]",
        IC::CommutingTriple, CK::RankEquality, [](const Instance& in) {
            RL_TRIPLE(in);
            if (!(A * B == B * A && A * C == C * A && B * C == C * B)) return miss();
            return rankEq(r(hcat({A, B, C})), r(A) + r(B) + r(C) - r(hcat(A * B, A * C)) - r(hcat(B * A, B * C)) -
                                                  r(hcat(C * A, C * B)) + r(hcat({A * B, A * C, B * C})));
        });
    add(v, "TW26a",
        "r[A, B, C] = r(A) + r(B) + r(C) <=> r[AB, AC, BA, BC, CA, CB] = r[AB, AC] + r[BA, BC] + r[CA, CB]",
        IC::IdempotentTriple, CK::FactEquivalence, [tripleSix](const Instance& in) {
            RL_TRIPLE(in);
            return iff({r(hcat({A, B, C})) == r(A) + r(B) + r(C),
                        r(tripleSix(A, B, C)) ==
                            r(hcat(A * B, A * C)) + r(hcat(B * A, B * C)) + r(hcat(C * A, C * B))});
        });
    add(v, "TW26b",
        "r[AB, AC, BA, BC, CA, CB] = r[A, B, C] <=> R[AB, AC] = R(A), R[BA, BC] = R(B), R[CA, CB] = R(C)",
        IC::IdempotentTriple, CK::FactEquivalence, [tripleSix](const Instance& in) {
            RL_TRIPLE(in);
            return iff({r(tripleSix(A, B, C)) == r(hcat({A, B, C})),
                        rangeEqual(hcat(A * B, A * C), A) && rangeEqual(hcat(B * A, B * C), B) &&
                            rangeEqual(hcat(C * A, C * B), C)});
        });
    add(v, "TW26c", "AB = BA = AC = CA = BC = CB = 0  =>  r[A, B, C] = r(A) + r(B) + r(C)", IC::IdempotentTriple,
        CK::FactEquivalence, [tripleSix](const Instance& in) {
            RL_TRIPLE(in);
            return implies(tripleSix(A, B, C).isZero(), r(hcat({A, B, C})) == r(A) + r(B) + r(C));
        });
    add(v, "TW26d", "r[A, B, C] >= r(A) + r(B) + r(C) - r[AB, AC] - r[AB, BC] - r[AC, BC]", IC::IdempotentTriple,
        CK::FactEquivalence, [](const Instance& in) {
            RL_TRIPLE(in);
            return holds(r(hcat({A, B, C})) >=
                         r(A) + r(B) + r(C) - r(hcat(A * B, A * C)) - r(hcat(A * B, B * C)) - r(hcat(A * C, B * C)));
        });
}

struct ProjectorProducts {
    Matrix pa, pb, pc;
    Matrix ab, ac, ba, bc, ca, cb;
};

ProjectorProducts projectorProducts(const Matrix& a, const Matrix& b, const Matrix* c) {
    ProjectorProducts p;
    p.pa = projector(a);
    p.pb = projector(b);
    p.ab = p.pa * p.pb;
    p.ba = p.pb * p.pa;
    if (c != nullptr) {
        p.pc = projector(*c);
        p.ac = p.pa * p.pc;
        p.bc = p.pb * p.pc;
        p.ca = p.pc * p.pa;
        p.cb = p.pc * p.pb;
    }
    return p;
}

void projectors(std::vector<CatalogEntry>& v) {
    add(v, "TW27p", "r[A, B] = r(A) + r(B) - r(PA PB) - r(PB PA) + r[PA PB, PB PA]", IC::RowPair, CK::RankEquality,
        [](const Instance& in) {
            RL_PAIR(in);
            const ProjectorProducts p = projectorProducts(A, B, nullptr);
            return rankEq(r(hcat(A, B)), r(A) + r(B) - r(p.ab) - r(p.ba) + r(hcat(p.ab, p.ba)));
        });
    add(v, "TW27t",
        "r[A, B, C] = r(A) + r(B) + r(C) - r[PA PB, PA PC] - r[PB PA, PB PC] - r[PC PA, PC PB] + r[all six]",
        IC::RowTriple, CK::RankEquality, [](const Instance& in) {
            RL_TRIPLE(in);
            const ProjectorProducts p = projectorProducts(A, B, &C);
            return rankEq(r(hcat({A, B, C})), r(A) + r(B) + r(C) - r(hcat(p.ab, p.ac)) - r(hcat(p.ba, p.bc)) -
                                                  r(hcat(p.ca, p.cb)) +
                                                  r(hcat({p.ab, p.ac, p.ba, p.bc, p.ca, p.cb})));
        });
    add(v, "TW27a",
        "r[A, B] = r(A) + r(B) <=> r[PA PB, PB PA] = r(PA PB) + r(PB PA) <=> R(A) cap R(B) = 0 <=> "
        "R(PA PB) cap R(PB PA) = 0",
        IC::RowPair, CK::FactEquivalence, [](const Instance& in) {
            RL_PAIR(in);
            const ProjectorProducts p = projectorProducts(A, B, nullptr);
            return iff({r(hcat(A, B)) == r(A) + r(B), r(hcat(p.ab, p.ba)) == r(p.ab) + r(p.ba),
                        disjointRanges(A, B), disjointRanges(p.ab, p.ba)});
        });
    add(v, "TW27b",
        "r[A, B] = r(A) + r(B) - r(PA PB) <=> r[PA PB, PB PA] = r(PA PB) = r(PB PA) <=> R(PA PB) = R(PB PA) <=> "
        "PA PB = PB PA",
        IC::RowPair, CK::FactEquivalence, [](const Instance& in) {
            RL_PAIR(in);
            const ProjectorProducts p = projectorProducts(A, B, nullptr);
            const I64 joint = r(hcat(p.ab, p.ba));
            return iff({r(hcat(A, B)) == r(A) + r(B) - r(p.ab), joint == r(p.ab) && joint == r(p.ba),
                        rangeEqual(p.ab, p.ba), p.ab == p.ba});
        });
    add(v, "TW27c", "r[A, B] = r[PA PB, PB PA] <=> r(A*B) = r(A) = r(B)", IC::RowPair, CK::FactEquivalence,
        [](const Instance& in) {
            RL_PAIR(in);
            const ProjectorProducts p = projectorProducts(A, B, nullptr);
            const I64 cross = r(A.conjTranspose() * B);
            return iff({r(hcat(A, B)) == r(hcat(p.ab, p.ba)), cross == r(A) && cross == r(B)});
        });
    add(v, "TW27d",
        "r[A, B, C] = r(A) + r(B) + r(C) <=> r[all six] = r[PA PB, PA PC] + r[PB PA, PB PC] + r[PC PA, PC PB]",
        IC::RowTriple, CK::FactEquivalence, [](const Instance& in) {
            RL_TRIPLE(in);
            const ProjectorProducts p = projectorProducts(A, B, &C);
            return iff({r(hcat({A, B, C})) == r(A) + r(B) + r(C),
                        r(hcat({p.ab, p.ac, p.ba, p.bc, p.ca, p.cb})) ==
                            r(hcat(p.ab, p.ac)) + r(hcat(p.ba, p.bc)) + r(hcat(p.ca, p.cb))});
        });
    auto& e = add(v, "TW27e",
                  "r[A, B, C] = r(A) + r(B) + r(C) - r(PA PB) - r(PA PC) - r(PB PC) <=> r[all six] = "
                  "r[PA PB, PA PC] + r[PB PA, PB PC] + r[PC PA, PC PB] - r(PA PB) - r(PA PC) - r(PB PC)",
                  IC::RowTriple, CK::FactEquivalence, [](const Instance& in) {
                      RL_TRIPLE(in);
                      const ProjectorProducts p = projectorProducts(A, B, &C);
                      const I64 pairs = r(p.ab) + r(p.ac) + r(p.bc);
                      return iff({r(hcat({A, B, C})) == r(A) + r(B) + r(C) - pairs,
                                  r(hcat({p.ab, p.ac, p.ba, p.bc, p.ca, p.cb})) ==
                                      r(hcat(p.ab, p.ac)) + r(hcat(p.ba, p.bc)) + r(hcat(p.ca, p.cb)) - pairs});
                  });
    e.auditOnly = true;
}

void ginverses(std::vector<CatalogEntry>& v) {
    auto& z31a = add(
        v, "z31a", "[A, B] - [A, B][A-; B-][A, B] = [A, B] - [(AA- + BB-)A, (AA- + BB-)B] = -[BB-A, AA-B]",
        IC::RowPairGInverse, CK::MatrixIdentity, [](const Instance& in) {
            RL_PAIR(in);
            const Matrix& Ag = in.mat("Ag");
            const Matrix& Bg = in.mat("Bg");
            const Matrix ab = hcat(A, B);
            const Matrix s = A * Ag + B * Bg;
            return matChain({ab - ab * vcat(Ag, Bg) * ab, ab - hcat(s * A, s * B), -hcat(B * Bg * A, A * Ag * B)});
        });
    withErratum(z31a, "second block of the right-hand side carries an extra factor A",
                "-[BB-A, AA-AB]", "-[BB-A, AA-B]", [](const Instance& in) {
                    RL_PAIR(in);
                    const Matrix& Ag = in.mat("Ag");
                    const Matrix& Bg = in.mat("Bg");
                    if (A.cols() != A.rows()) return miss();  // AB needs A square
                    const Matrix ab = hcat(A, B);
                    return matEq(ab - ab * vcat(Ag, Bg) * ab, -hcat(B * Bg * A, A * Ag * A * B));
                });
    add(v, "z32", "r([A, B] - [A, B][A-; B-][A, B]) = r(AA-B) + r(BB-A) + r[A, B] - r(A) - r(B)",
        IC::RowPairGInverse, CK::RankEquality, [](const Instance& in) {
            RL_PAIR(in);
            const Matrix& Ag = in.mat("Ag");
            const Matrix& Bg = in.mat("Bg");
            const Matrix ab = hcat(A, B);
            return rankEq(r(ab - ab * vcat(Ag, Bg) * ab),
                          r(A * Ag * B) + r(B * Bg * A) + r(ab) - r(A) - r(B));
        });
    add(v, "TW28b", "{[A, B]-} cap {[A-; B-]} nonempty <=> r[A, B] = r(A) + r(B) <=> R(A) cap R(B) = 0",
        IC::RowPair, CK::FactEquivalence, [](const Instance& in) {
            RL_PAIR(in);
            // AA-B = P_A B + A V E_A B, BB-A = P_B A + B W E_B A; the two blocks vanish independently
            const ProjectorTriple ta = projectorTriple(A);
            const ProjectorTriple tb = projectorTriple(B);
            const bool exists = solvableFor(A, ta.E * B, -(ta.P * B)) && solvableFor(B, tb.E * A, -(tb.P * A));
            return iff({exists, r(hcat(A, B)) == r(A) + r(B), disjointRanges(A, B)});
        });
    add(v, "TW28c", "{[A, B]-} contains {[A-; B-]} <=> r[A, B] = |r(A) - r(B)| <=> A = 0 or B = 0", IC::RowPair,
        CK::FactEquivalence, [](const Instance& in) {
            RL_PAIR(in);
            const ProjectorTriple ta = projectorTriple(A);
            const ProjectorTriple tb = projectorTriple(B);
            const bool always = vanishesForAll(ta.P * B, A, ta.E * B) && vanishesForAll(tb.P * A, B, tb.E * A);
            return iff({always, r(hcat(A, B)) == std::abs(r(A) - r(B)), A.isZero() || B.isZero()});
        });
    add(v, "z43",
        "r[AA-[B, C], BB-[A, C], CC-[A, B]] = r[A, B, C] + r[AA-B, AA-C] + r[BB-A, BB-C] + r[CC-A, CC-B] - r(A) - "
        "r(B) - r(C)",
        IC::RowTripleGInverse, CK::RankEquality, [](const Instance& in) {
            RL_TRIPLE(in);
            const Matrix pa = A * in.mat("Ag");
            const Matrix pb = B * in.mat("Bg");
            const Matrix pc = C * in.mat("Cg");
            const Matrix lhs = hcat({pa * hcat(B, C), pb * hcat(A, C), pc * hcat(A, B)});
            return rankEq(r(lhs), r(hcat({A, B, C})) + r(hcat(pa * B, pa * C)) + r(hcat(pb * A, pb * C)) +
                                      r(hcat(pc * A, pc * B)) - r(A) - r(B) - r(C));
        });
    add(v, "z36",
        "r[AA-BB-, BB-AA-] = r(AA-BB-) + r(BB-AA-) + r[AA-, BB-] - r(AA-) - r(BB-) = r(AA-B) + r(BB-A) + "
        "r[A, B] - r(A) - r(B)",
        IC::RowPairGInverse, CK::RankEquality, [](const Instance& in) {
            RL_PAIR(in);
            const Matrix pa = A * in.mat("Ag");
            const Matrix pb = B * in.mat("Bg");
            return rankChain({r(hcat(pa * pb, pb * pa)), r(pa * pb) + r(pb * pa) + r(hcat(pa, pb)) - r(pa) - r(pb),
                              r(pa * B) + r(pb * A) + r(hcat(A, B)) - r(A) - r(B)});
        });
    auto& z47 = add(v, "z47",
                    "[A, B, C] - [A, B, C][A-; B-; C-][A, B, C] = -[(BB- + CC-)A, (AA- + CC-)B, (AA- + BB-)C]",
                    IC::RowTripleGInverse, CK::MatrixIdentity, [](const Instance& in) {
                        RL_TRIPLE(in);
                        const Matrix& Ag = in.mat("Ag");
                        const Matrix& Bg = in.mat("Bg");
                        const Matrix& Cg = in.mat("Cg");
                        const Matrix abc = hcat({A, B, C});
                        const Matrix pa = A * Ag;
                        const Matrix pb = B * Bg;
                        const Matrix pc = C * Cg;
                        return matEq(abc - abc * vcat({Ag, Bg, Cg}) * abc,
                                     -hcat({(pb + pc) * A, (pa + pc) * B, (pa + pb) * C}));
                    });
    withErratum(z47, "right-hand side is missing its leading minus sign",
                "[(BB- + CC-)A, (AA- + CC-)B, (AA- + BB-)C]", "-[(BB- + CC-)A, (AA- + CC-)B, (AA- + BB-)C]",
                [](const Instance& in) {
                    RL_TRIPLE(in);
                    const Matrix& Ag = in.mat("Ag");
                    const Matrix& Bg = in.mat("Bg");
                    const Matrix& Cg = in.mat("Cg");
                    const Matrix abc = hcat({A, B, C});
                    const Matrix pa = A * Ag;
                    const Matrix pb = B * Bg;
                    const Matrix pc = C * Cg;
                    return matEq(abc - abc * vcat({Ag, Bg, Cg}) * abc,
                                 hcat({(pb + pc) * A, (pa + pc) * B, (pa + pb) * C}));
                });
    add(v, "z45", "dim(R[A, B] cap R[A, C] cap R[B, C]) = r[A, B] + r[A, C] + r[B, C] - 2r[A, B, C]",
        IC::RowTriple, CK::RankEquality, [](const Instance& in) {
            RL_TRIPLE(in);
            const Matrix ab = hcat(A, B);
            const Matrix ac = hcat(A, C);
            const Matrix bc = hcat(B, C);
            return rankEq(r(cap(cap(ab, ac), bc)), r(ab) + r(ac) + r(bc) - 2 * r(hcat({A, B, C})));
        });
    add(v, "k42", "r[A, B] = r(A) + r(E_A B) and r[A*; B*] = r(A*) + r(B* F_A*)", IC::RowPair, CK::RankEquality,
        [](const Instance& in) {
            RL_PAIR(in);
            const ProjectorTriple ta = projectorTriple(A);
            const Matrix as = A.conjTranspose();
            const Matrix bs = B.conjTranspose();
            const ProjectorTriple ts = projectorTriple(as);
            return allOf({rankEq(r(hcat(A, B)), r(A) + r(ta.E * B)), rankEq(r(vcat(as, bs)), r(as) + r(bs * ts.F))});
        });
}

}  // namespace

void registerRankEntries(std::vector<CatalogEntry>& v) {
    basics(v);
    systems(v);
    powers(v);
    families(v);
    projectors(v);
    ginverses(v);
}

}  // namespace ranklab::detail
