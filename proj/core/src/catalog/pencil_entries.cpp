// When can lambda I + AA- +- BB- hit a fixed matrix, for some or for every choice of the inner inverses.
// AA- runs over AA^+ + A V E_A, so both questions are linear in (V, W).

#include "support.hpp"

#include "ranklab/random.hpp"

namespace ranklab::detail {

namespace {

using IC = InputClass;
using CK = CheckerKind;

struct Pencil {
    const Matrix& A;
    const Matrix& B;
    ProjectorTriple a, b;
    Matrix I;
    I64 m;
};

Pencil bind(const Instance& in) {
    const Matrix& A = in.mat("A");
    const Matrix& B = in.mat("B");
    return {A, B, projectorTriple(A), projectorTriple(B), Matrix::identity(A.rows(), A.field()),
            static_cast<I64>(in.m)};
}

// lambda I + AA- + sign BB- = target for some A-, B-
bool reachable(const Pencil& p, const Scalar& lambda, int sign, const Matrix& target) {
    const Matrix rhs = target - lambda * p.I - p.a.P - sign * p.b.P;
    MatrixEquation eq{{{0, p.A, p.a.E}, {1, sign * p.B, p.b.E}}, rhs};
    Rng rng = makeRng(0);
    try {
        solveLinearMatrixSystem({eq}, {{p.A.cols(), p.A.rows()}, {p.B.cols(), p.B.rows()}}, rng, p.A.field());
        return true;
    } catch (const NoSolutionError&) {
        return false;
    }
}

// ... and for every A-, B-
bool always(const Pencil& p, const Scalar& lambda, int sign, const Matrix& target) {
    const Matrix rhs = target - lambda * p.I - p.a.P - sign * p.b.P;
    return rhs.isZero() && (p.A.isZero() || p.a.E.isZero()) && (p.B.isZero() || p.b.E.isZero());
}

CatalogEntry& pencil(std::vector<CatalogEntry>& v, const char* id, const char* statement, CheckFn fn) {
    return add(v, id, statement, IC::RowPair, CK::FactEquivalence, std::move(fn));
}

Scalar lit(long x, const Pencil& p) { return Scalar(x, p.A.field()); }

void sums(std::vector<CatalogEntry>& v) {
    CatalogEntry& a = pencil(v, "TN44a3", "lambda not in {0, -1, -2}: no A-, B- give lambda I + AA- + BB- = 0",
                             [](const Instance& in) {
                                 const Pencil p = bind(in);
                                 return holds(!reachable(p, in.scalar("lambda"), 1, 0 * p.I));
                             });
    a.scalars = {{"lambda", {Rational(-1), Rational(-2)}}};
    pencil(v, "TN44b3", "AA- + BB- = 0 for some A-, B- <=> for all A-, B- <=> [A, B] = 0", [](const Instance& in) {
        const Pencil p = bind(in);
        const Scalar z = lit(0, p);
        return iff({reachable(p, z, 1, 0 * p.I), always(p, z, 1, 0 * p.I), p.A.isZero() && p.B.isZero()});
    });
    pencil(v, "TN44c3", "AA- + BB- = I for some A-, B- <=> r[A, B] = r(A) + r(B) = m", [](const Instance& in) {
        const Pencil p = bind(in);
        const I64 ra = r(p.A);
        const I64 rb = r(p.B);
        const I64 rab = r(hcat(p.A, p.B));
        return iff({reachable(p, lit(0, p), 1, p.I), rab == ra + rb && rab == p.m});
    });
    pencil(v, "TN44d3", "AA- + BB- = 2I for some A-, B- <=> for all A-, B- <=> r(A) = r(B) = m",
           [](const Instance& in) {
               const Pencil p = bind(in);
               const Scalar z = lit(0, p);
               return iff({reachable(p, z, 1, 2 * p.I), always(p, z, 1, 2 * p.I), r(p.A) == p.m && r(p.B) == p.m});
           });
}

void differences(std::vector<CatalogEntry>& v) {
    CatalogEntry& a = pencil(v, "TN45a3", "lambda not in {1, 0, -1}: no A-, B- give lambda I + AA- - BB- = 0",
                             [](const Instance& in) {
                                 const Pencil p = bind(in);
                                 return holds(!reachable(p, in.scalar("lambda"), -1, 0 * p.I));
                             });
    a.scalars = {{"lambda", {Rational(1), Rational(-1)}}};

    // BB- - AA- = I is the lambda = 1 pencil at zero
    CatalogEntry& b = pencil(v, "TN45b3",
                             "BB- - AA- = I for some A-, B- <=> for all A-, B- <=> A = 0 and r(B) = m",
                             [](const Instance& in) {
                                 const Pencil p = bind(in);
                                 const Scalar one = lit(1, p);
                                 return iff({reachable(p, one, -1, 0 * p.I), always(p, one, -1, 0 * p.I),
                                             p.A.isZero() && r(p.B) == p.m});
                             });
    withErratum(b, "ambiguous: orientation differs from the surrounding AA- - BB- pencils; both readings evaluated",
                "AA- - BB- = I for some A-, B- <=> for all A-, B- <=> A = 0 and r(B) = m",
                "BB- - AA- = I for some A-, B- <=> for all A-, B- <=> A = 0 and r(B) = m", [](const Instance& in) {
                    const Pencil p = bind(in);
                    const Scalar z = lit(0, p);
                    return iff({reachable(p, z, -1, p.I), always(p, z, -1, p.I), p.A.isZero() && r(p.B) == p.m});
                });

    pencil(v, "TN45c3", "AA- = BB- for some A-, B- <=> R(A) = R(B)", [](const Instance& in) {
        const Pencil p = bind(in);
        return iff({reachable(p, lit(0, p), -1, 0 * p.I), rangeEqual(p.A, p.B)});
    });
    pencil(v, "TN45c4", "AA- = BB- for all A-, B- <=> [A, B] = 0 or r[A, B] = r(A) + r(B) - m",
           [](const Instance& in) {
               const Pencil p = bind(in);
               const I64 rab = r(hcat(p.A, p.B));
               return iff({always(p, lit(0, p), -1, 0 * p.I),
                           (p.A.isZero() && p.B.isZero()) || rab == r(p.A) + r(p.B) - p.m});
           });
}

}  // namespace

void registerPencilFactEntries(std::vector<CatalogEntry>& v) {
    sums(v);
    differences(v);
}

}  // namespace ranklab::detail
