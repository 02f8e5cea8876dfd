// Drazin inverses of expressions in two idempotents, and Moore-Penrose inverses for
// two orthogonal projectors.

#include "support.hpp"

#include <iterator>

namespace ranklab::detail {

namespace {

using IC = InputClass;
using CK = CheckerKind;

using InvFn = Matrix (*)(const Matrix&);

struct Parts {
    Matrix A, B, T;
    Matrix dif, sum;  // A - B, A + B
};

Parts parts(const Instance& in) {
    const Matrix& a = in.mat("A");
    const Matrix& b = in.mat("B");
    return {a, b, a + b - a.eye(), a - b, a + b};
}

// (X (op) Y)^g with X, Y built from (AB, BA) or (ABA, BAB), and the two factorizations.
struct Spec {
    const char* id;
    const char* statement;
    bool triple;   // ABA, BAB
    bool powered;  // k-th powers
    int sign;      // X - Y or X + Y
    int leftSign;  // sign of  D(A +- B) D(T)^e
    int rightSign; // sign of  D(T)^e D(A +- B)
    const char* literal = nullptr;  // misprinted form: both signs flipped
};

void family(std::vector<CatalogEntry>& v, IC input, InvFn inv, const Spec* specs, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        const Spec s = specs[i];
        auto check = [s, inv](int flip) {
            return [s, inv, flip](const Instance& in) {
                const Parts p = parts(in);
                const unsigned k = s.powered ? in.k : 1;
                const Matrix x = s.triple ? p.A * p.B * p.A : p.A * p.B;
                const Matrix y = s.triple ? p.B * p.A * p.B : p.B * p.A;
                const Matrix lhs = inv(x.pow(k) + s.sign * y.pow(k));
                // T^(2k-1) for AB, BA and T^(2k) for ABA, BAB
                const unsigned e = s.triple ? 2 * k : 2 * k - 1;
                const Matrix te = inv(p.T).pow(e);
                const Matrix d = inv(s.sign < 0 ? p.dif : p.sum);
                return matChain({lhs, (flip * s.leftSign) * (d * te), (flip * s.rightSign) * (te * d)});
            };
        };
        CatalogEntry& e = add(v, s.id, s.statement, input, CK::ConditionalInverse, check(1));
        e.usesK = s.powered;
        if (s.literal)
            withErratum(e, "signs of the two factorizations are swapped", s.literal, s.statement, check(-1));
    }
}

const Spec drazinSpecs[] = {
    {"w24", "(AB - BA)^D = -(A - B)^D (A + B - I)^D = (A + B - I)^D (A - B)^D", false, false, -1, -1, 1,
     "(AB - BA)^D = (A - B)^D (A + B - I)^D = -(A + B - I)^D (A - B)^D"},
    {"w25", "(AB + BA)^D = (A + B)^D (A + B - I)^D = (A + B - I)^D (A + B)^D", false, false, 1, 1, 1},
    {"w26", "[(AB)^k - (BA)^k]^D = -(A - B)^D [(A + B - I)^D]^(2k-1) = [(A + B - I)^D]^(2k-1) (A - B)^D", false,
     true, -1, -1, 1,
     "[(AB)^k - (BA)^k]^D = (A - B)^D [(A + B - I)^D]^(2k-1) = -[(A + B - I)^D]^(2k-1) (A - B)^D"},
    {"w27", "[(AB)^k + (BA)^k]^D = (A + B)^D [(A + B - I)^D]^(2k-1) = [(A + B - I)^D]^(2k-1) (A + B)^D", false,
     true, 1, 1, 1},
    {"w28", "[(ABA)^k - (BAB)^k]^D = (A - B)^D [(A + B - I)^D]^(2k) = [(A + B - I)^D]^(2k) (A - B)^D", true, true,
     -1, 1, 1},
    {"w29", "[(ABA)^k + (BAB)^k]^D = (A + B)^D [(A + B - I)^D]^(2k) = [(A + B - I)^D]^(2k) (A + B)^D", true, true,
     1, 1, 1},
};

const Spec mpSpecs[] = {
    {"w48", "(AB - BA)^+ = -(A - B)^+ (A + B - I)^+ = (A + B - I)^+ (A - B)^+", false, false, -1, -1, 1},
    {"w49", "(AB + BA)^+ = (A + B)^+ (A + B - I)^+ = (A + B - I)^+ (A + B)^+", false, false, 1, 1, 1},
    {"w51", "[(AB)^k - (BA)^k]^+ = -(A - B)^+ [(A + B - I)^+]^(2k-1) = [(A + B - I)^+]^(2k-1) (A - B)^+", false,
     true, -1, -1, 1,
     "[(AB)^k - (BA)^k]^+ = (A - B)^+ [(A + B - I)^+]^(2k-1) = -[(A + B - I)^+]^(2k-1) (A - B)^+"},
    {"w53", "[(AB)^k + (BA)^k]^+ = (A + B)^+ [(A + B - I)^+]^(2k-1) = [(A + B - I)^+]^(2k-1) (A + B)^+", false,
     true, 1, 1, 1},
    {"w55", "[(ABA)^k - (BAB)^k]^+ = (A - B)^+ [(A + B - I)^+]^(2k) = [(A + B - I)^+]^(2k) (A - B)^+", true, true,
     -1, 1, 1},
};

// X^g = Y [Z^g]^2 = [Z^g]^2 Y
struct Square {
    const char* id;
    const char* statement;
    int shape;
};

void squares(std::vector<CatalogEntry>& v, IC input, InvFn inv, const Square* specs, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        const Square s = specs[i];
        add(v, s.id, s.statement, input, CK::ConditionalInverse, [s, inv](const Instance& in) {
            const Parts p = parts(in);
            const Matrix& A = p.A;
            const Matrix& B = p.B;
            const Matrix dd = inv(p.dif).pow(2);
            const Matrix tt = inv(p.T).pow(2);
            switch (s.shape) {
                case 0: return matChain({inv(A - A * B * A), A * dd, dd * A});
                case 1: return matChain({inv(B - B * A * B), B * dd, dd * B});
                case 2: return matChain({inv(A * B * A), A * tt, tt * A});
                default: return matChain({inv(B * A * B), B * tt, tt * B});
            }
        });
    }
}

const Square drazinSquares[] = {
    {"w44", "(A - ABA)^D = A[(A - B)^D]^2 = [(A - B)^D]^2 A", 0},
    {"w45", "(B - BAB)^D = B[(A - B)^D]^2 = [(A - B)^D]^2 B", 1},
    {"w46", "(ABA)^D = A[(A + B - I)^D]^2 = [(A + B - I)^D]^2 A", 2},
    {"w47", "(BAB)^D = B[(A + B - I)^D]^2 = [(A + B - I)^D]^2 B", 3},
};

const Square mpSquares[] = {
    {"w58", "(A - ABA)^+ = A[(A - B)^+]^2 = [(A - B)^+]^2 A", 0},
    {"w59", "(B - BAB)^+ = B[(A - B)^+]^2 = [(A - B)^+]^2 B", 1},
    {"w60", "(ABA)^+ = A[(A + B - I)^+]^2 = [(A + B - I)^+]^2 A", 2},
    {"w61", "(BAB)^+ = B[(A + B - I)^+]^2 = [(A + B - I)^+]^2 B", 3},
};

Matrix mp(const Matrix& m) { return moorePenrose(m); }
Matrix dz(const Matrix& m) { return drazin(m); }

CheckFn w57Check(int sign) {
    return [sign](const Instance& in) {
        const Parts p = parts(in);
        const Matrix x = (p.A * p.B * p.A).pow(in.k);
        const Matrix y = (p.B * p.A * p.B).pow(in.k);
        const Matrix te = mp(p.T).pow(2 * in.k);
        const Matrix s = mp(p.sum);
        return matChain({mp(x + sign * y), s * te, te * s});
    };
}

void w57(std::vector<CatalogEntry>& v) {
    const char* corrected = "[(ABA)^k + (BAB)^k]^+ = (A + B)^+ [(A + B - I)^+]^(2k) = [(A + B - I)^+]^(2k) (A + B)^+";
    CatalogEntry& e = add(v, "w57", corrected, IC::ProjectorPair, CK::ConditionalInverse, w57Check(1));
    e.usesK = true;
    withErratum(e, "left-hand side has a minus where the right-hand side needs A + B",
                "[(ABA)^k - (BAB)^k]^+ = (A + B)^+ [(A + B - I)^+]^(2k) = [(A + B - I)^+]^(2k) (A + B)^+", corrected,
                w57Check(-1));
}

void projectorFormulas(std::vector<CatalogEntry>& v) {
    add(v, "CTmp1", "(AB)^+ = BA - B[(I - B)(I - A)]^+ A", IC::ProjectorPair, CK::ConditionalInverse,
        [](const Instance& in) {
            const Parts p = parts(in);
            const Matrix I = p.A.eye();
            return matEq(mp(p.A * p.B), p.B * p.A - p.B * mp((I - p.B) * (I - p.A)) * p.A);
        });
    add(v, "CTmp2", "(A - B)^+ = (A - AB)^+ - (B - AB)^+", IC::ProjectorPair, CK::ConditionalInverse,
        [](const Instance& in) {
            const Parts p = parts(in);
            const Matrix ab = p.A * p.B;
            return matEq(mp(p.dif), mp(p.A - ab) - mp(p.B - ab));
        });
    add(v, "CTmp3", "(A - B)^+ = A - B + B(A - BA)^+ - (B - BA)^+ A", IC::ProjectorPair, CK::ConditionalInverse,
        [](const Instance& in) {
            const Parts p = parts(in);
            const Matrix ba = p.B * p.A;
            return matEq(mp(p.dif), p.A - p.B + p.B * mp(p.A - ba) - mp(p.B - ba) * p.A);
        });
    add(v, "CTmp4", "(A + B - I)^+ = (AB)^+ - [(I - A)(I - B)]^+", IC::ProjectorPair, CK::ConditionalInverse,
        [](const Instance& in) {
            const Parts p = parts(in);
            const Matrix I = p.A.eye();
            return matEq(mp(p.T), mp(p.A * p.B) - mp((I - p.A) * (I - p.B)));
        });
}

}  // namespace

void registerInverseEntries(std::vector<CatalogEntry>& v) {
    family(v, IC::IdempotentPair, dz, drazinSpecs, std::size(drazinSpecs));
    squares(v, IC::IdempotentPair, dz, drazinSquares, std::size(drazinSquares));
    family(v, IC::ProjectorPair, mp, mpSpecs, std::size(mpSpecs));
    w57(v);
    squares(v, IC::ProjectorPair, mp, mpSquares, std::size(mpSquares));
    projectorFormulas(v);
}

}  // namespace ranklab::detail
