#include "ranklab/geninv.hpp"

#include "ranklab/errors.hpp"
#include "ranklab/random.hpp"

namespace ranklab {

Matrix moorePenrose(const Matrix& a) {
    Echelon e = rref(a);
    const std::size_t r = e.pivots.size();
    if (r == 0) return Matrix(a.cols(), a.rows(), a.field());
    std::vector<Scalar> fEntries(a.rows() * r, Scalar(a.field()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < r; ++k) fEntries[i * r + k] = a(i, e.pivots[k]);
    const Matrix f(a.rows(), r, std::move(fEntries), a.field());
    const Matrix g = e.reduced.block(0, 0, r, a.cols());
    const Matrix fs = f.conjTranspose();
    const Matrix gs = g.conjTranspose();
    return gs * inverse(g * gs) * inverse(fs * f) * fs;
}

ProjectorTriple projectorTriple(const Matrix& a) {
    const Matrix x = moorePenrose(a);
    const Matrix p = a * x;
    return {p, Matrix::identity(a.rows(), a.field()) - p, Matrix::identity(a.cols(), a.field()) - x * a};
}

Matrix genInverseFrom(const Matrix& a, const Matrix& u, const Matrix& v) {
    const Matrix x = moorePenrose(a);
    const Matrix e = Matrix::identity(a.rows(), a.field()) - a * x;
    const Matrix f = Matrix::identity(a.cols(), a.field()) - x * a;
    return x + f * u + v * e;
}

GenInverseSample sampleGenInverse(const Matrix& a, GInverseClass cls, Rng& rng, long bound) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Matrix u(n, m, a.field());
    Matrix v(n, m, a.field());
    if (cls != GInverseClass::OneFour) u = randomMatrix(n, m, rng, bound, a.field());
    if (cls != GInverseClass::OneThree) v = randomMatrix(n, m, rng, bound, a.field());
    return {a, genInverseFrom(a, u, v), u, v};
}

unsigned matrixIndex(const Matrix& m) {
    if (!m.isSquare()) throw UsageError("index of a non-square matrix");
    Matrix power = Matrix::identity(m.rows(), m.field());
    std::size_t previous = m.rows();
    for (unsigned t = 0;; ++t) {
        power = power * m;
        const std::size_t next = rank(power);
        if (next == previous) return t;
        previous = next;
    }
}

Matrix drazinWithPower(const Matrix& m, unsigned l) {
    if (!m.isSquare()) throw UsageError("Drazin inverse of a non-square matrix");
    const Matrix ml = m.pow(l);
    return ml * moorePenrose(m.pow(2 * l + 1)) * ml;
}

Matrix drazin(const Matrix& m) { return drazinWithPower(m, matrixIndex(m)); }

Matrix groupInverse(const Matrix& m) {
    const unsigned t = matrixIndex(m);
    if (t > 1) throw NotGroupInvertibleError("matrix index is " + std::to_string(t));
    return drazinWithPower(m, t);
}

bool isIdempotent(const Matrix& m) { return m.isSquare() && m * m == m; }

bool isHermitian(const Matrix& m) { return m == m.conjTranspose(); }

}  // namespace ranklab
