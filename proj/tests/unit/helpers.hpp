#pragma once

#include "ranklab/matrix.hpp"
#include "ranklab/random.hpp"

#include <complex>

namespace testing {

using namespace ranklab;

inline Matrix ints(std::size_t r, std::size_t c, std::initializer_list<long> v, FieldSpec f = {}) {
    return Matrix::fromInts(r, c, v, f);
}

// Floating image of an exact scalar; an independent model of the field operations.
inline std::complex<double> approx(const Scalar& s) {
    const double root = s.field().extended() ? std::sqrt(double(s.field().radicand())) : 0.0;
    return {s.re().get_d() + root * s.sqrtRe().get_d(), s.im().get_d() + root * s.sqrtIm().get_d()};
}

inline bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) <= 1e-9 * (1 + std::abs(a)); }

inline Scalar randomScalar(Rng& rng, FieldSpec f) {
    const Scalar a = randomGaussianInt(rng, 4, f);
    if (!f.extended()) return a;
    return a + randomGaussianInt(rng, 3, f) * Scalar::sqrtRadicand(f);
}

}  // namespace testing
