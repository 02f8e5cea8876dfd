#pragma once

#include "ranklab/matrix.hpp"

namespace ranklab {

/// A^dagger from the rank factorization A = F G.
Matrix moorePenrose(const Matrix& a);

struct ProjectorTriple {
    Matrix P;  // A A^dagger
    Matrix E;  // I - A A^dagger
    Matrix F;  // I - A^dagger A
};
ProjectorTriple projectorTriple(const Matrix& a);

enum class GInverseClass { One, OneThree, OneFour };

struct GenInverseSample {
    Matrix base;
    Matrix inverse;
    Matrix U;
    Matrix V;
};

/// A^- = A^dagger + F_A U + V E_A with U, V Gaussian integers in [-bound, bound].
/// {1,3} draws keep V = 0, {1,4} draws keep U = 0.
GenInverseSample sampleGenInverse(const Matrix& a, GInverseClass cls, Rng& rng, long bound = 2);
/// The same construction with caller supplied U (n x m) and V (n x m).
Matrix genInverseFrom(const Matrix& a, const Matrix& u, const Matrix& v);

/// Smallest t with r(M^t) = r(M^{t+1}).
unsigned matrixIndex(const Matrix& m);

/// M^l (M^{2l+1})^dagger M^l; l defaults to the index.
Matrix drazin(const Matrix& m);
Matrix drazinWithPower(const Matrix& m, unsigned l);

/// Throws NotGroupInvertibleError when the index exceeds 1.
Matrix groupInverse(const Matrix& m);

bool isIdempotent(const Matrix& m);
bool isHermitian(const Matrix& m);

}  // namespace ranklab
