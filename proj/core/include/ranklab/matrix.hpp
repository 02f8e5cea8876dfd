#pragma once

#include "ranklab/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace ranklab {

/// Immutable dense row-major matrix over one FieldSpec. Empty shapes are legal.
class Matrix {
public:
    Matrix() = default;
    /// Zero matrix.
    Matrix(std::size_t rows, std::size_t cols, FieldSpec field = {});
    /// Entries are taken row by row and must all belong to `field`.
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, FieldSpec field = {});

    static Matrix identity(std::size_t n, FieldSpec field = {});
    static Matrix zero(std::size_t rows, std::size_t cols, FieldSpec field = {}) {
        return Matrix(rows, cols, field);
    }
    /// Small integer literal, row-major.
    static Matrix fromInts(std::size_t rows, std::size_t cols, std::initializer_list<long> values,
                           FieldSpec field = {});
    static Matrix diagonal(const std::vector<Scalar>& values, FieldSpec field = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldSpec field() const { return field_; }
    bool isSquare() const { return rows_ == cols_; }
    bool isZero() const;
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<Scalar>& data() const { return data_; }

    Matrix conjTranspose() const;
    Matrix transpose() const;
    Matrix pow(unsigned k) const;
    Matrix lifted(FieldSpec target) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend Matrix operator*(long s, const Matrix& a);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Scalar shorthand in this matrix's field.
    Scalar scalar(long v) const { return Scalar(v, field_); }
    /// I of the row dimension.
    Matrix eye() const { return identity(rows_, field_); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

/// [A, B]
Matrix hcat(const Matrix& a, const Matrix& b);
/// [A; B]
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix hcat(std::initializer_list<Matrix> parts);
Matrix vcat(std::initializer_list<Matrix> parts);
/// Throws UsageError on a ragged grid.
Matrix blockAssemble(const std::vector<std::vector<Matrix>>& grid);

/// Fraction-free (Bareiss) rank.
std::size_t rank(const Matrix& m);
/// Plain Gauss-Jordan rank over the field. Kept as an oracle for rank().
std::size_t rankNaive(const Matrix& m);

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
/// Reduced row echelon form with pivot columns.
Echelon rref(const Matrix& m);

/// Throws SingularMatrixError.
Matrix inverse(const Matrix& m);
bool isNonsingular(const Matrix& m);

/// Columns form a basis of N(M); cols(M) - r(M) of them.
Matrix kernelBasis(const Matrix& m);

/// R(M) subset of R(N).
bool rangeContained(const Matrix& m, const Matrix& n);
bool rangeEqual(const Matrix& m, const Matrix& n);
/// N(M) subset of N(N).
bool nullspaceContained(const Matrix& m, const Matrix& n);
bool nullspaceEqual(const Matrix& m, const Matrix& n);

/// dim(R(M) cap R(N)) = r(M) + r(N) - r[M, N].
std::size_t rangeIntersectionDim(const Matrix& m, const Matrix& n);
/// Columns spanning R(M) cap R(N), built from N([M, -N]).
Matrix rangeIntersectionBasis(const Matrix& m, const Matrix& n);

using Rng = std::mt19937_64;

/// Solves A x = b (b may have several columns). Returns the particular solution with free
/// variables zero plus, when rng is given, a random small rational kernel combination.
/// Throws NoSolutionError.
Matrix solveLinear(const Matrix& a, const Matrix& b, Rng* rng = nullptr);

/// sum over terms of L * X_unknown * R = rhs.
struct MatrixEquation {
    struct Term {
        std::size_t unknown;
        Matrix left;
        Matrix right;
    };
    std::vector<Term> terms;
    Matrix rhs;
};

struct UnknownShape {
    std::size_t rows;
    std::size_t cols;
};

/// Vectorizes (vec(LXR) = (R^T kron L) vec X) and samples one solution.
std::vector<Matrix> solveLinearMatrixSystem(const std::vector<MatrixEquation>& equations,
                                            const std::vector<UnknownShape>& unknowns, Rng& rng,
                                            FieldSpec field = {});

Matrix kronecker(const Matrix& a, const Matrix& b);

std::string toString(const Matrix& m);

}  // namespace ranklab
