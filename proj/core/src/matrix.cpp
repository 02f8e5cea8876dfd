#include "ranklab/matrix.hpp"

#include "ranklab/errors.hpp"

#include <algorithm>
#include <utility>

namespace ranklab {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void requireSameShape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw UsageError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
    }
    if (!(a.field() == b.field())) throw UsageError(std::string(op) + ": field mismatch");
}

// Mutable working copy used by the elimination routines.
struct Grid {
    std::size_t rows;
    std::size_t cols;
    std::vector<Scalar> a;
    Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    void swapRows(std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(x, j), at(y, j));
    }
};

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(field)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw UsageError("entry count does not match shape");
    for (const Scalar& s : data_) {
        if (!(s.field() == field)) throw UsageError("matrix entry outside the matrix field");
    }
}

Matrix Matrix::identity(std::size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Scalar(1, field);
    return m;
}

Matrix Matrix::fromInts(std::size_t rows, std::size_t cols, std::initializer_list<long> values,
                        FieldSpec field) {
    if (values.size() != rows * cols) throw UsageError("entry count does not match shape");
    std::vector<Scalar> entries;
    entries.reserve(values.size());
    for (long v : values) entries.emplace_back(v, field);
    return Matrix(rows, cols, std::move(entries), field);
}

Matrix Matrix::diagonal(const std::vector<Scalar>& values, FieldSpec field) {
    Matrix m(values.size(), values.size(), field);
    for (std::size_t i = 0; i < values.size(); ++i) m.data_[i * values.size() + i] = values[i];
    return m;
}

bool Matrix::isZero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.isZero(); });
}

Matrix Matrix::conjTranspose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j).conj();
    return t;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
}

Matrix Matrix::pow(unsigned k) const {
    if (!isSquare()) throw UsageError("pow of non-square matrix " + shape(*this));
    Matrix result = identity(rows_, field_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

Matrix Matrix::lifted(FieldSpec target) const {
    if (field_ == target) return *this;
    Matrix m(rows_, cols_, target);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].lifted(target);
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("block outside matrix " + shape(*this));
    Matrix b(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b.data_[i * nc + j] = (*this)(r0 + i, c0 + j);
    return b;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (Scalar& s : m.data_) s = -s;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    requireSameShape(a, b, "add");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    requireSameShape(a, b, "sub");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("mul: shape mismatch " + shape(a) + " * " + shape(b));
    if (!(a.field_ == b.field_)) throw UsageError("mul: field mismatch");
    Matrix m(a.rows_, b.cols_, a.field_);
    Scalar term(a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.isZero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (y.isZero()) continue;
                term = x;
                term *= y;
                m.data_[i * b.cols_ + j] += term;
            }
        }
    }
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix m = a;
    for (Scalar& x : m.data_) x *= s;
    return m;
}

Matrix operator*(long s, const Matrix& a) { return Scalar(s, a.field()) * a; }

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix blockAssemble(const std::vector<std::vector<Matrix>>& grid) {
    if (grid.empty()) return Matrix();
    const std::size_t blockCols = grid.front().size();
    std::vector<std::size_t> heights(grid.size());
    std::vector<std::size_t> widths(blockCols);
    FieldSpec field = blockCols > 0 ? grid.front().front().field() : FieldSpec{};
    for (std::size_t bi = 0; bi < grid.size(); ++bi) {
        if (grid[bi].size() != blockCols) throw UsageError("blockAssemble: ragged block row");
        for (std::size_t bj = 0; bj < blockCols; ++bj) {
            const Matrix& b = grid[bi][bj];
            if (!(b.field() == field)) throw UsageError("blockAssemble: field mismatch");
            if (bj == 0) heights[bi] = b.rows();
            if (bi == 0) widths[bj] = b.cols();
            if (b.rows() != heights[bi] || b.cols() != widths[bj]) {
                throw UsageError("blockAssemble: inconsistent block sizes");
            }
        }
    }
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (std::size_t h : heights) rows += h;
    for (std::size_t w : widths) cols += w;
    std::vector<Scalar> entries(rows * cols, Scalar(field));
    std::size_t r0 = 0;
    for (std::size_t bi = 0; bi < grid.size(); ++bi) {
        std::size_t c0 = 0;
        for (std::size_t bj = 0; bj < blockCols; ++bj) {
            const Matrix& b = grid[bi][bj];
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) entries[(r0 + i) * cols + c0 + j] = b(i, j);
            c0 += widths[bj];
        }
        r0 += heights[bi];
    }
    return Matrix(rows, cols, std::move(entries), field);
}

Matrix hcat(const Matrix& a, const Matrix& b) { return blockAssemble({{a, b}}); }
Matrix vcat(const Matrix& a, const Matrix& b) { return blockAssemble({{a}, {b}}); }

Matrix hcat(std::initializer_list<Matrix> parts) {
    return blockAssemble({std::vector<Matrix>(parts)});
}

Matrix vcat(std::initializer_list<Matrix> parts) {
    std::vector<std::vector<Matrix>> grid;
    for (const Matrix& p : parts) grid.push_back({p});
    return blockAssemble(grid);
}

namespace {

// Multiplies every row by the lcm of its denominators so all components are integers.
Grid integralRows(const Matrix& m) {
    Grid g{m.rows(), m.cols(), m.data()};
    for (std::size_t i = 0; i < g.rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < g.cols; ++j) {
            const Scalar& s = g.at(i, j);
            for (const Rational* q : {&s.re(), &s.im(), &s.sqrtRe(), &s.sqrtIm()}) {
                if (q->get_den() != 1) l = lcm(l, q->get_den());
            }
        }
        if (l == 1) continue;
        const Scalar factor = Scalar::rational(Rational(l), m.field());
        for (std::size_t j = 0; j < g.cols; ++j) g.at(i, j) *= factor;
    }
    return g;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    Grid g = integralRows(m);
    Scalar prev(1, m.field());
    Scalar t(m.field());
    std::size_t r = 0;
    for (std::size_t c = 0; c < g.cols && r < g.rows; ++c) {
        std::size_t p = r;
        while (p < g.rows && g.at(p, c).isZero()) ++p;
        if (p == g.rows) continue;
        g.swapRows(r, p);
        const Scalar& pivot = g.at(r, c);
        const bool unitPrev = prev.isOne();
        for (std::size_t i = r + 1; i < g.rows; ++i) {
            const Scalar lead = g.at(i, c);
            for (std::size_t j = c + 1; j < g.cols; ++j) {
                Scalar& x = g.at(i, j);
                x *= pivot;
                if (!lead.isZero()) {
                    t = lead;
                    t *= g.at(r, j);
                    x -= t;
                }
                if (!unitPrev) x /= prev;
            }
            g.at(i, c) = Scalar(m.field());
        }
        prev = pivot;
        ++r;
    }
    return r;
}

Echelon rref(const Matrix& m) {
    Grid g{m.rows(), m.cols(), m.data()};
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Scalar t(m.field());
    for (std::size_t c = 0; c < g.cols && r < g.rows; ++c) {
        std::size_t p = r;
        while (p < g.rows && g.at(p, c).isZero()) ++p;
        if (p == g.rows) continue;
        g.swapRows(r, p);
        const Scalar inv = g.at(r, c).inverse();
        for (std::size_t j = c; j < g.cols; ++j) g.at(r, j) *= inv;
        for (std::size_t i = 0; i < g.rows; ++i) {
            if (i == r || g.at(i, c).isZero()) continue;
            const Scalar factor = g.at(i, c);
            for (std::size_t j = c; j < g.cols; ++j) {
                if (g.at(r, j).isZero()) continue;
                t = factor;
                t *= g.at(r, j);
                g.at(i, j) -= t;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {Matrix(m.rows(), m.cols(), std::move(g.a), m.field()), std::move(pivots)};
}

std::size_t rankNaive(const Matrix& m) { return rref(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
    if (!m.isSquare()) throw UsageError("inverse of non-square matrix " + shape(m));
    const std::size_t n = m.rows();
    Echelon e = rref(hcat(m, Matrix::identity(n, m.field())));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        throw SingularMatrixError("matrix is singular");
    }
    return e.reduced.block(0, n, n, n);
}

bool isNonsingular(const Matrix& m) { return m.isSquare() && rank(m) == m.rows(); }

Matrix kernelBasis(const Matrix& m) {
    Echelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> isPivot(n, false);
    for (std::size_t c : e.pivots) isPivot[c] = true;
    std::vector<std::size_t> freeCols;
    for (std::size_t c = 0; c < n; ++c)
        if (!isPivot[c]) freeCols.push_back(c);
    std::vector<Scalar> entries(n * freeCols.size(), Scalar(m.field()));
    for (std::size_t k = 0; k < freeCols.size(); ++k) {
        const std::size_t f = freeCols[k];
        entries[f * freeCols.size() + k] = Scalar(1, m.field());
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            entries[e.pivots[r] * freeCols.size() + k] = -e.reduced(r, f);
        }
    }
    return Matrix(n, freeCols.size(), std::move(entries), m.field());
}

bool rangeContained(const Matrix& m, const Matrix& n) {
    if (m.rows() != n.rows()) throw UsageError("rangeContained: row mismatch " + shape(m) + " vs " + shape(n));
    return rank(hcat(n, m)) == rank(n);
}

bool rangeEqual(const Matrix& m, const Matrix& n) {
    if (m.rows() != n.rows()) throw UsageError("rangeEqual: row mismatch " + shape(m) + " vs " + shape(n));
    const std::size_t joint = rank(hcat(m, n));
    return rank(m) == joint && rank(n) == joint;
}

bool nullspaceContained(const Matrix& m, const Matrix& n) {
    if (m.cols() != n.cols()) throw UsageError("nullspaceContained: column mismatch");
    return rank(vcat(m, n)) == rank(m);
}

bool nullspaceEqual(const Matrix& m, const Matrix& n) {
    if (m.cols() != n.cols()) throw UsageError("nullspaceEqual: column mismatch");
    const std::size_t joint = rank(vcat(m, n));
    return rank(m) == joint && rank(n) == joint;
}

std::size_t rangeIntersectionDim(const Matrix& m, const Matrix& n) {
    if (m.rows() != n.rows()) throw UsageError("rangeIntersectionDim: row mismatch");
    return rank(m) + rank(n) - rank(hcat(m, n));
}

Matrix rangeIntersectionBasis(const Matrix& m, const Matrix& n) {
    if (m.rows() != n.rows()) throw UsageError("rangeIntersectionBasis: row mismatch");
    const Matrix k = kernelBasis(hcat(m, -n));
    const Matrix image = m * k.block(0, 0, m.cols(), k.cols());
    // Keep independent columns only.
    Echelon e = rref(image);
    std::vector<Scalar> cols(image.rows() * e.pivots.size(), Scalar(m.field()));
    for (std::size_t k2 = 0; k2 < e.pivots.size(); ++k2)
        for (std::size_t i = 0; i < image.rows(); ++i) cols[i * e.pivots.size() + k2] = image(i, e.pivots[k2]);
    return Matrix(image.rows(), e.pivots.size(), std::move(cols), m.field());
}

namespace {

Scalar smallRational(Rng& rng, FieldSpec field) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    return Scalar::rational(Rational(num(rng), den(rng)), field);
}

}  // namespace

Matrix solveLinear(const Matrix& a, const Matrix& b, Rng* rng) {
    if (a.rows() != b.rows()) throw UsageError("solveLinear: row mismatch");
    const std::size_t n = a.cols();
    Echelon e = rref(hcat(a, b));
    for (std::size_t c : e.pivots) {
        if (c >= n) throw NoSolutionError("linear system is inconsistent");
    }
    std::vector<Scalar> entries(n * b.cols(), Scalar(a.field()));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) entries[e.pivots[r] * b.cols() + j] = e.reduced(r, n + j);
    Matrix x(n, b.cols(), std::move(entries), a.field());
    if (rng != nullptr) {
        const Matrix k = kernelBasis(a);
        if (k.cols() > 0) {
            std::vector<Scalar> c;
            c.reserve(k.cols() * b.cols());
            for (std::size_t i = 0; i < k.cols() * b.cols(); ++i) c.push_back(smallRational(*rng, a.field()));
            x = x + k * Matrix(k.cols(), b.cols(), std::move(c), a.field());
        }
    }
    return x;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw UsageError("kronecker: field mismatch");
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    std::vector<Scalar> entries(rows * cols, Scalar(a.field()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).isZero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    entries[(i * b.rows() + k) * cols + j * b.cols() + l] = a(i, j) * b(k, l);
        }
    return Matrix(rows, cols, std::move(entries), a.field());
}

std::vector<Matrix> solveLinearMatrixSystem(const std::vector<MatrixEquation>& equations,
                                            const std::vector<UnknownShape>& unknowns, Rng& rng,
                                            FieldSpec field) {
    std::vector<std::size_t> offset(unknowns.size() + 1, 0);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        offset[u + 1] = offset[u] + unknowns[u].rows * unknowns[u].cols;
    std::size_t totalRows = 0;
    for (const MatrixEquation& eq : equations) totalRows += eq.rhs.rows() * eq.rhs.cols();

    std::vector<Scalar> coeff(totalRows * offset.back(), Scalar(field));
    std::vector<Scalar> rhs(totalRows, Scalar(field));
    std::size_t row0 = 0;
    for (const MatrixEquation& eq : equations) {
        const std::size_t p = eq.rhs.rows();
        const std::size_t q = eq.rhs.cols();
        for (const MatrixEquation::Term& t : eq.terms) {
            if (t.unknown >= unknowns.size()) throw UsageError("matrix system: unknown index out of range");
            const UnknownShape s = unknowns[t.unknown];
            if (t.left.rows() != p || t.left.cols() != s.rows || t.right.rows() != s.cols || t.right.cols() != q) {
                throw UsageError("matrix system: term shape mismatch");
            }
            const Matrix k = kronecker(t.right.transpose(), t.left);
            for (std::size_t i = 0; i < k.rows(); ++i)
                for (std::size_t j = 0; j < k.cols(); ++j) {
                    if (k(i, j).isZero()) continue;
                    coeff[(row0 + i) * offset.back() + offset[t.unknown] + j] += k(i, j);
                }
        }
        // Column-major vec.
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t i = 0; i < p; ++i) rhs[row0 + j * p + i] = eq.rhs(i, j);
        row0 += p * q;
    }
    const Matrix system(totalRows, offset.back(), std::move(coeff), field);
    const Matrix x = solveLinear(system, Matrix(totalRows, 1, std::move(rhs), field), &rng);

    std::vector<Matrix> out;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const UnknownShape s = unknowns[u];
        std::vector<Scalar> entries(s.rows * s.cols, Scalar(field));
        for (std::size_t j = 0; j < s.cols; ++j)
            for (std::size_t i = 0; i < s.rows; ++i) entries[i * s.cols + j] = x(offset[u] + j * s.rows + i, 0);
        out.emplace_back(s.rows, s.cols, std::move(entries), field);
    }
    return out;
}

std::string toString(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i == 0 ? "[" : ", [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ", ";
            out += m(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace ranklab
