#include "ranklab/random.hpp"

#include "ranklab/errors.hpp"

#include <algorithm>

namespace ranklab {

Rng makeRng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
    std::vector<std::uint32_t> words;
    words.reserve(2 + 2 * tags.size());
    auto push = [&words](std::uint64_t v) {
        words.push_back(static_cast<std::uint32_t>(v));
        words.push_back(static_cast<std::uint32_t>(v >> 32));
    };
    push(seed);
    for (std::uint64_t t : tags) push(t);
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

std::uint64_t tagOf(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::size_t randomIndex(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Scalar randomGaussianInt(Rng& rng, long bound, FieldSpec field) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    const long re = dist(rng);
    const long im = dist(rng);
    return Scalar::complex(re, im, field);
}

Scalar randomNonzeroRational(Rng& rng, long bound, FieldSpec field, const std::vector<Rational>& excluded) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    for (;;) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (sgn(q) == 0) continue;
        if (std::find(excluded.begin(), excluded.end(), q) != excluded.end()) continue;
        return Scalar::rational(q, field);
    }
}

Matrix randomMatrix(std::size_t rows, std::size_t cols, Rng& rng, long bound, FieldSpec field) {
    std::vector<Scalar> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(randomGaussianInt(rng, bound, field));
    return Matrix(rows, cols, std::move(entries), field);
}

Matrix randomNonsingular(std::size_t n, Rng& rng, FieldSpec field) {
    long bound = 3;
    for (int attempt = 1;; ++attempt) {
        Matrix p = randomMatrix(n, n, rng, bound, field);
        if (isNonsingular(p)) return p;
        if (attempt % 64 == 0) bound *= 2;
    }
}

Matrix randomFullColumnRank(std::size_t rows, std::size_t k, Rng& rng, FieldSpec field) {
    if (k > rows) throw UsageError("full column rank needs k <= rows");
    long bound = 3;
    for (int attempt = 1;; ++attempt) {
        Matrix b = randomMatrix(rows, k, rng, bound, field);
        if (rank(b) == k) return b;
        if (attempt % 64 == 0) bound *= 2;
    }
}

Matrix randomOfRank(std::size_t rows, std::size_t cols, std::size_t r, Rng& rng, FieldSpec field) {
    if (r > std::min(rows, cols)) throw UsageError("requested rank exceeds shape");
    const Matrix f = randomFullColumnRank(rows, r, rng, field);
    const Matrix g = randomFullColumnRank(cols, r, rng, field).transpose();
    return f * g;
}

}  // namespace ranklab
