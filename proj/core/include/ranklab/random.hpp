#pragma once

#include "ranklab/matrix.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ranklab {

/// Independent stream for (seed, tags...), built through std::seed_seq.
Rng makeRng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags = {});

/// Stable 64-bit tag for a string (FNV-1a).
std::uint64_t tagOf(std::string_view text);

/// a + b i with a, b uniform in [-bound, bound].
Scalar randomGaussianInt(Rng& rng, long bound, FieldSpec field = {});

/// p/q with p in [-bound, bound] \ {0}, q in [1, bound], avoiding `excluded`.
Scalar randomNonzeroRational(Rng& rng, long bound, FieldSpec field = {},
                             const std::vector<Rational>& excluded = {});

Matrix randomMatrix(std::size_t rows, std::size_t cols, Rng& rng, long bound = 3, FieldSpec field = {});

/// Rejection sampled over [-3, 3]; the range widens after 64 rejected draws.
Matrix randomNonsingular(std::size_t n, Rng& rng, FieldSpec field = {});

/// rows x k with full column rank.
Matrix randomFullColumnRank(std::size_t rows, std::size_t k, Rng& rng, FieldSpec field = {});

/// rows x cols of rank exactly r (product of full-rank factors).
Matrix randomOfRank(std::size_t rows, std::size_t cols, std::size_t r, Rng& rng, FieldSpec field = {});

/// uniform in [lo, hi].
std::size_t randomIndex(Rng& rng, std::size_t lo, std::size_t hi);

}  // namespace ranklab
