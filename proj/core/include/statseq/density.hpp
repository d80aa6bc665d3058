#pragma once

#include <cstdint>
#include <vector>

#include "statseq/index_set.hpp"
#include "statseq/sequence.hpp"

namespace statseq {

// Finite-n evaluation of the quantity under the asymptotic-density limit:
// value = |K ∩ [1, n]| / n. The count is held as an exact integer and
// divided once, so repeated evaluations agree bit-for-bit.
struct DensityEstimate {
  std::uint64_t at_n = 0;
  std::uint64_t count = 0;
  double value = 0.0;
};

DensityEstimate empirical_density(const IndexSet& k, std::uint64_t n);

// profile[j-1] = empirical_density(k, j) for j = 1..n.
std::vector<DensityEstimate> density_profile(const IndexSet& k, std::uint64_t n);

// Finite-n surrogate for "density one": d̂_n(K) >= 1 - alpha.
bool is_statistically_dense(const IndexSet& k, std::uint64_t n, double alpha);

// Indices i <= N with |a_i - a| >= t. The inequality is non-strict: ties at
// exactly t are included. Callers pass t = epsilon or t = r + epsilon.
IndexSet deviation_index_set(const RealSequence& l, double a, double t);

// |deviation_index_set(l, a, t)| without materializing the set.
std::uint64_t deviation_count(const RealSequence& l, double a, double t);

// Default density cutoff standing in for "density zero/one" at prefix
// length n: max(0.01, 4/sqrt(n)). Vanishes as n grows, so sparse families
// like the perfect squares fall below it at desk scale.
double default_alpha(std::uint64_t n);

}  // namespace statseq
