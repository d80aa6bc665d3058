#pragma once

#include <cstdint>
#include <vector>

#include "statseq/sequence.hpp"

namespace statseq {

// Partial means, variances and standard deviations for every prefix length
// 1..N, produced by one forward Welford pass. Variances use the population
// convention (1/n); a variance that lands below zero through cancellation is
// snapped to 0 and counted.
struct StatsSeries {
  std::vector<double> means;
  std::vector<double> variances;
  std::vector<double> stds;
  std::uint64_t clamped_negatives = 0;

  std::uint64_t n_max() const noexcept { return means.size(); }
};

StatsSeries partial_stats(const RealSequence& l);

// First index (1-based) of the trailing window of ceil(tail_fraction * n)
// entries. tail_fraction in (0, 1].
std::uint64_t tail_start(std::uint64_t n, double tail_fraction);

// max |mu_n - mu_N| over the tail window.
double max_tail_mean_drift(const StatsSeries& s, double tail_fraction);

// max sigma_n over the tail window.
double max_tail_std(const StatsSeries& s, double tail_fraction);

// Window form of the Cauchy condition for the means series: the spread
// max - min of the tail means must not exceed r + epsilon.
bool means_fundamental_tail_check(const StatsSeries& s, double r, double epsilon,
                                  double tail_fraction);

}  // namespace statseq
