#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "statseq/index_set.hpp"
#include "statseq/sequence.hpp"

namespace statseq {

enum class TestKind { stat, stat_r, classical_r, stat_r_fundamental };

const char* to_string(TestKind kind);

// Diagnostic payload attached to a verdict: which density was measured,
// which index broke a window, which anchor was accepted.
struct Witness {
  std::optional<double> violator_density;
  std::optional<std::uint64_t> violator_count;
  std::optional<std::uint64_t> violating_index;  // first violator, when any
  std::optional<std::uint64_t> anchor_index;     // fundamental: accepted or best anchor
  std::optional<double> anchor_value;
  std::optional<std::uint64_t> window_lo;  // classical tail window bounds
  std::optional<std::uint64_t> window_hi;
  std::optional<double> subset_density;  // dense-subsequence check: d̂_N(K)
};

// Outcome of one convergence test on one prefix. Every verdict carries its
// full parameter set; there is no parameterless "converges" oracle, because
// the limit statements are not decidable from a prefix.
struct ConvergenceVerdict {
  TestKind kind = TestKind::stat;
  bool holds = false;
  std::optional<double> candidate_a;  // absent for the fundamental test
  double r = 0.0;
  double epsilon = 0.0;
  std::optional<double> alpha;         // absent for the classical tail test
  std::optional<double> tail_fraction; // classical tail test only
  Witness witness;
};

// Statistical convergence surrogate: the density of {i : |a_i - a| >= eps}
// over the whole prefix must not exceed alpha.
ConvergenceVerdict stat_convergence_test(const RealSequence& l, double a,
                                         double epsilon, double alpha);

// Slack-radius variant with threshold r + epsilon. With r = 0 this reduces
// to stat_convergence_test bit-for-bit.
ConvergenceVerdict stat_r_convergence_test(const RealSequence& l, double a, double r,
                                           double epsilon, double alpha);

// Plain limit-with-radius check on the trailing window of
// ceil(tail_fraction * N) indices: every window element must satisfy
// |a_i - a| < r + epsilon. tail_fraction in (0, 1].
ConvergenceVerdict classical_r_limit_test(const RealSequence& l, double a, double r,
                                          double epsilon, double tail_fraction);

// Extended Cauchy surrogate: holds if some anchor index n0 from a fixed
// deterministic sample has violator density
// d̂_N({i : |a_i - a_n0| >= r + eps}) <= alpha.
ConvergenceVerdict stat_r_fundamental_test(const RealSequence& l, double r,
                                           double epsilon, double alpha);

// The anchor sample used by stat_r_fundamental_test: ceil(q*N) for
// q in {0.5, 0.6, 0.7, 0.8, 0.9} plus the index of the median value of the
// last half (lower median; ties resolved toward the smaller index).
std::vector<std::uint64_t> fundamental_anchor_candidates(const RealSequence& l);

// Decreasing tolerance schedule t_j = r + 1/j for j = 1..stages.
struct StageSchedule {
  std::vector<double> tolerances;

  static StageSchedule for_radius(double r, int stages);
  int stage_count() const noexcept { return static_cast<int>(tolerances.size()); }
};

// ceil(log10 n), at least 1. Deeper stages are vacuous at desk scale.
int default_stage_count(std::uint64_t n);

struct ExtractionResult {
  IndexSet dense_indices;
  int achieved_stages = 0;                 // stages for which a cut point exists
  std::vector<std::uint64_t> cut_points;   // i_j per achieved stage
};

// Builds a high-density index set K on which the sequence stays within the
// stage tolerances of a. Stage j contributes the indices i in
// [i_j, i_{j+1}) with |a_i - a| < t_j, after an unconditional initial
// segment [1, i_1]; the cut point i_j is the smallest index from which
// count{i <= n : |a_i - a| < t_j} * j > (j-1) * n holds for every n up to N.
// If some stage has no such cut point the construction stops at the previous
// stage and reports how far it got.
//
// Output guarantees: every index of K past i_j satisfies |a_i - a| < t_j for
// its block's stage j; and when the deviation density at t_J is small the
// achieved density d̂_N(K) exceeds (J-1)/J.
ExtractionResult extract_dense_convergent_indices(const RealSequence& l, double a,
                                                  double r, const StageSchedule& schedule);

// Tests whether the subsequence of l indexed by k is itself a statistically
// dense witness of r-convergence to a: k must be statistically dense at
// (N, alpha) and the violators within k, counted against the parent prefix
// length N, must have density <= alpha.
ConvergenceVerdict dense_subsequence_check(const RealSequence& l, const IndexSet& k,
                                           double a, double r, double epsilon,
                                           double alpha);

}  // namespace statseq
