#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "statseq/sequence.hpp"

namespace statseq {

// Empirical defect of convergence to a at density cutoff alpha: the
// nearest-rank (1-alpha)-quantile of the deviations |a_i - a|.
// Quantile convention, fixed for bit-reproducibility: ascending sort,
// 1-based rank ceil((1-alpha)*N) evaluated in IEEE double, ties keep
// duplicates.
struct DefectEstimate {
  double a = 0.0;
  double alpha = 0.0;
  double value = 0.0;
};

// Sorted-values view of one sequence: one O(N log N) sort up front, then
// O(log N) per defect query. The k smallest deviations from any point a
// occupy a contiguous window of the sorted values, so the quantile is found
// by a binary search over window positions.
class DefectEvaluator {
 public:
  explicit DefectEvaluator(const RealSequence& l);

  double defect(double a, double alpha) const;

  // Violator count #{i : |a_i - a| >= t} via two binary searches. Uses
  // value-vs-threshold comparisons, which can differ from the scan-based
  // deviation_count by one ulp at exact ties; intended for sweeps where an
  // exact tie is not load-bearing.
  std::uint64_t count_deviations_at_least(double a, double t) const;

  std::uint64_t size() const noexcept { return sorted_.size(); }
  double min_value() const noexcept { return sorted_.front(); }
  double max_value() const noexcept { return sorted_.back(); }

 private:
  std::vector<double> sorted_;
};

DefectEstimate empirical_defect(const RealSequence& l, double a, double alpha);

// 1 / (1 + defect), in (0, 1].
double membership(const DefectEstimate& d);
double membership_from_defect(double defect);

// Defect and membership evaluated over a uniform grid of candidate limits.
struct FuzzyLimitProfile {
  std::vector<double> grid;
  std::vector<double> defects;
  std::vector<double> memberships;
  double alpha = 0.0;
  std::uint64_t n = 0;    // prefix length the profile was computed from
  double step = 0.0;

  std::size_t size() const noexcept { return grid.size(); }
  std::size_t argmin_defect() const;  // first minimizing grid position
};

// Grid lo, lo+step, ..., hi. A single-point grid (lo == hi) is allowed.
FuzzyLimitProfile fuzzy_limit_profile(const RealSequence& l, double lo, double hi,
                                      double step, double alpha);

// Default grid [min value - 1, max value + 1] with 601 points.
FuzzyLimitProfile fuzzy_limit_profile(const RealSequence& l, double alpha);

// Grid-level estimate of the set of r-limits: the qualifying grid points
// with defect <= r + tolerance, reported as the interval they span.
struct RLimitSetEstimate {
  double r = 0.0;
  double tolerance = 0.0;
  bool empty = true;
  double lo = 0.0;
  double hi = 0.0;
  // Interval-ness check: interior grid points may exceed the cut by at most
  // one grid step (the defect is 1-Lipschitz). A larger gap is flagged, not
  // silently accepted.
  bool convexity_violation = false;
  std::optional<double> gap_at;
};

RLimitSetEstimate r_limit_set(const FuzzyLimitProfile& profile, double r,
                              double tolerance);

// Peak membership reaches 1 - tol.
bool normality_check(const FuzzyLimitProfile& profile, double tol);

// Fuzzy convexity of the membership curve, min-rule with the Lipschitz
// slack one grid step induces: for every x < y < z on the grid,
// mu(y) >= min(mu(x), mu(z)) - step / (1 + min_defect)^2.
bool convexity_check(const FuzzyLimitProfile& profile);

}  // namespace statseq
