#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "statseq/sequence.hpp"

namespace statseq {

struct PremiseResult {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct ConclusionResult {
  bool holds = false;
  double worst_measured = 0.0;
  double bound = 0.0;
  double margin = 0.0;        // bound - worst_measured
  std::uint64_t worst_n = 0;  // prefix length attaining worst_measured
  std::string detail;
};

// Uniform harness for the bridge checks between convergence surrogates and
// the partial-statistics series. The conclusion is evaluated only when every
// premise holds; a failed conclusion carries its counterexample (worst_n,
// worst_measured vs bound). The checks never claim an asymptotic statement
// is true -- they evaluate the finite surrogate and report measured slack.
struct TheoremCheckReport {
  std::string check;
  std::vector<PremiseResult> premises;
  std::optional<ConclusionResult> conclusion;

  bool premises_hold() const;
  // Vacuously true when premises fail; otherwise the conclusion's verdict.
  bool passed() const;
};

// Premises: prefix respects the analytic bound m (|a_i| <= m on the prefix)
// and the stat-r test holds at (a, r, eps, alpha). Conclusion: every prefix
// length n in the tail window satisfies |mu_n - a| <= r + 2*eps + k*alpha
// with k = m + |a|.
TheoremCheckReport mean_limit_check(const RealSequence& l, double a, double r,
                                    double m, double epsilon, double alpha,
                                    double tail_fraction);

// Same premises. With p = max(m^2 + a^2, m + |a|) and
// slack = sqrt(p*alpha*(m+|a|) + 3*p*eps), the conclusion requires, on the
// tail window, sigma_n <= sqrt(2*p*r) + slack and the variance form
// sigma_n^2 <= 2*p*r + slack^2.
TheoremCheckReport std_limit_check(const RealSequence& l, double a, double r,
                                   double m, double epsilon, double alpha,
                                   double tail_fraction);

enum class Side { below, above };

// Premises: the partial means stabilize on the tail (drift <= eps) and every
// element sits on one side of mu_N up to eps. Conclusion: the deviation
// density at threshold eps around mu_N stays within drift/eps + alpha.
TheoremCheckReport one_sided_converse_check(const RealSequence& l, Side side,
                                            double epsilon, double alpha);

// Both directions of the means-and-stds characterization, evaluated on the
// prefix. Forward: if the stat test holds at the defect-minimizing grid
// point a_hat, the tail means must track a_hat and the tail stds must be
// small, with the same bound shapes as mean_limit_check/std_limit_check at
// r = 0. Backward: if the means stabilize and sigma_N <= eps, the stat test
// must hold at mu_N with threshold sigma_tail / sqrt(alpha). Directions
// whose premise fails are vacuous; the report's conclusion is engaged only
// when at least one direction applies.
TheoremCheckReport characterization_check(const RealSequence& l, double m,
                                          double epsilon, double alpha);

}  // namespace statseq
