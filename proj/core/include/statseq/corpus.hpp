#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "statseq/sequence.hpp"
#include "statseq/theorem_checks.hpp"

namespace statseq {

// One bounded reference sequence with its analytically known candidate
// limit a, slack radius r and bound m.
struct CorpusMember {
  std::string name;
  RealSequence seq;
  double a = 0.0;
  double r = 0.0;
  double m = 1.0;
};

// The 20-member bounded corpus used by the verification suite: a
// square-spike bounded variant with harmonic tail, the alternating big-spike
// sequence, three constants, and fifteen seeded-noise members with sparse
// spikes planted on the perfect squares.
std::vector<CorpusMember> builtin_corpus(std::uint64_t n);

struct VerificationParams {
  double epsilon = 0.01;
  std::optional<double> alpha;  // default_alpha(n) when unset
  double tail_fraction = 0.2;
};

// Cauchy bridge outcome for one member: if the stat-r test holds at
// (a, r, eps/2, alpha/2) and some sampled anchor sits within r + eps/2 of a,
// the fundamental test must hold at (2r, eps, alpha). The same-radius form
// (r instead of 2r) is only measured, never asserted.
struct BridgeOutcome {
  std::string member;
  bool premise = false;
  bool doubled_radius_holds = false;
  bool same_radius_holds = false;
};

struct VerificationOutcome {
  std::vector<TheoremCheckReport> reports;  // three bridge checks per member
  std::vector<BridgeOutcome> bridges;
  std::vector<std::string> member_names;    // parallel to reports, 3:1
  std::vector<std::string> failures;        // empty iff the suite passed
  int premise_satisfied = 0;
  int conclusions_passed = 0;

  bool passed() const { return failures.empty(); }
};

// Runs every premise-gated check over the corpus and records each
// premise-satisfied conclusion that fails. Also exercises the means
// fundamental window whenever the fundamental test accepts a member.
VerificationOutcome run_verification_suite(const std::vector<CorpusMember>& corpus,
                                           const VerificationParams& params);

}  // namespace statseq
