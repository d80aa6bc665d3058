#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "statseq/index_set.hpp"

namespace statseq {

// Finite prefix a_1..a_N of a real sequence. Values are 1-based, finite and
// immutable after construction; prefix_bound() is the exact maximum of |a_i|
// over the stored prefix. Boundedness of the underlying infinite sequence
// cannot be decided from a prefix, so callers that need an analytic bound m
// pass it explicitly to the operations that require one.
class RealSequence {
 public:
  RealSequence(std::vector<double> values, std::string origin);

  std::uint64_t size() const noexcept { return values_.size(); }
  double at(std::uint64_t i) const;  // 1-based, checked
  std::span<const double> values() const noexcept { return values_; }
  double prefix_bound() const noexcept { return prefix_bound_; }
  const std::string& origin() const noexcept { return origin_; }

 private:
  std::vector<double> values_;
  double prefix_bound_ = 0.0;
  std::string origin_;
};

enum class GeneratorKind {
  square_spike_growing,          // a_i = i on perfect squares, 1/i otherwise
  square_spike_alternating,      // a_i = i on perfect squares, (-1)^i otherwise
  alternating_sqrt,              // a_i = (-1)^i * sqrt(i)
  square_spike_big_alternating,  // a_i = (-1)^i * 1000 on squares, (-1)^i otherwise
  constant,                      // a_i = value
  iid_noise_around,              // seeded noise in [value-h, value+h], spikes planted
  custom_table,                  // a_i = table[i-1]
};

const char* to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(std::string_view name);

// Deterministic 64-bit linear congruential generator used by the seeded
// noise family. The recurrence is fixed so that generated corpora reproduce
// bit-for-bit across implementations:
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//   unit  <- (state >> 11) / 2^53                                in [0, 1)
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) / 9007199254740992.0;  // 2^53
  }

 private:
  std::uint64_t state_;
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::constant;
  double value = 0.0;       // constant value / noise center
  double half_width = 0.0;  // noise half-width h >= 0
  double spike_value = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> spike_indices;  // strictly increasing, may be empty
  std::vector<double> table;                 // custom_table values

  static GeneratorSpec of(GeneratorKind kind);
  static GeneratorSpec constant_of(double c);
  static GeneratorSpec noise(double center, double half_width, std::uint64_t seed,
                             std::vector<std::uint64_t> spike_indices = {},
                             double spike_value = 0.0);
  static GeneratorSpec table_of(std::vector<double> values);
};

std::string describe(const GeneratorSpec& spec);

// First n terms of the spec's sequence. Deterministic for fixed (spec, n),
// including the seeded noise stream: one draw is consumed per index, so
// planted spikes do not shift the remaining noise values.
RealSequence generate(const GeneratorSpec& spec, std::uint64_t n);

enum class CombineOp { add, subtract };

// Elementwise sum/difference; lengths must match.
RealSequence combine(const RealSequence& l, const RealSequence& h, CombineOp op);

// Elementwise k * a_i; k must be finite.
RealSequence scale(const RealSequence& l, double k);

// Values of l at the indices of k, reindexed 1..|k|. The original index
// list is kept alongside so density statements about the subsequence can be
// evaluated against the parent indexing.
struct Subsequence {
  RealSequence seq;
  IndexSet indices;
};

Subsequence subsequence(const RealSequence& l, const IndexSet& k);

}  // namespace statseq
