#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace statseq {

// Strictly increasing set of positive indices together with the prefix
// horizon it was computed against. Immutable after construction.
class IndexSet {
 public:
  // Indices must be strictly increasing, >= 1 and <= horizon.
  IndexSet(std::vector<std::uint64_t> indices, std::uint64_t horizon);

  std::uint64_t horizon() const noexcept { return horizon_; }
  std::span<const std::uint64_t> indices() const noexcept { return indices_; }
  std::uint64_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  // |K ∩ [1, n]|
  std::uint64_t count_up_to(std::uint64_t n) const noexcept;
  bool contains(std::uint64_t i) const noexcept;

  static IndexSet all_up_to(std::uint64_t n);
  static IndexSet squares_up_to(std::uint64_t n);
  static IndexSet multiples_up_to(std::uint64_t k, std::uint64_t n);

 private:
  std::vector<std::uint64_t> indices_;
  std::uint64_t horizon_;
};

// Standard set semantics. The horizon of an intersection is the smaller of
// the two inputs' horizons, that of a union the larger.
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);

// Complement of k within [1, n].
IndexSet set_complement(const IndexSet& k, std::uint64_t n);

}  // namespace statseq
