#ifndef SCHUREXT_MULTISET_HPP
#define SCHUREXT_MULTISET_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "schurext/fp.hpp"

namespace schurext {

// Sorted list of d indices in [0, m).
using Multiset = std::vector<u32>;

u64 binomial(u64 n, u64 k);

// Lexicographic enumeration and ranking of size-d multisets over [0, m).
class MultisetIndex {
 public:
  MultisetIndex() = default;
  MultisetIndex(u32 m, u32 d);

  u32 m() const { return m_; }
  u32 d() const { return d_; }
  std::size_t size() const { return all_.size(); }
  const Multiset& at(std::size_t i) const { return all_[i]; }
  const std::vector<Multiset>& all() const { return all_; }
  std::size_t rank(const Multiset& a) const;
  // Rank of the multiset given by counts (multiplicity vector of length m).
  std::size_t rank_counts(const std::vector<u32>& counts) const;

 private:
  u32 m_ = 0, d_ = 0;
  std::vector<Multiset> all_;
  std::vector<std::vector<u64>> cnt_;  // cnt_[k][v]: multisets of size k with values in [v, m)
};

std::vector<u32> multiset_counts(const Multiset& a, u32 m);
Multiset counts_to_multiset(const std::vector<u32>& counts);

// All strictly increasing d-subsets of [0, m) in lexicographic order.
std::vector<std::vector<u32>> subsets(u32 m, u32 d);
// All compositions of d into m nonnegative parts, in lexicographic order.
std::vector<std::vector<u32>> compositions(u32 d, u32 m);

// Number of distinct rearrangements of a multiset.
u64 orbit_size(const Multiset& a);

}  // namespace schurext

#endif
