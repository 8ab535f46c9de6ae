#include "schurext/multiset.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurext {

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u64 r = 1;
  for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MultisetIndex::MultisetIndex(u32 m, u32 d) : m_(m), d_(d) {
  cnt_.assign(d + 2, std::vector<u64>(m + 1, 0));
  for (u32 k = 0; k <= d + 1; ++k)
    for (u32 v = 0; v <= m; ++v) cnt_[k][v] = (k == 0) ? 1 : (m - v == 0 ? 0 : binomial(m - v + k - 1, k));
  if (m == 0 && d > 0) return;
  Multiset cur(d, 0);
  while (true) {
    all_.push_back(cur);
    int s = (int)d - 1;
    while (s >= 0 && cur[s] == m - 1) --s;
    if (s < 0) break;
    u32 v = cur[s] + 1;
    for (u32 t = s; t < d; ++t) cur[t] = v;
  }
}

std::size_t MultisetIndex::rank(const Multiset& a) const {
  if (a.size() != d_) throw std::invalid_argument("multiset has wrong size");
  u64 r = 0;
  u32 prev = 0;
  for (u32 s = 0; s < d_; ++s) {
    r += cnt_[d_ - s][prev] - cnt_[d_ - s][a[s]];
    prev = a[s];
  }
  return r;
}

std::size_t MultisetIndex::rank_counts(const std::vector<u32>& counts) const {
  return rank(counts_to_multiset(counts));
}

std::vector<u32> multiset_counts(const Multiset& a, u32 m) {
  std::vector<u32> c(m, 0);
  for (u32 x : a) ++c[x];
  return c;
}

Multiset counts_to_multiset(const std::vector<u32>& counts) {
  Multiset a;
  for (u32 i = 0; i < counts.size(); ++i)
    for (u32 k = 0; k < counts[i]; ++k) a.push_back(i);
  return a;
}

std::vector<std::vector<u32>> subsets(u32 m, u32 d) {
  std::vector<std::vector<u32>> out;
  if (d > m) return out;
  std::vector<u32> cur(d);
  for (u32 i = 0; i < d; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int s = (int)d - 1;
    while (s >= 0 && cur[s] == m - d + s) --s;
    if (s < 0) break;
    ++cur[s];
    for (u32 t = s + 1; t < d; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

std::vector<std::vector<u32>> compositions(u32 d, u32 m) {
  std::vector<std::vector<u32>> out;
  if (m == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  std::vector<u32> cur(m, 0);
  auto rec = [&](auto&& self, u32 pos, u32 left) -> void {
    if (pos + 1 == m) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (u32 v = left + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  std::reverse(out.begin(), out.end());
  return out;
}

u64 orbit_size(const Multiset& a) {
  u64 r = 1;
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < a.size()) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    for (std::size_t k = 1; k <= j - i; ++k) r = r * (n + k) / k;
    n += j - i;
    i = j;
  }
  return r;
}

}  // namespace schurext
