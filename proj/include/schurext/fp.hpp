#ifndef SCHUREXT_FP_HPP
#define SCHUREXT_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace schurext {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u32 p);

// Arithmetic in F_p. Values are kept in [0, p).
struct Fp {
  u32 p = 2;

  Fp() = default;
  explicit Fp(u32 prime);

  u32 add(u32 a, u32 b) const { u32 s = a + b; return s >= p ? s - p : s; }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
  u32 neg(u32 a) const { return a == 0 ? 0 : p - a; }
  u32 mul(u32 a, u32 b) const { return static_cast<u32>((u64)a * b % p); }
  u32 pow(u32 a, u64 e) const;
  u32 inv(u32 a) const;
  u32 from_int(i64 v) const {
    i64 r = v % (i64)p;
    return static_cast<u32>(r < 0 ? r + p : r);
  }
};

}  // namespace schurext

#endif
