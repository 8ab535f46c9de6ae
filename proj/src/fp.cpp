#include "schurext/fp.hpp"

namespace schurext {

bool is_prime(u32 p) {
  if (p < 2) return false;
  for (u32 q = 2; (u64)q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Fp::Fp(u32 prime) : p(prime) {
  if (!is_prime(prime)) throw std::invalid_argument("modulus is not prime");
  if (prime >= (1u << 16)) throw std::invalid_argument("modulus too large");
}

u32 Fp::pow(u32 a, u64 e) const {
  u64 r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 Fp::inv(u32 a) const {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  return pow(a, p - 2);
}

}  // namespace schurext
