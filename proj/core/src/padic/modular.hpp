#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "eigenkit/padic/context.hpp"

namespace eigenkit::padic::detail {

inline u128 mulmod(u128 a, u128 b, u128 m) {
  if (m <= (static_cast<u128>(1) << 64) - 1) {
    const std::uint64_t mm = static_cast<std::uint64_t>(m);
    const u128 prod = static_cast<u128>(static_cast<std::uint64_t>(a)) * static_cast<std::uint64_t>(b);
#if defined(__x86_64__)
    std::uint64_t lo = static_cast<std::uint64_t>(prod), hi = static_cast<std::uint64_t>(prod >> 64), q, r;
    __asm__("divq %4" : "=a"(q), "=d"(r) : "a"(lo), "d"(hi), "rm"(mm));
    (void)q;
    return r;
#else
    return prod % mm;
#endif
  }
  using boost::multiprecision::uint256_t;
  uint256_t r = (static_cast<uint256_t>(static_cast<std::uint64_t>(a >> 64)) << 64 | static_cast<std::uint64_t>(a));
  uint256_t s = (static_cast<uint256_t>(static_cast<std::uint64_t>(b >> 64)) << 64 | static_cast<std::uint64_t>(b));
  uint256_t mm = (static_cast<uint256_t>(static_cast<std::uint64_t>(m >> 64)) << 64 | static_cast<std::uint64_t>(m));
  uint256_t t = (r * s) % mm;
  const std::uint64_t lo = static_cast<std::uint64_t>(t & 0xFFFFFFFFFFFFFFFFull);
  const std::uint64_t hi = static_cast<std::uint64_t>(t >> 64);
  return static_cast<u128>(hi) << 64 | lo;
}

inline u128 addmod(u128 a, u128 b, u128 m) {
  // m < 2^126 so no overflow.
  u128 s = a + b;
  return s >= m ? s - m : s;
}

inline u128 submod(u128 a, u128 b, u128 m) { return a >= b ? a - b : a + (m - b); }

inline u128 negmod(u128 a, u128 m) { return a == 0 ? 0 : m - a; }

inline u128 powmod(u128 a, std::uint64_t n, u128 m) {
  u128 r = 1 % m;
  a %= m;
  while (n) {
    if (n & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    n >>= 1;
  }
  return r;
}

// Inverse of a unit modulo m = p^N.
inline u128 invmod(u128 a, std::uint32_t p, u128 m) {
  u128 x = powmod(a % p, p - 2, p);
  for (u128 known = p; known < m; known = (known > m / known) ? m : known * known) {
    // x <- x (2 - a x)
    u128 ax = mulmod(a % m, x, m);
    x = mulmod(x, submod(2 % m, ax, m), m);
  }
  u128 ax = mulmod(a % m, x, m);
  x = mulmod(x, submod(2 % m, ax, m), m);
  return x;
}

inline int vp(u128 a, std::uint32_t p) {
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

inline u128 from_signed(i128 n, u128 m) {
  if (n >= 0) return static_cast<u128>(n) % m;
  u128 r = static_cast<u128>(-(n + 1)) % m;  // avoids overflow at INT128_MIN
  r = (r + 1) % m;
  return negmod(r, m);
}

}  // namespace eigenkit::padic::detail
