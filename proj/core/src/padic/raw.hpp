#pragma once

#include <algorithm>

#include "eigenkit/padic/scalar.hpp"
#include "modular.hpp"

// Arithmetic on unit-part coefficient vectors in Z[pi]/(pi^e - p) modulo p^N.
namespace eigenkit::padic::detail {

using Coeffs = PadicScalar::Coeffs;

inline int ceil_div(int a, int b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

inline Coeffs raw_constant(const PadicContext& ctx, u128 c) {
  Coeffs r(static_cast<std::size_t>(ctx.e()), 0);
  r[0] = c % ctx.modulus();
  return r;
}

// Reduce modulo pi^r.
inline void raw_reduce(const PadicContext& ctx, Coeffs& a, int r) {
  const int e = ctx.e();
  for (int j = 0; j < e; ++j) {
    if (a[j] == 0) continue;
    const int k = r - j <= 0 ? 0 : ceil_div(r - j, e);
    if (k == 0) {
      a[j] = 0;
    } else if (k < ctx.modulus_exponent()) {
      a[j] %= ctx.p_power(k);
    }
  }
}

inline int raw_valuation(const PadicContext& ctx, const Coeffs& a) {
  int best = kInfiniteValuation;
  for (int j = 0; j < ctx.e(); ++j) {
    if (a[j] == 0) continue;
    best = std::min(best, ctx.e() * vp(a[j], ctx.p()) + j);
  }
  return best;
}

// Multiply by pi^k (k >= 0) or divide exactly by pi^-k (k < 0; requires valuation >= -k).
inline Coeffs raw_shift(const PadicContext& ctx, const Coeffs& a, int k) {
  const int e = ctx.e();
  const u128 M = ctx.modulus();
  Coeffs out(static_cast<std::size_t>(e), 0);
  for (int j = 0; j < e; ++j) {
    if (a[j] == 0) continue;
    const int idx = j + k;
    const int q = floor_div(idx, e);
    const int r = idx - q * e;
    u128 c;
    if (q >= 0) {
      const u128 pq = ctx.p_power(q);
      if (pq == 0 || pq == M) continue;
      c = mulmod(a[j], pq, M);
    } else {
      c = a[j] / ctx.p_power(-q);
    }
    out[r] = addmod(out[r], c, M);
  }
  return out;
}

inline Coeffs raw_add(const PadicContext& ctx, const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = addmod(a[j], b[j], ctx.modulus());
  return out;
}

inline Coeffs raw_neg(const PadicContext& ctx, const Coeffs& a) {
  Coeffs out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = negmod(a[j], ctx.modulus());
  return out;
}

inline Coeffs raw_mul(const PadicContext& ctx, const Coeffs& a, const Coeffs& b) {
  const int e = ctx.e();
  const u128 M = ctx.modulus();
  if (e == 1) return Coeffs{mulmod(a[0], b[0], M)};
  boost::container::small_vector<u128, 16> prod(static_cast<std::size_t>(2 * e - 1), 0);
  for (int i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < e; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = addmod(prod[i + j], mulmod(a[i], b[j], M), M);
    }
  }
  Coeffs out(static_cast<std::size_t>(e));
  const u128 p = ctx.p() % M;
  for (int k = 0; k < e; ++k) {
    out[k] = prod[k];
    if (k + e < 2 * e - 1 && prod[k + e] != 0) out[k] = addmod(out[k], mulmod(prod[k + e], p, M), M);
  }
  return out;
}

// Inverse of a unit (c_0 prime to p) modulo p^N.
inline Coeffs raw_inverse(const PadicContext& ctx, const Coeffs& u) {
  const u128 M = ctx.modulus();
  Coeffs x = raw_constant(ctx, invmod(u[0], ctx.p(), M));
  const Coeffs two = raw_constant(ctx, 2);
  const int target = ctx.modulus_exponent() * ctx.e();
  for (int known = 1; known < 2 * target; known *= 2) {
    Coeffs ux = raw_mul(ctx, u, x);
    x = raw_mul(ctx, x, raw_add(ctx, two, raw_neg(ctx, ux)));
  }
  return x;
}

}  // namespace eigenkit::padic::detail
