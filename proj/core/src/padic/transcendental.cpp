#include "eigenkit/padic/transcendental.hpp"

#include <cmath>

#include "eigenkit/error.hpp"
#include "modular.hpp"

namespace eigenkit::padic {

int vp_factorial(long long n, std::uint32_t p) {
  int v = 0;
  while (n) {
    n /= p;
    v += static_cast<int>(n);
  }
  return v;
}

namespace {

int vp_int(long long n, std::uint32_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

PadicContext guarded(const PadicContext& ctx, int guard) {
  try {
    return ctx.with_precision(ctx.m() + guard);
  } catch (const Error&) {
    fail(Errc::PrecisionLoss, "guard digits do not fit the modulus for " + ctx.str());
  }
}

}  // namespace

PadicScalar teichmuller(const PadicContext& ctx, i128 x) {
  const i128 r = ((x % ctx.p()) + ctx.p()) % ctx.p();
  if (r == 0) fail(Errc::ZeroResidue, "teichmuller of a residue divisible by p");
  PadicScalar t = PadicScalar::from_int(ctx, r);
  for (int i = 0; i <= ctx.modulus_exponent() + 1; ++i) {
    PadicScalar next = t.pow(ctx.p());
    if (next.identical(t)) break;
    t = next;
  }
  return t;
}

UnitSplit split_unit(const PadicScalar& t) {
  auto z = t.to_zp();
  if (!z || t.is_zero() || t.valuation() != 0)
    fail(Errc::NonUnitArgument, "torus coordinate " + t.str() + " is not a unit of Z_p");
  const auto r = static_cast<std::uint32_t>(z->residue % t.context().p());
  PadicScalar lam = teichmuller(t.context(), r);
  return {r, lam, t / lam};
}

PadicScalar one_unit_pow(const PadicScalar& s, const ZpValue& a) {
  const PadicContext& ctx = s.context();
  const PadicScalar one = PadicScalar::one(ctx);
  const PadicScalar d = s - one;
  if (!d.is_zero() && d.valuation() <= 0) fail(Errc::NotOneUnit, s.str() + " is not a 1-unit");
  PadicScalar result = one.with_absolute_precision(s.absolute_precision());
  PadicScalar sp = s;
  u128 rest = a.residue;
  bool trivial = false;
  for (int j = 0; j < a.digits; ++j) {
    if ((sp - one).is_zero()) {
      trivial = true;
      break;
    }
    const auto digit = static_cast<std::int64_t>(rest % ctx.p());
    rest /= ctx.p();
    if (digit) result = result * sp.pow(digit);
    sp = sp.pow(ctx.p());
  }
  if (!trivial) {
    const PadicScalar tail = sp - one;
    if (!tail.is_zero()) result = result.with_absolute_precision(tail.valuation());
    else result = result.with_absolute_precision(tail.absolute_precision());
  }
  return result;
}

PadicScalar one_unit_pow(const PadicScalar& s, const PadicScalar& a) {
  if (!(s.context() == a.context())) fail(Errc::ContextMismatch, "one_unit_pow contexts");
  auto z = a.to_zp();
  if (!z) fail(Errc::ExponentNotIntegral, "exponent " + a.str() + " is not in Z_p");
  return one_unit_pow(s, *z);
}

PadicScalar log_one_unit(const PadicScalar& x) {
  const PadicContext& ctx = x.context();
  const int e = ctx.e();
  const std::uint32_t p = ctx.p();
  const PadicScalar y = x - PadicScalar::one(ctx);
  if (!y.is_zero() && y.valuation() <= 0)
    fail(Errc::OutsideConvergenceDomain, "log needs v(x-1) > 0, got " + x.str());
  const int abs_y = y.absolute_precision();
  // log(x + d) - log(x) = log(1 + d/x); its valuation is at least min_k p^k A - e k.
  long long bound = std::min(abs_y, ctx.m());
  if (abs_y > 0) {
    long long pk = 1;
    for (int k = 1; k < 40; ++k) {
      pk *= p;
      bound = std::min(bound, pk * abs_y - static_cast<long long>(e) * k);
      if (pk * abs_y > ctx.m() + static_cast<long long>(e) * k) break;
    }
  }
  if (y.is_zero()) return PadicScalar::zero(ctx, static_cast<int>(bound));
  const int v = y.valuation();
  // Last n whose term can matter: n v - e log_p(n) < m.
  long long nmax = 1;
  while (true) {
    const double lower = static_cast<double>(nmax) * v - e * std::log(static_cast<double>(nmax)) / std::log(p);
    const bool increasing = static_cast<double>(nmax) * v * std::log(p) > e;
    if (lower >= ctx.m() && increasing) break;
    ++nmax;
  }
  int guard = 0;
  for (long long q = p; q <= nmax; q *= p) guard += e;
  const PadicContext W = guarded(ctx, guard + e);
  const PadicScalar yw = y.lift_exact(W);
  PadicScalar sum = PadicScalar::zero(W);
  PadicScalar power = PadicScalar::one(W);
  for (long long n = 1; n <= nmax; ++n) {
    power = power * yw;
    if (power.valuation() - e * vp_int(n, p) >= W.m()) continue;
    PadicScalar term = power / PadicScalar::from_int(W, n);
    sum = (n % 2) ? sum + term : sum - term;
  }
  return sum.change_context(ctx).with_absolute_precision(static_cast<int>(bound));
}

PadicScalar exp_small(const PadicScalar& y) {
  const PadicContext& ctx = y.context();
  const int e = ctx.e();
  const std::uint32_t p = ctx.p();
  if (!y.is_zero() && static_cast<long long>(y.valuation()) * (p - 1) <= e)
    fail(Errc::OutsideConvergenceDomain, "exp needs v(y) > 1/(p-1), got " + y.str());
  const int abs_y = y.absolute_precision();
  if (y.is_zero()) return PadicScalar::one(ctx).with_absolute_precision(abs_y);
  const int v = y.valuation();
  // n v - e v_p(n!) >= n v - e (n-1)/(p-1), increasing in n.
  long long nmax = 1;
  while (static_cast<double>(nmax) * v - e * static_cast<double>(nmax - 1) / (p - 1) < ctx.m()) ++nmax;
  const int guard = e * vp_factorial(nmax, p) + e;
  const PadicContext W = guarded(ctx, guard);
  const PadicScalar yw = y.lift_exact(W);
  PadicScalar sum = PadicScalar::one(W);
  PadicScalar term = PadicScalar::one(W);
  for (long long n = 1; n <= nmax; ++n) {
    term = term * yw / PadicScalar::from_int(W, n);
    sum = sum + term;
  }
  return sum.change_context(ctx).with_absolute_precision(abs_y);
}

ZpValue log_base_one_plus_p(const ZpValue& x, std::uint32_t p) {
  if (x.digits < 1 || x.residue % p != 1)
    fail(Errc::NotOneUnit, "discrete logarithm needs x = 1 mod p");
  const int k = x.digits;
  u128 M = 1;
  for (int i = 0; i < k; ++i) M *= p;
  u128 cur = x.residue % M;
  u128 g = (1 + p) % M;  // (1+p)^(p^j)
  u128 b = 0, place = 1;
  u128 pj1 = p;  // p^(j+1)
  for (int j = 0; j + 1 < k; ++j) {
    const u128 digit = ((cur + M - 1) % M / pj1) % p;
    if (digit) {
      const u128 ginv = detail::invmod(g, p, M);
      cur = detail::mulmod(cur, detail::powmod(ginv, static_cast<std::uint64_t>(digit), M), M);
    }
    b += digit * place;
    place *= p;
    pj1 *= p;
    g = detail::powmod(g, p, M);
  }
  return {b, k - 1};
}

PadicScalar binomial(const PadicScalar& L, int k) {
  const PadicContext& ctx = L.context();
  PadicScalar num = PadicScalar::one(ctx);
  for (int i = 0; i < k; ++i) num = num * (L - PadicScalar::from_int(ctx, i));
  PadicScalar fact = PadicScalar::one(ctx);
  for (int i = 2; i <= k; ++i) fact = fact * PadicScalar::from_int(ctx, i);
  return num / fact;
}

}  // namespace eigenkit::padic
