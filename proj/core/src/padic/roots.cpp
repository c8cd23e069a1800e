#include "eigenkit/padic/roots.hpp"

#include "eigenkit/error.hpp"
#include "eigenkit/padic/newton_polygon.hpp"

namespace eigenkit::padic {

namespace {

// f(x + a) by repeated synthetic division.
Polynomial taylor_shift(const Polynomial& f, const PadicScalar& a) {
  std::vector<PadicScalar> c = f.coeffs();
  const int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) c[j] = c[j] + a * c[j + 1];
  return Polynomial(f.context(), std::move(c));
}

Polynomial normalize(const Polynomial& f) {
  int v = kInfiniteValuation;
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) v = std::min(v, c.valuation());
  if (v == kInfiniteValuation || v == 0) return f;
  std::vector<PadicScalar> c;
  for (const auto& x : f.coeffs()) c.push_back(x.mul_pi_power(-v));
  return Polynomial(f.context(), std::move(c));
}

// Multiplicity of a as a root of f mod pi.
int residue_multiplicity(const std::vector<long long>& fbar, long long a, std::uint32_t p) {
  std::vector<long long> c = fbar;
  while (!c.empty() && c.back() == 0) c.pop_back();
  int k = 0;
  while (c.size() > 1) {
    const std::size_t n = c.size() - 1;
    std::vector<long long> q(n, 0);
    q[n - 1] = c[n];
    for (std::size_t j = n - 1; j >= 1; --j) q[j - 1] = (c[j] + a * q[j]) % p;
    if ((c[0] + a * q[0]) % p != 0) break;
    ++k;
    c = std::move(q);
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  return k;
}

struct Finder {
  const PadicContext& ctx;
  int target;

  // Roots z of h with v(z) >= 0 (units only at the top level); x = offset + pi^depth z.
  int integral_roots(const Polynomial& h0, const PadicScalar& offset, int depth, bool units_only,
                     std::vector<PolyRoot>& out) {
    const Polynomial h = normalize(h0);
    std::vector<long long> hbar;
    bool any = false;
    for (const auto& c : h.coeffs()) {
      const long long r = (c.is_zero() || c.valuation() > 0) ? 0 : c.residue();
      hbar.push_back(r);
      any = any || r != 0;
    }
    if (!any) return 0;
    int found = 0;
    for (long long a = units_only ? 1 : 0; a < ctx.p(); ++a) {
      const int k = residue_multiplicity(hbar, a, ctx.p());
      if (k == 0) continue;
      const PadicScalar as = PadicScalar::from_int(ctx, a);
      if (k == 1) {
        PadicScalar z = as;
        const Polynomial dh = h.derivative();
        for (int it = 0; it < 2 * 64; ++it) {
          const PadicScalar fz = h.evaluate(z);
          if (fz.is_zero()) break;
          PadicScalar next = z - fz / dh.evaluate(z);
          if (next.identical(z)) break;
          z = next;
        }
        out.push_back({offset + z.mul_pi_power(depth), 1});
        found += 1;
        continue;
      }
      if (depth + 1 >= target) {
        out.push_back({(offset + as.mul_pi_power(depth)).with_absolute_precision(depth + 1), k});
        found += k;
        continue;
      }
      Polynomial shifted = taylor_shift(h, as);
      std::vector<PadicScalar> c;
      for (std::size_t j = 0; j < shifted.size(); ++j) c.push_back(shifted[j].mul_pi_power(static_cast<int>(j)));
      const Polynomial next(ctx, std::move(c));
      bool all_zero = true;
      for (const auto& x : next.coeffs()) all_zero = all_zero && x.is_zero();
      if (all_zero) {
        out.push_back({(offset + as.mul_pi_power(depth)).with_absolute_precision(depth + 1), k});
        found += k;
        continue;
      }
      found += integral_roots(next, offset + as.mul_pi_power(depth), depth + 1, false, out);
    }
    return found;
  }
};

}  // namespace

RootResult find_roots(const Polynomial& f0) {
  RootResult res;
  const Polynomial f = f0.trimmed();
  const int n = f.degree();
  if (n <= 0) return res;
  const PadicContext& ctx = f.context();
  int i0 = 0;
  while (f[i0].is_zero()) ++i0;
  if (i0 > 0) res.roots.push_back({PadicScalar::zero(ctx), i0});
  std::vector<PadicScalar> tail(f.coeffs().begin() + i0, f.coeffs().end());
  const NewtonPolygon np = newton_polygon_general(tail);
  const Polynomial g(ctx, tail);
  Finder finder{ctx, ctx.m()};
  for (const auto& seg : np.segments()) {
    const Rational rv = -seg.slope * ctx.e();
    if (rv.denominator() != 1) {
      res.unresolved += seg.multiplicity;
      continue;
    }
    const int r = static_cast<int>(rv.numerator());
    std::vector<PadicScalar> c;
    for (std::size_t j = 0; j < g.size(); ++j) c.push_back(g[j].mul_pi_power(r * static_cast<int>(j)));
    std::vector<PolyRoot> found;
    const int count = finder.integral_roots(Polynomial(ctx, std::move(c)), PadicScalar::zero(ctx), 0, true, found);
    for (auto& rt : found) res.roots.push_back({rt.value.mul_pi_power(r), rt.multiplicity});
    res.unresolved += std::max(0, seg.multiplicity - count);
  }
  return res;
}

}  // namespace eigenkit::padic
