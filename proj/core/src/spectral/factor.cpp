#include "eigenkit/spectral/factor.hpp"

#include <algorithm>

#include "eigenkit/error.hpp"
#include "series_util.hpp"

namespace eigenkit::spectral {

int guard_budget(const PadicContext& ctx, int wanted) {
  return std::max(0, std::min(padic::max_precision(ctx.p(), ctx.e()), ctx.m() + wanted) - ctx.m());
}

namespace {

bool slopes_ok(const Polynomial& f, std::size_t upto, Rational h, bool below, bool strict) {
  std::vector<PadicScalar> c(f.coeffs().begin(), f.coeffs().begin() + static_cast<long>(std::min(upto + 1, f.size())));
  if (c.size() < 2) return true;
  const auto np = padic::newton_polygon(c);
  for (const auto& s : np.segments()) {
    if (below && (strict ? s.slope >= h : s.slope > h)) return false;
    if (!below && (strict ? s.slope <= h : s.slope < h)) return false;
  }
  return true;
}

}  // namespace

SlopeFactorization slope_factor(const FredholmSeries& P, Rational h, BoundarySide side) {
  const PadicContext& ctx = P.context();
  const int prec = P.precision;
  const std::size_t n = P.slope_prefix;
  const auto poly = newton_slopes(P);
  if (poly.has_slope(h) && side == BoundarySide::None)
    fail(Errc::SlopeOnBoundary, "h is a slope of the Fredholm series");
  const bool strict = side == BoundarySide::Above;
  const int d = poly.mass_below(h, strict);

  SlopeFactorization F{h, side, Polynomial::constant(PadicScalar::one(ctx)), P.polynomial(),
                       Polynomial::constant(PadicScalar::one(ctx)), Polynomial::constant(PadicScalar::zero(ctx)),
                       prec, prec, n, P};
  if (d == 0) return F;
  if (static_cast<std::size_t>(d) == n && !P.exact)
    fail(Errc::InsufficientPrecision, "certified prefix does not reach past slope h");

  // Scale T = pi^-s X with slope_d <= s/e < slope_{d+1} so that the slope-<=h part becomes monic
  // and distinguished.
  const auto& segs = poly.segments();
  Rational left = 0, right = -1;
  int mass = 0;
  for (const auto& sg : segs) {
    if (mass < d) left = sg.slope;
    else if (right < 0) right = sg.slope;
    mass += sg.multiplicity;
  }
  const int e = ctx.e();
  const Rational se = left * e;
  int s = static_cast<int>(se.numerator() / se.denominator());
  if (Rational(s) < se) ++s;
  if (right >= 0 && !(Rational(s, e) < right))
    fail(Errc::InvalidArgument, "slope gap at h is narrower than 1/e; use a context with larger e");

  const int wp = ctx.m() + guard_budget(ctx, 64);
  const PadicContext W = ctx.with_precision(wp);
  std::vector<PadicScalar> pc;
  for (std::size_t i = 0; i <= n; ++i) pc.push_back(P.coeffs[i].lift_exact(W));
  const PadicScalar lead = pc[static_cast<std::size_t>(d)].mul_pi_power(-s * d);
  const PadicScalar lead_inv = lead.inverse();
  std::vector<PadicScalar> xc;
  for (std::size_t i = 0; i <= n; ++i) xc.push_back(pc[i].mul_pi_power(-s * static_cast<int>(i)) * lead_inv);
  const Polynomial Pt(W, xc);
  // Perturbations of c_j below certified[j] move the scaled factors by at most pi^A.
  int A = wp;
  for (std::size_t i = 0; i <= n; ++i)
    A = std::min(A, P.certified[i] - s * static_cast<int>(i) - lead.valuation());

  // Linear Hensel: Qt monic of degree d, Rt = 1 mod pi.
  Polynomial Qt = Pt.truncated(static_cast<std::size_t>(d) + 1);
  Qt.set(static_cast<std::size_t>(d), PadicScalar::one(W));
  Polynomial Rt = Polynomial::constant(PadicScalar::one(W));
  bool converged = false;
  for (int it = 0; it < 4 * wp + 8; ++it) {
    const Polynomial E = Pt - Qt * Rt;
    if (E.degree() < 0) {
      converged = true;
      break;
    }
    auto [q, r] = E.divmod(Qt);
    Qt = Qt + r;
    Qt.set(static_cast<std::size_t>(d), PadicScalar::one(W));
    Rt = Rt + q;
  }
  if (!converged) fail(Errc::InsufficientPrecision, "Hensel iteration did not converge");

  // Bezout in the scaled variable: bt = Rt^-1 mod Qt, at = (1 - bt Rt) / Qt.
  const Polynomial one = Polynomial::constant(PadicScalar::one(W));
  Polynomial bt = one;
  for (int it = 0; it < 4 * wp + 8; ++it) {
    const Polynomial defect = (one - (bt * Rt).divmod(Qt).second).trimmed();
    if (defect.degree() < 0) break;
    bt = (bt + (bt * defect).divmod(Qt).second).trimmed();
  }
  const Polynomial at = (one - bt * Rt).divmod(Qt).first;

  // Back to T: Q(T) = Qt(pi^s T) / Qt(0), a = Qt(0) at(pi^s T), b = bt(pi^s T) / (lead Qt(0)).
  const PadicScalar q0 = Qt[0];
  const PadicScalar q0_inv = q0.inverse();
  auto unscale = [&](const Polynomial& f, const PadicScalar& c) {
    std::vector<PadicScalar> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const PadicScalar x = f[i].with_absolute_precision(A).mul_pi_power(s * static_cast<int>(i)) * c;
      out.push_back(x.change_context(ctx));
    }
    return Polynomial(ctx, out).trimmed();
  };
  F.Q = unscale(Qt, q0_inv);
  F.Q.set(0, PadicScalar::one(ctx));
  F.a = unscale(at, q0);
  F.b = unscale(bt, (lead * q0).inverse());
  F.R = Polynomial(ctx, series_quotient(P.coeffs, F.Q.coeffs(), P.coeffs.size()));

  const Polynomial Rn = F.R.truncated(n - static_cast<std::size_t>(d) + 1);
  const Polynomial bez = F.a * F.Q + F.b * Rn - Polynomial::constant(PadicScalar::one(ctx));
  F.bezout_precision = prec;
  for (const auto& c : bez.coeffs()) F.bezout_precision = std::min(F.bezout_precision, c.valuation());
  const Polynomial prod = (F.Q * F.R).truncated(P.coeffs.size()) - P.polynomial();
  F.product_precision = prec;
  for (const auto& c : prod.coeffs()) F.product_precision = std::min(F.product_precision, c.valuation());

  if (F.Q.degree() != d || !slopes_ok(F.Q, F.Q.size(), h, true, strict) ||
      !slopes_ok(F.R, n - static_cast<std::size_t>(d), h, false, !strict))
    fail(Errc::InsufficientPrecision, "slope separation could not be certified");
  return F;
}

}  // namespace eigenkit::spectral
