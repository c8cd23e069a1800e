#include "eigenkit/spectral/family.hpp"

#include <algorithm>
#include <map>

#include "eigenkit/error.hpp"
#include "eigenkit/padic/roots.hpp"

namespace eigenkit::spectral {

namespace {

TruncatedSeries series_to(const TruncatedSeries& f, const PadicContext& ctx, bool exact) {
  TruncatedSeries g(ctx, f.names(), f.degree());
  for (const auto& [a, c] : f.terms()) g.set(a, exact ? c.lift_exact(ctx) : c.change_context(ctx));
  return g;
}

SeriesMatrix matrix_to(const SeriesMatrix& M, const PadicContext& ctx, bool exact) {
  return M.map([&](const TruncatedSeries& f) { return series_to(f, ctx, exact); });
}

int series_defect(const TruncatedSeries& f, int cap) {
  int v = std::min(cap, f.absolute_precision());
  for (const auto& [a, c] : f.terms()) v = std::min(v, c.valuation());
  return v;
}

}  // namespace

FamilyOperatorModel::FamilyOperatorModel(SeriesMatrix m, std::optional<int> tail)
    : matrix(std::move(m)), tail_valuation(tail) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols())
    fail(Errc::InvalidArgument, "family model needs a nonempty square matrix");
}

FamilyOperatorModel constant_family(const PMatrix& A, const std::vector<std::string>& names, int degree) {
  const PadicContext& ctx = A(0, 0).context();
  const TruncatedSeries zero(ctx, names, degree);
  SeriesMatrix M(A.rows(), A.cols(), zero);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) M(i, j) = TruncatedSeries::constant(ctx, names, degree, A(i, j));
  return FamilyOperatorModel(std::move(M), kInfiniteValuation);
}

CompactOperatorModel specialize(const FamilyOperatorModel& F, const std::vector<PadicScalar>& point) {
  if (static_cast<int>(point.size()) != F.nvars()) fail(Errc::InvalidArgument, "point has the wrong dimension");
  for (const auto& x : point)
    if (!x.is_integral()) fail(Errc::SpecializationOutsideDomain, "point " + x.str() + " is outside the unit polydisc");
  PMatrix A = F.matrix.map([&](const TruncatedSeries& f) { return f.evaluate(point); });
  return CompactOperatorModel(std::move(A), F.tail_valuation);
}

std::vector<TruncatedSeries> family_fredholm(const FamilyOperatorModel& F) {
  return padic::berkowitz(F.matrix, F.matrix(0, 0).one_like());
}

TruncatedSeries recenter(const TruncatedSeries& f, const std::vector<PadicScalar>& point) {
  if (static_cast<int>(point.size()) != f.nvars()) fail(Errc::InvalidArgument, "point has the wrong dimension");
  const PadicContext& ctx = f.context();
  std::vector<TruncatedSeries> shifted;
  for (int i = 0; i < f.nvars(); ++i)
    shifted.push_back(TruncatedSeries::constant(ctx, f.names(), f.degree(), point[i]) +
                      TruncatedSeries::variable(ctx, f.names(), f.degree(), i));
  TruncatedSeries out = f.zero_like();
  for (const auto& [a, c] : f.terms()) {
    TruncatedSeries t = TruncatedSeries::constant(ctx, f.names(), f.degree(), c);
    for (int i = 0; i < f.nvars(); ++i)
      for (int k = 0; k < a[i]; ++k) t *= shifted[i];
    out += t;
  }
  return out;
}

FiberData fiber_eigendata(const FamilyOperatorModel& F, const std::vector<PadicScalar>& point, Rational h,
                          BoundarySide side) {
  const auto U = specialize(F, point);
  const auto P = fredholm_series(U, U.size());
  const auto fact = slope_factor(P, h, side);
  FiberData out;
  out.degree = fact.degree();
  if (out.degree <= 0) return out;
  std::map<Rational, int> expected;
  const auto np = padic::newton_polygon(fact.Q.coeffs());
  for (const auto& s : np.segments()) expected[s.slope] += s.multiplicity;
  const auto roots = padic::find_roots(fact.Q);
  for (const auto& r : roots.roots) {
    const PadicScalar lambda = r.value.inverse();
    const Rational slope = lambda.valuation_p();
    out.points.push_back({lambda, slope, r.multiplicity});
    expected[slope] -= r.multiplicity;
  }
  for (const auto& [slope, left] : expected)
    if (left > 0) out.points.push_back({std::nullopt, slope, left});
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const FiberPoint& a, const FiberPoint& b) { return a.slope < b.slope; });
  return out;
}

FamilyEigen eigen_family_lift(const FamilyOperatorModel& F, const std::vector<PadicScalar>& point,
                              const PadicScalar& lambda0, const LiftOptions& opts) {
  const PadicContext& ctx = F.context();
  const std::size_t N = F.size();
  const PadicContext W = ctx.with_precision(ctx.m() + guard_budget(ctx, 16));
  auto centred = [&](const FamilyOperatorModel& G) {
    SeriesMatrix M = G.matrix.map([&](const TruncatedSeries& f) { return recenter(f, point); });
    return matrix_to(M, W, true);
  };
  for (const auto& x : point)
    if (!x.is_integral()) fail(Errc::SpecializationOutsideDomain, "point " + x.str() + " is outside the unit polydisc");
  const SeriesMatrix U = centred(F);
  const TruncatedSeries zero = U(0, 0).zero_like();
  PMatrix U0 = U.map([](const TruncatedSeries& f) { return f.constant_term(); });

  // Simple root of the fibre characteristic polynomial, refined in the working context.
  const Polynomial chi = padic::characteristic_polynomial(U0);
  const Polynomial dchi = chi.derivative();
  PadicScalar lam = lambda0.lift_exact(W);
  if (!chi.evaluate(lam).with_absolute_precision(ctx.m()).is_zero())
    fail(Errc::InvalidArgument, "lambda0 is not an eigenvalue of the fibre");
  if (dchi.evaluate(lam).is_zero()) fail(Errc::RamifiedPoint, "lambda0 is a multiple root of the fibre");
  for (int it = 0; it < 8; ++it) lam = lam - chi.evaluate(lam) / dchi.evaluate(lam);

  const auto ker = padic::kernel(U0 - lam * padic::identity(W, N));
  if (ker.size() != 1) fail(Errc::RamifiedPoint, "eigenspace of lambda0 is not one-dimensional");
  PVector v0 = ker.front();
  std::size_t k = opts.normalize_index.value_or(N);
  if (k == N) {
    int best = kInfiniteValuation;
    for (std::size_t i = 0; i < N; ++i)
      if (!v0[i].is_zero() && v0[i].valuation() < best) best = v0[i].valuation(), k = i;
  }
  if (k >= N || v0[k].is_zero()) fail(Errc::RamifiedPoint, "eigenvector vanishes at the normalizing coordinate");
  const PadicScalar scale = v0[k].inverse();
  for (auto& x : v0) x = x * scale;

  // Bordered Jacobian at the centre: [[U0 - lam, -v0], [e_k, 0]].
  PMatrix J = padic::zeros(W, N + 1, N + 1);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) J(i, j) = U0(i, j) - (i == j ? lam : PadicScalar::zero(W));
    J(i, N) = -v0[i];
  }
  J(N, k) = PadicScalar::one(W);
  const PMatrix Jinv = [&] {
    try {
      return padic::inverse(J);
    } catch (const Error&) {
      fail(Errc::RamifiedPoint, "bordered Jacobian is singular");
    }
  }();

  std::vector<TruncatedSeries> v;
  for (const auto& x : v0) v.push_back(TruncatedSeries::constant(W, zero.names(), zero.degree(), x));
  TruncatedSeries l = TruncatedSeries::constant(W, zero.names(), zero.degree(), lam);
  const int max_it = opts.max_iterations > 0 ? opts.max_iterations : zero.degree() + 8;
  FamilyEigen out{zero, {}, k, {}, 0, 0};
  bool done = false;
  for (int it = 0; it < max_it; ++it) {
    std::vector<TruncatedSeries> r = U.apply(v);
    for (std::size_t i = 0; i < N; ++i) r[i] -= l * v[i];
    r.push_back(v[k] - v[k].one_like());
    bool zero_res = true;
    for (const auto& x : r) zero_res = zero_res && x.is_zero();
    out.iterations = it;
    if (zero_res) {
      done = true;
      break;
    }
    // Apply -J^{-1} coefficientwise.
    std::map<padic::Exponent, bool> exps;
    for (const auto& x : r)
      for (const auto& [a, c] : x.terms()) exps[a] = true;
    for (const auto& [a, unused] : exps) {
      PVector ra;
      for (const auto& x : r) ra.push_back(x.coefficient(a));
      const PVector delta = Jinv.apply(ra);
      for (std::size_t i = 0; i < N; ++i) v[i].add_to(a, -delta[i]);
      l.add_to(a, -delta[N]);
    }
  }
  if (!done) fail(Errc::DivergentIteration, "chord iteration did not reach a zero residual");

  std::vector<TruncatedSeries> res = U.apply(v);
  int rp = ctx.m();
  for (std::size_t i = 0; i < N; ++i) rp = std::min(rp, series_defect(series_to(res[i] - l * v[i], ctx, false), ctx.m()));
  out.residual_precision = rp;
  out.eigenvalue = series_to(l, ctx, false);
  for (const auto& x : v) out.vector.push_back(series_to(x, ctx, false));

  for (const auto& G : opts.commuting) {
    if (G.size() != N) fail(Errc::InvalidArgument, "commuting operator size mismatch");
    const SeriesMatrix Phi = centred(G);
    const auto w = Phi.apply(v);
    const TruncatedSeries mu = w[k];
    for (std::size_t i = 0; i < N; ++i)
      if (!series_to(w[i] - mu * v[i], ctx, false).is_zero())
        fail(Errc::NonCommutingInput, "lifted vector is not an eigenvector of a supplied operator");
    out.commuting_eigenvalues.push_back(series_to(mu, ctx, false));
  }
  return out;
}

}  // namespace eigenkit::spectral
