#include "eigenkit/cech/cech.hpp"

#include <algorithm>
#include <cmath>

#include "eigenkit/error.hpp"
#include "eigenkit/padic/linalg.hpp"

namespace eigenkit::cech {

namespace {

// Coordinates of a rank-n vector of Laurent polynomials supported in [lo, hi].
struct Layout {
  std::size_t n;
  int lo, hi;
  std::size_t width() const { return static_cast<std::size_t>(hi - lo + 1); }
  std::size_t size() const { return n * width(); }
  std::size_t index(std::size_t i, int k) const { return i * width() + static_cast<std::size_t>(k - lo); }
};

std::vector<Laurent> unpack(const PadicContext& ctx, const Layout& L, const PVector& v, std::size_t offset = 0) {
  std::vector<Laurent> out(L.n, Laurent(ctx));
  for (std::size_t i = 0; i < L.n; ++i) {
    for (int k = L.lo; k <= L.hi; ++k) out[i].set(k, v[offset + L.index(i, k)]);
  }
  return out;
}

std::vector<Laurent> act(const LaurentMatrix& T, const std::vector<Laurent>& a) {
  std::vector<Laurent> out(T.rows(), Laurent(a.front().context()));
  for (std::size_t i = 0; i < T.rows(); ++i) {
    for (std::size_t j = 0; j < T.cols(); ++j) out[i] = out[i] + T(i, j) * a[j];
  }
  return out;
}

int gauss(const PadicContext& ctx, const std::vector<Laurent>& u) {
  int v = ctx.m();
  for (const auto& g : u)
    for (const auto& kv : g.terms()) v = std::min(v, kv.second.valuation());
  return v;
}

int transition_degree(const LaurentMatrix& T) {
  int d = 0;
  for (std::size_t i = 0; i < T.rows(); ++i)
    for (std::size_t j = 0; j < T.cols(); ++j)
      for (const auto& kv : T(i, j).terms()) d = std::max(d, std::abs(kv.first));
  return d;
}

void check_transition(const PadicContext& ctx, const LaurentMatrix& T) {
  if (T.rows() != T.cols() || T.rows() == 0) fail(Errc::InvalidArgument, "transition must be square and nonempty");
  for (std::size_t i = 0; i < T.rows(); ++i)
    for (std::size_t j = 0; j < T.cols(); ++j)
      for (const auto& kv : T(i, j).terms())
        if (kv.second.valuation() < 0) fail(Errc::NonInvertibleTransition, "transition is not integral");
  auto poly = padic::berkowitz(T, Laurent::monomial(PadicScalar::one(ctx), 0));
  const Laurent& det = poly.back();
  int vmin = ctx.m(), count = 0;
  for (const auto& kv : det.terms()) {
    int v = kv.second.valuation();
    if (v < vmin) {
      vmin = v;
      count = 1;
    } else if (v == vmin) {
      ++count;
    }
  }
  // A Laurent polynomial is a unit of norm 1 on |f| = 1 iff one term of valuation 0 dominates.
  if (vmin != 0 || count != 1) fail(Errc::NonInvertibleTransition, "transition determinant is not a unit of norm 1");
}

PadicScalar evaluate(const Laurent& g, int shift_per_power) {
  auto s = PadicScalar::zero(g.context());
  for (const auto& [k, c] : g.terms()) s = s + c.mul_pi_power(shift_per_power * k);
  return s;
}

}  // namespace

LaurentMatrix identity_transition(const PadicContext& ctx, std::size_t n) {
  auto one = PadicScalar::one(ctx);
  LaurentMatrix T(n, n, Laurent(ctx));
  for (std::size_t i = 0; i < n; ++i) T(i, i) = Laurent::monomial(one, 0);
  return T;
}

CechReport cech_check(const spectral::BanachModuleModel& M, const AffinoidModel& A, const CechOptions& opts) {
  (void)completed_localization(M, A, Chart::Both);
  const auto& ctx = A.ctx;
  const int D = A.degree;
  const std::size_t n = M.rank();
  const int target = opts.target.value_or(ctx.m());
  if (n == 0) fail(Errc::InvalidArgument, "module of rank zero");
  const Layout LA{n, 0, D}, Lp{n, 0, D}, Lm{n, -D, D}, Lb{n, -D, D};
  CechReport rep;

  // M -> M+ (+) M-, x^k e_i |-> p^k f^k e_i on both charts.
  PMatrix R = padic::zeros(ctx, Lp.size() + Lm.size(), LA.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k <= D; ++k) {
      auto c = PadicScalar::one(ctx).mul_pi_power(ctx.e() * k);
      R(Lp.index(i, k), LA.index(i, k)) = c;
      R(Lp.size() + Lm.index(i, k), LA.index(i, k)) = c;
    }
  }
  const std::size_t rankR = padic::rank(R);
  rep.injective = rankR == LA.size();

  // d(g+, g-) = g+ - g- on the overlap.
  PMatrix d = padic::zeros(ctx, Lb.size(), Lp.size() + Lm.size());
  auto one = PadicScalar::one(ctx);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k <= D; ++k) d(Lb.index(i, k), Lp.index(i, k)) = one;
    for (int k = -D; k <= D; ++k) d(Lb.index(i, k), Lp.size() + Lm.index(i, k)) = -one;
  }
  auto ker = padic::kernel(d);
  rep.middle_defect = ctx.m();
  for (const auto& v : ker) {
    int vv = padic::min_valuation(v);
    auto gp = unpack(ctx, Lp, v);
    auto gm = unpack(ctx, Lm, v, Lp.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto a = A.from_laurent(gp[i].clipped(0, D));
      auto back = A.to_laurent(a);
      int r = std::min(A.chart_norm(Chart::Plus, back - gp[i]), A.chart_norm(Chart::Minus, back - gm[i]));
      rep.middle_defect = std::min(rep.middle_defect, r - vv);
    }
  }
  rep.middle_exact = ker.size() == rankR && rep.middle_defect >= target;
  rep.recovered_rank = ker.size() % static_cast<std::size_t>(D + 1) == 0 ? ker.size() / (D + 1) : 0;

  // Iterated splitting of u = sum_{|k| <= D} f^k e_i into u+ - T u-.
  const LaurentMatrix T = opts.transition.value_or(identity_transition(ctx, n));
  if (T.rows() != n) fail(Errc::InvalidArgument, "transition rank does not match module rank");
  check_transition(ctx, T);
  std::vector<Laurent> u(n, Laurent(ctx));
  for (auto& g : u)
    for (int k = -D; k <= D; ++k) g.set(k, one);
  std::vector<Laurent> up(n, Laurent(ctx)), um(n, Laurent(ctx)), r = u;
  int v_prev = gauss(ctx, r);
  rep.epsilon_valuation = ctx.m();
  while (v_prev < target) {
    if (rep.rounds >= opts.max_rounds) fail(Errc::PrecisionExhausted, "splitting did not reach the target precision");
    ++rep.rounds;
    std::vector<Laurent> sp, sm;
    for (const auto& g : r) {
      auto s = laurent_split(g);
      sp.push_back(s.plus);
      sm.push_back(s.minus);
    }
    auto Tsm = act(T, sm);
    for (std::size_t i = 0; i < n; ++i) {
      up[i] = up[i] + sp[i];
      um[i] = um[i] + sm[i];
      r[i] = (r[i] - (sp[i] - Tsm[i])).clipped(-D, D);
    }
    int v = gauss(ctx, r);
    if (v <= v_prev) fail(Errc::NonContracting, "splitting residual does not contract");
    if (v < ctx.m()) rep.epsilon_valuation = std::min(rep.epsilon_valuation, v - v_prev);
    v_prev = v;
  }
  rep.epsilon = rep.epsilon_valuation >= ctx.m()
                    ? 0.0
                    : std::pow(static_cast<double>(ctx.p()), -static_cast<double>(rep.epsilon_valuation) / ctx.e());
  return rep;
}

GlueResult kiehl_glue(const AffinoidModel& A, const LaurentMatrix& T) {
  const auto& ctx = A.ctx;
  check_transition(ctx, T);
  const int D = A.degree;
  const std::size_t n = T.rows();
  const int dT = transition_degree(T);
  const Layout Lm{n, -D, D};
  const int lo = -D - dT;

  // Unknowns: a- on [-D, D]. Equations: the negative part of T a- vanishes.
  PMatrix E = padic::zeros(ctx, n * static_cast<std::size_t>(-lo), Lm.size());
  auto one = PadicScalar::one(ctx);
  for (std::size_t j = 0; j < n; ++j) {
    for (int k = -D; k <= D; ++k) {
      std::vector<Laurent> a(n, Laurent(ctx));
      a[j] = Laurent::monomial(one, k);
      auto t = act(T, a);
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [e, c] : t[i].terms())
          if (e < 0) E(i * static_cast<std::size_t>(-lo) + static_cast<std::size_t>(e - lo), Lm.index(j, k)) = c;
    }
  }
  auto ker = padic::kernel(E);
  if (ker.empty() || ker.size() % static_cast<std::size_t>(D + 1) != 0) {
    fail(Errc::PrecisionExhausted, "glued sections do not form a free module on the truncation");
  }
  const std::size_t rank = ker.size() / (D + 1);

  std::vector<std::vector<Laurent>> plus, minus;
  for (const auto& v : ker) {
    auto am = unpack(ctx, Lm, v);
    auto ap = act(T, am);
    for (auto& g : ap) g = g.clipped(0, D);
    plus.push_back(std::move(ap));
    minus.push_back(std::move(am));
  }

  // Fibres at x = 0 (f = 0), x = p (f = 1) and x = 1 (f = 1/p).
  std::vector<std::size_t> fibres;
  const int shifts[] = {0, -ctx.e()};
  {
    PMatrix F = padic::zeros(ctx, n, ker.size());
    for (std::size_t c = 0; c < ker.size(); ++c)
      for (std::size_t i = 0; i < n; ++i) F(i, c) = plus[c][i].coefficient(0);
    fibres.push_back(padic::rank(F));
  }
  for (int s : shifts) {
    PMatrix F = padic::zeros(ctx, n, ker.size());
    for (std::size_t c = 0; c < ker.size(); ++c)
      for (std::size_t i = 0; i < n; ++i) F(i, c) = evaluate(minus[c][i], s);
    fibres.push_back(padic::rank(F));
  }
  bool ok = std::all_of(fibres.begin(), fibres.end(), [&](std::size_t f) { return f == rank; });
  auto module = spectral::BanachModuleModel::orthonormalizable(ctx, spectral::BaseRing::tate({"x"}, D), rank);
  return GlueResult{rank, std::move(plus), std::move(minus), std::move(module), std::move(fibres), ok};
}

}  // namespace eigenkit::cech
