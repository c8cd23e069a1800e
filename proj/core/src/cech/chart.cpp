#include "eigenkit/cech/chart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eigenkit/error.hpp"

namespace eigenkit::cech {

Laurent Laurent::monomial(const PadicScalar& c, int n) {
  Laurent g(c.context());
  g.set(n, c);
  return g;
}

PadicScalar Laurent::coefficient(int n) const {
  auto it = t_.find(n);
  return it == t_.end() ? PadicScalar::zero(ctx_) : it->second;
}

void Laurent::set(int n, const PadicScalar& c) {
  if (c.is_zero() && c.absolute_precision() >= ctx_.m()) {
    t_.erase(n);
  } else {
    t_.insert_or_assign(n, c);
  }
}

bool Laurent::is_zero() const {
  return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

int Laurent::min_exponent() const {
  if (t_.empty()) fail(Errc::InvalidArgument, "min_exponent of the zero Laurent polynomial");
  return t_.begin()->first;
}

int Laurent::max_exponent() const {
  if (t_.empty()) fail(Errc::InvalidArgument, "max_exponent of the zero Laurent polynomial");
  return t_.rbegin()->first;
}

Laurent Laurent::clipped(int lo, int hi) const {
  Laurent g(ctx_);
  for (const auto& [n, c] : t_) {
    if (n >= lo && n <= hi) g.t_.emplace(n, c);
  }
  return g;
}

Laurent Laurent::operator-() const {
  Laurent g(ctx_);
  for (const auto& [n, c] : t_) g.t_.emplace(n, -c);
  return g;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent g = a;
  for (const auto& [n, c] : b.t_) g.set(n, g.coefficient(n) + c);
  return g;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent g(a.ctx_);
  for (const auto& [i, x] : a.t_) {
    for (const auto& [j, y] : b.t_) g.set(i + j, g.coefficient(i + j) + x * y);
  }
  return g;
}

Laurent operator*(const PadicScalar& c, const Laurent& a) {
  Laurent g(a.ctx_);
  for (const auto& [n, x] : a.t_) g.set(n, c * x);
  return g;
}

bool Laurent::equals(const Laurent& o) const { return (*this - o).is_zero(); }

const char* to_string(Chart c) {
  switch (c) {
    case Chart::Plus: return "plus";
    case Chart::Minus: return "minus";
    case Chart::Both: return "both";
  }
  return "?";
}

Chart chart_from_string(const std::string& s) {
  if (s == "plus") return Chart::Plus;
  if (s == "minus") return Chart::Minus;
  if (s == "both") return Chart::Both;
  fail(Errc::UnsupportedChart, "unknown chart '" + s + "'");
}

AffinoidModel::AffinoidModel(const PadicContext& c, int d) : ctx(c), degree(d) {
  if (d < 0) fail(Errc::InvalidArgument, "affinoid truncation degree must be nonnegative");
}

Laurent AffinoidModel::to_laurent(const PVector& a) const {
  if (static_cast<int>(a.size()) > degree + 1) fail(Errc::TruncationTooSmall, "polynomial exceeds truncation degree");
  Laurent g(ctx);
  for (std::size_t n = 0; n < a.size(); ++n) g.set(static_cast<int>(n), a[n].mul_pi_power(ctx.e() * static_cast<int>(n)));
  return g;
}

PVector AffinoidModel::from_laurent(const Laurent& g) const {
  PVector a(degree + 1, PadicScalar::zero(ctx));
  for (const auto& [n, c] : g.terms()) {
    if (c.is_zero()) continue;
    if (n < 0) fail(Errc::InvalidArgument, "negative power of f does not lie in A");
    if (n > degree) fail(Errc::TruncationTooSmall, "power of f beyond truncation degree");
    a[n] = c.mul_pi_power(-ctx.e() * n);
  }
  return a;
}

int AffinoidModel::norm(const PVector& a) const { return padic::min_valuation(a); }

int AffinoidModel::chart_norm(Chart chart, const Laurent& g) const {
  int v = std::numeric_limits<int>::max();
  for (const auto& [n, c] : g.terms()) {
    if (chart == Chart::Plus && n < 0 && !c.is_zero()) fail(Errc::InvalidArgument, "negative power of f on U+");
    int w = (chart == Chart::Minus && n > 0) ? -ctx.e() * n : 0;
    v = std::min(v, c.valuation() + w);
  }
  return v == std::numeric_limits<int>::max() ? ctx.m() : v;
}

std::pair<int, int> AffinoidModel::exponent_range(Chart chart) const {
  return chart == Chart::Plus ? std::pair{0, degree} : std::pair{-degree, degree};
}

std::vector<Laurent> LocalizedModule::localize(const std::vector<PVector>& m) const {
  if (m.size() != rank) fail(Errc::InvalidArgument, "element rank does not match module rank");
  std::vector<Laurent> u;
  u.reserve(m.size());
  for (const auto& a : m) u.push_back(base.to_laurent(a));
  return u;
}

int LocalizedModule::norm(const std::vector<Laurent>& u) const {
  int v = base.ctx.m();
  for (const auto& g : u) v = std::min(v, base.chart_norm(chart, g));
  return v;
}

int LocalizedModule::relation_defect() const {
  const auto& ctx = base.ctx;
  auto one = PadicScalar::one(ctx);
  int v = ctx.m();
  // X is the coordinate f on U+ and U+-, Y = f^{-1} on U- and U+-.
  if (chart != Chart::Minus) {
    Laurent X = Laurent::monomial(one, 1);
    Laurent f = base.to_laurent({PadicScalar::zero(ctx), one.mul_pi_power(-ctx.e())});
    v = std::min(v, base.chart_norm(chart, X - f));
  }
  if (chart != Chart::Plus) {
    Laurent Y = Laurent::monomial(one, -1);
    Laurent f = Laurent::monomial(one, 1);
    v = std::min(v, base.chart_norm(chart, f * Y - Laurent::monomial(one, 0)));
  }
  return v;
}

LocalizedModule completed_localization(const spectral::BanachModuleModel& M, const AffinoidModel& A, Chart chart) {
  if (M.base().nvars != 1) fail(Errc::UnsupportedChart, "Laurent charts need a one-variable Tate algebra as base");
  if (M.is_projective()) fail(Errc::UnsupportedChart, "completed localization is implemented for C(I) only");
  if (M.context().p() != A.ctx.p() || M.context().e() != A.ctx.e()) {
    fail(Errc::ContextMismatch, "module and affinoid live over different fields");
  }
  return LocalizedModule{A, chart, M.rank()};
}

LaurentSplit laurent_split(const Laurent& g, double beta) {
  if (!(beta >= 1.0)) fail(Errc::InvalidArgument, "split constant must be at least 1");
  const auto& ctx = g.context();
  LaurentSplit s{Laurent(ctx), Laurent(ctx), true};
  int vg = ctx.m();
  for (const auto& [n, c] : g.terms()) {
    vg = std::min(vg, c.valuation());
    if (n >= 0) {
      s.plus.set(n, c);
    } else {
      s.minus.set(n, -c);
    }
  }
  auto vnorm = [&](const Laurent& h) {
    int v = ctx.m();
    for (const auto& kv : h.terms()) v = std::min(v, kv.second.valuation());
    return v;
  };
  // |h| <= beta |g| reads v(h) >= v(g) - e log_p(beta).
  double slack = ctx.e() * std::log(beta) / std::log(static_cast<double>(ctx.p()));
  s.within_bound = vnorm(s.plus) >= vg - slack && vnorm(s.minus) >= vg - slack;
  return s;
}

}  // namespace eigenkit::cech
