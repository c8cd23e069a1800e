#include "eigenkit/padic/series.hpp"

#include <numeric>
#include <sstream>

#include "eigenkit/error.hpp"

namespace eigenkit::padic {

int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

TruncatedSeries::TruncatedSeries(const PadicContext& ctx, std::vector<std::string> names, int degree)
    : ctx_(ctx), names_(std::move(names)), degree_(degree) {
  if (degree < 0) fail(Errc::InvalidArgument, "negative truncation degree");
}

TruncatedSeries TruncatedSeries::constant(const PadicContext& ctx, std::vector<std::string> names, int degree,
                                          const PadicScalar& c) {
  TruncatedSeries s(ctx, std::move(names), degree);
  s.set(Exponent(s.names_.size(), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(const PadicContext& ctx, std::vector<std::string> names, int degree,
                                          int index) {
  TruncatedSeries s(ctx, std::move(names), degree);
  if (index < 0 || index >= s.nvars()) fail(Errc::IndexOutOfRange, "variable index");
  if (degree >= 1) {
    Exponent a(s.names_.size(), 0);
    a[index] = 1;
    s.set(a, PadicScalar::one(ctx));
  }
  return s;
}

TruncatedSeries TruncatedSeries::one_like() const {
  return constant(ctx_, names_, degree_, PadicScalar::one(ctx_));
}

TruncatedSeries TruncatedSeries::with_degree(int degree) const {
  TruncatedSeries s(ctx_, names_, degree);
  for (const auto& [a, c] : terms_)
    if (total_degree(a) <= degree) s.terms_.emplace(a, c);
  return s;
}

PadicScalar TruncatedSeries::coefficient(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? PadicScalar::zero(ctx_) : it->second;
}

void TruncatedSeries::set(const Exponent& a, const PadicScalar& c) {
  if (static_cast<int>(a.size()) != nvars()) fail(Errc::InvalidArgument, "exponent arity");
  if (total_degree(a) > degree_) fail(Errc::InvalidArgument, "exponent above truncation degree");
  if (!(c.context() == ctx_)) fail(Errc::ContextMismatch, "series coefficient context");
  if (c.is_zero() && c.absolute_precision() >= ctx_.m()) {
    terms_.erase(a);
    return;
  }
  terms_.insert_or_assign(a, c);
}

void TruncatedSeries::add_to(const Exponent& a, const PadicScalar& c) {
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    set(a, c);
  } else {
    PadicScalar s = it->second + c;
    if (s.is_zero() && s.absolute_precision() >= ctx_.m())
      terms_.erase(it);
    else
      it->second = s;
  }
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (!(ctx_ == o.ctx_)) fail(Errc::ContextMismatch, "series contexts differ");
  if (names_ != o.names_) fail(Errc::InvalidArgument, "series variables differ");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& [a, c] : s.terms_) c = -c;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  degree_ = std::min(degree_, o.degree_);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = total_degree(it->first) > degree_ ? terms_.erase(it) : std::next(it);
  for (const auto& [a, c] : o.terms_)
    if (total_degree(a) <= degree_) add_to(a, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out(a.ctx_, a.names_, std::min(a.degree_, b.degree_));
  std::vector<std::pair<int, const TruncatedSeries::Terms::value_type*>> tb;
  tb.reserve(b.terms_.size());
  for (const auto& t : b.terms_) tb.emplace_back(total_degree(t.first), &t);
  Exponent s(a.names_.size());
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [db, tp] : tb) {
      if (da + db > out.degree_) continue;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = ea[i] + tp->first[i];
      out.add_to(s, ca * tp->second);
    }
  }
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const PadicScalar& c) {
  TruncatedSeries out = a.zero_like();
  for (const auto& [e, x] : a.terms_) out.add_to(e, x * c);
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const PadicScalar c0 = constant_term();
  const PadicScalar c0inv = c0.inverse();
  // 1/(c0 (1 - y)) = c0^-1 sum y^k with y of positive degree.
  TruncatedSeries y = *this * c0inv;
  y.terms_.erase(Exponent(names_.size(), 0));
  y = -y;
  TruncatedSeries acc = one_like();
  TruncatedSeries power = one_like();
  for (int k = 1; k <= degree_; ++k) {
    power = power * y;
    acc += power;
  }
  return acc * c0inv;
}

PadicScalar TruncatedSeries::evaluate(std::span<const PadicScalar> point) const {
  if (static_cast<int>(point.size()) != nvars()) fail(Errc::InvalidArgument, "evaluation point arity");
  std::vector<std::vector<PadicScalar>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].push_back(PadicScalar::one(ctx_));
    for (int k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  PadicScalar acc = PadicScalar::zero(ctx_);
  for (const auto& [a, c] : terms_) {
    PadicScalar t = c;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i]) t = t * powers[i][a[i]];
    acc = acc + t;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::specialize(const std::vector<std::optional<PadicScalar>>& values) const {
  if (static_cast<int>(values.size()) != nvars()) fail(Errc::InvalidArgument, "specialization arity");
  std::vector<std::vector<PadicScalar>> powers(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) continue;
    powers[i].push_back(PadicScalar::one(ctx_));
    for (int k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * *values[i]);
  }
  TruncatedSeries out = zero_like();
  for (const auto& [a, c] : terms_) {
    PadicScalar t = c;
    Exponent rest = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (values[i] && a[i]) {
        t = t * powers[i][a[i]];
        rest[i] = 0;
      }
    }
    out.add_to(rest, t);
  }
  return out;
}

int TruncatedSeries::gauss_valuation() const {
  int v = kInfiniteValuation;
  for (const auto& [a, c] : terms_)
    if (!c.is_zero()) v = std::min(v, c.valuation());
  return v;
}

int TruncatedSeries::absolute_precision() const {
  int r = ctx_.m();
  for (const auto& [a, c] : terms_) r = std::min(r, c.absolute_precision());
  return r;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& [a, c] : terms_)
    if (!c.is_zero()) return false;
  return true;
}

bool TruncatedSeries::equals(const TruncatedSeries& o) const {
  if (!(ctx_ == o.ctx_) || names_ != o.names_) return false;
  const int d = std::min(degree_, o.degree_);
  return (with_degree(d) - o.with_degree(d)).is_zero();
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i]) os << "*" << names_[i] << (a[i] > 1 ? "^" + std::to_string(a[i]) : "");
  }
  if (first) os << "0";
  os << " + O(deg>" << degree_ << ")";
  return os.str();
}

}  // namespace eigenkit::padic
