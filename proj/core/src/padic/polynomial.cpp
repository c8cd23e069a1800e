#include "eigenkit/padic/polynomial.hpp"

#include <sstream>

#include "eigenkit/error.hpp"

namespace eigenkit::padic {

Polynomial::Polynomial(const PadicContext& ctx, std::vector<PadicScalar> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
  for (const auto& x : c_)
    if (!(x.context() == ctx_)) fail(Errc::ContextMismatch, "polynomial coefficient context");
}

Polynomial Polynomial::constant(const PadicScalar& c) { return Polynomial(c.context(), {c}); }

Polynomial Polynomial::monomial(const PadicScalar& c, int k) {
  std::vector<PadicScalar> v(static_cast<std::size_t>(k) + 1, PadicScalar::zero(c.context()));
  v[k] = c;
  return Polynomial(c.context(), std::move(v));
}

Polynomial Polynomial::from_ints(const PadicContext& ctx, const std::vector<long long>& coeffs) {
  std::vector<PadicScalar> v;
  for (long long x : coeffs) v.push_back(PadicScalar::from_int(ctx, x));
  return Polynomial(ctx, std::move(v));
}

int Polynomial::degree() const {
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
    if (!c_[k].is_zero()) return k;
  return -1;
}

PadicScalar Polynomial::operator[](std::size_t k) const { return k < c_.size() ? c_[k] : PadicScalar::zero(ctx_); }

void Polynomial::set(std::size_t k, const PadicScalar& c) {
  while (c_.size() <= k) c_.push_back(PadicScalar::zero(ctx_));
  c_[k] = c;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<PadicScalar> v;
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k >= a.c_.size()) v.push_back(b.c_[k]);
    else if (k >= b.c_.size()) v.push_back(a.c_[k]);
    else v.push_back(a.c_[k] + b.c_[k]);
  }
  return Polynomial(a.ctx_, std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return Polynomial(a.ctx_);
  std::vector<PadicScalar> v(a.c_.size() + b.c_.size() - 1, PadicScalar::zero(a.ctx_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero() && a.c_[i].absolute_precision() >= a.ctx_.m()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(a.ctx_, std::move(v));
}

Polynomial operator*(const Polynomial& a, const PadicScalar& c) {
  Polynomial r = a;
  for (auto& x : r.c_) x = x * c;
  return r;
}

PadicScalar Polynomial::evaluate(const PadicScalar& x) const {
  PadicScalar acc = PadicScalar::zero(ctx_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<PadicScalar> v;
  for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * PadicScalar::from_int(ctx_, static_cast<i128>(k)));
  return Polynomial(ctx_, std::move(v));
}

Polynomial Polynomial::truncated(std::size_t n) const {
  Polynomial r = *this;
  if (r.c_.size() > n) r.c_.resize(n, PadicScalar::zero(ctx_));
  return r;
}

Polynomial Polynomial::reversed(int n) const {
  std::vector<PadicScalar> v(static_cast<std::size_t>(n) + 1, PadicScalar::zero(ctx_));
  for (int k = 0; k <= n; ++k) v[n - k] = (*this)[k];
  return Polynomial(ctx_, std::move(v));
}

Polynomial Polynomial::trimmed() const {
  Polynomial r = *this;
  r.c_.resize(static_cast<std::size_t>(degree() + 1), PadicScalar::zero(ctx_));
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  const int dd = d.degree();
  if (dd < 0) fail(Errc::DivisionByZeroToPrecision, "polynomial division by zero");
  const PadicScalar lead_inv = d.c_[dd].inverse();
  std::vector<PadicScalar> r = c_;
  const int n = static_cast<int>(r.size()) - 1;
  std::vector<PadicScalar> q(n >= dd ? static_cast<std::size_t>(n - dd + 1) : 0, PadicScalar::zero(ctx_));
  for (int k = n; k >= dd; --k) {
    const PadicScalar t = r[k] * lead_inv;
    q[k - dd] = t;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= t * d.c_[j];
  }
  r.resize(static_cast<std::size_t>(std::max(0, std::min(n + 1, dd))), PadicScalar::zero(ctx_));
  return {Polynomial(ctx_, std::move(q)), Polynomial(ctx_, std::move(r))};
}

int Polynomial::min_absolute_precision() const {
  int r = ctx_.m();
  for (const auto& x : c_) r = std::min(r, x.absolute_precision());
  return r;
}

bool Polynomial::equals(const Polynomial& o) const {
  const std::size_t n = std::max(c_.size(), o.c_.size());
  for (std::size_t k = 0; k < n; ++k)
    if (!((*this)[k] == o[k])) return false;
  return true;
}

std::string Polynomial::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < c_.size(); ++k) os << (k ? " + " : "") << "(" << c_[k].str() << ")T^" << k;
  return os.str();
}

}  // namespace eigenkit::padic
