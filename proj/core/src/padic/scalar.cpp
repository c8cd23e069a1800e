#include "eigenkit/padic/scalar.hpp"

#include <sstream>

#include "eigenkit/error.hpp"
#include "raw.hpp"

namespace eigenkit::padic {

using namespace detail;

void require_same_context(const PadicScalar& a, const PadicScalar& b) {
  if (!(a.context() == b.context()))
    fail(Errc::ContextMismatch, a.context().str() + " vs " + b.context().str());
}

PadicScalar PadicScalar::make(const PadicContext& ctx, int val, int abs, Coeffs raw) {
  const int m = ctx.m();
  const int width = ctx.modulus_exponent() * ctx.e();
  abs = std::min(abs, m);
  if (abs - val > width) abs = val + width;
  PadicScalar r(ctx);
  if (abs <= val) {
    r.abs_ = abs;
    return r;
  }
  raw_reduce(ctx, raw, abs - val);
  const int t = raw_valuation(ctx, raw);
  if (t >= kInfiniteValuation) {
    r.abs_ = abs;
    return r;
  }
  if (t > 0) raw = raw_shift(ctx, raw, -t);
  val += t;
  int rel = abs - val;
  if (rel > m) {
    rel = m;
    abs = val + m;
  }
  raw_reduce(ctx, raw, rel);
  r.zero_ = false;
  r.val_ = val;
  r.abs_ = abs;
  r.unit_ = std::move(raw);
  return r;
}

PadicScalar PadicScalar::zero(const PadicContext& ctx) { return zero(ctx, ctx.m()); }

PadicScalar PadicScalar::zero(const PadicContext& ctx, int absolute_precision) {
  PadicScalar r(ctx);
  r.abs_ = std::min(absolute_precision, ctx.m());
  return r;
}

PadicScalar PadicScalar::one(const PadicContext& ctx) { return from_int(ctx, 1); }

PadicScalar PadicScalar::from_int(const PadicContext& ctx, i128 n) {
  return make(ctx, 0, ctx.m(), raw_constant(ctx, from_signed(n, ctx.modulus())));
}

PadicScalar PadicScalar::from_rational(const PadicContext& ctx, i128 num, i128 den) {
  if (den == 0) fail(Errc::DivisionByZeroToPrecision, "rational with zero denominator");
  if (num == 0) return zero(ctx);
  int shift = 0;
  while (num % ctx.p() == 0) {
    num /= ctx.p();
    shift += ctx.e();
  }
  while (den % ctx.p() == 0) {
    den /= ctx.p();
    shift -= ctx.e();
  }
  return (from_int(ctx, num) / from_int(ctx, den)).mul_pi_power(shift);
}

PadicScalar PadicScalar::uniformizer_power(const PadicContext& ctx, int k) {
  return make(ctx, k, k + ctx.m(), raw_constant(ctx, 1));
}

PadicScalar PadicScalar::from_digits(const PadicContext& ctx, int valuation, std::span<const std::uint32_t> digits,
                                     std::optional<int> absolute_precision) {
  Coeffs raw = raw_constant(ctx, 0);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    raw = raw_shift(ctx, raw, 1);
    raw[0] = addmod(raw[0], *it % ctx.modulus(), ctx.modulus());
  }
  int abs = valuation + static_cast<int>(digits.size());
  if (absolute_precision) abs = std::min(abs, *absolute_precision);
  return make(ctx, valuation, abs, std::move(raw));
}

PadicScalar PadicScalar::from_zp(const PadicContext& ctx, const ZpValue& z) {
  return make(ctx, 0, z.digits * ctx.e(), raw_constant(ctx, z.residue));
}

Rational PadicScalar::valuation_p() const { return Rational(valuation(), ctx_.e()); }

std::vector<std::uint32_t> PadicScalar::digits() const {
  std::vector<std::uint32_t> out;
  if (zero_) return out;
  const int rel = abs_ - val_;
  out.reserve(static_cast<std::size_t>(rel));
  Coeffs raw = unit_;
  const u128 M = ctx_.modulus();
  for (int i = 0; i < rel; ++i) {
    const auto d = static_cast<std::uint32_t>(raw[0] % ctx_.p());
    out.push_back(d);
    raw[0] = submod(raw[0], d, M);
    raw = raw_shift(ctx_, raw, -1);
  }
  return out;
}

std::optional<ZpValue> PadicScalar::to_zp() const {
  const int e = ctx_.e();
  if (zero_) {
    if (abs_ < 0) return std::nullopt;
    return ZpValue{0, ceil_div(abs_, e)};
  }
  if (val_ < 0) return std::nullopt;
  Coeffs raw = raw_shift(ctx_, unit_, val_);
  raw_reduce(ctx_, raw, abs_);
  for (int j = 1; j < e; ++j)
    if (raw[j] != 0) return std::nullopt;
  return ZpValue{raw[0], ceil_div(abs_, e)};
}

std::uint32_t PadicScalar::residue() const {
  if (!is_integral()) fail(Errc::InvalidArgument, "residue of a non-integral element");
  if (zero_ || val_ > 0) return 0;
  return static_cast<std::uint32_t>(unit_[0] % ctx_.p());
}

PadicScalar PadicScalar::operator-() const {
  PadicScalar r = *this;
  if (!zero_) r.unit_ = raw_neg(ctx_, unit_);
  return r;
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  require_same_context(a, b);
  const auto& ctx = a.ctx_;
  const int abs = std::min(a.abs_, b.abs_);
  if (a.zero_ && b.zero_) return PadicScalar::zero(ctx, abs);
  if (a.zero_) return PadicScalar::make(ctx, b.val_, abs, b.unit_);
  if (b.zero_) return PadicScalar::make(ctx, a.val_, abs, a.unit_);
  const int v = std::min(a.val_, b.val_);
  if (abs <= v) return PadicScalar::zero(ctx, abs);
  const Coeffs ra = a.val_ == v ? a.unit_ : raw_shift(ctx, a.unit_, a.val_ - v);
  const Coeffs rb = b.val_ == v ? b.unit_ : raw_shift(ctx, b.unit_, b.val_ - v);
  return PadicScalar::make(ctx, v, abs, raw_add(ctx, ra, rb));
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  require_same_context(a, b);
  const auto& ctx = a.ctx_;
  if (a.zero_ && b.zero_) return PadicScalar::zero(ctx, a.abs_ + b.abs_);
  if (a.zero_) return PadicScalar::zero(ctx, a.abs_ + b.val_);
  if (b.zero_) return PadicScalar::zero(ctx, b.abs_ + a.val_);
  const int val = a.val_ + b.val_;
  const int rel = std::min(a.abs_ - a.val_, b.abs_ - b.val_);
  return PadicScalar::make(ctx, val, val + rel, raw_mul(ctx, a.unit_, b.unit_));
}

PadicScalar PadicScalar::inverse() const {
  if (zero_) fail(Errc::DivisionByZeroToPrecision, "inverse of zero to precision O(pi^" + std::to_string(abs_) + ")");
  return make(ctx_, -val_, -val_ + (abs_ - val_), raw_inverse(ctx_, unit_));
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
  require_same_context(a, b);
  if (b.zero_)
    fail(Errc::DivisionByZeroToPrecision, "division by zero to precision O(pi^" + std::to_string(b.abs_) + ")");
  const auto& ctx = a.ctx_;
  if (a.zero_) return PadicScalar::zero(ctx, a.abs_ - b.val_);
  const int val = a.val_ - b.val_;
  const int rel = std::min(a.abs_ - a.val_, b.abs_ - b.val_);
  return PadicScalar::make(ctx, val, val + rel, raw_mul(ctx, a.unit_, raw_inverse(ctx, b.unit_)));
}

PadicScalar PadicScalar::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  PadicScalar result = one(ctx_);
  PadicScalar base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

PadicScalar PadicScalar::mul_pi_power(int k) const {
  if (zero_) return zero(ctx_, abs_ + k);
  return make(ctx_, val_ + k, abs_ + k, unit_);
}

PadicScalar PadicScalar::with_absolute_precision(int k) const {
  if (zero_) return zero(ctx_, std::min(abs_, k));
  return make(ctx_, val_, std::min(abs_, k), unit_);
}

PadicScalar PadicScalar::change_context(const PadicContext& other) const {
  if (!same_field(ctx_, other)) fail(Errc::ContextMismatch, ctx_.str() + " -> " + other.str());
  if (zero_) return zero(other, abs_);
  Coeffs raw = unit_;
  for (auto& c : raw) c %= other.modulus();
  return make(other, val_, abs_, std::move(raw));
}

PadicScalar PadicScalar::lift_exact(const PadicContext& other) const {
  if (!same_field(ctx_, other)) fail(Errc::ContextMismatch, ctx_.str() + " -> " + other.str());
  if (zero_) return zero(other);
  Coeffs raw = unit_;
  for (auto& c : raw) c %= other.modulus();
  return make(other, val_, val_ + other.m(), std::move(raw));
}

bool PadicScalar::equals(const PadicScalar& o) const {
  if (!same_field(ctx_, o.ctx_)) return false;
  if (ctx_ == o.ctx_) return (*this - o).is_zero();
  const PadicContext& small = ctx_.m() <= o.ctx_.m() ? ctx_ : o.ctx_;
  return (change_context(small) - o.change_context(small)).is_zero();
}

bool PadicScalar::identical(const PadicScalar& o) const {
  if (!(ctx_ == o.ctx_) || zero_ != o.zero_ || abs_ != o.abs_) return false;
  if (zero_) return true;
  return val_ == o.val_ && unit_ == o.unit_;
}

std::string PadicScalar::str() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(pi^" << abs_ << ")";
    return os.str();
  }
  os << "pi^" << val_ << "*[";
  auto d = digits();
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d[i];
  os << "]+O(pi^" << abs_ << ")";
  return os.str();
}

}  // namespace eigenkit::padic
