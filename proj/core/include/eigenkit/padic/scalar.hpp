#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eigenkit/padic/context.hpp"

namespace eigenkit::padic {

using Rational = boost::rational<std::int64_t>;

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max() / 4;

// An element of Z_p known modulo p^digits.
struct ZpValue {
  u128 residue = 0;
  int digits = 0;
};

// x = pi^val * u, u a unit known modulo pi^(abs - val).
//
// The unit is stored as c_0 + c_1 pi + ... + c_{e-1} pi^{e-1} with c_j in Z/p^N.
// A zero-to-precision value only records its absolute precision; valuation() then
// reports that precision (a lower bound).
class PadicScalar {
 public:
  using Coeffs = boost::container::small_vector<u128, 8>;

  static PadicScalar zero(const PadicContext& ctx);
  static PadicScalar zero(const PadicContext& ctx, int absolute_precision);
  static PadicScalar one(const PadicContext& ctx);
  static PadicScalar from_int(const PadicContext& ctx, i128 n);
  static PadicScalar from_rational(const PadicContext& ctx, i128 num, i128 den);
  static PadicScalar uniformizer_power(const PadicContext& ctx, int k);
  // sum_i digits[i] pi^(valuation+i), known to absolute precision valuation + digits.size()
  // unless a smaller absolute_precision is given.
  static PadicScalar from_digits(const PadicContext& ctx, int valuation, std::span<const std::uint32_t> digits,
                                 std::optional<int> absolute_precision = std::nullopt);
  static PadicScalar from_zp(const PadicContext& ctx, const ZpValue& z);

  const PadicContext& context() const noexcept { return ctx_; }

  bool is_zero() const noexcept { return zero_; }
  int valuation() const noexcept { return zero_ ? abs_ : val_; }
  Rational valuation_p() const;
  int absolute_precision() const noexcept { return abs_; }
  int relative_precision() const noexcept { return zero_ ? 0 : abs_ - val_; }
  bool is_unit() const noexcept { return !zero_ && val_ == 0; }
  bool is_integral() const noexcept { return zero_ ? abs_ >= 0 : val_ >= 0; }

  // pi-adic digits of the unit part, d_0 != 0 for nonzero values.
  std::vector<std::uint32_t> digits() const;
  // Unit-part coefficients (internal representation, reduced).
  const Coeffs& unit_coefficients() const noexcept { return unit_; }

  // Value as an element of Z_p, if it lies there.
  std::optional<ZpValue> to_zp() const;
  // Residue in F_p of an integral element.
  std::uint32_t residue() const;

  PadicScalar operator-() const;
  PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
  PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
  PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }
  PadicScalar& operator/=(const PadicScalar& o) { return *this = *this / o; }

  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);

  PadicScalar inverse() const;
  PadicScalar pow(std::int64_t n) const;
  PadicScalar mul_pi_power(int k) const;  // exact shift of valuation
  PadicScalar with_absolute_precision(int k) const;
  // Same field, new cap; precision never grows beyond what is known.
  PadicScalar change_context(const PadicContext& other) const;
  // Same field; unknown digits are taken to be zero and the result is exact in `other`.
  PadicScalar lift_exact(const PadicContext& other) const;

  // Equality at the joint precision.
  bool equals(const PadicScalar& o) const;
  friend bool operator==(const PadicScalar& a, const PadicScalar& b) { return a.equals(b); }
  // Same precision, same digits.
  bool identical(const PadicScalar& o) const;

  std::string str() const;

 private:
  PadicScalar(const PadicContext& ctx) : ctx_(ctx) {}
  static PadicScalar make(const PadicContext& ctx, int val, int abs, Coeffs raw);

  PadicContext ctx_;
  int val_ = 0;
  int abs_ = 0;
  bool zero_ = true;
  Coeffs unit_;
};

void require_same_context(const PadicScalar& a, const PadicScalar& b);

}  // namespace eigenkit::padic
