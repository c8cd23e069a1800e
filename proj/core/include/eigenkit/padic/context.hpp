#pragma once

#include <cstdint>
#include <string>

namespace eigenkit::padic {

using u128 = unsigned __int128;
using i128 = __int128;

// Fixes K = Q_p(pi) with pi^e = p and the capped precision m, counted in pi-adic digits.
class PadicContext {
 public:
  PadicContext(std::uint32_t p, int e, int m);

  // Ramification e = 2(p-1), so that 1/(p-1) and 2/(p-1) are valuations of K.
  static PadicContext with_default_ramification(std::uint32_t p, int m);

  std::uint32_t p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int m() const noexcept { return m_; }

  // Unit parts are stored modulo p^modulus_exponent() = p^ceil(m/e).
  int modulus_exponent() const noexcept { return n_; }
  u128 modulus() const noexcept { return modulus_; }

  // p^k for 0 <= k <= modulus_exponent(); larger k saturate to 0 (the value is 0 mod the modulus).
  u128 p_power(int k) const noexcept;

  PadicContext with_precision(int m) const { return PadicContext(p_, e_, m); }

  std::string str() const;

  friend bool operator==(const PadicContext& a, const PadicContext& b) noexcept {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.m_ == b.m_;
  }

 private:
  std::uint32_t p_;
  int e_;
  int m_;
  int n_;
  u128 modulus_;
};

// Largest cap m for which PadicContext(p, e, m) fits the 126-bit storage.
int max_precision(std::uint32_t p, int e);

// Same field, possibly different precision cap.
inline bool same_field(const PadicContext& a, const PadicContext& b) noexcept {
  return a.p() == b.p() && a.e() == b.e();
}

}  // namespace eigenkit::padic
