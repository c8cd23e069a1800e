#include "eigenkit/padic/context.hpp"

#include "eigenkit/error.hpp"

namespace eigenkit::padic {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PadicContext::PadicContext(std::uint32_t p, int e, int m) : p_(p), e_(e), m_(m) {
  if (p < 3 || !is_prime(p)) fail(Errc::InvalidContext, "p must be an odd prime, got " + std::to_string(p));
  if (e < 1) fail(Errc::InvalidContext, "ramification index must be positive");
  if (m < 1) fail(Errc::InvalidContext, "precision cap must be positive");
  n_ = (m + e - 1) / e;
  const u128 limit = static_cast<u128>(1) << 126;
  modulus_ = 1;
  for (int i = 0; i < n_; ++i) {
    if (modulus_ > limit / p) {
      fail(Errc::InvalidContext, "p^ceil(m/e) exceeds 126 bits (p=" + std::to_string(p) +
                                     ", e=" + std::to_string(e) + ", m=" + std::to_string(m) + ")");
    }
    modulus_ *= p;
  }
}

PadicContext PadicContext::with_default_ramification(std::uint32_t p, int m) {
  return PadicContext(p, 2 * (static_cast<int>(p) - 1), m);
}

u128 PadicContext::p_power(int k) const noexcept {
  if (k > n_) return 0;
  u128 r = 1;
  for (int i = 0; i < k; ++i) r *= p_;
  return r;
}

int max_precision(std::uint32_t p, int e) {
  const u128 limit = static_cast<u128>(1) << 126;
  u128 q = 1;
  int n = 0;
  while (q <= limit / p) q *= p, ++n;
  return n * e;
}

std::string PadicContext::str() const {
  return "Q_" + std::to_string(p_) + "(pi^" + std::to_string(e_) + "=p) cap " + std::to_string(m_);
}

}  // namespace eigenkit::padic
