#pragma once

#include <vector>

#include "eigenkit/error.hpp"
#include "eigenkit/padic/scalar.hpp"

namespace eigenkit::spectral {

// First `len` coefficients of num / den as power series in T; den(0) must be invertible.
inline std::vector<padic::PadicScalar> series_quotient(const std::vector<padic::PadicScalar>& num,
                                                       const std::vector<padic::PadicScalar>& den, std::size_t len) {
  const auto& ctx = den.front().context();
  const padic::PadicScalar inv = den.front().inverse();
  std::vector<padic::PadicScalar> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    padic::PadicScalar acc = k < num.size() ? num[k] : padic::PadicScalar::zero(ctx);
    for (std::size_t j = 1; j < den.size() && j <= k; ++j) acc -= den[j] * out[k - j];
    out.push_back(acc * inv);
  }
  return out;
}

}  // namespace eigenkit::spectral
