#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eigenkit/padic/scalar.hpp"

namespace eigenkit::weight {

using padic::PadicContext;
using padic::PadicScalar;
using padic::Rational;

// A continuous character of T(Z_p) = (Z_p^x)^g: a character of T(Z/pZ), given by exponents on
// Teichmuller lifts, times t -> prod s_i^(log x_i / log(1+p)) on the 1-unit parts.
class Character {
 public:
  Character(std::vector<long long> chi, std::vector<PadicScalar> s,
            std::optional<std::vector<long long>> algebraic = std::nullopt);

  static Character algebraic_weight(const PadicContext& ctx, std::vector<long long> k);
  static Character trivial(const PadicContext& ctx, int g);

  const PadicContext& context() const { return s_.front().context(); }
  int g() const noexcept { return static_cast<int>(s_.size()); }
  const std::vector<long long>& chi() const noexcept { return chi_; }
  const std::vector<PadicScalar>& s() const noexcept { return s_; }
  const std::optional<std::vector<long long>>& algebraic() const noexcept { return alg_; }
  bool is_algebraic() const noexcept { return alg_.has_value(); }
  bool is_dominant() const;
  // log s_i / log(1+p)
  std::vector<PadicScalar> exponents() const;

  bool equals(const Character& o) const;
  friend bool operator==(const Character& a, const Character& b) { return a.equals(b); }

 private:
  std::vector<long long> chi_;
  std::vector<PadicScalar> s_;
  std::optional<std::vector<long long>> alg_;
};

PadicScalar eval_character(const Character& kappa, std::span<const PadicScalar> t);

// kappa'(t) = kappa(w0 t^-1 w0).
Character involution(const Character& kappa);

// Smallest w on the grid (1/e)Z for which kappa extends analytically to T(Z_p)(1 + p^w O)^g,
// judged by a coefficient scan up to max_degree (default 2m).
Rational analyticity_radius(const Character& kappa, std::optional<int> max_degree = std::nullopt);

}  // namespace eigenkit::weight
