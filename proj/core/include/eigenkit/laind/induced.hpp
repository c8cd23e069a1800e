#pragma once

#include <memory>
#include <vector>

#include "eigenkit/laind/monomials.hpp"
#include "eigenkit/padic/linalg.hpp"
#include "eigenkit/weight/character.hpp"

namespace eigenkit::laind {

using padic::PadicContext;
using padic::PadicScalar;
using padic::PMatrix;
using padic::PVector;
using padic::Rational;
using weight::Character;

// Restriction to N^0 of a function f on the Iwahori with f(ib) = kappa(b) f(i), as a polynomial
// in the z_{k,l} truncated at the basis degree.
class InducedFunction {
 public:
  InducedFunction(Character kappa, std::shared_ptr<const MonomialBasis> basis, PVector coeffs, Rational w = 1);

  static InducedFunction zero(const Character& kappa, std::shared_ptr<const MonomialBasis> basis, Rational w = 1);
  static InducedFunction monomial(const Character& kappa, std::shared_ptr<const MonomialBasis> basis,
                                  std::size_t idx, Rational w = 1);

  const Character& kappa() const noexcept { return kappa_; }
  const std::shared_ptr<const MonomialBasis>& basis() const noexcept { return basis_; }
  const PVector& coeffs() const noexcept { return c_; }
  const PadicContext& context() const { return kappa_.context(); }
  Rational w() const noexcept { return w_; }
  int g() const noexcept { return basis_->g(); }

  InducedFunction retagged(const Character& kappa) const;
  InducedFunction with_coeffs(PVector c) const;

  // -log_p of the sup norm of the coefficients c_M p^{-|M|} (coordinates in pZ_p), in pi units.
  int gauss_valuation() const;
  bool is_zero() const;
  bool equals(const InducedFunction& o) const;

  friend InducedFunction operator+(const InducedFunction& a, const InducedFunction& b);
  friend InducedFunction operator-(const InducedFunction& a, const InducedFunction& b);
  friend InducedFunction operator*(const PadicScalar& c, const InducedFunction& f);

 private:
  Character kappa_;
  std::shared_ptr<const MonomialBasis> basis_;
  PVector c_;
  Rational w_;
};

}  // namespace eigenkit::laind
