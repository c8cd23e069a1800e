#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eigenkit/padic/scalar.hpp"

namespace eigenkit::padic {

// Dense univariate polynomial, coefficients in increasing degree.
class Polynomial {
 public:
  explicit Polynomial(const PadicContext& ctx) : ctx_(ctx) {}
  Polynomial(const PadicContext& ctx, std::vector<PadicScalar> coeffs);

  static Polynomial constant(const PadicScalar& c);
  static Polynomial monomial(const PadicScalar& c, int k);
  static Polynomial from_ints(const PadicContext& ctx, const std::vector<long long>& coeffs);

  const PadicContext& context() const noexcept { return ctx_; }
  const std::vector<PadicScalar>& coeffs() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }
  // Index of the last coefficient that is nonzero to its precision; -1 for the zero polynomial.
  int degree() const;
  PadicScalar operator[](std::size_t k) const;
  void set(std::size_t k, const PadicScalar& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const PadicScalar& c);
  friend Polynomial operator*(const PadicScalar& c, const Polynomial& a) { return a * c; }

  PadicScalar evaluate(const PadicScalar& x) const;
  Polynomial derivative() const;
  // Reduction modulo T^n.
  Polynomial truncated(std::size_t n) const;
  // T^n f(1/T).
  Polynomial reversed(int n) const;
  // Drops trailing coefficients that are zero to precision.
  Polynomial trimmed() const;
  // Euclidean division by d, whose degree-d.degree() coefficient must be invertible.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  int min_absolute_precision() const;
  bool equals(const Polynomial& o) const;
  std::string str() const;

 private:
  PadicContext ctx_;
  std::vector<PadicScalar> c_;
};

}  // namespace eigenkit::padic
