#pragma once

#include "eigenkit/spectral/fredholm.hpp"

namespace eigenkit::spectral {

// Where a segment of slope exactly h goes; None rejects such an h.
enum class BoundarySide { None, Below, Above };

struct SlopeFactorization {
  Rational h;
  BoundarySide side = BoundarySide::None;
  Polynomial Q;   // slopes <= h, Q(0) = 1
  Polynomial R;   // power series prefix, R(0) = 1, slopes > h
  Polynomial a;   // a Q + b R = 1 modulo pi^bezout_precision (R truncated to the prefix degree)
  Polynomial b;
  int bezout_precision = 0;
  int product_precision = 0;  // Q R = P modulo (pi^product_precision, T^(N+1))
  std::size_t prefix = 0;     // length of the factored polynomial prefix
  FredholmSeries P;

  int degree() const { return Q.degree(); }
};

SlopeFactorization slope_factor(const FredholmSeries& P, Rational h, BoundarySide side = BoundarySide::None);

// Helper shared with the projector: extra pi-adic digits a computation can afford at this context.
int guard_budget(const PadicContext& ctx, int wanted);

}  // namespace eigenkit::spectral
