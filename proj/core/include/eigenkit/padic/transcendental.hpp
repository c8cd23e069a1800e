#pragma once

#include <cstdint>

#include "eigenkit/padic/scalar.hpp"

namespace eigenkit::padic {

// The (p-1)-th root of unity congruent to x mod p.
PadicScalar teichmuller(const PadicContext& ctx, i128 x);

// t = teich * one_unit for a unit t of Z_p.
struct UnitSplit {
  std::uint32_t residue;
  PadicScalar teich;
  PadicScalar one_unit;
};
UnitSplit split_unit(const PadicScalar& t);

// s^a for a 1-unit s and a in Z_p, via s^a = prod_j (s^(p^j))^(a_j).
PadicScalar one_unit_pow(const PadicScalar& s, const PadicScalar& a);
PadicScalar one_unit_pow(const PadicScalar& s, const ZpValue& a);

PadicScalar log_one_unit(const PadicScalar& x);
PadicScalar exp_small(const PadicScalar& y);

// b with x = (1+p)^b, for x in 1 + pZ_p given modulo p^k; b is known modulo p^(k-1).
ZpValue log_base_one_plus_p(const ZpValue& x, std::uint32_t p);

// L (L-1) ... (L-k+1) / k!
PadicScalar binomial(const PadicScalar& L, int k);

// v_p(n!)
int vp_factorial(long long n, std::uint32_t p);

}  // namespace eigenkit::padic
