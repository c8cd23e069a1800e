#pragma once

#include "eigenkit/padic/linalg.hpp"

namespace eigenkit::cech {

using padic::PMatrix;
using padic::PadicScalar;
using padic::PVector;

// For a surjection s: K^n -> K^m with the sup norms, every y has a preimage x with
// v(y) - upper <= v(x) and any preimage satisfies v(x) <= v(y) - lower.
struct OpenMappingBound {
  PMatrix section;  // s * section = 1
  int upper = 0;    // -min valuation of the section
  int lower = 0;    // min valuation of s
  int precision = 0;  // absolute precision to which s t = 1 is known
};

OpenMappingBound open_mapping_bound(const PMatrix& s);

// Preimage x = section * y together with the two-sided check of the bound.
struct Preimage {
  PVector x;
  bool within_bound = false;
};

Preimage bounded_preimage(const OpenMappingBound& b, const PVector& y);

}  // namespace eigenkit::cech
