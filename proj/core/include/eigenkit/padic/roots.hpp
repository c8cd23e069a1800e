#pragma once

#include <vector>

#include "eigenkit/padic/polynomial.hpp"

namespace eigenkit::padic {

struct PolyRoot {
  PadicScalar value;
  int multiplicity;
};

struct RootResult {
  std::vector<PolyRoot> roots;
  // Roots lying outside K (non-integral valuation in 1/e units or residues outside F_p).
  int unresolved = 0;
};

// Roots of f in K. Distinct roots that agree to the working precision are reported as one
// root with multiplicity.
RootResult find_roots(const Polynomial& f);

}  // namespace eigenkit::padic
