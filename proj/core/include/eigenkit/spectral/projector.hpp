#pragma once

#include <vector>

#include "eigenkit/spectral/factor.hpp"

namespace eigenkit::spectral {

struct RieszProjector {
  PMatrix e;
  std::size_t rank = 0;
  int idempotent_precision = 0;   // min valuation of e^2 - e
  int commutation_precision = 0;  // min valuation of eU - Ue
  int charpoly_precision = 0;     // min valuation of det(1 - T eU) - Q
};

// Projector onto the slope <= h generalized eigenspace of the truncation of U seen by fact.
RieszProjector riesz_projector(const CompactOperatorModel& U, const SlopeFactorization& fact);

struct JointEigensystem {
  std::vector<PadicScalar> values;  // one eigenvalue per operator
  std::size_t multiplicity = 0;
};

// Joint eigenvalue tuples of commuting operators on im e, ordered by first appearance.
std::vector<JointEigensystem> joint_eigensystems(const std::vector<PMatrix>& ops, const PMatrix& e);

}  // namespace eigenkit::spectral
