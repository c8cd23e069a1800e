#pragma once

#include <optional>
#include <vector>

#include "eigenkit/laind/operators.hpp"
#include "eigenkit/spectral/fredholm.hpp"

namespace eigenkit::laind {

// Composes the model with the torus action of t on weight kappa.
struct TorusTwist {
  Character kappa;
  std::vector<PadicScalar> t;
};

// prod_{i=1}^g delta_i on the degree <= D monomial basis: z^M -> p^{sum (k-l) M_kl} z^M.
spectral::CompactOperatorModel compact_u_matrix(const PadicContext& ctx, int g, int D,
                                                const std::optional<TorusTwist>& twist = std::nullopt);

// Exponent sum_{k>l} (k-l) M_kl of the eigenvalue on monomial idx.
int u_slope(const MonomialBasis& basis, std::size_t idx);

}  // namespace eigenkit::laind
