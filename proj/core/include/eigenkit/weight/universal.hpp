#pragma once

#include <vector>

#include "eigenkit/padic/series.hpp"
#include "eigenkit/weight/character.hpp"

namespace eigenkit::weight {

using padic::TruncatedSeries;

struct UniversalCharacterChart {
  Rational w;
  int g;
  int degree;
};

// prod_i (1 + p^w X_i)^(S_i p^(-w + 2/(p-1))) in the variables S_1..S_g, X_1..X_g, truncated at
// total degree D. p^w is realised as pi^(e w).
TruncatedSeries universal_character_eval(const PadicContext& ctx, const UniversalCharacterChart& chart);

// The universal character restricted to one weight.
struct SpecializedCharacter {
  Character kappa;
  Rational w;
  std::vector<PadicScalar> coordinates;  // S_i values
  TruncatedSeries series;                // in X_1..X_g (S specialised)
  int certified_precision;               // pi-adic digits

  // kappa(t_i (1 + p^w x_i)) for units t_i of Z_p and integral x_i.
  PadicScalar evaluate(const std::vector<PadicScalar>& t, const std::vector<PadicScalar>& x) const;
};

// Weight coordinates S_i = (log s_i / log(1+p)) p^(w - 2/(p-1)) of kappa.
std::vector<PadicScalar> weight_coordinates(const Character& kappa, Rational w);

SpecializedCharacter specialize_universal(const TruncatedSeries& series, const Character& kappa, Rational w);

}  // namespace eigenkit::weight
