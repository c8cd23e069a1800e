#pragma once

#include <optional>
#include <vector>

#include "eigenkit/cech/chart.hpp"
#include "eigenkit/padic/matrix.hpp"

namespace eigenkit::cech {

using LaurentMatrix = padic::Matrix<Laurent>;

// Identity transition of rank n.
LaurentMatrix identity_transition(const PadicContext& ctx, std::size_t n);

struct CechOptions {
  // Stop the splitting iteration once the residual valuation reaches this (defaults to ctx.m()).
  std::optional<int> target;
  int max_rounds = 64;
  // Glue M- to M+ on the overlap by a+ = T a- instead of the identity.
  std::optional<LaurentMatrix> transition;
};

struct CechReport {
  bool injective = false;
  bool middle_exact = false;
  // Valuation of the worst residual when lifting ker d back to M; ctx.m() means exact.
  int middle_defect = 0;
  int rounds = 0;
  // Worst one-round contraction |r_{k+1}| / |r_k| as a valuation; ctx.m() when the first round is exact.
  int epsilon_valuation = 0;
  double epsilon = 0.0;
  std::size_t recovered_rank = 0;
};

// Checks 0 -> M -> M+ (+) M- -> M+- -> 0 on the Laurent cover for M = C(I) over A.
CechReport cech_check(const spectral::BanachModuleModel& M, const AffinoidModel& A, const CechOptions& opts = {});

struct GlueResult {
  std::size_t rank = 0;
  // K-basis of H^0 on the truncation: plus and minus components.
  std::vector<std::vector<Laurent>> plus, minus;
  spectral::BanachModuleModel module;
  // Fibre ranks of H^0 at x = 0, x = p and x = 1.
  std::vector<std::size_t> fibre_ranks;
  bool round_trip = false;
};

// H^0 of the module glued from free charts of rank n along a+ = T a-. T must have unit Gauss norm
// with an invertible unit-norm determinant on the overlap.
GlueResult kiehl_glue(const AffinoidModel& A, const LaurentMatrix& T);

}  // namespace eigenkit::cech
