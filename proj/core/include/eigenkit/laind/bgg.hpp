#pragma once

#include <optional>
#include <vector>

#include "eigenkit/laind/operators.hpp"

namespace eigenkit::laind {

// Weyl dimension formula for the algebraic representation of highest weight k.
long long weyl_dimension(const std::vector<long long>& k);

// Basis of the joint kernel of the Theta_alpha on the degree <= D space.
std::vector<InducedFunction> joint_theta_kernel(const Character& kappa, int D);

// Joint kernel, checked to be stable from D to D+1 (TruncationTooSmall otherwise).
std::vector<InducedFunction> algebraic_subspace(const Character& kappa, int D);

struct BggReport {
  int kernel_dim = 0;
  int expected_dim = 0;
  int next_kernel_dim = 0;
  std::vector<Rational> slopes;  // slopes of prod delta_i on the kernel basis
  bool composition_zero = false;
  bool verdict = false;
  int precision_margin = 0;  // pi-adic digits certifying d1 d0 = 0
};

BggReport bgg_check(const Character& kappa, int D);

// delta_{g-i} Theta_i - p^{k_{i+1} - k_i - 1} Theta_i delta_{g-i} on the degree <= D space.
struct CommutationResidual {
  int i = 0;
  bool vanishes = false;
  int precision = 0;     // absolute precision at which the residual is known to vanish
  long long nonzero = 0; // entries that are nonzero to precision
};
std::vector<CommutationResidual> commutation_residuals(const Character& kappa, int D);

enum class Verdict { Classical, NoClaim, Violation };
const char* to_string(Verdict v);

struct ClassicityResult {
  Verdict verdict = Verdict::NoClaim;
  std::vector<Rational> slopes;  // slope of delta_i on f, i = 1..g-1
  std::vector<Rational> bounds;  // v_i
};

// Slope bounds v_{g-i} = k_i - k_{i+1} + 1, returned as v_1..v_{g-1}.
std::vector<Rational> classicity_bounds(const Character& kappa);

// f must be a joint delta-eigenvector; supplied slopes, if any, must match.
ClassicityResult classicity_filter(const InducedFunction& f,
                                   const std::optional<std::vector<Rational>>& slopes = std::nullopt);

// (delta, torus)-isotypic part with all delta_i slopes below v_i, intersected with ker Theta.
std::vector<InducedFunction> classical_subspace(const Character& kappa, int D);

// Equality of spans, decided by ranks.
bool same_span(const std::vector<InducedFunction>& a, const std::vector<InducedFunction>& b);

}  // namespace eigenkit::laind
