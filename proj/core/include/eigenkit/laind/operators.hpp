#pragma once

#include <vector>

#include "eigenkit/laind/induced.hpp"

namespace eigenkit::laind {

// (t.f)(n) = kappa(t)^-1 f(t^-1 n t): z^M -> kappa(t)^-1 prod (t_k^-1 t_l)^{M_kl} z^M.
InducedFunction torus_act(const std::vector<PadicScalar>& t, const InducedFunction& f);

// z_{k,l} -> p^{n_kl} z_{k,l} with n_kl = 1 iff k >= g-i+1 and l <= g-i.
InducedFunction delta(int i, const InducedFunction& f);
int delta_exponent(const MonomialBasis& basis, int i, std::size_t idx);

// X_{-alpha_i} acting on N^0-coordinates: d/dz_{i+1,i} + sum_{k>i+1} z_{k,i+1} d/dz_{k,i}.
class LoweringField {
 public:
  LoweringField(int g, int i);
  int g() const noexcept { return g_; }
  int index() const noexcept { return i_; }
  PVector apply(const MonomialBasis& basis, const PVector& c) const;
  InducedFunction operator()(const InducedFunction& f) const;

 private:
  int g_, i_;
};

LoweringField lowering_field(int g, int i);

// <kappa, alpha_i^vee> = k_i - k_{i+1} for algebraic kappa.
long long pairing(const Character& kappa, int i);
// kappa - n alpha_i, i.e. kappa * alpha_i^-n.
Character shift_by_root(const Character& kappa, int i, long long n);
// s_alpha . kappa = kappa - (<kappa, alpha^vee> + 1) alpha
Character dot_action(const Character& kappa, int i);

// X_{-alpha_i}^{<kappa,alpha^vee>+1} f, retagged with s_alpha . kappa.
InducedFunction theta_alpha(int i, const InducedFunction& f);
// Same with an explicitly supplied integral pairing.
InducedFunction theta_alpha(int i, long long pairing_value, const InducedFunction& f);

// Operator matrices on the monomial basis (columns = images of basis monomials).
PMatrix delta_matrix(const PadicContext& ctx, const MonomialBasis& basis, int i);
PMatrix theta_matrix(const PadicContext& ctx, const MonomialBasis& basis, int i, long long pairing_value);

}  // namespace eigenkit::laind
