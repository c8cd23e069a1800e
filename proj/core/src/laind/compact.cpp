#include "eigenkit/laind/compact.hpp"

#include "eigenkit/error.hpp"

namespace eigenkit::laind {

int u_slope(const MonomialBasis& basis, std::size_t idx) {
  int s = 0;
  const auto& M = basis.monomial(idx);
  for (std::size_t v = 0; v < basis.variables().size(); ++v)
    s += (basis.variables()[v].k - basis.variables()[v].l) * M[v];
  return s;
}

spectral::CompactOperatorModel compact_u_matrix(const PadicContext& ctx, int g, int D,
                                                const std::optional<TorusTwist>& twist) {
  if (g < 1) fail(Errc::InvalidArgument, "g must be positive");
  if (D < 0) fail(Errc::InvalidArgument, "degree must be nonnegative");
  auto basis = make_basis(g, D);
  std::vector<PadicScalar> diag;
  for (std::size_t idx = 0; idx < basis->size(); ++idx)
    diag.push_back(PadicScalar::uniformizer_power(ctx, ctx.e() * u_slope(*basis, idx)));
  if (twist) {
    if (static_cast<int>(twist->t.size()) != g || twist->kappa.g() != g)
      fail(Errc::InvalidArgument, "torus twist has the wrong rank");
    for (const auto& x : twist->t)
      if (!x.is_unit()) fail(Errc::NonUnitTorusPoint, "torus point entries must be units");
    const PadicScalar k_inv = weight::eval_character(twist->kappa, twist->t).inverse();
    for (std::size_t idx = 0; idx < basis->size(); ++idx) {
      PadicScalar f = k_inv;
      const auto w = basis->torus_weight(idx);
      for (int i = 0; i < g; ++i) f *= twist->t[i].pow(w[i]);
      diag[idx] = diag[idx] * f;
    }
  }
  // Monomials of degree D+1 have eigenvalue valuation >= D+1; the recorded bound is p^-D.
  const std::optional<int> tail = g == 1 ? padic::kInfiniteValuation : ctx.e() * D;
  spectral::CompactOperatorModel U(padic::diagonal(diag), tail);
  U.generator = [diag](std::size_t j) {
    PVector col(diag.size(), PadicScalar::zero(diag.front().context()));
    col.at(j) = diag[j];
    return col;
  };
  return U;
}

}  // namespace eigenkit::laind
