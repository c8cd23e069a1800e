#include "eigenkit/cech/open_mapping.hpp"

#include "eigenkit/error.hpp"

namespace eigenkit::cech {

OpenMappingBound open_mapping_bound(const PMatrix& s) {
  const auto& ctx = s.zero().context();
  const std::size_t m = s.rows(), n = s.cols();
  if (m == 0 || padic::rank(s) != m) fail(Errc::InvalidArgument, "map is not surjective");
  PMatrix t = padic::zeros(ctx, n, m);
  for (std::size_t j = 0; j < m; ++j) {
    PVector ej(m, PadicScalar::zero(ctx));
    ej[j] = PadicScalar::one(ctx);
    auto x = padic::solve(s, ej);
    if (!x) fail(Errc::PrecisionLoss, "no preimage found for a basis vector");
    for (std::size_t i = 0; i < n; ++i) t(i, j) = (*x)[i];
  }
  return OpenMappingBound{t, -padic::min_valuation(t), padic::min_valuation(s),
                          padic::min_absolute_precision(t)};
}

Preimage bounded_preimage(const OpenMappingBound& b, const PVector& y) {
  PVector x = b.section.apply(y);
  int vx = padic::min_valuation(x), vy = padic::min_valuation(y);
  bool ok = vx >= vy - b.upper && vx <= vy - b.lower;
  return Preimage{std::move(x), ok};
}

}  // namespace eigenkit::cech
