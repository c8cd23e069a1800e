#include "eigenkit/spectral/fredholm.hpp"

#include <algorithm>

#include "eigenkit/error.hpp"

namespace eigenkit::spectral {

CompactOperatorModel::CompactOperatorModel(PMatrix m, std::optional<int> tail, int s)
    : matrix(std::move(m)), tail_valuation(tail), scaling(s) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols())
    fail(Errc::InvalidArgument, "operator model needs a nonempty square matrix");
  for (std::size_t j = 0; j < size(); ++j)
    if (column_valuation(j) < 0) fail(Errc::InvalidArgument, "stored columns must have norm <= 1");
}

PMatrix CompactOperatorModel::truncation(std::size_t N) const {
  if (N > size()) fail(Errc::InvalidArgument, "truncation beyond the stored block");
  return matrix.block(0, 0, N, N);
}

int CompactOperatorModel::column_valuation(std::size_t j) const {
  int v = kInfiniteValuation;
  for (std::size_t i = 0; i < size(); ++i) v = std::min(v, matrix(i, j).valuation());
  return v;
}

int CompactOperatorModel::tail_bound(std::size_t N) const {
  if (N > size()) fail(Errc::InvalidArgument, "truncation beyond the stored block");
  if (!tail_valuation) fail(Errc::TailBoundMissing, "operator model has no tail bound");
  int t = *tail_valuation;
  for (std::size_t j = N; j < size(); ++j) t = std::min(t, column_valuation(j));
  return t;
}

CompactOperatorModel finite_operator(const PMatrix& A) {
  const int v = padic::min_valuation(A);
  const int s = (v < 0 && v != kInfiniteValuation) ? -v : 0;
  PMatrix B = A;
  if (s > 0)
    for (std::size_t i = 0; i < B.rows(); ++i)
      for (std::size_t j = 0; j < B.cols(); ++j) B(i, j) = B(i, j).mul_pi_power(s);
  return CompactOperatorModel(std::move(B), kInfiniteValuation, s);
}

Polynomial FredholmSeries::polynomial() const { return Polynomial(context(), coeffs); }

FredholmSeries fredholm_series(const CompactOperatorModel& U, std::size_t N, std::optional<int> precision) {
  const PadicContext& ctx = U.context();
  const int prec = std::min(precision.value_or(ctx.m()), ctx.m());
  if (prec < 1) fail(Errc::InvalidArgument, "precision must be positive");
  FredholmSeries P;
  P.precision = prec;
  const int tau = U.tail_bound(N);
  P.exact = tau >= kInfiniteValuation;
  if (N == 0) {
    P.coeffs = {PadicScalar::one(ctx)};
  } else {
    P.coeffs = padic::fredholm_determinant(U.truncation(N));
  }
  for (auto& c : P.coeffs) c = c.with_absolute_precision(prec);

  // A principal minor that meets a discarded index has one column of valuation >= tau; the
  // others contribute at least the smallest stored column valuations.
  std::vector<long long> cols;
  for (std::size_t j = 0; j < N; ++j) cols.push_back(U.column_valuation(j));
  std::sort(cols.begin(), cols.end());
  P.certified.assign(N + 1, prec);
  long long partial = 0;
  for (std::size_t n = 1; n <= N; ++n) {
    if (n >= 2) partial += std::min<long long>(cols[n - 2], tau);
    const long long bound = P.exact ? kInfiniteValuation : static_cast<long long>(tau) + partial;
    P.certified[n] = static_cast<int>(std::min<long long>({prec, bound, P.coeffs[n].absolute_precision()}));
  }
  P.certified_prefix = 0;
  while (P.certified_prefix < N && P.certified[P.certified_prefix + 1] >= prec) ++P.certified_prefix;
  auto valuation_known = [&](std::size_t n) {
    return !P.coeffs[n].is_zero() && P.coeffs[n].valuation() < P.certified[n];
  };
  P.slope_prefix = 0;
  while (P.slope_prefix < N && valuation_known(P.slope_prefix + 1)) ++P.slope_prefix;
  return P;
}

NewtonPolygon newton_slopes(const FredholmSeries& P) {
  if (P.slope_prefix == 0 && P.truncation() > 0) {
    const bool vanishes = std::all_of(P.coeffs.begin() + 1, P.coeffs.end(), [&](const PadicScalar& c) {
      return c.is_zero() && c.absolute_precision() >= P.precision;
    });
    if (!(P.exact && vanishes)) fail(Errc::PrefixTooShort, "no coefficient beyond c_0 has a certified valuation");
  }
  std::vector<PadicScalar> pre(P.coeffs.begin(), P.coeffs.begin() + static_cast<long>(P.slope_prefix) + 1);
  return padic::newton_polygon(pre);
}

bool agrees_on_prefix(const FredholmSeries& a, const FredholmSeries& b, std::size_t n) {
  if (n > a.truncation() || n > b.truncation()) return false;
  for (std::size_t k = 0; k <= n; ++k) {
    const int prec = std::min(a.certified[k], b.certified[k]);
    if (!(a.coeffs[k] - b.coeffs[k]).with_absolute_precision(prec).is_zero()) return false;
  }
  return true;
}

}  // namespace eigenkit::spectral
