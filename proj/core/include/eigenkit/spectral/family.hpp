#pragma once

#include <optional>
#include <vector>

#include "eigenkit/padic/series.hpp"
#include "eigenkit/spectral/factor.hpp"

namespace eigenkit::spectral {

using padic::TruncatedSeries;
using SeriesMatrix = padic::Matrix<TruncatedSeries>;

// Operator over the Tate algebra in S_1..S_g truncated at total degree D_A; entries are treated as
// polynomials, so specialization anywhere in the closed unit polydisc is exact.
struct FamilyOperatorModel {
  SeriesMatrix matrix;
  std::optional<int> tail_valuation;

  FamilyOperatorModel(SeriesMatrix m, std::optional<int> tail);

  const PadicContext& context() const { return matrix(0, 0).context(); }
  std::size_t size() const noexcept { return matrix.rows(); }
  int nvars() const { return matrix(0, 0).nvars(); }
  int degree() const { return matrix(0, 0).degree(); }
};

// The constant family with fibre A everywhere.
FamilyOperatorModel constant_family(const PMatrix& A, const std::vector<std::string>& names, int degree);

// The fibre at a point of the closed unit polydisc.
CompactOperatorModel specialize(const FamilyOperatorModel& F, const std::vector<PadicScalar>& point);
// Coefficients of det(1 - T U(S)) as series in S.
std::vector<TruncatedSeries> family_fredholm(const FamilyOperatorModel& F);
// Re-expands a series around `point`: f(point + S).
TruncatedSeries recenter(const TruncatedSeries& f, const std::vector<PadicScalar>& point);

struct FiberPoint {
  std::optional<PadicScalar> eigenvalue;  // empty when the root lies outside K
  Rational slope;
  int multiplicity = 0;
};

struct FiberData {
  std::vector<FiberPoint> points;
  int degree = 0;  // deg Q at this fibre
};

FiberData fiber_eigendata(const FamilyOperatorModel& F, const std::vector<PadicScalar>& point, Rational h,
                          BoundarySide side = BoundarySide::None);

struct LiftOptions {
  std::optional<std::size_t> normalize_index;  // coordinate fixed to 1 (default: first of minimal valuation)
  std::vector<FamilyOperatorModel> commuting;   // operators whose eigenvalues are carried along
  int max_iterations = 0;                       // 0: degree + 8
};

struct FamilyEigen {
  TruncatedSeries eigenvalue;
  std::vector<TruncatedSeries> vector;
  std::size_t normalize_index = 0;
  std::vector<TruncatedSeries> commuting_eigenvalues;
  int iterations = 0;
  int residual_precision = 0;  // min valuation of U v - lambda v
};

// Bordered chord-Newton lift of the simple eigenpair at `point` to the whole truncated family,
// in coordinates S centred at `point`.
FamilyEigen eigen_family_lift(const FamilyOperatorModel& F, const std::vector<PadicScalar>& point,
                              const PadicScalar& lambda0, const LiftOptions& opts = {});

}  // namespace eigenkit::spectral
