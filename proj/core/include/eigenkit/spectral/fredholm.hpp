#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "eigenkit/padic/linalg.hpp"
#include "eigenkit/padic/newton_polygon.hpp"

namespace eigenkit::spectral {

using padic::kInfiniteValuation;
using padic::NewtonPolygon;
using padic::PadicContext;
using padic::PadicScalar;
using padic::PMatrix;
using padic::Polynomial;
using padic::PVector;
using padic::Rational;

// A compact operator on C(I) known through its leading block. Columns are ordered along the
// filtration; `tail_valuation` bounds (pi-adically) every column outside the stored block.
struct CompactOperatorModel {
  PMatrix matrix;
  std::optional<int> tail_valuation;  // nullopt: unknown; kInfiniteValuation: finite operator
  int scaling = 0;                    // matrix = pi^scaling * (original operator)
  std::function<PVector(std::size_t)> generator;  // optional column source

  CompactOperatorModel(PMatrix m, std::optional<int> tail, int scaling = 0);

  const PadicContext& context() const { return matrix(0, 0).context(); }
  std::size_t size() const noexcept { return matrix.rows(); }
  // Leading N x N block.
  PMatrix truncation(std::size_t N) const;
  // Valuation bound for all columns of index >= N.
  int tail_bound(std::size_t N) const;
  // Minimum valuation of column j.
  int column_valuation(std::size_t j) const;
};

// Finite operator given by a square matrix; entries of negative valuation are scaled away.
CompactOperatorModel finite_operator(const PMatrix& A);

struct FredholmSeries {
  PVector coeffs;                     // c_0 = 1, ..., c_N of det(1 - T U_N)
  std::vector<int> certified;         // absolute precision valid for the infinite operator
  std::size_t certified_prefix = 0;   // largest n with c_0..c_n certified to the working precision
  std::size_t slope_prefix = 0;       // largest n with c_1..c_n nonzero of certified valuation
  int precision = 0;
  bool exact = false;                 // finite operator: nothing was truncated

  const PadicContext& context() const { return coeffs.front().context(); }
  std::size_t truncation() const noexcept { return coeffs.size() - 1; }
  Polynomial polynomial() const;
};

// det(1 - T U_N) at precision `precision` (default: the context cap), with certified prefixes.
FredholmSeries fredholm_series(const CompactOperatorModel& U, std::size_t N,
                               std::optional<int> precision = std::nullopt);

// Newton polygon of the slope-certified prefix.
NewtonPolygon newton_slopes(const FredholmSeries& P);

// c_0..c_n of both series agree modulo the smaller certified precision.
bool agrees_on_prefix(const FredholmSeries& a, const FredholmSeries& b, std::size_t n);

}  // namespace eigenkit::spectral
