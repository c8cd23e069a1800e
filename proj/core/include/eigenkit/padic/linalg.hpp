#pragma once

#include <optional>
#include <vector>

#include "eigenkit/padic/matrix.hpp"
#include "eigenkit/padic/polynomial.hpp"
#include "eigenkit/padic/scalar.hpp"

namespace eigenkit::padic {

using PMatrix = Matrix<PadicScalar>;
using PVector = std::vector<PadicScalar>;

PMatrix zeros(const PadicContext& ctx, std::size_t rows, std::size_t cols);
PMatrix identity(const PadicContext& ctx, std::size_t n);
PMatrix diagonal(const PVector& d);
PMatrix from_ints(const PadicContext& ctx, const std::vector<std::vector<long long>>& rows);

// Reduced row echelon form with minimum-valuation pivoting; entries that are zero to
// their precision count as zero.
struct Echelon {
  PMatrix rref;
  std::vector<std::size_t> pivot_cols;
};
Echelon echelon(const PMatrix& A);

std::size_t rank(const PMatrix& A);
std::vector<PVector> kernel(const PMatrix& A);
std::optional<PVector> solve(const PMatrix& A, const PVector& b);
PMatrix inverse(const PMatrix& A);
PadicScalar determinant(const PMatrix& A);

bool is_diagonal(const PMatrix& A);
bool is_upper_triangular(const PMatrix& A);

// Coefficients [1, c_1, ..., c_n] of det(1 - T A).
PVector fredholm_determinant(const PMatrix& A);
// det(T - A), monic.
Polynomial characteristic_polynomial(const PMatrix& A);

// Minimum valuation over all entries (kInfiniteValuation if all vanish).
int min_valuation(const PMatrix& A);
int min_valuation(const PVector& v);
int min_absolute_precision(const PMatrix& A);
// All entries vanish modulo pi^k.
bool vanishes_mod(const PMatrix& A, int k);
PMatrix evaluate(const Polynomial& f, const PMatrix& A);
PadicScalar trace(const PMatrix& A);
PMatrix change_context(const PMatrix& A, const PadicContext& ctx);

}  // namespace eigenkit::padic
