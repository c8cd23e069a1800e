#include "eigenkit/padic/linalg.hpp"

#include "eigenkit/error.hpp"

namespace eigenkit::padic {

PMatrix zeros(const PadicContext& ctx, std::size_t rows, std::size_t cols) {
  return PMatrix(rows, cols, PadicScalar::zero(ctx));
}

PMatrix identity(const PadicContext& ctx, std::size_t n) {
  return PMatrix::identity(n, PadicScalar::zero(ctx), PadicScalar::one(ctx));
}

PMatrix diagonal(const PVector& d) {
  if (d.empty()) fail(Errc::InvalidArgument, "empty diagonal");
  PMatrix m = zeros(d[0].context(), d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

PMatrix from_ints(const PadicContext& ctx, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  PMatrix m = zeros(ctx, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = PadicScalar::from_int(ctx, rows[i][j]);
  return m;
}

Echelon echelon(const PMatrix& A) {
  PMatrix M = A;
  const std::size_t R = M.rows(), C = M.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t best = R;
    int bestv = kInfiniteValuation;
    for (std::size_t i = row; i < R; ++i) {
      const auto& x = M(i, col);
      if (!x.is_zero() && x.valuation() < bestv) {
        bestv = x.valuation();
        best = i;
      }
    }
    if (best == R) continue;
    if (best != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(M(row, j), M(best, j));
    const PadicScalar inv = M(row, col).inverse();
    for (std::size_t j = col; j < C; ++j) M(row, j) = M(row, j) * inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row || M(i, col).is_zero()) {
        if (i != row) M(i, col) = PadicScalar::zero(M(i, col).context(), M(i, col).absolute_precision());
        continue;
      }
      const PadicScalar f = M(i, col);
      for (std::size_t j = col; j < C; ++j) M(i, j) = M(i, j) - f * M(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(M), std::move(pivots)};
}

std::size_t rank(const PMatrix& A) { return echelon(A).pivot_cols.size(); }

std::vector<PVector> kernel(const PMatrix& A) {
  const auto [M, piv] = echelon(A);
  const std::size_t C = A.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<PVector> basis;
  const PadicScalar zero = A.zero();
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    PVector v(C, PadicScalar::zero(zero.context()));
    v[f] = PadicScalar::one(zero.context());
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -M(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<PVector> solve(const PMatrix& A, const PVector& b) {
  const std::size_t R = A.rows(), C = A.cols();
  if (b.size() != R) fail(Errc::InvalidArgument, "solve: right-hand side size");
  PMatrix aug = zeros(A.zero().context(), R, C + 1);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = A(i, j);
    aug(i, C) = b[i];
  }
  const auto [M, piv] = echelon(aug);
  if (!piv.empty() && piv.back() == C) return std::nullopt;
  PVector x(C, PadicScalar::zero(A.zero().context()));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = M(r, C);
  return x;
}

PMatrix inverse(const PMatrix& A) {
  const std::size_t n = A.rows();
  if (A.cols() != n) fail(Errc::InvalidArgument, "inverse of a non-square matrix");
  const auto& ctx = A.zero().context();
  PMatrix aug = zeros(ctx, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = PadicScalar::one(ctx);
  }
  const auto [M, piv] = echelon(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) fail(Errc::DivisionByZeroToPrecision, "matrix is singular to precision");
  return M.block(0, n, n, n);
}

PadicScalar determinant(const PMatrix& A) {
  const PVector c = fredholm_determinant(A);
  const std::size_t n = A.rows();
  return (n % 2) ? -c[n] : c[n];
}

bool is_diagonal(const PMatrix& A) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (i != j && !A(i, j).is_zero()) return false;
  return true;
}

bool is_upper_triangular(const PMatrix& A) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < i && j < A.cols(); ++j)
      if (!A(i, j).is_zero()) return false;
  return true;
}

PVector fredholm_determinant(const PMatrix& A) {
  if (A.rows() != A.cols()) fail(Errc::InvalidArgument, "determinant of a non-square matrix");
  const auto& ctx = A.zero().context();
  const PadicScalar one = PadicScalar::one(ctx);
  if (is_upper_triangular(A) || is_upper_triangular(A.transpose())) {
    Polynomial acc = Polynomial::constant(one);
    for (std::size_t i = 0; i < A.rows(); ++i) acc = acc * Polynomial(ctx, {one, -A(i, i)});
    PVector c = acc.coeffs();
    c.resize(A.rows() + 1, PadicScalar::zero(ctx));
    return c;
  }
  return berkowitz(A, one);
}

Polynomial characteristic_polynomial(const PMatrix& A) {
  const PVector c = fredholm_determinant(A);
  const int n = static_cast<int>(A.rows());
  return Polynomial(A.zero().context(), c).reversed(n);
}

int min_valuation(const PMatrix& A) {
  int v = kInfiniteValuation;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero()) v = std::min(v, A(i, j).valuation());
  return v;
}

int min_valuation(const PVector& x) {
  int v = kInfiniteValuation;
  for (const auto& c : x)
    if (!c.is_zero()) v = std::min(v, c.valuation());
  return v;
}

int min_absolute_precision(const PMatrix& A) {
  int v = A.zero().context().m();
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) v = std::min(v, A(i, j).absolute_precision());
  return v;
}

bool vanishes_mod(const PMatrix& A, int k) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const auto& x = A(i, j);
      if (!x.is_zero() && x.valuation() < k) return false;
      if (x.is_zero() && x.absolute_precision() < k) return false;
    }
  return true;
}

PMatrix evaluate(const Polynomial& f, const PMatrix& A) {
  const auto& ctx = A.zero().context();
  PMatrix acc = zeros(ctx, A.rows(), A.cols());
  const PMatrix I = identity(ctx, A.rows());
  for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) acc = acc * A + f[k] * I;
  return acc;
}

PadicScalar trace(const PMatrix& A) {
  PadicScalar t = A.zero();
  for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i) t = t + A(i, i);
  return t;
}

PMatrix change_context(const PMatrix& A, const PadicContext& ctx) {
  return A.map([&](const PadicScalar& x) { return x.change_context(ctx); });
}

}  // namespace eigenkit::padic
