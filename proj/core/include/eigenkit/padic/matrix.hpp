#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eigenkit::padic {

// Dense row-major matrix over a ring R without a default element; `fill` gives the zero.
template <class R>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const R& fill) : r_(rows), c_(cols), zero_(fill), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const R& zero, const R& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return r_; }
  std::size_t cols() const noexcept { return c_; }
  const R& zero() const noexcept { return zero_; }
  R& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_, zero_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  std::vector<R> column(std::size_t j) const {
    std::vector<R> v;
    v.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  std::vector<R> apply(const std::vector<R>& x) const {
    if (x.size() != c_) throw std::invalid_argument("matrix-vector size mismatch");
    std::vector<R> y(r_, zero_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) y[i] = y[i] + (*this)(i, j) * x[j];
    return y;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    Matrix<S> out(r_, c_, f(zero_));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix s = a;
    for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] = a.a_[k] + b.a_[k];
    return s;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix s = a;
    for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] = a.a_[k] - b.a_[k];
    return s;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product size mismatch");
    Matrix s(a.r_, b.c_, a.zero_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const R& x = a(i, k);
        for (std::size_t j = 0; j < b.c_; ++j) s(i, j) = s(i, j) + x * b(k, j);
      }
    return s;
  }
  friend Matrix operator*(const R& c, const Matrix& a) {
    Matrix s = a;
    for (auto& x : s.a_) x = c * x;
    return s;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix size mismatch");
  }

  std::size_t r_, c_;
  R zero_;
  std::vector<R> a_;
};

// Berkowitz: returns [1, c_1, ..., c_n] with det(x - A) = x^n + c_1 x^(n-1) + ... + c_n,
// equivalently det(1 - T A) = sum c_k T^k. Division free.
template <class R>
std::vector<R> berkowitz(const Matrix<R>& A, const R& one) {
  const std::size_t n = A.rows();
  const R& zero = A.zero();
  std::vector<R> poly{one};
  for (std::size_t k = 1; k <= n; ++k) {
    // Leading (k-1) block M, column C = A[0..k-2][k-1], row Rw = A[k-1][0..k-2], a = A[k-1][k-1].
    const std::size_t m = k - 1;
    std::vector<R> toeplitz;
    toeplitz.reserve(k + 1);
    toeplitz.push_back(one);
    toeplitz.push_back(zero - A(m, m));
    std::vector<R> v(m, zero);
    for (std::size_t i = 0; i < m; ++i) v[i] = A(i, m);
    for (std::size_t t = 0; t + 1 < k; ++t) {
      R s = zero;
      for (std::size_t i = 0; i < m; ++i) s = s + A(m, i) * v[i];
      toeplitz.push_back(zero - s);
      if (t + 2 < k) {
        std::vector<R> w(m, zero);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) w[i] = w[i] + A(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<R> next(k + 1, zero);
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j) next[i] = next[i] + toeplitz[i - j] * poly[j];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace eigenkit::padic
