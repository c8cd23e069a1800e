#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "eigenkit/padic/linalg.hpp"

// Reference arithmetic that shares no code with the library.
namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<cpp_int>>;

inline cpp_int ipow(cpp_int b, int k) {
  cpp_int r = 1;
  while (k-- > 0) r *= b;
  return r;
}

inline cpp_int mod(const cpp_int& a, const cpp_int& n) {
  cpp_int r = a % n;
  return r < 0 ? r + n : r;
}

// v_p of a nonzero integer.
inline int vp(cpp_int a, unsigned p) {
  if (a == 0) return 1 << 20;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

// Integer representative in [0, p^abs) of an integral scalar over an unramified field.
inline cpp_int to_integer(const eigenkit::padic::PadicScalar& x) {
  if (x.is_zero()) return 0;
  const cpp_int p = x.context().p();
  cpp_int r = 0, base = ipow(p, x.valuation());
  for (auto d : x.digits()) {
    r += base * d;
    base *= p;
  }
  return r;
}

// Sum over permutations; only for tiny matrices.
inline cpp_int leibniz_det(const IntMatrix& A) {
  const std::size_t n = A.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  cpp_int det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    cpp_int term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= A[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// c_k of det(1 - T A) = (-1)^k * sum of the k x k principal minors.
inline std::vector<cpp_int> fredholm_by_minors(const IntMatrix& A) {
  const std::size_t n = A.size();
  std::vector<cpp_int> c(n + 1, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) idx.push_back(i);
    IntMatrix M(idx.size(), std::vector<cpp_int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) M[i][j] = A[idx[i]][idx[j]];
    cpp_int minor = leibniz_det(M);
    c[idx.size()] += idx.size() % 2 ? cpp_int(-minor) : minor;
  }
  return c;
}

// Rank over Q by Gaussian elimination on rationals.
inline std::size_t rational_rank(const IntMatrix& A) {
  if (A.empty()) return 0;
  std::vector<std::vector<cpp_rational>> M(A.size(), std::vector<cpp_rational>(A[0].size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) M[i][j] = A[i][j];
  std::size_t r = 0;
  for (std::size_t c = 0; c < M[0].size() && r < M.size(); ++c) {
    std::size_t piv = r;
    while (piv < M.size() && M[piv][c] == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[r]);
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c] == 0) continue;
      cpp_rational f = M[i][c] / M[r][c];
      for (std::size_t j = c; j < M[0].size(); ++j) M[i][j] -= f * M[r][j];
    }
    ++r;
  }
  return r;
}

// Slopes with multiplicity of the lower convex hull through (i, v_i); v < 0 marks a missing point.
inline std::vector<cpp_rational> hull_slopes(const std::vector<long long>& v) {
  std::vector<cpp_rational> slopes;
  std::size_t i = 0;
  while (i < v.size() && v[i] < 0) ++i;
  while (true) {
    std::size_t best = i;
    cpp_rational best_slope;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] < 0) continue;
      cpp_rational s(v[j] - v[i], static_cast<long long>(j - i));
      // Farthest point among those of minimal slope.
      if (best == i || s <= best_slope) {
        best = j;
        best_slope = s;
      }
    }
    if (best == i) break;
    for (std::size_t k = i; k < best; ++k) slopes.push_back(best_slope);
    i = best;
  }
  return slopes;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed);
  return g;
}

inline long long uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

}  // namespace oracle
