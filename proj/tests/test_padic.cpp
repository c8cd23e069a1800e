#include <gtest/gtest.h>

#include "eigenkit/error.hpp"
#include "eigenkit/padic/linalg.hpp"
#include "eigenkit/padic/newton_polygon.hpp"
#include "eigenkit/padic/roots.hpp"
#include "eigenkit/padic/series.hpp"
#include "eigenkit/padic/transcendental.hpp"
#include "support/oracle.hpp"

using namespace eigenkit;
using namespace eigenkit::padic;
using oracle::cpp_int;

namespace {

const PadicContext kCtx(5, 1, 20);
const cpp_int kMod = oracle::ipow(5, 20);

PadicScalar from_big(const PadicContext& ctx, long long v) { return PadicScalar::from_int(ctx, v); }

// a^(phi(5^20) - 1) by Euler's theorem.
cpp_int inverse_mod(const cpp_int& a) {
  return boost::multiprecision::powm(oracle::mod(a, kMod), 4 * oracle::ipow(5, 19) - 1, kMod);
}

}  // namespace

TEST(Scalar, RingOperationsMatchIntegersModPowerOfP) {
  for (int trial = 0; trial < 200; ++trial) {
    long long a = oracle::uniform(-1000000, 1000000), b = oracle::uniform(-1000000, 1000000);
    auto x = from_big(kCtx, a), y = from_big(kCtx, b);
    EXPECT_EQ(oracle::to_integer(x + y), oracle::mod(cpp_int(a) + b, kMod));
    EXPECT_EQ(oracle::to_integer(x - y), oracle::mod(cpp_int(a) - b, kMod));
    EXPECT_EQ(oracle::to_integer(x * y), oracle::mod(cpp_int(a) * b, kMod));
    if (b % 5 != 0) EXPECT_EQ(oracle::to_integer(x / y), oracle::mod(cpp_int(a) * inverse_mod(b), kMod));
  }
}

TEST(Scalar, ValuationAndPrecisionPropagation) {
  auto x = from_big(kCtx, 125 * 7);
  EXPECT_EQ(x.valuation(), 3);
  EXPECT_EQ(x.absolute_precision(), 20);
  auto y = PadicScalar::one(kCtx).with_absolute_precision(6);
  EXPECT_EQ((x + y).absolute_precision(), 6);
  // v(x) + abs(y) = 9 bounds the product.
  EXPECT_EQ((x * y).absolute_precision(), 9);
  EXPECT_EQ(x.inverse().valuation(), -3);
  EXPECT_TRUE((x * x.inverse()).equals(PadicScalar::one(kCtx)));
}

TEST(Scalar, RationalsAreConsistentWithDivision) {
  auto q = PadicScalar::from_rational(kCtx, 3, 7);
  EXPECT_TRUE((q * from_big(kCtx, 7)).equals(from_big(kCtx, 3)));
  auto r = PadicScalar::from_rational(kCtx, 2, 25);
  EXPECT_EQ(r.valuation(), -2);
}

TEST(Scalar, RamifiedUniformizer) {
  PadicContext ctx(5, 2, 20);
  auto pi = PadicScalar::uniformizer_power(ctx, 1);
  EXPECT_EQ(pi.valuation(), 1);
  EXPECT_EQ(pi.valuation_p(), Rational(1, 2));
  EXPECT_TRUE((pi * pi).equals(from_big(ctx, 5)));
  auto u = PadicScalar::one(ctx) + pi;
  EXPECT_TRUE((u * u.inverse()).equals(PadicScalar::one(ctx)));
}

TEST(Scalar, ErrorPaths) {
  auto z = PadicScalar::zero(kCtx, 7);
  try {
    (void)(PadicScalar::one(kCtx) / z);
    FAIL() << "division by zero did not throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZeroToPrecision);
  }
  PadicContext other(7, 1, 20);
  try {
    (void)(PadicScalar::one(kCtx) + PadicScalar::one(other));
    FAIL() << "mixed contexts did not throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ContextMismatch);
  }
  EXPECT_THROW(PadicContext(4, 1, 10), Error);
}

TEST(Scalar, MaxPrecisionFitsStorage) {
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    int m = max_precision(p, 1);
    EXPECT_NO_THROW(PadicContext(p, 1, m));
    EXPECT_GT(m, 20);
  }
}

TEST(Transcendental, TeichmullerLifts) {
  for (long long x = 1; x < 5; ++x) {
    auto w = teichmuller(kCtx, x);
    EXPECT_TRUE(w.pow(4).equals(PadicScalar::one(kCtx)));
    EXPECT_EQ(oracle::mod(oracle::to_integer(w), 5), x);
  }
}

TEST(Transcendental, LogIsAHomomorphismAndExpInvertsIt) {
  for (int trial = 0; trial < 20; ++trial) {
    auto a = PadicScalar::one(kCtx) + from_big(kCtx, 5 * oracle::uniform(1, 1000));
    auto b = PadicScalar::one(kCtx) + from_big(kCtx, 5 * oracle::uniform(1, 1000));
    auto la = log_one_unit(a), lb = log_one_unit(b);
    // log loses v_p(k) digits in the k-th term, so compare with a small allowance.
    EXPECT_GE((log_one_unit(a * b) - la - lb).valuation(), 18);
    EXPECT_GE((exp_small(la) - a).valuation(), 18);
  }
}

TEST(Transcendental, BinomialOfIntegers) {
  for (long long L = 0; L < 15; ++L) {
    cpp_int c = 1;
    for (int k = 0; k <= 6; ++k) {
      EXPECT_EQ(oracle::to_integer(binomial(from_big(kCtx, L), k)), oracle::mod(c, kMod)) << L << " " << k;
      c = c * (L - k) / (k + 1);
    }
  }
}

TEST(Transcendental, LegendreFormula) {
  for (long long n = 0; n < 200; ++n) {
    cpp_int f = 1;
    for (long long k = 2; k <= n; ++k) f *= k;
    EXPECT_EQ(vp_factorial(n, 5), oracle::vp(f, 5));
  }
}

TEST(NewtonPolygon, MatchesBruteForceHull) {
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(oracle::uniform(1, 9));
    std::vector<PadicScalar> c{PadicScalar::one(kCtx)};
    std::vector<long long> v{0};
    for (int i = 1; i <= n; ++i) {
      long long val = oracle::uniform(-1, 8);
      v.push_back(val);
      c.push_back(val < 0 ? PadicScalar::zero(kCtx) : PadicScalar::uniformizer_power(kCtx, static_cast<int>(val)));
    }
    auto np = newton_polygon(c);
    auto expected = oracle::hull_slopes(v);
    auto got = np.slope_multiset();
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(oracle::cpp_rational(got[i].numerator(), got[i].denominator()), expected[i]);
    }
  }
}

TEST(Polynomial, DivisionWithRemainder) {
  auto a = Polynomial::from_ints(kCtx, {3, -1, 4, 1, -5, 9});
  auto d = Polynomial::from_ints(kCtx, {2, 6, 1});
  auto [q, r] = a.divmod(d);
  EXPECT_LT(r.trimmed().degree(), 2);
  EXPECT_TRUE((q * d + r).equals(a));
}

TEST(Roots, RecoversIntegerRootsWithMultiplicity) {
  // (x - 1)^2 (x - 7)(x - 30)
  auto lin = [](long long r) { return Polynomial::from_ints(kCtx, {-r, 1}); };
  auto f = lin(1) * lin(1) * lin(7) * lin(30);
  auto res = find_roots(f);
  EXPECT_EQ(res.unresolved, 0);
  int total = 0;
  for (const auto& r : res.roots) {
    total += r.multiplicity;
    auto v = oracle::to_integer(r.value);
    if (v == 1) EXPECT_EQ(r.multiplicity, 2);
    EXPECT_TRUE(v == 1 || v == 7 || v == 30);
  }
  EXPECT_EQ(total, 4);
}

namespace {

PMatrix to_pmatrix(const oracle::IntMatrix& A) {
  PMatrix M = zeros(kCtx, A.size(), A[0].size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) M(i, j) = from_big(kCtx, static_cast<long long>(A[i][j]));
  return M;
}

oracle::IntMatrix random_int_matrix(std::size_t r, std::size_t c, long long bound) {
  oracle::IntMatrix A(r, std::vector<cpp_int>(c));
  for (auto& row : A)
    for (auto& x : row) x = oracle::uniform(-bound, bound);
  return A;
}

}  // namespace

TEST(Linalg, DeterminantMatchesLeibniz) {
  for (int trial = 0; trial < 30; ++trial) {
    auto A = random_int_matrix(5, 5, 30);
    EXPECT_EQ(oracle::to_integer(determinant(to_pmatrix(A))), oracle::mod(oracle::leibniz_det(A), kMod));
  }
}

TEST(Linalg, FredholmDeterminantMatchesPrincipalMinors) {
  for (int trial = 0; trial < 20; ++trial) {
    auto A = random_int_matrix(5, 5, 30);
    auto c = fredholm_determinant(to_pmatrix(A));
    auto expected = oracle::fredholm_by_minors(A);
    ASSERT_EQ(c.size(), expected.size());
    for (std::size_t k = 0; k < c.size(); ++k) EXPECT_EQ(oracle::to_integer(c[k]), oracle::mod(expected[k], kMod));
  }
}

TEST(Linalg, RankKernelAndInverse) {
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = static_cast<std::size_t>(oracle::uniform(1, 4));
    auto B = random_int_matrix(6, r, 9), C = random_int_matrix(r, 5, 9);
    oracle::IntMatrix A(6, std::vector<cpp_int>(5, 0));
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 0; k < r; ++k) A[i][j] += B[i][k] * C[k][j];
    auto M = to_pmatrix(A);
    std::size_t rk = oracle::rational_rank(A);
    EXPECT_EQ(rank(M), rk);
    auto ker = kernel(M);
    EXPECT_EQ(ker.size(), 5 - rk);
    for (const auto& v : ker) EXPECT_GE(min_valuation(M.apply(v)), 15);
  }
  oracle::IntMatrix A;
  do {
    A = random_int_matrix(4, 4, 20);
  } while (oracle::leibniz_det(A) % 5 == 0);
  auto M = to_pmatrix(A);
  EXPECT_TRUE(vanishes_mod(M * inverse(M) - identity(kCtx, 4), 20));
}

TEST(Series, InverseAndEvaluation) {
  std::vector<std::string> names{"X", "Y"};
  auto X = TruncatedSeries::variable(kCtx, names, 6, 0);
  auto Y = TruncatedSeries::variable(kCtx, names, 6, 1);
  auto f = X.one_like() + from_big(kCtx, 5) * X + X * Y;
  auto g = f.inverse();
  EXPECT_TRUE((f * g).equals(f.one_like()));
  std::vector<PadicScalar> pt{from_big(kCtx, 2), from_big(kCtx, 3)};
  EXPECT_EQ(oracle::to_integer(f.evaluate(pt)), 1 + 10 + 6);
}
