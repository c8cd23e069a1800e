#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "eigenkit/error.hpp"
#include "eigenkit/laind/compact.hpp"
#include "eigenkit/spectral/family.hpp"
#include "eigenkit/spectral/module.hpp"
#include "eigenkit/spectral/projector.hpp"
#include "support/oracle.hpp"

using namespace eigenkit;
using namespace eigenkit::spectral;
using oracle::cpp_int;

namespace {

const PadicContext kCtx(5, 1, 30);

PadicScalar S(long long v) { return PadicScalar::from_int(kCtx, v); }

struct Triangular {
  oracle::IntMatrix A;
  std::vector<int> slopes;
};

// Upper triangular with diagonal 5^s_i * unit, distinct s_i.
Triangular random_triangular(std::size_t n) {
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<int>(i);
  std::shuffle(s.begin(), s.end(), oracle::rng());
  oracle::IntMatrix A(n, std::vector<cpp_int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    long long u;
    do {
      u = oracle::uniform(-20, 20);
    } while (u % 5 == 0);
    A[i][i] = oracle::ipow(5, s[i]) * u;
    for (std::size_t j = i + 1; j < n; ++j) A[i][j] = oracle::uniform(-9, 9);
  }
  return {A, s};
}

PMatrix to_pmatrix(const oracle::IntMatrix& A, const PadicContext& ctx = kCtx) {
  PMatrix M = padic::zeros(ctx, A.size(), A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j) M(i, j) = PadicScalar::from_int(ctx, static_cast<long long>(A[i][j]));
  return M;
}

std::vector<long long> valuations(const std::vector<cpp_int>& c) {
  std::vector<long long> v;
  for (const auto& x : c) v.push_back(x == 0 ? -1 : oracle::vp(x, 5));
  return v;
}

}  // namespace

TEST(Fredholm, FiniteOperatorMatchesPrincipalMinors) {
  for (int trial = 0; trial < 10; ++trial) {
    oracle::IntMatrix A(6, std::vector<cpp_int>(6));
    for (auto& row : A)
      for (auto& x : row) x = oracle::uniform(-12, 12);
    auto P = fredholm_series(finite_operator(to_pmatrix(A)), 6);
    EXPECT_TRUE(P.exact);
    auto c = oracle::fredholm_by_minors(A);
    for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(oracle::to_integer(P.coeffs[k]), oracle::mod(c[k], oracle::ipow(5, 30)));
  }
}

TEST(Fredholm, GenusTwoSlopesAndBruteForce) {
  for (std::size_t N = 1; N <= 8; ++N) {
    auto U = laind::compact_u_matrix(kCtx, 2, 12);
    auto P = fredholm_series(U, N);
    auto np = newton_slopes(P);
    auto slopes = np.slope_multiset();
    ASSERT_EQ(slopes.size(), N);
    for (std::size_t i = 0; i < N; ++i) EXPECT_EQ(slopes[i], Rational(static_cast<long long>(i)));
    oracle::IntMatrix A(N, std::vector<cpp_int>(N, 0));
    for (std::size_t i = 0; i < N; ++i) A[i][i] = oracle::to_integer(U.matrix(i, i));
    auto c = oracle::fredholm_by_minors(A);
    for (std::size_t k = 0; k <= N; ++k) EXPECT_EQ(oracle::to_integer(P.coeffs[k]), oracle::mod(c[k], oracle::ipow(5, 30)));
    auto hull = oracle::hull_slopes(valuations(c));
    ASSERT_EQ(hull.size(), N);
  }
}

TEST(Fredholm, GenusThreeMultiplicitiesMatchEnumeration) {
  const int D = 6;
  PadicContext ctx(5, 1, 40);
  auto U = laind::compact_u_matrix(ctx, 3, D);
  auto P = fredholm_series(U, U.size());
  auto slopes = newton_slopes(P).slope_multiset();
  ASSERT_FALSE(slopes.empty());
  // m21 + m32 + 2 m31 = s over all exponent vectors.
  auto count = [](int s) {
    int c = 0;
    for (int a = 0; a <= s; ++a)
      for (int b = 0; a + b <= s; ++b)
        if ((s - a - b) % 2 == 0) ++c;
    return c;
  };
  std::map<long long, int> seen;
  for (const auto& s : slopes) ++seen[s.numerator()];
  const long long top = slopes.back().numerator();
  int checked = 0;
  for (long long s = 0; s < top; ++s) {
    EXPECT_EQ(seen[s], count(static_cast<int>(s))) << "slope " << s;
    ++checked;
  }
  EXPECT_GE(checked, 3);
}

TEST(Fredholm, StableUnderLongerTruncation) {
  for (int g : {2, 3}) {
    auto U = laind::compact_u_matrix(kCtx, g, 8);
    for (std::size_t N = 2; N + 4 <= std::min<std::size_t>(U.size(), 14); ++N) {
      auto a = fredholm_series(U, N), b = fredholm_series(U, N + 4);
      EXPECT_TRUE(agrees_on_prefix(a, b, N));
      for (std::size_t n = 0; n <= N; ++n) EXPECT_LE(a.certified[n], b.certified[n]);
    }
  }
}

TEST(Fredholm, ErrorPaths) {
  CompactOperatorModel U(padic::identity(kCtx, 3), std::nullopt);
  EXPECT_THROW(U.tail_bound(2), Error);
  auto Z = fredholm_series(laind::compact_u_matrix(kCtx, 2, 12), 0);
  EXPECT_TRUE(newton_slopes(Z).empty());
}

TEST(Factor, TriangularOperators) {
  // Rescaling by pi^-s costs s * deg digits, so P is computed 16 digits beyond the checked precision.
  const PadicContext W = kCtx.with_precision(kCtx.m() + 16);
  for (int trial = 0; trial < 10; ++trial) {
    auto T = random_triangular(5);
    auto P = fredholm_series(finite_operator(to_pmatrix(T.A, W)), 5);
    for (int h2 : {1, 3, 5, 7}) {
      Rational h(h2, 2);
      auto f = slope_factor(P, h);
      int expected = static_cast<int>(std::count_if(T.slopes.begin(), T.slopes.end(), [&](int s) { return Rational(s) <= h; }));
      EXPECT_EQ(f.degree(), expected);
      for (const auto& s : padic::newton_polygon(f.Q.coeffs()).slope_multiset()) EXPECT_LE(s, h);
      for (const auto& s : padic::newton_polygon(f.R.coeffs()).slope_multiset()) EXPECT_GT(s, h);
      auto QR = (f.Q * f.R).truncated(f.prefix + 1);
      for (std::size_t k = 0; k <= f.prefix; ++k) EXPECT_GE((QR[k] - P.coeffs[k]).valuation(), f.product_precision);
      EXPECT_GE(f.product_precision, kCtx.m());
      EXPECT_GE(f.bezout_precision, kCtx.m());
      auto bez = f.a * f.Q + f.b * f.R.truncated(f.prefix + 1);
      EXPECT_GE((bez[0] - PadicScalar::one(W)).valuation(), f.bezout_precision);
    }
  }
}

TEST(Factor, BoundarySlopes) {
  auto P = fredholm_series(laind::compact_u_matrix(kCtx, 2, 12), 5);
  try {
    slope_factor(P, Rational(2));
    FAIL() << "expected SlopeOnBoundary";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SlopeOnBoundary);
  }
  EXPECT_EQ(slope_factor(P, Rational(2), BoundarySide::Below).degree(), 3);
  EXPECT_EQ(slope_factor(P, Rational(2), BoundarySide::Above).degree(), 2);
}

TEST(Projector, IdempotentCommutingOfRankDegQ) {
  const PadicContext W = kCtx.with_precision(kCtx.m() + 16);
  const int m = kCtx.m();
  for (int trial = 0; trial < 5; ++trial) {
    auto T = random_triangular(5);
    auto A = to_pmatrix(T.A, W);
    auto U = finite_operator(A);
    auto f = slope_factor(fredholm_series(U, 5), Rational(5, 2));
    auto pr = riesz_projector(U, f);
    EXPECT_EQ(pr.rank, static_cast<std::size_t>(f.degree()));
    EXPECT_EQ(oracle::mod(oracle::to_integer(padic::trace(pr.e)), oracle::ipow(5, m)), cpp_int(f.degree()));
    EXPECT_GE(padic::min_valuation(pr.e * pr.e - pr.e), m);
    EXPECT_GE(padic::min_valuation(pr.e * A - A * pr.e), m);
    EXPECT_GE(pr.charpoly_precision, m);

    auto A2 = A * A + padic::identity(W, 5);
    std::vector<JointEigensystem> sys;
    ASSERT_NO_THROW(sys = joint_eigensystems({A, A2}, pr.e));
    std::size_t total = 0;
    for (const auto& j : sys) {
      total += j.multiplicity;
      EXPECT_LE(j.values[0].valuation(), 2);
      EXPECT_GE((j.values[1] - j.values[0] * j.values[0] - PadicScalar::one(W)).valuation(), m);
    }
    EXPECT_EQ(total, pr.rank);
  }
}

TEST(Projector, NonCommutingInputIsRejected) {
  auto A = padic::from_ints(kCtx, {{1, 1}, {0, 5}});
  auto B = padic::from_ints(kCtx, {{1, 0}, {1, 5}});
  auto f = slope_factor(fredholm_series(finite_operator(A), 2), Rational(3, 2));
  auto pr = riesz_projector(finite_operator(A), f);
  EXPECT_THROW(joint_eigensystems({A, B}, pr.e), Error);
}

TEST(Family, LiftMatchesGeometricSeries) {
  const int D = 8;
  std::vector<std::string> names{"S"};
  auto Sv = padic::TruncatedSeries::variable(kCtx, names, D, 0);
  auto one = Sv.one_like();
  SeriesMatrix M(2, 2, Sv.zero_like());
  M(0, 0) = one + Sv;
  M(0, 1) = one;
  M(1, 1) = S(5) * one;
  FamilyOperatorModel F(M, padic::kInfiniteValuation);
  LiftOptions o;
  o.normalize_index = 1;
  auto L = eigen_family_lift(F, {PadicScalar::zero(kCtx)}, S(5), o);
  const cpp_int mod = oracle::ipow(5, 30);
  for (int k = 0; k <= D; ++k) {
    // 1/(4 - S) = sum S^k / 4^(k+1); the inverse of 4^(k+1) by Euler's theorem.
    cpp_int inv = boost::multiprecision::powm(cpp_int(4), 4 * oracle::ipow(5, 29) - 1, mod);
    cpp_int want = boost::multiprecision::powm(inv, cpp_int(k + 1), mod);
    auto c = L.vector[0].coefficient({k});
    EXPECT_EQ(oracle::mod(oracle::to_integer(c), oracle::ipow(5, 28)), oracle::mod(want, oracle::ipow(5, 28))) << k;
  }
  EXPECT_TRUE(L.eigenvalue.equals(S(5) * one));
  auto fib = fiber_eigendata(F, {PadicScalar::zero(kCtx)}, Rational(1), BoundarySide::Below);
  EXPECT_EQ(fib.degree, 2);
}

TEST(Family, ErrorPaths) {
  auto F = constant_family(padic::from_ints(kCtx, {{1, 0}, {0, 1}}), {"S"}, 4);
  EXPECT_THROW(specialize(F, {PadicScalar::from_rational(kCtx, 1, 5)}), Error);
  try {
    eigen_family_lift(F, {PadicScalar::zero(kCtx)}, PadicScalar::one(kCtx));
    FAIL() << "expected RamifiedPoint";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RamifiedPoint);
  }
}

TEST(Module, ProjectiveSummands) {
  auto e = padic::from_ints(kCtx, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  auto M = BanachModuleModel::projective(kCtx, BaseRing::scalar(), e);
  EXPECT_EQ(M.rank(), 2u);
  PVector x{S(3), S(25), S(7)};
  EXPECT_GE(M.norm(M.project(x)), M.norm(x));
  EXPECT_THROW(BanachModuleModel::projective(kCtx, BaseRing::scalar(), padic::from_ints(kCtx, {{2, 0}, {0, 1}})), Error);
  auto s = padic::from_ints(kCtx, {{1, 0, 0}});
  auto t = padic::from_ints(kCtx, {{1}, {0}, {0}});
  EXPECT_EQ(BanachModuleModel::kernel_of_split_surjection(kCtx, BaseRing::scalar(), s, t).rank(), 2u);
}
