#include <gtest/gtest.h>

#include "eigenkit/error.hpp"
#include "eigenkit/padic/transcendental.hpp"
#include "eigenkit/weight/universal.hpp"
#include "support/oracle.hpp"

using namespace eigenkit;
using namespace eigenkit::padic;
using namespace eigenkit::weight;
using oracle::cpp_int;

namespace {

const PadicContext kCtx(5, 1, 20);

// prod t_i^k_i mod 5^20 with integer arithmetic; negative exponents through Euler's theorem.
cpp_int monomial_value(const std::vector<long long>& k, const std::vector<long long>& t) {
  const cpp_int mod = oracle::ipow(5, 20), phi = 4 * oracle::ipow(5, 19);
  cpp_int r = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    cpp_int e = k[i] >= 0 ? cpp_int(k[i]) : phi + k[i];
    cpp_int f = boost::multiprecision::powm(oracle::mod(t[i], mod), e, mod);
    r = r * f % mod;
  }
  return r;
}

std::vector<long long> random_unit_point(int g) {
  std::vector<long long> t;
  for (int i = 0; i < g; ++i) {
    long long x;
    do {
      x = oracle::uniform(-100000, 100000);
    } while (x % 5 == 0);
    t.push_back(x);
  }
  return t;
}

std::vector<PadicScalar> to_scalars(const PadicContext& ctx, const std::vector<long long>& t) {
  std::vector<PadicScalar> v;
  for (auto x : t) v.push_back(PadicScalar::from_int(ctx, x));
  return v;
}

}  // namespace

TEST(Character, AlgebraicWeightsEvaluateAsMonomials) {
  for (int trial = 0; trial < 50; ++trial) {
    int g = static_cast<int>(oracle::uniform(1, 4));
    std::vector<long long> k;
    for (int i = 0; i < g; ++i) k.push_back(oracle::uniform(-8, 12));
    auto kappa = Character::algebraic_weight(kCtx, k);
    auto t = random_unit_point(g);
    EXPECT_EQ(oracle::to_integer(eval_character(kappa, to_scalars(kCtx, t))), monomial_value(k, t));
  }
}

TEST(Character, EvaluationIsMultiplicative) {
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PadicScalar> s;
    std::vector<long long> chi;
    for (int i = 0; i < 2; ++i) {
      s.push_back(PadicScalar::one(kCtx) + PadicScalar::from_int(kCtx, 5 * oracle::uniform(1, 500)));
      chi.push_back(oracle::uniform(0, 3));
    }
    Character kappa(chi, s);
    auto a = to_scalars(kCtx, random_unit_point(2)), b = to_scalars(kCtx, random_unit_point(2));
    std::vector<PadicScalar> ab{a[0] * b[0], a[1] * b[1]};
    auto lhs = eval_character(kappa, ab), rhs = eval_character(kappa, a) * eval_character(kappa, b);
    EXPECT_GE((lhs - rhs).valuation(), 18);
  }
}

TEST(Character, InvolutionReversesAndNegates) {
  auto kappa = Character::algebraic_weight(kCtx, {5, 2, -1});
  auto inv = involution(kappa);
  ASSERT_TRUE(inv.algebraic());
  EXPECT_EQ(*inv.algebraic(), (std::vector<long long>{1, -2, -5}));
  EXPECT_TRUE(involution(inv).equals(kappa));
}

TEST(Character, Dominance) {
  EXPECT_TRUE(Character::algebraic_weight(kCtx, {3, 1}).is_dominant());
  EXPECT_TRUE(Character::algebraic_weight(kCtx, {0, 0}).is_dominant());
  EXPECT_FALSE(Character::algebraic_weight(kCtx, {1, 3}).is_dominant());
}

TEST(Character, ErrorPaths) {
  auto kappa = Character::algebraic_weight(kCtx, {1, 1});
  std::vector<PadicScalar> bad{PadicScalar::from_int(kCtx, 5), PadicScalar::one(kCtx)};
  EXPECT_THROW(eval_character(kappa, bad), Error);
}

TEST(Universal, ConstantTermAndCoefficientBound) {
  PadicContext ctx = PadicContext::with_default_ramification(5, 80);
  ASSERT_EQ(ctx.e(), 8);
  for (int g : {1, 2}) {
    auto f = universal_character_eval(ctx, {Rational(1), g, 13});
    EXPECT_TRUE(f.constant_term().equals(PadicScalar::one(ctx)));
    for (const auto& [a, c] : f.terms()) {
      int xdeg = 0;
      for (int i = g; i < 2 * g; ++i) xdeg += a[i];
      if (xdeg == 0 || c.is_zero()) continue;
      // (k + 1)/(p - 1) in p units is 2(k + 1) uniformizer digits at e = 8.
      EXPECT_GE(c.valuation(), 2 * (xdeg + 1)) << "X-degree " << xdeg;
    }
  }
}

TEST(Universal, IntegralExponentGivesBinomial) {
  PadicContext ctx = PadicContext::with_default_ramification(5, 80);
  auto f = universal_character_eval(ctx, {Rational(1), 1, 8});
  // S p^(-1 + 1/2) = 2 at S = 2 p^(1/2) = 2 pi^4.
  auto S = PadicScalar::from_int(ctx, 2) * PadicScalar::uniformizer_power(ctx, 4);
  auto sp = f.specialize({S, std::nullopt});
  auto X = TruncatedSeries::variable(ctx, sp.names(), 8, 1);
  auto one = X.one_like();
  auto lin = one + PadicScalar::from_int(ctx, 5) * X;
  auto diff = sp - lin * lin;
  // The X^k coefficient is a degree-k polynomial in S, so total-degree truncation at 8 keeps it whole for k <= 4.
  for (const auto& [a, c] : diff.terms()) {
    if (a[1] <= 4) EXPECT_GE(c.valuation(), sp.absolute_precision() - 2) << "X^" << a[1];
  }
}

TEST(Universal, SpecializationRecoversTheCharacter) {
  PadicContext ctx = PadicContext::with_default_ramification(5, 80);
  auto f = universal_character_eval(ctx, {Rational(1), 2, 10});
  auto kappa = Character::algebraic_weight(ctx, {6, 1});
  auto sp = specialize_universal(f, kappa, Rational(1));
  std::vector<PadicScalar> t{PadicScalar::one(ctx), PadicScalar::one(ctx)};
  std::vector<PadicScalar> x{PadicScalar::from_int(ctx, 3), PadicScalar::from_int(ctx, 7)};
  std::vector<PadicScalar> tx{PadicScalar::one(ctx) + PadicScalar::from_int(ctx, 15),
                              PadicScalar::one(ctx) + PadicScalar::from_int(ctx, 35)};
  auto got = sp.evaluate(t, x), want = eval_character(kappa, tx);
  EXPECT_GE((got - want).valuation(), sp.certified_precision);
}
