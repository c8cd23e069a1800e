#include "eigenkit/weight/universal.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "eigenkit/error.hpp"

namespace eigenkit::weight {

using namespace padic;
using boost::multiprecision::cpp_int;

namespace {

// Exact p-adic image of the rational num/den.
PadicScalar from_big_rational(const PadicContext& ctx, cpp_int num, cpp_int den) {
  if (num == 0) return PadicScalar::zero(ctx);
  int shift = 0;
  const cpp_int p = ctx.p();
  while (num % p == 0) {
    num /= p;
    shift += ctx.e();
  }
  while (den % p == 0) {
    den /= p;
    shift -= ctx.e();
  }
  cpp_int M = 0;
  {
    const u128 m = ctx.modulus();
    M = static_cast<std::uint64_t>(m >> 64);
    M <<= 64;
    M += static_cast<std::uint64_t>(m);
  }
  auto to_scalar = [&](cpp_int v) {
    v %= M;
    if (v < 0) v += M;
    const cpp_int hi = v >> 64;
    const cpp_int lo = v & cpp_int("0xFFFFFFFFFFFFFFFF");
    const u128 r = (static_cast<u128>(static_cast<std::uint64_t>(hi)) << 64) | static_cast<std::uint64_t>(lo);
    return PadicScalar::from_int(ctx, static_cast<i128>(r));
  };
  return (to_scalar(num) / to_scalar(den)).mul_pi_power(shift);
}

int checked_grid(Rational q, int e, const char* what) {
  const Rational scaled = q * e;
  if (scaled.denominator() != 1)
    fail(Errc::UnrepresentableExponent, std::string(what) + " is not a multiple of 1/e");
  return static_cast<int>(scaled.numerator());
}

}  // namespace

TruncatedSeries universal_character_eval(const PadicContext& ctx, const UniversalCharacterChart& chart) {
  const int g = chart.g, D = chart.degree, e = ctx.e();
  if (g < 1 || D < 0) fail(Errc::InvalidArgument, "chart needs g >= 1 and D >= 0");
  if (chart.w <= 0) fail(Errc::InvalidArgument, "w must be positive");
  const int w_pi = checked_grid(chart.w, e, "w");
  const int c_pi = checked_grid(-chart.w + Rational(2, static_cast<long long>(ctx.p()) - 1), e,
                                "-w + 2/(p-1)");
  std::vector<std::string> names;
  for (int i = 1; i <= g; ++i) names.push_back("S" + std::to_string(i));
  for (int i = 1; i <= g; ++i) names.push_back("X" + std::to_string(i));

  // Signed Stirling numbers of the first kind: x(x-1)...(x-k+1) = sum_j s(k,j) x^j.
  std::vector<std::vector<cpp_int>> st(static_cast<std::size_t>(D) + 1);
  st[0] = {1};
  for (int k = 1; k <= D; ++k) {
    st[k].assign(static_cast<std::size_t>(k) + 1, 0);
    for (int j = 1; j <= k; ++j) {
      cpp_int v = st[k - 1].size() > static_cast<std::size_t>(j - 1) ? st[k - 1][j - 1] : cpp_int(0);
      if (static_cast<std::size_t>(j) < st[k - 1].size()) v -= cpp_int(k - 1) * st[k - 1][j];
      st[k][j] = v;
    }
  }
  // One factor (1 + p^w X)^(S c) in the pair (S_i, X_i).
  std::vector<std::pair<std::pair<int, int>, PadicScalar>> factor;
  cpp_int fact = 1;
  for (int k = 0; k <= D; ++k) {
    if (k > 0) fact *= k;
    for (int j = 0; j <= k && j + k <= D; ++j) {
      if (st[k][j] == 0) continue;
      PadicScalar c = from_big_rational(ctx, st[k][j], fact).mul_pi_power(w_pi * k + c_pi * j);
      factor.push_back({{j, k}, c});
    }
  }
  TruncatedSeries result = TruncatedSeries::constant(ctx, names, D, PadicScalar::one(ctx));
  for (int i = 0; i < g; ++i) {
    TruncatedSeries f(ctx, names, D);
    for (const auto& [jk, c] : factor) {
      Exponent a(static_cast<std::size_t>(2 * g), 0);
      a[i] = jk.first;
      a[g + i] = jk.second;
      f.set(a, c);
    }
    result = result * f;
  }
  return result;
}

std::vector<PadicScalar> weight_coordinates(const Character& kappa, Rational w) {
  const PadicContext& ctx = kappa.context();
  const int shift = checked_grid(w - Rational(2, static_cast<long long>(ctx.p()) - 1), ctx.e(), "w - 2/(p-1)");
  std::vector<PadicScalar> out;
  for (const auto& L : kappa.exponents()) out.push_back(L.mul_pi_power(shift));
  return out;
}

SpecializedCharacter specialize_universal(const TruncatedSeries& series, const Character& kappa, Rational w) {
  const int g = kappa.g();
  if (series.nvars() != 2 * g) fail(Errc::InvalidArgument, "series does not match the genus of kappa");
  const PadicContext& ctx = kappa.context();
  std::vector<PadicScalar> coords = weight_coordinates(kappa, w);
  for (const auto& c : coords)
    if (!c.is_zero() && c.valuation() < 0)
      fail(Errc::NotWAnalytic, "weight coordinate " + c.str() + " lies outside the unit polydisc");
  std::vector<std::optional<PadicScalar>> values(static_cast<std::size_t>(2 * g));
  for (int i = 0; i < g; ++i) values[i] = coords[i];
  TruncatedSeries sp = series.specialize(values);
  // Dropped monomials S^j X^k (j <= k, j + k > D) have valuation >= j(2/(p-1) - w) + k w - (k-1)/(p-1).
  const Rational two_over = Rational(2, static_cast<long long>(ctx.p()) - 1);
  const Rational one_over = Rational(1, static_cast<long long>(ctx.p()) - 1);
  const int D = series.degree();
  Rational lower(ctx.m(), ctx.e());
  for (int k = (D + 2) / 2; k <= 4 * (D + 1) + 8; ++k) {
    for (int j : {std::max(0, D + 1 - k), k}) {
      const Rational v = Rational(j) * (two_over - w) + Rational(k) * w - Rational(k - 1) * one_over;
      lower = std::min(lower, v);
    }
  }
  const Rational scaled = lower * ctx.e();
  const long long bound = scaled.numerator() >= 0 ? scaled.numerator() / scaled.denominator()
                                                  : -((-scaled.numerator() + scaled.denominator() - 1) / scaled.denominator());
  int cert = static_cast<int>(std::min<long long>(bound, ctx.m()));
  cert = std::min(cert, sp.absolute_precision());
  return {kappa, w, std::move(coords), std::move(sp), cert};
}

PadicScalar SpecializedCharacter::evaluate(const std::vector<PadicScalar>& t, const std::vector<PadicScalar>& x) const {
  const int g = kappa.g();
  if (static_cast<int>(t.size()) != g || static_cast<int>(x.size()) != g)
    fail(Errc::InvalidArgument, "evaluation point has wrong length");
  std::vector<PadicScalar> pt;
  for (int i = 0; i < g; ++i) pt.push_back(PadicScalar::zero(kappa.context()));
  for (int i = 0; i < g; ++i) {
    if (!x[i].is_integral()) fail(Errc::SpecializationOutsideDomain, "x must be integral");
    pt.push_back(x[i]);
  }
  return (eval_character(kappa, t) * series.evaluate(pt)).with_absolute_precision(certified_precision);
}

}  // namespace eigenkit::weight
