#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "eigenkit/cech/cech.hpp"
#include "eigenkit/laind/bgg.hpp"
#include "eigenkit/laind/compact.hpp"
#include "eigenkit/spectral/family.hpp"
#include "eigenkit/spectral/projector.hpp"
#include "eigenkit/weight/universal.hpp"
#include "support/oracle.hpp"

using namespace eigenkit;
using oracle::cpp_int;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned parameters and tolerances.
constexpr unsigned kP = 5;
constexpr int kM = 20;                   // checked precision
constexpr int kBggD = 12;
constexpr double kBggSeconds = 1.0;      // per weight
constexpr double kCommutationSeconds = 2.0;
constexpr int kFactorD = 54;             // truncation used for the factorization criterion
constexpr int kFactorWork = 54;          // working precision of P: the cap at p = 5, e = 1
constexpr int kBezoutLoss = 2;           // Bezout residual <= p^(-m + 2/e) at e = 1
constexpr int kProjectorGuard = 4;
constexpr int kProjectorWork = kM + 16;
constexpr int kFamilyLoss = 2;
constexpr int kCechGuard = 4;
constexpr double kCechEpsilon = 1.0 / kP;
constexpr double kSuiteSeconds = 120.0;

const padic::PadicContext kCtx(kP, 1, kM);

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::vector<long long> random_dominant(int g) {
  std::vector<long long> k(static_cast<std::size_t>(g));
  k.back() = oracle::uniform(-2, 2);
  for (int i = g - 2; i >= 0; --i) k[i] = k[i + 1] + oracle::uniform(0, 4);
  return k;
}

oracle::IntMatrix to_int_matrix(const padic::PMatrix& A) {
  oracle::IntMatrix M(A.rows(), std::vector<cpp_int>(A.cols()));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) M[i][j] = oracle::to_integer(A(i, j));
  return M;
}

padic::PMatrix to_pmatrix(const oracle::IntMatrix& A, const padic::PadicContext& ctx) {
  padic::PMatrix M = padic::zeros(ctx, A.size(), A[0].size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) M(i, j) = padic::PadicScalar::from_int(ctx, static_cast<long long>(A[i][j]));
  return M;
}

std::vector<long long> valuations(const std::vector<cpp_int>& c) {
  std::vector<long long> v;
  for (const auto& x : c) v.push_back(x == 0 ? -1 : oracle::vp(x, kP));
  return v;
}

// 1. Joint Theta kernel dimensions against the rank of the stacked Theta matrices.
Outcome bgg_kernels() {
  Outcome o;
  auto check = [&](std::vector<long long> k, std::size_t want) {
    auto t0 = Clock::now();
    auto kappa = weight::Character::algebraic_weight(kCtx, k);
    const std::size_t got = laind::joint_theta_kernel(kappa, kBggD).size();
    laind::MonomialBasis B(2, kBggD);
    auto T = to_int_matrix(laind::theta_matrix(kCtx, B, 1, k[0] - k[1]));
    const std::size_t rank_oracle = B.size() - oracle::rational_rank(T);
    const double dt = seconds_since(t0);
    o.require(got == want && rank_oracle == want, "kernel dimension mismatch at k = (" + std::to_string(k[0]) + "," + std::to_string(k[1]) + ")");
    o.require(dt < kBggSeconds, "kernel computation slower than 1s");
  };
  for (long long k = 0; k <= 5; ++k) check({k, 0}, static_cast<std::size_t>(k + 1));
  check({3, 1}, 3);
  return o;
}

// 2. delta_{g-i} Theta_i = p^(k_i - k_{i+1} + 1) Theta_i delta_{g-i} as integer matrices.
Outcome commutation() {
  Outcome o;
  auto t0 = Clock::now();
  for (int g : {2, 3}) {
    const int D = g == 2 ? 12 : 6;
    laind::MonomialBasis B(g, D);
    for (int trial = 0; trial < 5; ++trial) {
      auto k = random_dominant(g);
      for (const auto& r : laind::commutation_residuals(weight::Character::algebraic_weight(kCtx, k), D))
        o.require(r.vanishes && r.nonzero == 0, "library residual does not vanish");
      for (int i = 1; i < g; ++i) {
        const long long n = k[i - 1] - k[i];
        auto T = to_int_matrix(laind::theta_matrix(kCtx, B, i, n));
        auto Dm = to_int_matrix(laind::delta_matrix(kCtx, B, g - i));
        const cpp_int c = oracle::ipow(kP, static_cast<int>(n + 1));
        for (std::size_t r = 0; r < T.size(); ++r)
          for (std::size_t s = 0; s < Dm[0].size(); ++s) {
            cpp_int lhs = 0, rhs = 0;
            for (std::size_t j = 0; j < Dm.size(); ++j) lhs += T[r][j] * Dm[j][s];
            for (std::size_t j = 0; j < T.size(); ++j) rhs += Dm[r][j] * T[j][s];
            o.require(lhs == oracle::mod(c * rhs, oracle::ipow(kP, kM)), "integer commutation fails");
          }
      }
    }
  }
  o.require(seconds_since(t0) < kCommutationSeconds, "commutation check slower than 2s");
  return o;
}

// 3. The small-slope part of ker Theta is the algebraic representation.
Outcome classicity() {
  Outcome o;
  auto kappa = weight::Character::algebraic_weight(kCtx, {3, 1});
  auto cls = laind::classical_subspace(kappa, kBggD);
  auto alg = laind::algebraic_subspace(kappa, kBggD);
  o.require(cls.size() == 3 && alg.size() == 3, "dimension is not 3");
  o.require(laind::same_span(cls, alg), "spans differ");
  return o;
}

// 4. Fredholm slopes of the g = 2 model by brute force, and g = 3 multiplicities by enumeration.
Outcome slopes() {
  Outcome o;
  const padic::PadicContext ctx(kP, 1, 40);
  auto U2 = laind::compact_u_matrix(ctx, 2, kBggD);
  for (std::size_t N = 1; N <= 8; ++N) {
    auto P = spectral::fredholm_series(U2, N);
    auto got = spectral::newton_slopes(P).slope_multiset();
    auto c = oracle::fredholm_by_minors(to_int_matrix(U2.matrix.block(0, 0, N, N)));
    auto hull = oracle::hull_slopes(valuations(c));
    o.require(got.size() == N && hull.size() == N, "wrong number of slopes at N = " + std::to_string(N));
    for (std::size_t i = 0; i < std::min(got.size(), hull.size()); ++i) {
      o.require(got[i] == padic::Rational(static_cast<long long>(i)), "slope is not i");
      o.require(hull[i] == oracle::cpp_rational(static_cast<long long>(i)), "brute-force slope is not i");
    }
    for (std::size_t k = 0; k <= N; ++k)
      o.require(oracle::to_integer(P.coeffs[k]) == oracle::mod(c[k], oracle::ipow(kP, 40)), "coefficient differs from minors");
  }
  const padic::PadicContext wide(kP, 1, padic::max_precision(kP, 1));
  auto U3 = laind::compact_u_matrix(wide, 3, 6);
  auto s3 = spectral::newton_slopes(spectral::fredholm_series(U3, U3.size())).slope_multiset();
  std::map<long long, int> seen;
  for (const auto& s : s3) seen[s.numerator()]++;
  // Exponent vectors (m21, m32, m31) with m21 + m32 + 2 m31 = s; all of them have degree <= s <= 6.
  std::map<long long, int> want;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (int c = 0; a + b + c <= 6; ++c) want[a + b + 2 * c]++;
  // The visible polygon ends inside its last slope, so only the slopes below it are complete.
  const long long top = s3.empty() ? 0 : s3.back().numerator();
  o.require(top >= 4, "fewer than four g = 3 slopes visible");
  for (long long s = 0; s < std::min(top, 7LL); ++s)
    o.require(seen[s] == want[s], "g = 3 multiplicity differs at slope " + std::to_string(s));
  return o;
}

// 5. Coefficients from truncations N and N + 4 agree on the certified prefix.
Outcome stability() {
  Outcome o;
  for (int g : {2, 3}) {
    auto U = laind::compact_u_matrix(kCtx, g, g == 2 ? kBggD : 6);
    for (std::size_t N = 2; N + 4 <= std::min<std::size_t>(U.size(), 16); ++N) {
      auto a = spectral::fredholm_series(U, N), b = spectral::fredholm_series(U, N + 4);
      o.require(spectral::agrees_on_prefix(a, b, N), "truncations disagree");
      for (std::size_t n = 0; n <= a.certified_prefix; ++n)
        o.require((a.coeffs[n] - b.coeffs[n]).valuation() >= std::min(kM, a.certified[n]), "certified coefficient moved");
    }
  }
  return o;
}

// 6. P = Q R modulo (pi^m, T^N), slope separation and the Bezout residual.
Outcome factorization() {
  Outcome o;
  const padic::PadicContext W(kP, 1, kFactorWork);
  auto U = laind::compact_u_matrix(W, 2, kFactorD);
  auto P = spectral::fredholm_series(U, U.size());
  for (auto [h, side] : {std::pair{padic::Rational(5, 2), spectral::BoundarySide::None},
                         std::pair{padic::Rational(2), spectral::BoundarySide::Below},
                         std::pair{padic::Rational(7, 2), spectral::BoundarySide::None}}) {
    auto f = spectral::slope_factor(P, h, side);
    const long long want = h.numerator() / h.denominator() + 1;
    o.require(f.degree() == want, "deg Q is not the slope count");
    for (const auto& s : padic::newton_polygon(f.Q.coeffs()).slope_multiset()) o.require(s <= h, "Q has a slope above h");
    for (const auto& s : padic::newton_polygon(f.R.coeffs()).slope_multiset()) o.require(s > h, "R has a slope at or below h");
    auto QR = f.Q * f.R;
    for (std::size_t k = 0; k <= P.truncation(); ++k) {
      auto d = (k < QR.size() ? QR[k] : padic::PadicScalar::zero(W)) - P.coeffs[k];
      o.require(d.valuation() >= std::min(kM, P.certified[k]), "Q R differs from P at T^" + std::to_string(k) + ", h = " + std::to_string(h.numerator()) + "/" + std::to_string(h.denominator()));
    }
    o.require(f.bezout_precision >= kM - kBezoutLoss,
              "Bezout residual only to precision " + std::to_string(f.bezout_precision));
    auto bez = f.a * f.Q + f.b * f.R.truncated(f.prefix + 1);
    o.require((bez[0] - padic::PadicScalar::one(W)).valuation() >= kM - kBezoutLoss, "Bezout constant term");
    for (std::size_t k = 1; k < std::min<std::size_t>(bez.size(), static_cast<std::size_t>(f.degree())); ++k)
      o.require(bez[k].valuation() >= kM - kBezoutLoss, "Bezout residual coefficient");
  }
  return o;
}

// 7. Riesz projector: idempotent, commuting, of rank deg Q, with char series Q on its image.
Outcome projector() {
  Outcome o;
  const padic::PadicContext W(kP, 1, kProjectorWork);
  auto check = [&](const spectral::CompactOperatorModel& U, padic::Rational h, spectral::BoundarySide side) {
    auto f = spectral::slope_factor(spectral::fredholm_series(U, U.size()), h, side);
    auto pr = spectral::riesz_projector(U, f);
    const auto& A = U.matrix;
    o.require(pr.rank == static_cast<std::size_t>(f.degree()), "rank differs from deg Q");
    o.require(padic::min_valuation(pr.e * pr.e - pr.e) >= kM - kProjectorGuard, "e^2 - e too large");
    o.require(padic::min_valuation(pr.e * A - A * pr.e) >= kM - kProjectorGuard, "eU - Ue too large");
    o.require(pr.charpoly_precision >= kM - kProjectorGuard, "char series on im e differs from Q");
  };
  // Conjugate of the g = 2 model by a unipotent integer matrix, so the projector is not diagonal.
  auto U2 = laind::compact_u_matrix(W, 2, 7);
  const std::size_t n = U2.size();
  oracle::IntMatrix V(n, std::vector<cpp_int>(n, 0)), Vinv;
  for (std::size_t i = 0; i < n; ++i) {
    V[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) V[i][j] = oracle::uniform(-3, 3);
  }
  auto Vp = to_pmatrix(V, W);
  auto Vi = padic::inverse(Vp);
  check(spectral::finite_operator(Vp * U2.matrix * Vi), padic::Rational(5, 2), spectral::BoundarySide::None);
  check(spectral::finite_operator(Vp * U2.matrix * Vi), padic::Rational(2), spectral::BoundarySide::Above);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> s{0, 1, 2, 3, 4, 5};
    std::shuffle(s.begin(), s.end(), oracle::rng());
    oracle::IntMatrix T(6, std::vector<cpp_int>(6, 0));
    for (std::size_t i = 0; i < 6; ++i) {
      long long u;
      do u = oracle::uniform(-20, 20); while (u % kP == 0);
      T[i][i] = oracle::ipow(kP, s[i]) * u;
      for (std::size_t j = i + 1; j < 6; ++j) T[i][j] = oracle::uniform(-9, 9);
    }
    check(spectral::finite_operator(to_pmatrix(T, W)), padic::Rational(5, 2), spectral::BoundarySide::None);
  }
  return o;
}

// 8. Slope-1 eigenvector of [[1+S,1],[0,5]] against the expansion of 1/(4 - S).
Outcome family() {
  Outcome o;
  const int D = 8;
  auto Sv = padic::TruncatedSeries::variable(kCtx, {"S"}, D, 0);
  auto one = Sv.one_like();
  spectral::SeriesMatrix M(2, 2, Sv.zero_like());
  M(0, 0) = one + Sv;
  M(0, 1) = one;
  M(1, 1) = padic::PadicScalar::from_int(kCtx, 5) * one;
  spectral::FamilyOperatorModel F(M, padic::kInfiniteValuation);
  spectral::LiftOptions opts;
  opts.normalize_index = 1;
  auto L = spectral::eigen_family_lift(F, {padic::PadicScalar::zero(kCtx)}, padic::PadicScalar::from_int(kCtx, 5), opts);
  const cpp_int mod = oracle::ipow(kP, kM), check_mod = oracle::ipow(kP, kM - kFamilyLoss);
  cpp_int inv4 = boost::multiprecision::powm(cpp_int(4), 4 * oracle::ipow(kP, kM - 1) - 1, mod);
  for (int k = 0; k <= D; ++k) {
    cpp_int want = boost::multiprecision::powm(inv4, cpp_int(k + 1), mod);
    cpp_int got = oracle::to_integer(L.vector[0].coefficient({k}));
    o.require(oracle::mod(got, check_mod) == oracle::mod(want, check_mod), "coefficient of S^" + std::to_string(k));
    o.require(L.vector[1].coefficient({k}).equals(k == 0 ? padic::PadicScalar::one(kCtx) : padic::PadicScalar::zero(kCtx)),
              "normalized coordinate is not 1");
  }
  return o;
}

// 9. X-degree k coefficients of the universal character have valuation >= (k + 1)/(p - 1).
Outcome universal_bound() {
  Outcome o;
  auto ctx = padic::PadicContext::with_default_ramification(kP, 80);
  o.require(ctx.e() == 8, "default ramification at p = 5 is not 8");
  for (int g : {1, 2}) {
    auto f = weight::universal_character_eval(ctx, {padic::Rational(1), g, 13});
    int seen = 0;
    for (const auto& [a, c] : f.terms()) {
      int k = 0;
      for (int i = g; i < 2 * g; ++i) k += a[i];
      if (k == 0 || k > 12 || c.is_zero()) continue;
      ++seen;
      // (k + 1)/4 in p units is 2(k + 1) uniformizer digits at e = 8.
      o.require(c.valuation() * (kP - 1) >= (k + 1) * ctx.e(), "coefficient at X-degree " + std::to_string(k));
    }
    o.require(seen > 0, "no X terms");
  }
  return o;
}

// 10. Cech acyclicity of C(I) on the Laurent cover and Kiehl glueing.
Outcome cech_criterion() {
  Outcome o;
  cech::AffinoidModel A(kCtx, 16);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto M = spectral::BanachModuleModel::orthonormalizable(kCtx, spectral::BaseRing::tate({"x"}, 16), n);
    auto r = cech::cech_check(M, A);
    o.require(r.injective, "restriction not injective");
    o.require(r.middle_exact && r.middle_defect >= kM - kCechGuard, "middle defect too large");
    o.require(r.epsilon <= kCechEpsilon, "splitting does not contract by 1/p");
    o.require(r.recovered_rank == n, "rank not recovered");
    auto glue = cech::kiehl_glue(A, cech::identity_transition(kCtx, n));
    o.require(glue.round_trip && glue.rank == n, "glue does not round trip");
    for (auto fr : glue.fibre_ranks) o.require(fr == n, "fibre rank differs");
  }
  return o;
}

// 11. Algebraic characters evaluate as monomials.
Outcome characters() {
  Outcome o;
  const cpp_int mod = oracle::ipow(kP, kM), phi = 4 * oracle::ipow(kP, kM - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const int g = static_cast<int>(oracle::uniform(1, 4));
    std::vector<long long> k;
    for (int i = 0; i < g; ++i) k.push_back(oracle::uniform(-10, 10));
    auto kappa = weight::Character::algebraic_weight(kCtx, k);
    for (int pt = 0; pt < 5; ++pt) {
      std::vector<padic::PadicScalar> t;
      cpp_int want = 1;
      for (int i = 0; i < g; ++i) {
        long long x;
        do x = oracle::uniform(-1000000, 1000000); while (x % kP == 0);
        t.push_back(padic::PadicScalar::from_int(kCtx, x));
        cpp_int e = k[i] >= 0 ? cpp_int(k[i]) : phi + k[i];
        cpp_int f = boost::multiprecision::powm(oracle::mod(x, mod), e, mod);
        want = want * f % mod;
      }
      o.require(oracle::to_integer(weight::eval_character(kappa, t)) == want, "character value differs");
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"bgg kernel dimensions", bgg_kernels},
      {"commutation identity", commutation},
      {"classicity", classicity},
      {"fredholm slopes", slopes},
      {"fredholm stability", stability},
      {"slope factorization", factorization},
      {"riesz projector", projector},
      {"eigenfamily lift", family},
      {"universal character bound", universal_bound},
      {"cech acyclicity", cech_criterion},
      {"character evaluation", characters},
  };
  const auto start = Clock::now();
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s %2d %-28s %8.3fs %s\n", o.pass ? "PASS" : "FAIL", index, name, seconds_since(t0), o.detail.c_str());
  }
  const double total = seconds_since(start);
  const bool fast = total < kSuiteSeconds;
  failed += !fast;
  std::printf("%s %2d %-28s %8.3fs\n", fast ? "PASS" : "FAIL", 12, "suite wall time", total);
  return failed == 0 ? 0 : 1;
}
