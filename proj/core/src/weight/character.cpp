#include "eigenkit/weight/character.hpp"

#include <algorithm>

#include "eigenkit/error.hpp"
#include "eigenkit/padic/transcendental.hpp"

namespace eigenkit::weight {

using namespace padic;

namespace {

long long mod_pm1(long long a, std::uint32_t p) {
  const long long q = static_cast<long long>(p) - 1;
  return ((a % q) + q) % q;
}

}  // namespace

Character::Character(std::vector<long long> chi, std::vector<PadicScalar> s,
                     std::optional<std::vector<long long>> algebraic)
    : chi_(std::move(chi)), s_(std::move(s)), alg_(std::move(algebraic)) {
  if (s_.empty() || chi_.size() != s_.size()) fail(Errc::InvalidArgument, "character needs g >= 1 matching parts");
  const PadicContext& ctx = s_.front().context();
  const PadicScalar one = PadicScalar::one(ctx);
  for (auto& c : chi_) c = mod_pm1(c, ctx.p());
  for (const auto& si : s_) {
    if (!(si.context() == ctx)) fail(Errc::ContextMismatch, "character parameters over different contexts");
    const PadicScalar d = si - one;
    if (!d.is_zero() && d.valuation() <= 0) fail(Errc::NotOneUnit, "s = " + si.str() + " is not a 1-unit");
  }
  if (alg_) {
    if (alg_->size() != s_.size()) fail(Errc::InvalidArgument, "algebraic tuple length");
    const PadicScalar base = PadicScalar::from_int(ctx, 1 + static_cast<long long>(ctx.p()));
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if (chi_[i] != mod_pm1((*alg_)[i], ctx.p()) || !(s_[i] == base.pow((*alg_)[i])))
        fail(Errc::InvalidArgument, "algebraic tag inconsistent with (chi, s)");
    }
  }
}

Character Character::algebraic_weight(const PadicContext& ctx, std::vector<long long> k) {
  const PadicScalar base = PadicScalar::from_int(ctx, 1 + static_cast<long long>(ctx.p()));
  std::vector<PadicScalar> s;
  for (long long ki : k) s.push_back(base.pow(ki));
  return Character(k, std::move(s), k);
}

Character Character::trivial(const PadicContext& ctx, int g) {
  return algebraic_weight(ctx, std::vector<long long>(static_cast<std::size_t>(g), 0));
}

bool Character::is_dominant() const {
  if (!alg_) return false;
  return std::is_sorted(alg_->rbegin(), alg_->rend());
}

std::vector<PadicScalar> Character::exponents() const {
  const PadicContext& ctx = context();
  if (alg_) {
    std::vector<PadicScalar> out;
    for (long long k : *alg_) out.push_back(PadicScalar::from_int(ctx, k));
    return out;
  }
  const PadicScalar l1p = log_one_unit(PadicScalar::from_int(ctx, 1 + static_cast<long long>(ctx.p())));
  std::vector<PadicScalar> out;
  for (const auto& si : s_) out.push_back(log_one_unit(si) / l1p);
  return out;
}

bool Character::equals(const Character& o) const {
  if (g() != o.g() || chi_ != o.chi_ || alg_ != o.alg_) return false;
  for (int i = 0; i < g(); ++i)
    if (!(s_[i] == o.s_[i])) return false;
  return true;
}

PadicScalar eval_character(const Character& kappa, std::span<const PadicScalar> t) {
  if (static_cast<int>(t.size()) != kappa.g()) fail(Errc::InvalidArgument, "torus point has wrong length");
  const PadicContext& ctx = kappa.context();
  PadicScalar acc = PadicScalar::one(ctx);
  for (int i = 0; i < kappa.g(); ++i) {
    if (!(t[i].context() == ctx)) fail(Errc::ContextMismatch, "torus point context");
    const UnitSplit sp = split_unit(t[i]);
    const auto x = sp.one_unit.to_zp();
    if (!x) fail(Errc::NonUnitArgument, "1-unit part outside Z_p");
    const ZpValue b = log_base_one_plus_p(*x, ctx.p());
    acc = acc * sp.teich.pow(kappa.chi()[i]) * one_unit_pow(kappa.s()[i], b);
  }
  return acc;
}

Character involution(const Character& kappa) {
  const int g = kappa.g();
  std::vector<long long> chi(g);
  std::vector<PadicScalar> s;
  for (int i = 0; i < g; ++i) {
    chi[i] = -kappa.chi()[g - 1 - i];
    s.push_back(kappa.s()[g - 1 - i].inverse());
  }
  std::optional<std::vector<long long>> alg;
  if (kappa.algebraic()) {
    alg.emplace(g);
    for (int i = 0; i < g; ++i) (*alg)[i] = -(*kappa.algebraic())[g - 1 - i];
  }
  return Character(std::move(chi), std::move(s), std::move(alg));
}

Rational analyticity_radius(const Character& kappa, std::optional<int> max_degree) {
  const PadicContext& ctx = kappa.context();
  const int e = ctx.e();
  if (kappa.is_algebraic()) return Rational(1, e);
  int K = max_degree.value_or(2 * ctx.m());
  // Work with exact lifts of the exponents, with guard digits absorbing k!.
  std::optional<PadicContext> W;
  while (K >= 1) {
    try {
      W.emplace(ctx.with_precision(ctx.m() + e * (vp_factorial(K, ctx.p()) + 1)));
      break;
    } catch (const Error&) {
      --K;
    }
  }
  if (!W) fail(Errc::PrecisionLoss, "no room for guard digits in " + ctx.str());
  std::vector<int> lower(static_cast<std::size_t>(K) + 1, kInfiniteValuation);
  for (const auto& L0 : kappa.exponents()) {
    const PadicScalar L = L0.lift_exact(*W);
    PadicScalar num = PadicScalar::one(*W);
    PadicScalar fact = PadicScalar::one(*W);
    for (int k = 1; k <= K; ++k) {
      num = num * (L - PadicScalar::from_int(*W, k - 1));
      fact = fact * PadicScalar::from_int(*W, k);
      const PadicScalar b = num / fact;
      lower[k] = std::min(lower[k], b.valuation());
    }
  }
  // accept w = j/e when v(binom(L,k)) + k w >= k/(2e) for all k <= K (pi-adic units: 2 v + 2 k j >= k)
  for (long long j = 1;; ++j) {
    bool ok = true;
    for (int k = 1; k <= K && ok; ++k) {
      if (lower[k] >= kInfiniteValuation) continue;
      ok = 2LL * lower[k] + 2LL * k * j >= k;
    }
    if (ok) return Rational(j, e);
  }
}

}  // namespace eigenkit::weight
