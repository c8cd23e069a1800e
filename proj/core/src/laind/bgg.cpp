#include "eigenkit/laind/bgg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eigenkit/error.hpp"

namespace eigenkit::laind {

namespace {

using Block = std::vector<std::size_t>;

std::map<std::vector<int>, Block> weight_blocks(const MonomialBasis& B) {
  std::map<std::vector<int>, Block> blocks;
  for (std::size_t idx = 0; idx < B.size(); ++idx) blocks[B.torus_weight(idx)].push_back(idx);
  return blocks;
}

PVector unit_vector(const PadicContext& ctx, std::size_t n, std::size_t i) {
  PVector v(n, PadicScalar::zero(ctx));
  v[i] = PadicScalar::one(ctx);
  return v;
}

PVector apply_theta(const MonomialBasis& B, int i, long long n, PVector c) {
  const LoweringField X(B.g(), i);
  for (long long r = 0; r < n; ++r) c = X.apply(B, c);
  return c;
}

std::vector<long long> theta_powers(const Character& kappa) {
  std::vector<long long> n;
  for (int i = 1; i < kappa.g(); ++i) {
    n.push_back(pairing(kappa, i) + 1);
    if (n.back() < 0) fail(Errc::NonIntegralPairing, "weight is not dominant for root " + std::to_string(i));
  }
  return n;
}

// Kernel of the stacked Theta maps restricted to the span of `block`.
std::vector<PVector> block_kernel(const PadicContext& ctx, const MonomialBasis& B, const Block& block,
                                  const std::vector<long long>& powers) {
  std::vector<std::vector<PVector>> images(powers.size());
  std::vector<std::size_t> rows;  // (root, index) pairs flattened
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
  for (std::size_t r = 0; r < powers.size(); ++r) {
    for (std::size_t col : block) {
      PVector img = apply_theta(B, static_cast<int>(r) + 1, powers[r], unit_vector(ctx, B.size(), col));
      for (std::size_t j = 0; j < img.size(); ++j)
        if (!img[j].is_zero() && !row_of.count({r, j})) row_of.emplace(std::make_pair(r, j), row_of.size());
      images[r].push_back(std::move(img));
    }
  }
  PMatrix M = padic::zeros(ctx, std::max<std::size_t>(row_of.size(), 1), block.size());
  for (const auto& [key, row] : row_of)
    for (std::size_t c = 0; c < block.size(); ++c) M(row, c) = images[key.first][c][key.second];
  if (row_of.empty()) {
    std::vector<PVector> all;
    for (std::size_t c = 0; c < block.size(); ++c) all.push_back(unit_vector(ctx, block.size(), c));
    return all;
  }
  return padic::kernel(M);
}

std::vector<InducedFunction> kernel_on_blocks(const Character& kappa, int D, bool classical_only) {
  const PadicContext& ctx = kappa.context();
  const auto powers = theta_powers(kappa);
  auto basis = make_basis(kappa.g(), D);
  const auto bounds = classicity_bounds(kappa);
  std::vector<InducedFunction> out;
  for (const auto& [wt, block] : weight_blocks(*basis)) {
    if (classical_only) {
      bool below = true;
      for (int j = 1; j < kappa.g() && below; ++j)
        below = Rational(delta_exponent(*basis, j, block.front())) < bounds[j - 1];
      if (!below) continue;
    }
    for (const auto& v : block_kernel(ctx, *basis, block, powers)) {
      PVector full(basis->size(), PadicScalar::zero(ctx));
      for (std::size_t c = 0; c < block.size(); ++c) full[block[c]] = v[c];
      out.emplace_back(kappa, basis, std::move(full));
    }
  }
  return out;
}

}  // namespace

long long weyl_dimension(const std::vector<long long>& k) {
  // prod_{i<j} (k_i - k_j + j - i) / (j - i), accumulated as an exact fraction.
  long long num = 1, den = 1;
  const int g = static_cast<int>(k.size());
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      num *= k[i] - k[j] + j - i;
      den *= j - i;
      const long long q = std::gcd(num, den);
      num /= q;
      den /= q;
    }
  return num / den;
}

std::vector<InducedFunction> joint_theta_kernel(const Character& kappa, int D) {
  return kernel_on_blocks(kappa, D, false);
}

std::vector<InducedFunction> algebraic_subspace(const Character& kappa, int D) {
  auto here = joint_theta_kernel(kappa, D);
  const auto next = joint_theta_kernel(kappa, D + 1);
  if (here.size() != next.size())
    fail(Errc::TruncationTooSmall, "kernel dimension " + std::to_string(here.size()) + " at D=" + std::to_string(D) +
                                       " but " + std::to_string(next.size()) + " at D+1");
  return here;
}

BggReport bgg_check(const Character& kappa, int D) {
  if (!kappa.is_dominant()) fail(Errc::InvalidArgument, "bgg_check needs a dominant algebraic weight");
  BggReport r;
  const auto ker = algebraic_subspace(kappa, D);
  r.kernel_dim = static_cast<int>(ker.size());
  r.next_kernel_dim = r.kernel_dim;
  r.expected_dim = static_cast<int>(weyl_dimension(*kappa.algebraic()));
  const PadicContext& ctx = kappa.context();
  r.composition_zero = true;
  r.precision_margin = ctx.m();
  for (const auto& f : ker) {
    const MonomialBasis& B = *f.basis();
    for (std::size_t idx = 0; idx < B.size(); ++idx) {
      if (f.coeffs()[idx].is_zero()) continue;
      int s = 0;
      for (std::size_t v = 0; v < B.variables().size(); ++v)
        s += (B.variables()[v].k - B.variables()[v].l) * B.monomial(idx)[v];
      r.slopes.push_back(Rational(s));
      break;
    }
    for (int i = 1; i < kappa.g(); ++i) {
      const auto img = theta_alpha(i, f);
      for (const auto& c : img.coeffs()) {
        if (!c.is_zero()) r.composition_zero = false;
        r.precision_margin = std::min(r.precision_margin, c.absolute_precision());
      }
    }
  }
  std::sort(r.slopes.begin(), r.slopes.end());
  r.verdict = r.composition_zero && r.kernel_dim == r.expected_dim;
  return r;
}

std::vector<CommutationResidual> commutation_residuals(const Character& kappa, int D) {
  const PadicContext& ctx = kappa.context();
  const int g = kappa.g();
  auto basis = make_basis(g, D);
  const MonomialBasis& B = *basis;
  std::vector<CommutationResidual> out;
  for (int i = 1; i < g; ++i) {
    const long long n = pairing(kappa, i) + 1;
    const int j = g - i;
    const PadicScalar scale = PadicScalar::uniformizer_power(ctx, -ctx.e() * static_cast<int>(n));
    CommutationResidual res{i, true, ctx.m(), 0};
    for (std::size_t idx = 0; idx < B.size(); ++idx) {
      const InducedFunction f = InducedFunction::monomial(kappa, basis, idx);
      const InducedFunction lhs = delta(j, theta_alpha(i, n - 1, f));
      const InducedFunction rhs = scale * theta_alpha(i, n - 1, delta(j, f));
      for (std::size_t r = 0; r < B.size(); ++r) {
        const PadicScalar d = lhs.coeffs()[r] - rhs.coeffs()[r];
        if (!d.is_zero()) {
          res.vanishes = false;
          ++res.nonzero;
        }
        res.precision = std::min(res.precision, d.absolute_precision());
      }
    }
    out.push_back(res);
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Classical: return "classical";
    case Verdict::NoClaim: return "no_claim";
    case Verdict::Violation: return "violation";
  }
  return "?";
}

std::vector<Rational> classicity_bounds(const Character& kappa) {
  const int g = kappa.g();
  if (!kappa.algebraic()) fail(Errc::NonIntegralPairing, "classicity bounds need an algebraic weight");
  const auto& k = *kappa.algebraic();
  std::vector<Rational> v(static_cast<std::size_t>(g > 1 ? g - 1 : 0));
  for (int i = 1; i < g; ++i) v[g - i - 1] = Rational(k[i - 1] - k[i] + 1);
  return v;
}

ClassicityResult classicity_filter(const InducedFunction& f, const std::optional<std::vector<Rational>>& slopes) {
  const Character& kappa = f.kappa();
  if (!kappa.is_dominant()) fail(Errc::InvalidArgument, "classicity needs a dominant algebraic weight");
  const int g = kappa.g();
  const MonomialBasis& B = *f.basis();
  ClassicityResult r;
  r.bounds = classicity_bounds(kappa);
  for (int j = 1; j < g; ++j) {
    std::optional<int> ex;
    for (std::size_t idx = 0; idx < B.size(); ++idx) {
      if (f.coeffs()[idx].is_zero()) continue;
      const int x = delta_exponent(B, j, idx);
      if (ex && *ex != x) fail(Errc::NotAnEigenvector, "f is not an eigenvector of delta_" + std::to_string(j));
      ex = x;
    }
    if (!ex) fail(Errc::NotAnEigenvector, "zero vector");
    r.slopes.push_back(Rational(*ex));
  }
  if (slopes && *slopes != r.slopes) fail(Errc::NotAnEigenvector, "supplied slopes do not match the delta action");
  bool below = true;
  for (int j = 1; j < g; ++j) below = below && r.slopes[j - 1] < r.bounds[j - 1];
  if (!below) {
    r.verdict = Verdict::NoClaim;
    return r;
  }
  r.verdict = Verdict::Classical;
  for (int i = 1; i < g; ++i)
    if (!theta_alpha(i, f).is_zero()) r.verdict = Verdict::Violation;
  return r;
}

std::vector<InducedFunction> classical_subspace(const Character& kappa, int D) {
  return kernel_on_blocks(kappa, D, true);
}

bool same_span(const std::vector<InducedFunction>& a, const std::vector<InducedFunction>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const PadicContext& ctx = a.front().context();
  const std::size_t n = a.front().coeffs().size();
  auto to_matrix = [&](const std::vector<const InducedFunction*>& v) {
    PMatrix M = padic::zeros(ctx, n, v.size());
    for (std::size_t c = 0; c < v.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) M(r, c) = v[c]->coeffs()[r];
    return M;
  };
  std::vector<const InducedFunction*> pa, pb, pab;
  for (const auto& f : a) pa.push_back(&f), pab.push_back(&f);
  for (const auto& f : b) pb.push_back(&f), pab.push_back(&f);
  const auto ra = padic::rank(to_matrix(pa)), rb = padic::rank(to_matrix(pb)), rab = padic::rank(to_matrix(pab));
  return ra == rb && rb == rab;
}

}  // namespace eigenkit::laind
