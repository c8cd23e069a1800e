#include "eigenkit/laind/operators.hpp"

#include "eigenkit/error.hpp"

namespace eigenkit::laind {

InducedFunction torus_act(const std::vector<PadicScalar>& t, const InducedFunction& f) {
  const int g = f.g();
  if (static_cast<int>(t.size()) != g) fail(Errc::InvalidArgument, "torus point has wrong length");
  for (const auto& ti : t)
    if (ti.is_zero() || ti.valuation() != 0)
      fail(Errc::NonUnitTorusPoint, "torus coordinate " + ti.str() + " is not a unit");
  const PadicScalar pref = weight::eval_character(f.kappa(), t).inverse();
  std::vector<PadicScalar> tinv;
  for (const auto& ti : t) tinv.push_back(ti.inverse());
  const MonomialBasis& B = *f.basis();
  PVector c = f.coeffs();
  for (std::size_t idx = 0; idx < B.size(); ++idx) {
    if (c[idx].is_zero()) continue;
    const auto wt = B.torus_weight(idx);
    PadicScalar s = pref;
    for (int j = 0; j < g; ++j)
      if (wt[j]) s = s * (wt[j] > 0 ? t[j].pow(wt[j]) : tinv[j].pow(-wt[j]));
    c[idx] = c[idx] * s;
  }
  return f.with_coeffs(std::move(c));
}

int delta_exponent(const MonomialBasis& basis, int i, std::size_t idx) {
  const int g = basis.g();
  int n = 0;
  for (std::size_t v = 0; v < basis.variables().size(); ++v) {
    const auto& [k, l] = basis.variables()[v];
    if (k >= g - i + 1 && l <= g - i) n += basis.monomial(idx)[v];
  }
  return n;
}

InducedFunction delta(int i, const InducedFunction& f) {
  if (i < 1 || i > f.g()) fail(Errc::IndexOutOfRange, "delta index " + std::to_string(i));
  const MonomialBasis& B = *f.basis();
  const int e = f.context().e();
  PVector c = f.coeffs();
  for (std::size_t idx = 0; idx < B.size(); ++idx) {
    const int n = delta_exponent(B, i, idx);
    if (n) c[idx] = c[idx].mul_pi_power(e * n);
  }
  return f.with_coeffs(std::move(c));
}

LoweringField::LoweringField(int g, int i) : g_(g), i_(i) {
  if (i < 1 || i >= g) fail(Errc::IndexOutOfRange, "lowering field index " + std::to_string(i));
}

PVector LoweringField::apply(const MonomialBasis& B, const PVector& c) const {
  const PadicContext& ctx = c.front().context();
  PVector out(c.size(), PadicScalar::zero(ctx));
  const int lead = B.var_index(i_ + 1, i_);
  std::vector<std::pair<int, int>> moves;  // (z_{k,i}, z_{k,i+1})
  for (int k = i_ + 2; k <= g_; ++k) moves.emplace_back(B.var_index(k, i_), B.var_index(k, i_ + 1));
  for (std::size_t idx = 0; idx < B.size(); ++idx) {
    if (c[idx].is_zero()) continue;
    const Exponent& M = B.monomial(idx);
    if (M[lead] > 0) {
      Exponent N = M;
      N[lead] -= 1;
      const auto j = *B.index_of(N);
      out[j] = out[j] + c[idx] * PadicScalar::from_int(ctx, M[lead]);
    }
    for (const auto& [from, to] : moves) {
      if (M[from] == 0) continue;
      Exponent N = M;
      N[from] -= 1;
      N[to] += 1;
      const auto j = *B.index_of(N);
      out[j] = out[j] + c[idx] * PadicScalar::from_int(ctx, M[from]);
    }
  }
  return out;
}

InducedFunction LoweringField::operator()(const InducedFunction& f) const {
  if (f.g() != g_) fail(Errc::InvalidArgument, "lowering field genus mismatch");
  return f.with_coeffs(apply(*f.basis(), f.coeffs()));
}

LoweringField lowering_field(int g, int i) { return LoweringField(g, i); }

long long pairing(const Character& kappa, int i) {
  if (i < 1 || i >= kappa.g()) fail(Errc::IndexOutOfRange, "simple root index " + std::to_string(i));
  if (!kappa.algebraic()) fail(Errc::NonIntegralPairing, "pairing of a non-algebraic weight");
  return (*kappa.algebraic())[i - 1] - (*kappa.algebraic())[i];
}

Character shift_by_root(const Character& kappa, int i, long long n) {
  if (i < 1 || i >= kappa.g()) fail(Errc::IndexOutOfRange, "simple root index " + std::to_string(i));
  const PadicContext& ctx = kappa.context();
  auto chi = kappa.chi();
  auto s = kappa.s();
  const PadicScalar base = PadicScalar::from_int(ctx, 1 + static_cast<long long>(ctx.p()));
  chi[i - 1] -= n;
  chi[i] += n;
  s[i - 1] = s[i - 1] * base.pow(-n);
  s[i] = s[i] * base.pow(n);
  std::optional<std::vector<long long>> alg = kappa.algebraic();
  if (alg) {
    (*alg)[i - 1] -= n;
    (*alg)[i] += n;
  }
  return Character(std::move(chi), std::move(s), std::move(alg));
}

Character dot_action(const Character& kappa, int i) { return shift_by_root(kappa, i, pairing(kappa, i) + 1); }

InducedFunction theta_alpha(int i, long long pairing_value, const InducedFunction& f) {
  const long long n = pairing_value + 1;
  if (n < 0) fail(Errc::NonIntegralPairing, "power <kappa,alpha^vee>+1 = " + std::to_string(n) + " is negative");
  const LoweringField X(f.g(), i);
  PVector c = f.coeffs();
  for (long long r = 0; r < n; ++r) c = X.apply(*f.basis(), c);
  return InducedFunction(shift_by_root(f.kappa(), i, n), f.basis(), std::move(c), f.w());
}

InducedFunction theta_alpha(int i, const InducedFunction& f) { return theta_alpha(i, pairing(f.kappa(), i), f); }

PMatrix delta_matrix(const PadicContext& ctx, const MonomialBasis& B, int i) {
  PMatrix m = padic::zeros(ctx, B.size(), B.size());
  for (std::size_t idx = 0; idx < B.size(); ++idx)
    m(idx, idx) = PadicScalar::uniformizer_power(ctx, ctx.e() * delta_exponent(B, i, idx));
  return m;
}

PMatrix theta_matrix(const PadicContext& ctx, const MonomialBasis& B, int i, long long pairing_value) {
  const long long n = pairing_value + 1;
  if (n < 0) fail(Errc::NonIntegralPairing, "negative theta power");
  const LoweringField X(B.g(), i);
  PMatrix m = padic::zeros(ctx, B.size(), B.size());
  for (std::size_t idx = 0; idx < B.size(); ++idx) {
    PVector c(B.size(), PadicScalar::zero(ctx));
    c[idx] = PadicScalar::one(ctx);
    for (long long r = 0; r < n; ++r) c = X.apply(B, c);
    for (std::size_t j = 0; j < B.size(); ++j) m(j, idx) = c[j];
  }
  return m;
}

}  // namespace eigenkit::laind
