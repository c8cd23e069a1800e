#include "eigenkit/laind/induced.hpp"

#include "eigenkit/error.hpp"

namespace eigenkit::laind {

InducedFunction::InducedFunction(Character kappa, std::shared_ptr<const MonomialBasis> basis, PVector coeffs,
                                 Rational w)
    : kappa_(std::move(kappa)), basis_(std::move(basis)), c_(std::move(coeffs)), w_(w) {
  if (!basis_ || basis_->g() != kappa_.g()) fail(Errc::InvalidArgument, "basis genus differs from the weight");
  if (c_.size() != basis_->size()) fail(Errc::InvalidArgument, "coefficient table does not match the basis");
  for (const auto& c : c_)
    if (!(c.context() == kappa_.context())) fail(Errc::ContextMismatch, "induced function coefficients");
}

InducedFunction InducedFunction::zero(const Character& kappa, std::shared_ptr<const MonomialBasis> basis,
                                      Rational w) {
  PVector c(basis->size(), PadicScalar::zero(kappa.context()));
  return InducedFunction(kappa, std::move(basis), std::move(c), w);
}

InducedFunction InducedFunction::monomial(const Character& kappa, std::shared_ptr<const MonomialBasis> basis,
                                          std::size_t idx, Rational w) {
  if (idx >= basis->size()) fail(Errc::IndexOutOfRange, "monomial index");
  PVector c(basis->size(), PadicScalar::zero(kappa.context()));
  c[idx] = PadicScalar::one(kappa.context());
  return InducedFunction(kappa, std::move(basis), std::move(c), w);
}

InducedFunction InducedFunction::retagged(const Character& kappa) const {
  return InducedFunction(kappa, basis_, c_, w_);
}

InducedFunction InducedFunction::with_coeffs(PVector c) const { return InducedFunction(kappa_, basis_, std::move(c), w_); }

int InducedFunction::gauss_valuation() const {
  int v = padic::kInfiniteValuation;
  const int e = context().e();
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) v = std::min(v, c_[i].valuation() + e * basis_->degree_of(i));
  return v;
}

bool InducedFunction::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool InducedFunction::equals(const InducedFunction& o) const {
  if (c_.size() != o.c_.size() || !(kappa_ == o.kappa_)) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

InducedFunction operator+(const InducedFunction& a, const InducedFunction& b) {
  if (a.c_.size() != b.c_.size()) fail(Errc::InvalidArgument, "adding functions on different bases");
  PVector c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + b.c_[i];
  return a.with_coeffs(std::move(c));
}

InducedFunction operator-(const InducedFunction& a, const InducedFunction& b) {
  return a + (PadicScalar::from_int(b.context(), -1) * b);
}

InducedFunction operator*(const PadicScalar& s, const InducedFunction& f) {
  PVector c = f.c_;
  for (auto& x : c) x = s * x;
  return f.with_coeffs(std::move(c));
}

}  // namespace eigenkit::laind
