#include "eigenkit/spectral/module.hpp"

#include <algorithm>

#include "eigenkit/error.hpp"

namespace eigenkit::spectral {

BaseRing BaseRing::tate(std::vector<std::string> names, int degree) {
  if (names.empty()) fail(Errc::InvalidArgument, "Tate algebra needs at least one variable");
  if (degree < 0) fail(Errc::InvalidArgument, "truncation degree must be nonnegative");
  BaseRing b;
  b.nvars = static_cast<int>(names.size());
  b.degree = degree;
  b.names = std::move(names);
  return b;
}

BanachModuleModel BanachModuleModel::orthonormalizable(const PadicContext& ctx, BaseRing base, std::size_t rank) {
  return BanachModuleModel(ctx, std::move(base), rank, std::nullopt);
}

BanachModuleModel BanachModuleModel::projective(const PadicContext& ctx, BaseRing base, const PMatrix& e) {
  if (e.rows() != e.cols() || e.rows() == 0) fail(Errc::InvalidArgument, "idempotent must be square");
  const PMatrix d = e * e - e;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d(i, j).is_zero()) fail(Errc::InvalidArgument, "matrix is not idempotent to precision");
  return BanachModuleModel(ctx, std::move(base), e.rows(), e);
}

BanachModuleModel BanachModuleModel::kernel_of_split_surjection(const PadicContext& ctx, BaseRing base,
                                                               const PMatrix& s, const PMatrix& t) {
  if (s.cols() != t.rows() || s.rows() != t.cols()) fail(Errc::InvalidArgument, "section has the wrong shape");
  const PMatrix st = s * t;
  for (std::size_t i = 0; i < st.rows(); ++i)
    for (std::size_t j = 0; j < st.cols(); ++j)
      if (!(st(i, j) - (i == j ? PadicScalar::one(ctx) : PadicScalar::zero(ctx))).is_zero())
        fail(Errc::InvalidArgument, "t is not a section of s");
  return projective(ctx, std::move(base), padic::identity(ctx, s.cols()) - t * s);
}

std::size_t BanachModuleModel::rank() const { return e_ ? padic::rank(*e_) : n_; }

int BanachModuleModel::norm(const PVector& x) const {
  if (x.size() != n_) fail(Errc::InvalidArgument, "coordinate vector has the wrong length");
  return padic::min_valuation(x);
}

int BanachModuleModel::norm(const std::vector<padic::TruncatedSeries>& x) const {
  if (x.size() != n_) fail(Errc::InvalidArgument, "coordinate vector has the wrong length");
  int v = kInfiniteValuation;
  for (const auto& f : x) v = std::min(v, f.gauss_valuation());
  return v;
}

PVector BanachModuleModel::project(const PVector& x) const {
  if (x.size() != n_) fail(Errc::InvalidArgument, "coordinate vector has the wrong length");
  return e_ ? e_->apply(x) : x;
}

}  // namespace eigenkit::spectral
