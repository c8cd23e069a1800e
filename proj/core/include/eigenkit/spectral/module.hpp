#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenkit/padic/series.hpp"
#include "eigenkit/spectral/fredholm.hpp"

namespace eigenkit::spectral {

// Scalar field when nvars == 0, otherwise the Tate algebra in nvars variables truncated at degree.
struct BaseRing {
  int nvars = 0;
  int degree = 0;
  std::vector<std::string> names;

  static BaseRing scalar() { return {}; }
  static BaseRing tate(std::vector<std::string> names, int degree);
  bool is_scalar() const noexcept { return nvars == 0; }
};

// C(I) for a finite index set, or a direct summand of it cut out by an idempotent.
class BanachModuleModel {
 public:
  static BanachModuleModel orthonormalizable(const PadicContext& ctx, BaseRing base, std::size_t rank);
  // Requires e^2 = e to precision.
  static BanachModuleModel projective(const PadicContext& ctx, BaseRing base, const PMatrix& idempotent);
  // ker(s) for a surjection s: C(I) -> C(J) with a given section t (s t = 1): the summand cut out by 1 - t s.
  static BanachModuleModel kernel_of_split_surjection(const PadicContext& ctx, BaseRing base, const PMatrix& s,
                                                      const PMatrix& t);

  const PadicContext& context() const noexcept { return ctx_; }
  const BaseRing& base() const noexcept { return base_; }
  std::size_t ambient_rank() const noexcept { return n_; }
  bool is_projective() const noexcept { return e_.has_value(); }
  const std::optional<PMatrix>& idempotent() const noexcept { return e_; }
  // Rank of the summand (ambient rank for C(I)).
  std::size_t rank() const;

  // Sup norm as a valuation: min over coordinates (Gauss valuation for Tate coordinates).
  int norm(const PVector& x) const;
  int norm(const std::vector<padic::TruncatedSeries>& x) const;
  // Image of x under the idempotent (identity for C(I)).
  PVector project(const PVector& x) const;

 private:
  BanachModuleModel(const PadicContext& ctx, BaseRing base, std::size_t n, std::optional<PMatrix> e)
      : ctx_(ctx), base_(std::move(base)), n_(n), e_(std::move(e)) {}

  PadicContext ctx_;
  BaseRing base_;
  std::size_t n_;
  std::optional<PMatrix> e_;
};

}  // namespace eigenkit::spectral
