#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eigenkit/padic/scalar.hpp"

namespace eigenkit::padic {

using Exponent = std::vector<int>;

int total_degree(const Exponent& a);

// Multivariate power series truncated at total degree D.
class TruncatedSeries {
 public:
  using Terms = std::map<Exponent, PadicScalar>;

  TruncatedSeries(const PadicContext& ctx, std::vector<std::string> names, int degree);

  static TruncatedSeries constant(const PadicContext& ctx, std::vector<std::string> names, int degree,
                                  const PadicScalar& c);
  static TruncatedSeries variable(const PadicContext& ctx, std::vector<std::string> names, int degree, int index);

  const PadicContext& context() const noexcept { return ctx_; }
  int nvars() const noexcept { return static_cast<int>(names_.size()); }
  int degree() const noexcept { return degree_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Terms& terms() const noexcept { return terms_; }

  PadicScalar coefficient(const Exponent& a) const;
  PadicScalar constant_term() const { return coefficient(Exponent(names_.size(), 0)); }
  // Terms above the degree bound are rejected; zero-to-full-precision coefficients are dropped.
  void set(const Exponent& a, const PadicScalar& c);
  void add_to(const Exponent& a, const PadicScalar& c);

  TruncatedSeries zero_like() const { return TruncatedSeries(ctx_, names_, degree_); }
  TruncatedSeries one_like() const;
  TruncatedSeries with_degree(int degree) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const PadicScalar& c);
  friend TruncatedSeries operator*(const PadicScalar& c, const TruncatedSeries& a) { return a * c; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  // Inverse of a series with invertible constant term.
  TruncatedSeries inverse() const;

  PadicScalar evaluate(std::span<const PadicScalar> point) const;
  // Substitute the given values for the variables that have one; the others stay formal.
  TruncatedSeries specialize(const std::vector<std::optional<PadicScalar>>& values) const;

  // Minimum coefficient valuation (pi-adic); kInfiniteValuation for the zero series.
  int gauss_valuation() const;
  // Minimum absolute precision over stored coefficients (m when none are stored).
  int absolute_precision() const;
  bool is_zero() const;
  bool equals(const TruncatedSeries& o) const;
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.equals(b); }

  std::string str() const;

 private:
  void check_compatible(const TruncatedSeries& o) const;

  PadicContext ctx_;
  std::vector<std::string> names_;
  int degree_;
  Terms terms_;
};

}  // namespace eigenkit::padic
