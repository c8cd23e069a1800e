#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eigenkit/spectral/module.hpp"

namespace eigenkit::cech {

using padic::PadicContext;
using padic::PadicScalar;
using padic::PMatrix;
using padic::PVector;

// Finite Laurent polynomial sum_n c_n f^n in the distinguished element f = x / p.
class Laurent {
 public:
  explicit Laurent(const PadicContext& ctx) : ctx_(ctx) {}
  static Laurent monomial(const PadicScalar& c, int n);

  const PadicContext& context() const noexcept { return ctx_; }
  const std::map<int, PadicScalar>& terms() const noexcept { return t_; }
  PadicScalar coefficient(int n) const;
  void set(int n, const PadicScalar& c);
  bool is_zero() const;
  int min_exponent() const;
  int max_exponent() const;
  // Drops exponents outside [lo, hi].
  Laurent clipped(int lo, int hi) const;

  Laurent operator-() const;
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const PadicScalar& c, const Laurent& a);
  bool equals(const Laurent& o) const;

 private:
  PadicContext ctx_;
  std::map<int, PadicScalar> t_;
};

enum class Chart { Plus, Minus, Both };
const char* to_string(Chart c);
Chart chart_from_string(const std::string& s);

// K<x> truncated at degree D_A with the Gauss norm, covered by U+ = {|x| <= |p|} and
// U- = {|p| <= |x| <= 1}, i.e. the Laurent cover by f = x / p.
struct AffinoidModel {
  PadicContext ctx;
  int degree;

  AffinoidModel(const PadicContext& c, int d);

  // x^n = p^n f^n.
  Laurent to_laurent(const PVector& a) const;
  // Inverse of to_laurent; only nonnegative exponents are allowed.
  PVector from_laurent(const Laurent& g) const;
  // Gauss norm on the unit disc, as a valuation.
  int norm(const PVector& a) const;
  // Sup norm over the chart, as a valuation (|f| = 1 on U+-, 1 <= |f| <= p on U-, |f| <= 1 on U+).
  int chart_norm(Chart chart, const Laurent& g) const;
  // Exponent range of the truncated chart coordinates.
  std::pair<int, int> exponent_range(Chart chart) const;
};

// M (x)^ A_U for M = C(I) over A, presented on the canonical monomials of the chart.
struct LocalizedModule {
  AffinoidModel base;
  Chart chart;
  std::size_t rank;

  std::vector<Laurent> localize(const std::vector<PVector>& m) const;
  int norm(const std::vector<Laurent>& u) const;
  // Valuation of X - f and f Y - 1 computed on the canonical representatives.
  int relation_defect() const;
};

LocalizedModule completed_localization(const spectral::BanachModuleModel& M, const AffinoidModel& A, Chart chart);

struct LaurentSplit {
  Laurent plus;   // exponents >= 0
  Laurent minus;  // g = plus - minus, exponents < 0
  bool within_bound = true;  // |g+-| <= beta |g| on the overlap
};

LaurentSplit laurent_split(const Laurent& g, double beta = 1.0);

}  // namespace eigenkit::cech
