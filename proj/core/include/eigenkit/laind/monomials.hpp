#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eigenkit/padic/series.hpp"

namespace eigenkit::laind {

using padic::Exponent;

struct Coordinate {
  int k;  // row
  int l;  // column, k > l
};

// Monomials z^M of total degree <= D in the coordinates z_{k,l} (k > l) of N^0, graded
// lexicographic: lower degree first, then larger exponent vectors first.
class MonomialBasis {
 public:
  MonomialBasis(int g, int degree);

  int g() const noexcept { return g_; }
  int degree() const noexcept { return degree_; }
  int nvars() const noexcept { return static_cast<int>(vars_.size()); }
  const std::vector<Coordinate>& variables() const noexcept { return vars_; }
  // Position of z_{k,l} among the variables, or -1.
  int var_index(int k, int l) const;

  std::size_t size() const noexcept { return monos_.size(); }
  const Exponent& monomial(std::size_t idx) const { return monos_[idx]; }
  std::optional<std::size_t> index_of(const Exponent& a) const;
  int degree_of(std::size_t idx) const;
  // Weight of z^M under t: prod (t_k^-1 t_l)^{M_kl}, as an exponent vector on t_1..t_g.
  std::vector<int> torus_weight(std::size_t idx) const;
  std::string name(std::size_t idx) const;

 private:
  int g_, degree_;
  std::vector<Coordinate> vars_;
  std::vector<Exponent> monos_;
  std::map<Exponent, std::size_t> index_;
};

std::shared_ptr<const MonomialBasis> make_basis(int g, int degree);

}  // namespace eigenkit::laind
