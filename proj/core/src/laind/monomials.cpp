#include "eigenkit/laind/monomials.hpp"

#include <algorithm>

#include "eigenkit/error.hpp"

namespace eigenkit::laind {

namespace {

void enumerate(int nvars, int remaining, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos == static_cast<std::size_t>(nvars)) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[pos] = a;
    enumerate(nvars, remaining - a, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(int g, int degree) : g_(g), degree_(degree) {
  if (g < 1) fail(Errc::InvalidArgument, "genus must be at least 1");
  if (degree < 0) fail(Errc::InvalidArgument, "truncation degree must be nonnegative");
  for (int k = 2; k <= g; ++k)
    for (int l = 1; l < k; ++l) vars_.push_back({k, l});
  Exponent cur(vars_.size(), 0);
  if (vars_.empty()) {
    monos_.push_back(cur);
  } else {
    for (int d = 0; d <= degree; ++d) enumerate(nvars(), d, 0, cur, monos_);
  }
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
}

int MonomialBasis::var_index(int k, int l) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].k == k && vars_[i].l == l) return static_cast<int>(i);
  return -1;
}

std::optional<std::size_t> MonomialBasis::index_of(const Exponent& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int MonomialBasis::degree_of(std::size_t idx) const { return padic::total_degree(monos_[idx]); }

std::vector<int> MonomialBasis::torus_weight(std::size_t idx) const {
  std::vector<int> w(static_cast<std::size_t>(g_), 0);
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    const int m = monos_[idx][v];
    w[vars_[v].k - 1] -= m;
    w[vars_[v].l - 1] += m;
  }
  return w;
}

std::string MonomialBasis::name(std::size_t idx) const {
  std::string s;
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    const int m = monos_[idx][v];
    if (!m) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(vars_[v].k) + std::to_string(vars_[v].l);
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

std::shared_ptr<const MonomialBasis> make_basis(int g, int degree) {
  return std::make_shared<const MonomialBasis>(g, degree);
}

}  // namespace eigenkit::laind
