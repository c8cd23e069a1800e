#include "serialize.hpp"

#include <algorithm>
#include <sstream>

namespace eigenkit::cli {

std::string rational_string(const padic::Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json to_json(const padic::PadicScalar& x0, int cap) {
  const auto x = x0.absolute_precision() > cap ? x0.with_absolute_precision(cap) : x0;
  Json j;
  if (x.is_zero()) {
    j["zero"] = true;
    j["abs"] = x.absolute_precision();
    return j;
  }
  j["val"] = x.valuation();
  j["abs"] = x.absolute_precision();
  j["digits"] = x.digits();
  return j;
}

Json to_json(const std::vector<padic::PadicScalar>& v, int cap) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x, cap));
  return j;
}

Json to_json(const padic::Polynomial& f, int cap) { return to_json(f.coeffs(), cap); }

Json to_json(const padic::TruncatedSeries& f, int cap) {
  Json j = Json::array();
  for (const auto& [a, c] : f.terms()) {
    if (c.is_zero()) continue;
    j.push_back(Json{{"exponent", a}, {"coeff", to_json(c, cap)}});
  }
  return j;
}

Json to_json(const padic::NewtonPolygon& np) {
  Json segs = Json::array();
  for (const auto& s : np.segments()) segs.push_back(Json{{"slope", rational_string(s.slope)}, {"multiplicity", s.multiplicity}});
  Json slopes = Json::array();
  for (const auto& s : np.slope_multiset()) slopes.push_back(rational_string(s));
  Json verts = Json::array();
  for (const auto& [x, y] : np.vertices()) verts.push_back(Json::array({x, rational_string(y)}));
  return Json{{"vertices", verts}, {"slopes", slopes}, {"segments", segs}};
}

Json to_json(const weight::Character& kappa, int cap) {
  const auto& ctx = kappa.context();
  Json j{{"p", ctx.p()}, {"e", ctx.e()}, {"g", kappa.g()}, {"chi", kappa.chi()}, {"s", to_json(kappa.s(), cap)}};
  if (kappa.algebraic()) j["algebraic"] = *kappa.algebraic();
  return j;
}

std::optional<int> max_claimed_precision(const Json& j) {
  std::optional<int> best;
  auto take = [&](std::optional<int> v) {
    if (v && (!best || *v > *best)) best = v;
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "abs" && it.value().is_number_integer()) {
        take(it.value().get<int>());
      } else {
        take(max_claimed_precision(it.value()));
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) take(max_claimed_precision(x));
  }
  return best;
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (flat) {
      out << path << ",";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ";" : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      out << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
    }
  } else {
    out << path << "," << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string to_csv(const Json& payload) {
  std::ostringstream out;
  out << "key,value\n";
  flatten(payload, "", out);
  return out.str();
}

}  // namespace eigenkit::cli
