#include "eigenkit/padic/newton_polygon.hpp"

#include <algorithm>

#include "eigenkit/error.hpp"

namespace eigenkit::padic {

NewtonPolygon NewtonPolygon::from_points(std::vector<std::pair<int, long long>> pts, int e) {
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<int, long long>> hull;
  for (const auto& pt : pts) {
    if (!hull.empty() && hull.back().first == pt.first) {
      if (hull.back().second <= pt.second) continue;
      hull.pop_back();
    }
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b if it lies on or above segment a -> pt
      const __int128 lhs = static_cast<__int128>(b.second - a.second) * (pt.first - a.first);
      const __int128 rhs = static_cast<__int128>(pt.second - a.second) * (b.first - a.first);
      if (lhs >= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  NewtonPolygon np;
  for (const auto& [x, y] : hull) np.verts_.emplace_back(x, Rational(y, e));
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const int dx = hull[i].first - hull[i - 1].first;
    np.segs_.push_back({Rational(hull[i].second - hull[i - 1].second, static_cast<long long>(e) * dx), dx});
  }
  return np;
}

int NewtonPolygon::length() const {
  int n = 0;
  for (const auto& s : segs_) n += s.multiplicity;
  return n;
}

std::vector<Rational> NewtonPolygon::slope_multiset() const {
  std::vector<Rational> out;
  for (const auto& s : segs_) out.insert(out.end(), static_cast<std::size_t>(s.multiplicity), s.slope);
  return out;
}

int NewtonPolygon::mass_below(Rational h, bool strict) const {
  int n = 0;
  for (const auto& s : segs_)
    if (s.slope < h || (!strict && s.slope == h)) n += s.multiplicity;
  return n;
}

bool NewtonPolygon::has_slope(Rational h) const {
  return std::any_of(segs_.begin(), segs_.end(), [&](const NewtonSegment& s) { return s.slope == h; });
}

bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
  if (a.segs_.size() != b.segs_.size()) return false;
  for (std::size_t i = 0; i < a.segs_.size(); ++i)
    if (a.segs_[i].slope != b.segs_[i].slope || a.segs_[i].multiplicity != b.segs_[i].multiplicity) return false;
  return true;
}

NewtonPolygon newton_polygon_general(std::span<const PadicScalar> coeffs) {
  std::vector<std::pair<int, long long>> pts;
  int e = 1;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    e = coeffs[n].context().e();
    if (!coeffs[n].is_zero()) pts.emplace_back(static_cast<int>(n), coeffs[n].valuation());
  }
  if (pts.empty()) fail(Errc::AllCoefficientsZero, "no coefficient is nonzero to precision");
  return NewtonPolygon::from_points(std::move(pts), e);
}

NewtonPolygon newton_polygon(std::span<const PadicScalar> coeffs) {
  if (coeffs.empty() || std::all_of(coeffs.begin(), coeffs.end(), [](const PadicScalar& c) { return c.is_zero(); }))
    fail(Errc::AllCoefficientsZero, "no coefficient is nonzero to precision");
  if (!coeffs[0].is_unit()) fail(Errc::NonUnitConstantTerm, "constant term " + coeffs[0].str() + " is not a unit");
  return newton_polygon_general(coeffs);
}

}  // namespace eigenkit::padic
