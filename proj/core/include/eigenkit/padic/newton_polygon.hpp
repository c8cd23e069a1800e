#pragma once

#include <span>
#include <utility>
#include <vector>

#include "eigenkit/padic/scalar.hpp"

namespace eigenkit::padic {

struct NewtonSegment {
  Rational slope;  // in units with v(p) = 1
  int multiplicity;
};

class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  // Lower convex hull of (x, y) points, y given in pi-adic units of ramification e.
  static NewtonPolygon from_points(std::vector<std::pair<int, long long>> pts, int e);

  const std::vector<NewtonSegment>& segments() const noexcept { return segs_; }
  const std::vector<std::pair<int, Rational>>& vertices() const noexcept { return verts_; }
  int length() const;
  bool empty() const noexcept { return segs_.empty(); }
  // Slopes repeated by multiplicity, increasing.
  std::vector<Rational> slope_multiset() const;
  // Total multiplicity of slopes <= h (or < h when strict).
  int mass_below(Rational h, bool strict = false) const;
  bool has_slope(Rational h) const;

  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b);

 private:
  std::vector<NewtonSegment> segs_;
  std::vector<std::pair<int, Rational>> verts_;
};

// Polygon of c_0 + c_1 T + ... with c_0 a unit; zero coefficients are skipped.
NewtonPolygon newton_polygon(std::span<const PadicScalar> coeffs);
// Same hull without the normalisation on c_0 (starts at the first nonzero coefficient).
NewtonPolygon newton_polygon_general(std::span<const PadicScalar> coeffs);

}  // namespace eigenkit::padic
