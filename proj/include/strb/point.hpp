#pragma once

#include <array>
#include <compare>
#include <vector>

namespace strb {

/// Continuous image coordinates: pixel (i, j) covers [i, i+1) x [j, j+1).
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

using Polygon = std::vector<Point>;

/// 2x3 affine map [a b tx; c d ty].
struct Affine2D {
  std::array<double, 6> m{1.0, 0.0, 0.0, 0.0, 1.0, 0.0};

  static Affine2D identity() { return {}; }

  Point apply(Point p) const {
    return {m[0] * p.x + m[1] * p.y + m[2], m[3] * p.x + m[4] * p.y + m[5]};
  }
  Polygon apply(const Polygon& poly) const {
    Polygon out;
    out.reserve(poly.size());
    for (const Point& p : poly) out.push_back(apply(p));
    return out;
  }
  bool is_identity() const { return m == identity().m; }
  double determinant() const { return m[0] * m[4] - m[1] * m[3]; }

  friend bool operator==(const Affine2D&, const Affine2D&) = default;
};

}  // namespace strb
