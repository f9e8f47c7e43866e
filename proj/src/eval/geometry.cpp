// Intersection area by Green's theorem: the boundary of A∩B is the part of
// ∂A inside B plus the part of ∂B inside A. Each edge is split at every
// crossing with the other polygon and each piece is classified by its
// midpoint. Pieces lying on a shared boundary count once when both polygons
// traverse them in the same direction and not at all otherwise.

#include "strb/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace strb {

namespace {

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

double edge_term(Point a, Point b) { return a.x * b.y - b.x * a.y; }

double scale_of(const Polygon& a, const Polygon& b) {
  double s = 1.0;
  for (const Point& p : a) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  for (const Point& p : b) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

// Positive orientation starting at the smallest vertex: every traversal of
// one vertex cycle maps to the same sequence, so float sums repeat exactly.
Polygon oriented(const Polygon& p) {
  Polygon q = signed_area(p) < 0.0 ? canonicalize(p) : p;
  std::rotate(q.begin(), std::min_element(q.begin(), q.end()), q.end());
  return q;
}

enum class Side { kOutside, kInside, kSameEdge, kOppositeEdge };

Side classify(Point m, Point dir, const Polygon& other, double eps) {
  const std::size_t n = other.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Point f0 = other[j], f1 = other[(j + 1) % n];
    const Point f = sub(f1, f0);
    const double len = std::sqrt(dot(f, f));
    if (len == 0.0) continue;
    const Point rel = sub(m, f0);
    if (std::abs(cross(f, rel)) > eps * len) continue;
    const double t = dot(rel, f);
    if (t < -eps * len || t > dot(f, f) + eps * len) continue;
    return dot(dir, f) > 0.0 ? Side::kSameEdge : Side::kOppositeEdge;
  }
  return point_in_polygon(m, other) ? Side::kInside : Side::kOutside;
}

// Contribution (twice the area) of the part of `self`'s boundary that bounds
// the intersection.
double boundary_inside(const Polygon& self, const Polygon& other, bool owns_shared,
                       double eps) {
  const std::size_t n = self.size(), m = other.size();
  double total = 0.0;
  std::vector<double> cuts;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = self[i], q = self[(i + 1) % n];
    const Point r = sub(q, p);
    const double rr = dot(r, r);
    if (rr == 0.0) continue;
    cuts.assign({0.0, 1.0});
    for (std::size_t j = 0; j < m; ++j) {
      const Point a = other[j], b = other[(j + 1) % m];
      const Point s = sub(b, a);
      const double denom = cross(r, s);
      const Point qp = sub(a, p);
      if (std::abs(denom) > eps * std::sqrt(rr * dot(s, s))) {
        const double t = cross(qp, s) / denom;
        const double u = cross(qp, r) / denom;
        if (t > 0.0 && t < 1.0 && u >= -eps && u <= 1.0 + eps) cuts.push_back(t);
      } else if (std::abs(cross(qp, r)) <= eps * std::sqrt(rr)) {
        for (const Point e : {a, b}) {
          const double t = dot(sub(e, p), r) / rr;
          if (t > 0.0 && t < 1.0) cuts.push_back(t);
        }
      }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double t0 = cuts[k], t1 = cuts[k + 1];
      if (t1 - t0 <= 1e-12) continue;
      const double tm = 0.5 * (t0 + t1);
      const Point mid{p.x + tm * r.x, p.y + tm * r.y};
      const Side side = classify(mid, r, other, eps);
      const bool keep = side == Side::kInside || (side == Side::kSameEdge && owns_shared);
      if (!keep) continue;
      const Point a = t0 == 0.0 ? p : Point{p.x + t0 * r.x, p.y + t0 * r.y};
      const Point b = t1 == 1.0 ? q : Point{p.x + t1 * r.x, p.y + t1 * r.y};
      total += edge_term(a, b);
    }
  }
  return total;
}

double intersection_of_oriented(const Polygon& pa, const Polygon& pb) {
  const double eps = 1e-10 * scale_of(pa, pb);
  const double twice = boundary_inside(pa, pb, true, eps) + boundary_inside(pb, pa, false, eps);
  return std::max(0.0, 0.5 * twice);
}

bool segments_touch(Point p1, Point p2, Point q1, Point q2) {
  auto orient = [](Point a, Point b, Point c) {
    const double v = cross(sub(b, a), sub(c, a));
    return (v > 0.0) - (v < 0.0);
  };
  auto on_segment = [](Point a, Point b, Point c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
  };
  const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

}  // namespace

double signed_area(const Polygon& p) {
  const std::size_t n = p.size();
  if (n < 3) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += edge_term(p[i], p[(i + 1) % n]);
  return 0.5 * total;
}

double polygon_area(const Polygon& p) { return std::abs(signed_area(p)); }

bool is_simple(const Polygon& p) {
  const std::size_t n = p.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] == p[(i + 1) % n]) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a1 = p[i], a2 = p[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point b1 = p[j], b2 = p[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Adjacent edges may only share their common vertex: reject a fold
        // back along the same line.
        const Point shared = j == i + 1 ? a2 : a1;
        const Point u = sub(j == i + 1 ? a1 : a2, shared);
        const Point v = sub(j == i + 1 ? b2 : b1, shared);
        if (cross(u, v) == 0.0 && dot(u, v) > 0.0) return false;
        continue;
      }
      if (segments_touch(a1, a2, b1, b2)) return false;
    }
  }
  return true;
}

Polygon canonicalize(Polygon p) {
  if (signed_area(p) < 0.0 && p.size() > 1) std::reverse(p.begin() + 1, p.end());
  return p;
}

bool point_in_polygon(Point q, const Polygon& p) {
  bool inside = false;
  const std::size_t n = p.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = p[i], b = p[j];
    if ((a.y > q.y) != (b.y > q.y)) {
      const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (q.x < x) inside = !inside;
    }
  }
  return inside;
}

double polygon_intersection_area(const Polygon& a, const Polygon& b) {
  if (a.size() < 3 || b.size() < 3) return 0.0;
  return intersection_of_oriented(oriented(a), oriented(b));
}

double iou(const Polygon& a, const Polygon& b) {
  if (a.size() < 3 || b.size() < 3) return 0.0;
  // Same vertex order for the areas and the intersection, so iou(a, a) is
  // exactly 1.
  const Polygon pa = oriented(a), pb = oriented(b);
  const double inter = intersection_of_oriented(pa, pb);
  const double uni = signed_area(pa) + signed_area(pb) - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

}  // namespace strb
