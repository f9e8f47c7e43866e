#pragma once

#include "strb/point.hpp"

namespace strb {

/// Shoelace signed area; positive when vertices run +x toward +y.
double signed_area(const Polygon& p);

/// Absolute shoelace area.
double polygon_area(const Polygon& p);

/// True when no two non-adjacent edges touch and adjacent edges meet only at
/// their shared vertex.
bool is_simple(const Polygon& p);

/// Reorders vertices (keeping the first) so that signed_area > 0. The point
/// set is unchanged.
Polygon canonicalize(Polygon p);

/// Even-odd containment of a point strictly inside; boundary points are
/// unspecified.
bool point_in_polygon(Point q, const Polygon& p);

/// Exact area of the intersection of two simple polygons, convex or not.
double polygon_intersection_area(const Polygon& a, const Polygon& b);

double iou(const Polygon& a, const Polygon& b);

}  // namespace strb
