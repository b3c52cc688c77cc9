#pragma once

#include <span>
#include <vector>

#include "winhull/geom.hpp"
#include "winhull/query_types.hpp"

// Brute-force reference implementations used for differential testing.
// Depends on geom only; none of the incremental machinery is reachable
// from here.
namespace winhull::oracle {

// Strictly convex upper/lower hulls of x-sorted points (collinear middle
// points dropped).
std::vector<Point> upper_hull(std::span<const Point> sorted_pts);
std::vector<Point> lower_hull(std::span<const Point> sorted_pts);

// CCW hull from an arbitrary point set with pairwise distinct x.
// Throws ContractViolation on duplicate abscissas. O(n log n).
std::vector<Point> static_hull(std::span<const Point> pts);

// Naive query answers over a CCW hull vertex list, each an O(h) scan,
// format- and tie-break-identical to the fast path.
Point extreme(std::span<const Point> ccw, const Direction& d);
bool stab_line(std::span<const Point> ccw, const LineEq& l);
Containment contains(std::span<const Point> ccw, Point q);
TangentPair tangents_from(std::span<const Point> ccw, Point q);
LineHullIntersection line_intersection(std::span<const Point> ccw, const LineEq& l);
std::vector<Point> range_report(std::span<const Point> ccw, std::int64_t x1, std::int64_t x2);
PolygonInteraction polygon_interaction(std::span<const Point> ccw, std::span<const Point> poly);

}  // namespace winhull::oracle
