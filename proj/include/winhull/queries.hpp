#pragma once

#include <span>
#include <vector>

#include "winhull/hull_window.hpp"
#include "winhull/query_types.hpp"

// Binary-search query suite over the hull window's finger sequences. Every
// decision goes through exact integer predicates; answers are combinatorial
// (vertices/edges), never rounded coordinates. O(log h) per query, except
// polygon_interaction which is O(log h * log |P|).
namespace winhull::queries {

Point extreme(const HullWindow& w, const Direction& d);
bool stab_line(const HullWindow& w, const LineEq& l);
Containment contains(const HullWindow& w, Point q);
TangentPair tangents_from(const HullWindow& w, Point q);
LineHullIntersection line_intersection(const HullWindow& w, const LineEq& l);
std::vector<Point> range_report(const HullWindow& w, std::int64_t x1, std::int64_t x2);
PolygonInteraction polygon_interaction(const HullWindow& w, std::span<const Point> poly);

}  // namespace winhull::queries
