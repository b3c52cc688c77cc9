#pragma once

#include <optional>
#include <vector>

#include "winhull/geom.hpp"

namespace winhull {

enum class Containment { Inside, Boundary, Outside };

// Tangent touch vertices as seen from the query point: the hull lies to the
// right of ray q->left_touch and to the left of ray q->right_touch.
struct TangentPair {
    Point left_touch;
    Point right_touch;
    friend bool operator==(const TangentPair& a, const TangentPair& b) {
        return a.left_touch == b.left_touch && a.right_touch == b.right_touch;
    }
};

// A boundary crossing is either a vertex exactly on the query line or an
// edge whose endpoints straddle it (endpoints listed left to right).
struct Crossing {
    bool is_vertex;
    Point a;
    Point b;  // unused for vertices
    static Crossing vertex(Point v) { return {true, v, Point{}}; }
    static Crossing edge(Point u, Point v) { return u.x <= v.x ? Crossing{false, u, v} : Crossing{false, v, u}; }
    friend bool operator==(const Crossing& l, const Crossing& r) {
        if (l.is_vertex != r.is_vertex) return false;
        return l.is_vertex ? l.a == r.a : (l.a == r.a && l.b == r.b);
    }
};

struct LineHullIntersection {
    std::vector<Crossing> crossings;  // empty, one, or two
    bool empty() const { return crossings.empty(); }
    friend bool operator==(const LineHullIntersection& a, const LineHullIntersection& b) {
        return a.crossings == b.crossings;
    }
};

// One common tangent of two disjoint convex polygons, touch vertices given
// as (hull vertex, query-polygon vertex).
struct CommonTangent {
    Point on_hull;
    Point on_poly;
    friend bool operator==(const CommonTangent& a, const CommonTangent& b) {
        return a.on_hull == b.on_hull && a.on_poly == b.on_poly;
    }
};

struct PolygonInteraction {
    bool intersecting = false;
    // valid only when disjoint
    CommonTangent outer[2];
    CommonTangent inner[2];
    friend bool operator==(const PolygonInteraction& a, const PolygonInteraction& b) {
        if (a.intersecting != b.intersecting) return false;
        if (a.intersecting) return true;
        return a.outer[0] == b.outer[0] && a.outer[1] == b.outer[1] &&
               a.inner[0] == b.inner[0] && a.inner[1] == b.inner[1];
    }
};

}  // namespace winhull
