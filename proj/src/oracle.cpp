#include "winhull/oracle.hpp"

#include <algorithm>

namespace winhull::oracle {

using geom::orient;

std::vector<Point> upper_hull(std::span<const Point> pts) {
    std::vector<Point> h;
    for (const Point& p : pts) {
        while (h.size() >= 2 && orient(h[h.size() - 2], h[h.size() - 1], p) != Turn::Right)
            h.pop_back();
        h.push_back(p);
    }
    return h;
}

std::vector<Point> lower_hull(std::span<const Point> pts) {
    std::vector<Point> h;
    for (const Point& p : pts) {
        while (h.size() >= 2 && orient(h[h.size() - 2], h[h.size() - 1], p) != Turn::Left)
            h.pop_back();
        h.push_back(p);
    }
    return h;
}

std::vector<Point> static_hull(std::span<const Point> pts) {
    std::vector<Point> s(pts.begin(), pts.end());
    std::sort(s.begin(), s.end());
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].x == s[i - 1].x) throw ContractViolation("duplicate x coordinate");
    if (s.size() <= 2) return s;
    std::vector<Point> lo = lower_hull(s);
    std::vector<Point> up = upper_hull(s);
    // CCW from the leftmost point: lower chain, then upper chain interior
    std::vector<Point> ccw = lo;
    for (std::size_t i = up.size() - 1; i-- > 1;) ccw.push_back(up[i]);
    return ccw;
}

Point extreme(std::span<const Point> ccw, const Direction& d) {
    if (ccw.empty()) throw EmptyWindowError();
    if (!d.valid()) throw ContractViolation("zero direction");
    Point best = ccw[0];
    for (std::size_t i = 1; i < ccw.size(); ++i) {
        int c = geom::dir_dot_cmp(d, ccw[i], best);
        if (c > 0 || (c == 0 && ccw[i] < best)) best = ccw[i];
    }
    return best;
}

bool stab_line(std::span<const Point> ccw, const LineEq& l) {
    if (ccw.empty()) throw EmptyWindowError();
    if (!l.valid()) throw ContractViolation("degenerate line");
    int mn = 2, mx = -2;
    for (const Point& v : ccw) {
        int s = geom::side_of_line(l, v);
        mn = std::min(mn, s);
        mx = std::max(mx, s);
    }
    return mn <= 0 && mx >= 0;
}

Containment contains(std::span<const Point> ccw, Point q) {
    if (ccw.empty()) throw EmptyWindowError();
    const std::size_t h = ccw.size();
    if (h == 1) return q == ccw[0] ? Containment::Boundary : Containment::Outside;
    if (h == 2) {
        if (orient(ccw[0], ccw[1], q) != Turn::Collinear) return Containment::Outside;
        bool inside = q.x >= std::min(ccw[0].x, ccw[1].x) && q.x <= std::max(ccw[0].x, ccw[1].x) &&
                      q.y >= std::min(ccw[0].y, ccw[1].y) && q.y <= std::max(ccw[0].y, ccw[1].y);
        return inside ? Containment::Boundary : Containment::Outside;
    }
    bool on_edge = false;
    for (std::size_t i = 0; i < h; ++i) {
        Turn t = orient(ccw[i], ccw[(i + 1) % h], q);
        if (t == Turn::Right) return Containment::Outside;
        if (t == Turn::Collinear) on_edge = true;
    }
    return on_edge ? Containment::Boundary : Containment::Inside;
}

TangentPair tangents_from(std::span<const Point> ccw, Point q) {
    if (ccw.empty()) throw EmptyWindowError();
    if (contains(ccw, q) != Containment::Outside)
        throw QueryDomainError("tangent query point not strictly outside the hull");
    bool found_l = false, found_r = false;
    Point lt{}, rt{};
    for (const Point& v : ccw) {
        bool ok_l = true, ok_r = true;
        for (const Point& w : ccw) {
            Turn t = orient(q, v, w);
            if (t == Turn::Left) ok_l = false;
            if (t == Turn::Right) ok_r = false;
        }
        if (ok_l && (!found_l || v < lt)) {
            lt = v;
            found_l = true;
        }
        if (ok_r && (!found_r || v < rt)) {
            rt = v;
            found_r = true;
        }
    }
    if (!found_l || !found_r) throw InternalError("tangent scan found no touch vertex");
    return TangentPair{lt, rt};
}

namespace {

std::size_t index_of(std::span<const Point> ccw, Point v) {
    for (std::size_t i = 0; i < ccw.size(); ++i)
        if (ccw[i] == v) return i;
    throw InternalError("vertex not on hull");
}

}  // namespace

LineHullIntersection line_intersection(std::span<const Point> ccw, const LineEq& l) {
    if (ccw.empty()) throw EmptyWindowError();
    if (!l.valid()) throw ContractViolation("degenerate line");
    LineHullIntersection out;
    Point epos = extreme(ccw, Direction{l.a, l.b});
    Point eneg = extreme(ccw, Direction{-l.a, -l.b});
    int fpos = geom::side_of_line(l, epos);
    int fneg = geom::side_of_line(l, eneg);
    if (fpos < 0 || fneg > 0) return out;
    const std::size_t h = ccw.size();
    if (fpos == 0 || fneg == 0) {
        // grazing contact: at most one vertex or one edge lies on the line
        Point anchor = fpos == 0 ? epos : eneg;
        std::size_t i = index_of(ccw, anchor);
        Point prev = ccw[(i + h - 1) % h], next = ccw[(i + 1) % h];
        if (h >= 2 && geom::side_of_line(l, next) == 0 && next != anchor)
            out.crossings.push_back(Crossing::edge(anchor, next));
        else if (h >= 2 && geom::side_of_line(l, prev) == 0 && prev != anchor)
            out.crossings.push_back(Crossing::edge(prev, anchor));
        else
            out.crossings.push_back(Crossing::vertex(anchor));
        return out;
    }
    // transversal: one crossing on each arc between the extreme vertices
    std::size_t ipos = index_of(ccw, epos), ineg = index_of(ccw, eneg);
    for (std::size_t i = ineg;; i = (i + 1) % h) {
        std::size_t j = (i + 1) % h;
        int f = geom::side_of_line(l, ccw[j]);
        if (f >= 0) {
            out.crossings.push_back(f == 0 ? Crossing::vertex(ccw[j]) : Crossing::edge(ccw[i], ccw[j]));
            break;
        }
        if (j == ipos) throw InternalError("missed line crossing");
    }
    for (std::size_t i = ipos;; i = (i + 1) % h) {
        std::size_t j = (i + 1) % h;
        int f = geom::side_of_line(l, ccw[j]);
        if (f <= 0) {
            out.crossings.push_back(f == 0 ? Crossing::vertex(ccw[j]) : Crossing::edge(ccw[i], ccw[j]));
            break;
        }
        if (j == ineg) throw InternalError("missed line crossing");
    }
    return out;
}

std::vector<Point> range_report(std::span<const Point> ccw, std::int64_t x1, std::int64_t x2) {
    if (x1 > x2) throw ContractViolation("range: x1 > x2");
    std::vector<Point> out;
    if (ccw.empty()) return out;
    std::size_t ri = 0;
    for (std::size_t i = 1; i < ccw.size(); ++i)
        if (ccw[i].x > ccw[ri].x) ri = i;
    std::vector<Point> lower(ccw.begin(), ccw.begin() + ri + 1);
    std::vector<Point> upper;  // left to right
    upper.push_back(ccw[0]);
    for (std::size_t i = ccw.size(); i-- > ri;) upper.push_back(ccw[i]);
    if (ccw.size() == 1) upper = {ccw[0]};

    auto in_slab = [&](Point p) { return p.x >= x1 && p.x <= x2; };
    std::vector<Point> lo_part, up_part;
    for (const Point& p : lower)
        if (in_slab(p)) lo_part.push_back(p);
    for (const Point& p : upper)
        if (in_slab(p)) up_part.push_back(p);
    std::reverse(up_part.begin(), up_part.end());
    if (!lo_part.empty() && !up_part.empty()) {
        if (lo_part.back() == up_part.front()) up_part.erase(up_part.begin());
        if (!up_part.empty() && !lo_part.empty() && up_part.back() == lo_part.front())
            up_part.pop_back();
    }
    out = lo_part;
    out.insert(out.end(), up_part.begin(), up_part.end());
    return out;
}

namespace {

bool on_segment(Point a, Point b, Point c) {  // c collinear with a-b
    return c.x >= std::min(a.x, b.x) && c.x <= std::max(a.x, b.x) &&
           c.y >= std::min(a.y, b.y) && c.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
    int d1 = geom::orient_sign(q1, q2, p1);
    int d2 = geom::orient_sign(q1, q2, p2);
    int d3 = geom::orient_sign(p1, p2, q1);
    int d4 = geom::orient_sign(p1, p2, q2);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && on_segment(q1, q2, p1)) return true;
    if (d2 == 0 && on_segment(q1, q2, p2)) return true;
    if (d3 == 0 && on_segment(p1, p2, q1)) return true;
    if (d4 == 0 && on_segment(p1, p2, q2)) return true;
    return false;
}

}  // namespace

PolygonInteraction polygon_interaction(std::span<const Point> ccw, std::span<const Point> poly) {
    if (ccw.empty()) throw EmptyWindowError();
    if (poly.empty()) throw ContractViolation("empty query polygon");
    PolygonInteraction out;

    for (const Point& b : poly)
        if (contains(ccw, b) != Containment::Outside) {
            out.intersecting = true;
            return out;
        }
    for (const Point& a : ccw)
        if (contains(poly, a) != Containment::Outside) {
            out.intersecting = true;
            return out;
        }
    const std::size_t h = ccw.size(), m = poly.size();
    if (h >= 2 && m >= 2) {
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (segments_intersect(ccw[i], ccw[(i + 1) % h], poly[j], poly[(j + 1) % m])) {
                    out.intersecting = true;
                    return out;
                }
    }

    // disjoint: classify every (hull vertex, poly vertex) line.
    // side +1: everything on the left or on; -1: right or on.
    auto side_of_all = [](std::span<const Point> pts, Point a, Point b) {
        bool left = false, right = false;
        for (const Point& w : pts) {
            Turn t = orient(a, b, w);
            if (t == Turn::Left) left = true;
            if (t == Turn::Right) right = true;
        }
        if (left && right) return 9;  // not a tangent
        return left ? 1 : (right ? -1 : 0);
    };
    bool have[4] = {false, false, false, false};
    CommonTangent best[4];
    for (const Point& a : ccw)
        for (const Point& b : poly) {
            if (a == b) continue;
            int sh = side_of_all(ccw, a, b);
            int sp = side_of_all(poly, a, b);
            if (sh == 9 || sp == 9) continue;
            auto consider = [&](int k) {
                CommonTangent ct{a, b};
                if (!have[k] || ct.on_hull < best[k].on_hull ||
                    (ct.on_hull == best[k].on_hull && ct.on_poly < best[k].on_poly)) {
                    best[k] = ct;
                    have[k] = true;
                }
            };
            if (sh >= 0 && sp >= 0) consider(0);  // outer, all left-or-on
            if (sh <= 0 && sp <= 0) consider(1);  // outer, all right-or-on
            if (sh >= 0 && sp <= 0) consider(2);  // inner, hull left
            if (sh <= 0 && sp >= 0) consider(3);  // inner, poly left
        }
    for (int k = 0; k < 4; ++k)
        if (!have[k]) throw InternalError("tangent family missing for disjoint polygons");
    out.intersecting = false;
    out.outer[0] = best[0];
    out.outer[1] = best[1];
    out.inner[0] = best[2];
    out.inner[1] = best[3];
    return out;
}

}  // namespace winhull::oracle
