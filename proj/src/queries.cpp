#include "winhull/queries.hpp"

#include <algorithm>
#include <cstdlib>

namespace winhull::queries {

using geom::orient;

namespace {

void require_window(const HullWindow& w) {
    if (w.empty()) throw EmptyWindowError();
}

void count_compare() { ++geom::predicate_evals; }

// ---- chain access -------------------------------------------------------

// x-monotone chain: either one of the hull finger sequences or an arc of a
// query polygon's vertex cycle.
struct XChain {
    const FingerSeq* seq = nullptr;
    std::span<const Point> poly;
    std::size_t start = 0, len = 0;
    bool rev = false;

    static XChain of_seq(const FingerSeq& s) {
        XChain c;
        c.seq = &s;
        c.len = s.size();
        return c;
    }
    static XChain of_poly(std::span<const Point> p, std::size_t start, std::size_t len, bool rev) {
        return XChain{nullptr, p, start, len, rev};
    }
    std::size_t size() const { return len; }
    Point at(std::size_t i) const {
        if (seq) return (*seq)[i];
        std::size_t j = rev ? len - 1 - i : i;
        return poly[(start + j) % poly.size()];
    }
    Point front() const { return at(0); }
    Point back() const { return at(len - 1); }
};

// last index with x <= q (requires front().x <= q)
std::size_t locate_le(const XChain& c, std::int64_t q) {
    std::size_t lo = 0, hi = c.size() - 1;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo + 1) / 2;
        count_compare();
        if (c.at(mid).x <= q)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// first index with x >= q (may return size())
std::size_t locate_ge(const XChain& c, std::int64_t q) {
    std::size_t lo = 0, hi = c.size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        count_compare();
        if (c.at(mid).x >= q)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

template <class Pred>
std::size_t first_true(std::size_t domain, Pred pred) {
    std::size_t lo = 0, hi = domain;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (pred(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

// ---- extreme ------------------------------------------------------------

Point chain_extreme(const XChain& c, const Direction& d) {
    // first edge that no longer gains along d; ties resolve to the left
    // endpoint, which is the lexicographically smaller vertex
    std::size_t i = first_true(c.size() - 1, [&](std::size_t e) {
        return geom::dir_step_sign(d, c.at(e), c.at(e + 1)) <= 0;
    });
    return c.at(i);
}

}  // namespace

Point extreme(const HullWindow& w, const Direction& d) {
    require_window(w);
    if (!d.valid()) throw ContractViolation("zero direction");
    XChain up = XChain::of_seq(w.upper_vertices());
    XChain lo = XChain::of_seq(w.lower_vertices());
    if (d.dy > 0) return chain_extreme(up, d);
    if (d.dy < 0) return chain_extreme(lo, d);
    return d.dx > 0 ? lo.back() : lo.front();
}

bool stab_line(const HullWindow& w, const LineEq& l) {
    require_window(w);
    if (!l.valid()) throw ContractViolation("degenerate line");
    Point hi = extreme(w, Direction{l.a, l.b});
    Point lo = extreme(w, Direction{-l.a, -l.b});
    return geom::side_of_line(l, hi) >= 0 && geom::side_of_line(l, lo) <= 0;
}

Containment contains(const HullWindow& w, Point q) {
    require_window(w);
    XChain up = XChain::of_seq(w.upper_vertices());
    XChain lo = XChain::of_seq(w.lower_vertices());
    count_compare();
    if (q.x < lo.front().x || q.x > lo.back().x) return Containment::Outside;
    if (w.size() == 1) return q == lo.front() ? Containment::Boundary : Containment::Outside;

    std::size_t i = locate_le(up, q.x);
    count_compare();
    if (up.at(i).x == q.x) {
        if (q.y > up.at(i).y) return Containment::Outside;
        if (q.y == up.at(i).y) return Containment::Boundary;
    } else {
        Turn t = orient(up.at(i), up.at(i + 1), q);
        if (t == Turn::Left) return Containment::Outside;
        if (t == Turn::Collinear) return Containment::Boundary;
    }
    std::size_t j = locate_le(lo, q.x);
    count_compare();
    if (lo.at(j).x == q.x) {
        if (q.y < lo.at(j).y) return Containment::Outside;
        if (q.y == lo.at(j).y) return Containment::Boundary;
    } else {
        Turn t = orient(lo.at(j), lo.at(j + 1), q);
        if (t == Turn::Right) return Containment::Outside;
        if (t == Turn::Collinear) return Containment::Boundary;
    }
    return Containment::Inside;
}

// ---- tangents from an outside point --------------------------------------

namespace {

TangentPair tangents_small(std::span<const Point> verts, Point q) {
    bool found_l = false, found_r = false;
    Point lt{}, rt{};
    for (const Point& v : verts) {
        bool ok_l = true, ok_r = true;
        for (const Point& w : verts) {
            Turn t = orient(q, v, w);
            if (t == Turn::Left) ok_l = false;
            if (t == Turn::Right) ok_r = false;
        }
        if (ok_l && (!found_l || v < lt)) lt = v, found_l = true;
        if (ok_r && (!found_r || v < rt)) rt = v, found_r = true;
    }
    return TangentPair{lt, rt};
}

}  // namespace

TangentPair tangents_from(const HullWindow& w, Point q) {
    require_window(w);
    if (contains(w, q) != Containment::Outside)
        throw QueryDomainError("tangent query point not strictly outside the hull");
    XChain up = XChain::of_seq(w.upper_vertices());
    XChain lo = XChain::of_seq(w.lower_vertices());
    const std::size_t nu = up.size(), nl = lo.size();

    if (w.size() == 1) return TangentPair{lo.front(), lo.front()};
    if (w.hull_vertex_count() == 2) {
        Point seg[2] = {lo.front(), lo.back()};
        return tangents_small(std::span<const Point>(seg, 2), q);
    }

    count_compare();
    if (q.x < lo.front().x) {
        // slope of q->v peaks on the upper chain, bottoms on the lower chain
        std::size_t iu = first_true(nu - 1, [&](std::size_t e) {
            return orient(q, up.at(e), up.at(e + 1)) != Turn::Left;
        });
        std::size_t il = first_true(nl - 1, [&](std::size_t e) {
            return orient(q, lo.at(e), lo.at(e + 1)) != Turn::Right;
        });
        return TangentPair{up.at(iu), lo.at(il)};
    }
    count_compare();
    if (q.x > lo.back().x) {
        std::size_t iu = first_true(nu - 1, [&](std::size_t e) {
            return orient(q, up.at(e), up.at(e + 1)) != Turn::Right;
        });
        std::size_t il = first_true(nl - 1, [&](std::size_t e) {
            return orient(q, lo.at(e), lo.at(e + 1)) != Turn::Left;
        });
        return TangentPair{lo.at(il), up.at(iu)};
    }

    // within the x-range: strictly above the upper chain or below the lower
    std::size_t bu = locate_le(up, q.x);
    bool above;
    count_compare();
    if (up.at(bu).x == q.x)
        above = q.y > up.at(bu).y;
    else
        above = orient(up.at(bu), up.at(bu + 1), q) == Turn::Left;

    if (above) {
        std::size_t k = bu < nu - 1 ? bu : bu - 1;  // an edge whose line passes below q
        std::size_t first_l = first_true(k + 1, [&](std::size_t e) {
            return orient(q, up.at(e), up.at(e + 1)) != Turn::Right;
        });
        std::size_t past = k + first_true(nu - 1 - k, [&](std::size_t j) {
            return orient(q, up.at(k + j), up.at(k + j + 1)) != Turn::Left;
        });
        return TangentPair{up.at(past), up.at(first_l)};
    }
    std::size_t bl = locate_le(lo, q.x);
    std::size_t k = bl < nl - 1 ? bl : bl - 1;
    std::size_t first_r = first_true(k + 1, [&](std::size_t e) {
        return orient(q, lo.at(e), lo.at(e + 1)) != Turn::Left;
    });
    std::size_t past = k + first_true(nl - 1 - k, [&](std::size_t j) {
        return orient(q, lo.at(k + j), lo.at(k + j + 1)) != Turn::Right;
    });
    return TangentPair{lo.at(first_r), lo.at(past)};
}

// ---- line intersection ----------------------------------------------------

namespace {

// CCW vertex cycle of the hull: lower chain then upper chain interior.
struct CycleView {
    const FingerSeq* lo;
    const FingerSeq* up;
    std::size_t size() const {
        if (lo->size() <= 1) return lo->size();
        return lo->size() + up->size() - 2;
    }
    Point at(std::size_t i) const {
        if (i < lo->size()) return (*lo)[i];
        return (*up)[up->size() - 2 - (i - lo->size())];
    }
    // cycle position of a hull vertex, located by abscissa
    std::size_t index_of(Point v) const {
        XChain cl = XChain::of_seq(*lo);
        std::size_t i = locate_le(cl, v.x);
        count_compare();
        if ((*lo)[i] == v) return i;
        XChain cu = XChain::of_seq(*up);
        std::size_t j = locate_le(cu, v.x);
        count_compare();
        if ((*up)[j] == v) {
            if (j == 0) return 0;
            if (j == up->size() - 1) return lo->size() - 1;
            return lo->size() + (up->size() - 2 - j);
        }
        throw InternalError("vertex not found on hull cycle");
    }
};

}  // namespace

LineHullIntersection line_intersection(const HullWindow& w, const LineEq& l) {
    require_window(w);
    if (!l.valid()) throw ContractViolation("degenerate line");
    LineHullIntersection out;
    Point epos = extreme(w, Direction{l.a, l.b});
    Point eneg = extreme(w, Direction{-l.a, -l.b});
    int fpos = geom::side_of_line(l, epos);
    int fneg = geom::side_of_line(l, eneg);
    if (fpos < 0 || fneg > 0) return out;

    CycleView cyc{&w.lower_vertices(), &w.upper_vertices()};
    const std::size_t h = cyc.size();
    if (fpos == 0 || fneg == 0) {
        Point anchor = fpos == 0 ? epos : eneg;
        std::size_t i = cyc.index_of(anchor);
        Point prev = cyc.at((i + h - 1) % h), next = cyc.at((i + 1) % h);
        if (h >= 2 && geom::side_of_line(l, next) == 0 && next != anchor)
            out.crossings.push_back(Crossing::edge(anchor, next));
        else if (h >= 2 && geom::side_of_line(l, prev) == 0 && prev != anchor)
            out.crossings.push_back(Crossing::edge(prev, anchor));
        else
            out.crossings.push_back(Crossing::vertex(anchor));
        return out;
    }

    std::size_t ipos = cyc.index_of(epos), ineg = cyc.index_of(eneg);
    auto arc_cross = [&](std::size_t from, std::size_t to, int want) {
        std::size_t arc = (to + h - from) % h;
        std::size_t t = 1 + first_true(arc - 1, [&](std::size_t k) {
            int f = geom::side_of_line(l, cyc.at((from + 1 + k) % h));
            return want > 0 ? f >= 0 : f <= 0;
        });
        std::size_t j = (from + t) % h;
        int f = geom::side_of_line(l, cyc.at(j));
        if (f == 0)
            out.crossings.push_back(Crossing::vertex(cyc.at(j)));
        else
            out.crossings.push_back(Crossing::edge(cyc.at((j + h - 1) % h), cyc.at(j)));
    };
    arc_cross(ineg, ipos, +1);
    arc_cross(ipos, ineg, -1);
    return out;
}

// ---- range report ---------------------------------------------------------

std::vector<Point> range_report(const HullWindow& w, std::int64_t x1, std::int64_t x2) {
    if (x1 > x2) throw ContractViolation("range: x1 > x2");
    std::vector<Point> out;
    if (w.empty()) return out;
    XChain up = XChain::of_seq(w.upper_vertices());
    XChain lo = XChain::of_seq(w.lower_vertices());

    std::size_t ls = locate_ge(lo, x1);
    std::size_t us = locate_ge(up, x1);
    std::vector<Point> lo_part, up_part;
    for (std::size_t i = ls; i < lo.size() && lo.at(i).x <= x2; ++i) lo_part.push_back(lo.at(i));
    for (std::size_t i = us; i < up.size() && up.at(i).x <= x2; ++i) up_part.push_back(up.at(i));
    std::reverse(up_part.begin(), up_part.end());
    if (!lo_part.empty() && !up_part.empty()) {
        if (lo_part.back() == up_part.front()) up_part.erase(up_part.begin());
        if (!up_part.empty() && up_part.back() == lo_part.front()) up_part.pop_back();
    }
    out = lo_part;
    out.insert(out.end(), up_part.begin(), up_part.end());
    return out;
}

// ---- polygon interaction ---------------------------------------------------

namespace {

// Random-access CCW vertex cycle: either the query polygon or the hull.
struct Cycle {
    std::span<const Point> poly;
    const CycleView* hull = nullptr;
    std::size_t size() const { return hull ? hull->size() : poly.size(); }
    Point at(std::size_t i) const { return hull ? hull->at(i) : poly[i]; }
};

// argmax over the cycle of the strict key (dot(d, v), dot(tie, v)); the key
// is cyclically bitonic on a strictly convex CCW cycle, so two monotone
// binary searches suffice.
std::size_t cycle_extreme(const Cycle& c, const Direction& d, const Direction& tie) {
    const std::size_t m = c.size();
    if (m == 1) return 0;
    auto less = [&](std::size_t i, std::size_t j) {
        int s = geom::dir_dot_cmp(d, c.at(i), c.at(j));
        if (s != 0) return s < 0;
        return geom::dir_dot_cmp(tie, c.at(i), c.at(j)) < 0;
    };
    if (m == 2) return less(0, 1) ? 1 : 0;
    auto asc = [&](std::size_t i) { return less(i, (i + 1) % m); };
    if (asc(0)) {
        // pattern T^a F^b T^c from index 0; the peak sits at the first F
        return first_true(m, [&](std::size_t i) { return !asc(i) || less(i, 0); });
    }
    // descending at 0: find where keys exceed key(0) again, then the descent
    std::size_t j = 1 + first_true(m - 1, [&](std::size_t k) { return less(0, 1 + k); });
    if (j == m) return 0;
    return j + first_true(m - j, [&](std::size_t k) { return !asc(j + k); });
}

Direction rot90(const Direction& d) { return Direction{-d.dy, d.dx}; }
Direction negd(const Direction& d) { return Direction{-d.dx, -d.dy}; }

// indexable arc of a cycle; rev = false walks CCW from start
struct CycleArc {
    const Cycle* c;
    std::size_t start, len;
    bool rev;
    std::size_t size() const { return len; }
    std::size_t cycle_index(std::size_t i) const {
        std::size_t j = rev ? len - 1 - i : i;
        return (start + j) % c->size();
    }
    Point at(std::size_t i) const { return c->at(cycle_index(i)); }
    Point front() const { return at(0); }
    Point back() const { return at(len - 1); }
};

CycleArc make_arc(const Cycle& c, std::size_t from, std::size_t to, bool rev) {
    std::size_t len = (to + c.size() - from) % c.size() + 1;
    return CycleArc{&c, from, len, rev};
}

// x-monotone chain pair split at the x-extremes (query polygon only)
struct PolySplit {
    XChain hi, lo;
};

PolySplit split_poly_x(std::span<const Point> poly) {
    Cycle c{poly, nullptr};
    const Direction dx{1, 0}, dy{0, 1};
    std::size_t r_hi = cycle_extreme(c, dx, dy);
    std::size_t r_lo = cycle_extreme(c, dx, negd(dy));
    std::size_t l_hi = cycle_extreme(c, negd(dx), dy);
    std::size_t l_lo = cycle_extreme(c, negd(dx), negd(dy));
    PolySplit s;
    std::size_t m = poly.size();
    std::size_t lo_len = (r_lo + m - l_lo) % m + 1;
    std::size_t hi_len = (l_hi + m - r_hi) % m + 1;
    s.lo = XChain::of_poly(poly, l_lo, lo_len, false);
    s.hi = XChain::of_poly(poly, r_hi, hi_len, true);
    return s;
}

// ---- concave gap function G over the common x-slab ------------------------

int cmp_chain_at(const XChain& a, const XChain& b, std::int64_t x) {
    std::size_t ia = locate_le(a, x);
    std::size_t ib = locate_le(b, x);
    count_compare();
    bool va = a.at(ia).x == x;
    count_compare();
    bool vb = b.at(ib).x == x;
    if (va && vb) {
        count_compare();
        std::int64_t ya = a.at(ia).y, yb = b.at(ib).y;
        return ya > yb ? 1 : (ya < yb ? -1 : 0);
    }
    if (va) {
        Turn t = orient(b.at(ib), b.at(ib + 1), a.at(ia));
        return t == Turn::Left ? 1 : (t == Turn::Right ? -1 : 0);
    }
    if (vb) {
        Turn t = orient(a.at(ia), a.at(ia + 1), b.at(ib));
        return t == Turn::Left ? -1 : (t == Turn::Right ? 1 : 0);
    }
    return geom::cmp_heights(a.at(ia), a.at(ia + 1), b.at(ib), b.at(ib + 1), x);
}

struct Piece {
    Point a, b;
    bool exists = false;
};

Piece right_piece(const XChain& c, std::int64_t x) {
    std::size_t i = locate_le(c, x);
    count_compare();
    if (c.at(i).x == x && i + 1 >= c.size()) return {};
    return {c.at(i), c.at(i + 1), true};
}

Piece left_piece(const XChain& c, std::int64_t x) {
    std::size_t i = locate_le(c, x);
    count_compare();
    if (c.at(i).x == x) {
        if (i == 0) return {};
        return {c.at(i - 1), c.at(i), true};
    }
    return {c.at(i), c.at(i + 1), true};
}

struct GChains {
    XChain up_a, lo_a, up_b, lo_b;
};

bool g_nonneg(const GChains& g, std::int64_t x) {
    return cmp_chain_at(g.up_a, g.lo_b, x) >= 0 && cmp_chain_at(g.up_b, g.lo_a, x) >= 0;
}

struct Separation {
    bool a_below = false;            // first chain pair sits below the second
    std::vector<Direction> cands;    // candidate separation normals, low side first
};

// vertical order of the two regions at x, valid when they do not overlap
// there: +1 when the first pair (up_a/lo_a) lies below the second
int region_order(const GChains& g, std::int64_t x) {
    return cmp_chain_at(g.up_a, g.lo_b, x) < 0 ? 1 : -1;
}

void push_piece_normals(const GChains& g, bool a_below, std::int64_t x,
                        std::vector<Direction>& out) {
    const XChain& ua = a_below ? g.up_a : g.up_b;
    const XChain& lb = a_below ? g.lo_b : g.lo_a;
    for (const Piece& p : {right_piece(ua, x), left_piece(ua, x), right_piece(lb, x),
                           left_piece(lb, x)}) {
        if (!p.exists) continue;
        out.push_back(Direction{-(p.b.y - p.a.y), p.b.x - p.a.x});
    }
}

// last index with x <= q, searched inside [lo, hi] (caller guarantees
// c.at(lo).x <= q and the bracket lies in range)
std::size_t locate_le_win(const XChain& c, std::int64_t q, std::size_t lo, std::size_t hi) {
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo + 1) / 2;
        count_compare();
        if (c.at(mid).x <= q)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// true if the regions meet somewhere in [xlo, xhi]; otherwise fills sep
bool regions_intersect(const GChains& g, std::int64_t xlo, std::int64_t xhi, Separation& sep) {
    const XChain* cs[4] = {&g.up_a, &g.lo_a, &g.up_b, &g.lo_b};
    std::size_t wlo[4], whi[4];  // vertex index window with x strictly inside (lo, hi)
    std::int64_t lo = xlo, hi = xhi;
    for (int i = 0; i < 4; ++i) {
        wlo[i] = locate_ge(*cs[i], lo + 1);
        whi[i] = locate_ge(*cs[i], hi);
    }

    std::int64_t best_x = lo;
    bool at_probe = false;
    std::size_t br[4];
    bool eq[4];
    auto vtx = [&](int i, std::size_t k) { return cs[i]->at(k); };
    // height comparison of chains i and j at the probe, from cached brackets
    auto cmp_at = [&](int i, int j) {
        if (eq[i] && eq[j]) {
            count_compare();
            std::int64_t ya = vtx(i, br[i]).y, yb = vtx(j, br[j]).y;
            return ya > yb ? 1 : (ya < yb ? -1 : 0);
        }
        if (eq[i]) {
            Turn t = orient(vtx(j, br[j]), vtx(j, br[j] + 1), vtx(i, br[i]));
            return t == Turn::Left ? 1 : (t == Turn::Right ? -1 : 0);
        }
        if (eq[j]) {
            Turn t = orient(vtx(i, br[i]), vtx(i, br[i] + 1), vtx(j, br[j]));
            return t == Turn::Left ? -1 : (t == Turn::Right ? 1 : 0);
        }
        return geom::cmp_heights(vtx(i, br[i]), vtx(i, br[i] + 1), vtx(j, br[j]),
                                 vtx(j, br[j] + 1), best_x);
    };
    auto piece_of = [&](int i, int side) -> Piece {
        if (side > 0) {
            if (eq[i] && br[i] + 1 >= cs[i]->size()) return {};
            return {vtx(i, br[i]), vtx(i, br[i] + 1), true};
        }
        if (eq[i]) {
            if (br[i] == 0) return {};
            return {vtx(i, br[i] - 1), vtx(i, br[i]), true};
        }
        return {vtx(i, br[i]), vtx(i, br[i] + 1), true};
    };
    // one-sided derivative sign of the gap at the probe
    auto slope_sign = [&](int side) {
        auto active = [&](int i, int j, bool upper) {
            int c = cmp_at(i, j);
            if (c != 0) return piece_of(upper == (c < 0) ? i : j, side);
            Piece p1 = piece_of(i, side), p2 = piece_of(j, side);
            if (!p1.exists || !p2.exists) return p1.exists ? p1 : p2;
            int s = geom::cmp_slopes(p1.a, p1.b, p2.a, p2.b);
            bool take1 = upper ? (side > 0 ? s <= 0 : s >= 0) : (side > 0 ? s >= 0 : s <= 0);
            return take1 ? p1 : p2;
        };
        Piece pu = active(0, 2, true);
        Piece pl = active(1, 3, false);
        if (!pu.exists || !pl.exists) throw InternalError("slope probe at domain end");
        return geom::cmp_slopes(pu.a, pu.b, pl.a, pl.b);
    };

    for (;;) {
        int pick = -1;
        std::size_t most = 0;
        for (int i = 0; i < 4; ++i) {
            std::size_t cnt = whi[i] > wlo[i] ? whi[i] - wlo[i] : 0;
            if (cnt > most) {
                most = cnt;
                pick = i;
            }
        }
        if (pick < 0) break;
        std::size_t mid = (wlo[pick] + whi[pick]) / 2;
        best_x = cs[pick]->at(mid).x;
        for (int i = 0; i < 4; ++i) {
            std::size_t blo = wlo[i] > 0 ? wlo[i] - 1 : 0;
            std::size_t bhi = std::min(whi[i], cs[i]->size() - 1);
            br[i] = locate_le_win(*cs[i], best_x, blo, bhi);
            count_compare();
            eq[i] = vtx(i, br[i]).x == best_x;
        }
        if (slope_sign(+1) > 0) {
            lo = best_x;
            for (int i = 0; i < 4; ++i) wlo[i] = br[i] + 1;
            continue;
        }
        if (slope_sign(-1) < 0) {
            hi = best_x;
            for (int i = 0; i < 4; ++i) whi[i] = eq[i] ? br[i] : br[i] + 1;
            continue;
        }
        // the concave gap peaks here; no overlap at the peak means none at all
        if (cmp_at(0, 3) >= 0 && cmp_at(2, 1) >= 0) return true;
        at_probe = true;
        break;
    }

    if (!at_probe) {
        // no chain vertex strictly inside [lo, hi]: every chain is a single
        // segment there, so the regions are ordered by straight lines; if
        // the order swaps between the ends they must cross
        if (g_nonneg(g, lo)) return true;
        if (lo != hi) {
            if (g_nonneg(g, hi)) return true;
            if (region_order(g, lo) != region_order(g, hi)) return true;
        }
        best_x = lo;
    }

    sep.a_below = region_order(g, best_x) > 0;
    push_piece_normals(g, sep.a_below, best_x, sep.cands);
    if (!at_probe && lo != hi) push_piece_normals(g, sep.a_below, hi, sep.cands);
    sep.cands.push_back(Direction{0, 1});
    return false;
}

// ---- common tangents of dot-separated cycles -------------------------------

Turn orient_sig(int sigma, Point a, Point b, Point c) {
    Turn t = orient(a, b, c);
    if (sigma > 0) return t;
    if (t == Turn::Left) return Turn::Right;
    if (t == Turn::Right) return Turn::Left;
    return Turn::Collinear;
}

// tangent from point a (strictly on the low-dot side of all of cb) touching
// the sigma-facing chain cb
std::size_t arc_point_tangent(Point a, const CycleArc& cb, int sigma) {
    if (cb.size() == 1) return 0;
    return first_true(cb.size() - 1, [&](std::size_t e) {
        return orient_sig(sigma, a, cb.at(e), cb.at(e + 1)) != Turn::Left;
    });
}

struct ArcBridge {
    std::size_t ia, ib;  // arc indices of the touch vertices
};

ArcBridge arc_bridge(const CycleArc& ca, int sa, const CycleArc& cb, int sb) {
    std::size_t ia = 0;
    if (ca.size() > 1) {
        ia = first_true(ca.size() - 1, [&](std::size_t i) {
            std::size_t j = arc_point_tangent(ca.at(i), cb, sb);
            return orient_sig(sa, ca.at(i), cb.at(j), ca.at(i + 1)) != Turn::Left;
        });
    }
    std::size_t ib = arc_point_tangent(ca.at(ia), cb, sb);
    return ArcBridge{ia, ib};
}

// under collinear contact several adjacent vertices touch the tangent line;
// pick the lexicographically smallest, matching the reference scan
Point canon_touch(const Cycle& c, std::size_t idx, Point other) {
    Point best = c.at(idx);
    const std::size_t m = c.size();
    if (m < 2) return best;
    for (std::size_t nb : {(idx + 1) % m, (idx + m - 1) % m}) {
        Point w = c.at(nb);
        if (w != other && w != best && orient(best, other, w) == Turn::Collinear && w < best)
            best = w;
    }
    return best;
}

}  // namespace

PolygonInteraction polygon_interaction(const HullWindow& w, std::span<const Point> poly) {
    require_window(w);
    // contract validation is not metered as query search work
    std::uint64_t evals_before = geom::predicate_evals;
    if (poly.empty()) throw ContractViolation("empty query polygon");
    for (const Point& p : poly)
        if (!geom::in_coord_range(p)) throw ContractViolation("polygon coordinate out of range");
    const std::size_t m = poly.size();
    if (m == 2 && poly[0] == poly[1]) throw ContractViolation("degenerate polygon");
    for (std::size_t i = 0; i < m && m >= 3; ++i)
        if (orient(poly[i], poly[(i + 1) % m], poly[(i + 2) % m]) != Turn::Left)
            throw ContractViolation("query polygon must be strictly convex CCW");
    geom::predicate_evals = evals_before;

    PolygonInteraction out;

    if (m == 1) {
        Point q = poly[0];
        if (contains(w, q) != Containment::Outside) {
            out.intersecting = true;
            return out;
        }
        TangentPair tp = tangents_from(w, q);
        out.intersecting = false;
        out.outer[0] = CommonTangent{tp.left_touch, q};
        out.outer[1] = CommonTangent{tp.right_touch, q};
        out.inner[0] = CommonTangent{tp.left_touch, q};
        out.inner[1] = CommonTangent{tp.right_touch, q};
        return out;
    }

    PolySplit ps = split_poly_x(poly);
    XChain h_up = XChain::of_seq(w.upper_vertices());
    XChain h_lo = XChain::of_seq(w.lower_vertices());

    std::int64_t pxlo = ps.lo.front().x, pxhi = ps.lo.back().x;
    std::int64_t hxlo = h_lo.front().x, hxhi = h_lo.back().x;
    count_compare();
    count_compare();
    std::int64_t xlo = std::max(pxlo, hxlo), xhi = std::min(pxhi, hxhi);

    CycleView hcyc{&w.lower_vertices(), &w.upper_vertices()};
    Cycle hc{{}, &hcyc};
    Cycle pc{poly, nullptr};

    Separation sep;
    if (xlo > xhi) {
        sep.a_below = hxhi < pxlo;  // along (1,0): hull first iff hull left
        sep.cands = {Direction{1, 0}};
    } else {
        GChains g{h_up, h_lo, ps.hi, ps.lo};
        if (regions_intersect(g, xlo, xhi, sep)) {
            out.intersecting = true;
            return out;
        }
    }
    out.intersecting = false;

    // certify a separation normal: the whole hull must project strictly
    // below the whole polygon along n when the hull is the low side
    auto proj_range = [&](const Cycle& c, const Direction& d, geom::I128& mn, geom::I128& mx) {
        Point pmax = c.at(cycle_extreme(c, d, rot90(d)));
        Point pmin = c.at(cycle_extreme(c, negd(d), rot90(d)));
        mx = geom::I128(d.dx) * pmax.x + geom::I128(d.dy) * pmax.y;
        mn = geom::I128(d.dx) * pmin.x + geom::I128(d.dy) * pmin.y;
    };
    bool hull_is_first = false;
    Direction n{0, 0};
    for (const Direction& cand : sep.cands) {
        if (!cand.valid()) continue;
        geom::I128 hmn, hmx, pmn, pmx;
        proj_range(hc, cand, hmn, hmx);
        proj_range(pc, cand, pmn, pmx);
        ++geom::predicate_evals;
        if (hmx < pmn) {
            hull_is_first = true;
            n = cand;
            break;
        }
        if (pmx < hmn) {
            hull_is_first = false;
            n = cand;
            break;
        }
    }
    if (!n.valid()) throw InternalError("no certified separation for disjoint polygons");

    const Direction t = rot90(n);

    auto split_cycle = [&](const Cycle& c, CycleArc& hi_arc, CycleArc& lo_arc) {
        std::size_t r_hi = cycle_extreme(c, n, t);
        std::size_t r_lo = cycle_extreme(c, n, negd(t));
        std::size_t l_hi = cycle_extreme(c, negd(n), t);
        std::size_t l_lo = cycle_extreme(c, negd(n), negd(t));
        hi_arc = make_arc(c, r_hi, l_hi, true);
        lo_arc = make_arc(c, l_lo, r_lo, false);
    };
    CycleArc h_hi{}, h_vlo{}, p_hi{}, p_vlo{};
    split_cycle(hc, h_hi, h_vlo);
    split_cycle(pc, p_hi, p_vlo);

    const Cycle &ac = hull_is_first ? hc : pc, &bc = hull_is_first ? pc : hc;
    const CycleArc &a_hi = hull_is_first ? h_hi : p_hi, &a_lo = hull_is_first ? h_vlo : p_vlo;
    const CycleArc &b_hi = hull_is_first ? p_hi : h_hi, &b_lo = hull_is_first ? p_vlo : h_vlo;

    struct Touch {
        Point a, b;
    };
    auto run = [&](const CycleArc& ca, int sa, const CycleArc& cb, int sb) {
        ArcBridge br = arc_bridge(ca, sa, cb, sb);
        Point av = ca.at(br.ia), bv = cb.at(br.ib);
        Point ac2 = canon_touch(ac, ca.cycle_index(br.ia), bv);
        Point bc2 = canon_touch(bc, cb.cycle_index(br.ib), av);
        return Touch{ac2, bc2};
    };
    Touch outer_up = run(a_hi, +1, b_hi, +1);
    Touch outer_dn = run(a_lo, -1, b_lo, -1);
    Touch inner_1 = run(a_hi, +1, b_lo, -1);
    Touch inner_2 = run(a_lo, -1, b_hi, +1);

    auto mk = [&](const Touch& tc) {
        return hull_is_first ? CommonTangent{tc.a, tc.b} : CommonTangent{tc.b, tc.a};
    };
    // families keyed by the side of the directed hull->poly tangent line
    out.outer[0] = mk(hull_is_first ? outer_dn : outer_up);
    out.outer[1] = mk(hull_is_first ? outer_up : outer_dn);
    out.inner[0] = mk(inner_2);
    out.inner[1] = mk(inner_1);
    return out;
}

}  // namespace winhull::queries
