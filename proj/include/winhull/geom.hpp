#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace winhull {

// Coordinates must satisfy |x|, |y| < kCoordBound so that 3-point orientation
// determinants evaluated in 128-bit intermediates cannot overflow.
inline constexpr std::int64_t kCoordBound = std::int64_t(1) << 62;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // lexicographic, x first
    friend bool operator<(const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

enum class Turn { Left, Right, Collinear };

// Line a*x + b*y = c with (a, b) != (0, 0).
struct LineEq {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    bool valid() const { return a != 0 || b != 0; }
};

struct Direction {
    std::int64_t dx = 0;
    std::int64_t dy = 0;
    bool valid() const { return dx != 0 || dy != 0; }
};

// Contract violations (bad caller input) are distinct from InternalError,
// which indicates a broken invariant inside the library itself.
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& msg) : std::invalid_argument(msg) {}
};
struct EmptyWindowError : ContractViolation {
    EmptyWindowError() : ContractViolation("window is empty") {}
};
struct QueryDomainError : ContractViolation {
    explicit QueryDomainError(const std::string& msg) : ContractViolation(msg) {}
};
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

namespace geom {

using I128 = __int128;

// Count of exact predicate evaluations, used by the query-cost checks.
inline thread_local std::uint64_t predicate_evals = 0;

inline void reset_predicate_evals() { predicate_evals = 0; }

inline int sign_i128(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline bool in_coord_range(Point p) {
    return p.x > -kCoordBound && p.x < kCoordBound && p.y > -kCoordBound && p.y < kCoordBound;
}

// Sign of (b - a) x (c - a). Exact; never overflows for in-range coordinates.
inline Turn orient(Point a, Point b, Point c) {
    ++predicate_evals;
    I128 det = I128(b.x - a.x) * (c.y - a.y) - I128(b.y - a.y) * (c.x - a.x);
    if (det > 0) return Turn::Left;
    if (det < 0) return Turn::Right;
    return Turn::Collinear;
}

inline int orient_sign(Point a, Point b, Point c) {
    Turn t = orient(a, b, c);
    return t == Turn::Left ? 1 : (t == Turn::Right ? -1 : 0);
}

// Sign of a*p.x + b*p.y - c.
inline int side_of_line(const LineEq& l, Point p) {
    ++predicate_evals;
    I128 v = I128(l.a) * p.x + I128(l.b) * p.y - l.c;
    return sign_i128(v);
}

// True iff the vertical line through p meets segment (s1, s2) at a point with
// y >= p.y; p on the segment counts. Returns false when p.x is outside the
// closed x-range of the segment.
inline bool vertically_below(Point p, Point s1, Point s2) {
    if (s1.x > s2.x) {
        Point t = s1;
        s1 = s2;
        s2 = t;
    }
    if (p.x < s1.x || p.x > s2.x) return false;
    if (s1.x == s2.x) {
        ++predicate_evals;
        return (s1.y >= p.y) || (s2.y >= p.y);
    }
    // p at or below the segment <=> not a strict left turn s1->s2->p
    return orient(s1, s2, p) != Turn::Left;
}

// Sign of d . (b - a): positive when moving a->b gains along d.
inline int dir_step_sign(const Direction& d, Point a, Point b) {
    ++predicate_evals;
    I128 v = I128(d.dx) * (b.x - a.x) + I128(d.dy) * (b.y - a.y);
    return sign_i128(v);
}

// Sign of d . p (128-bit safe for direction components up to ~2^63).
inline int dir_dot_cmp(const Direction& d, Point p, Point q) {
    ++predicate_evals;
    I128 vp = I128(d.dx) * p.x + I128(d.dy) * p.y;
    I128 vq = I128(d.dx) * q.x + I128(d.dy) * q.y;
    return vp > vq ? 1 : (vp < vq ? -1 : 0);
}

inline I128 floor_div(I128 a, I128 b) {  // b > 0
    I128 q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Compare a/b with c/d exactly (b > 0, d > 0), Euclidean-style so no
// intermediate products can overflow.
inline int cmp_ratio(I128 a, I128 b, I128 c, I128 d) {
    ++predicate_evals;
    for (;;) {
        I128 qa = floor_div(a, b);
        I128 qc = floor_div(c, d);
        if (qa != qc) return qa < qc ? -1 : 1;
        a -= qa * b;
        c -= qc * d;
        // now 0 <= a < b, 0 <= c < d
        if (a == 0 && c == 0) return 0;
        if (a == 0) return -1;
        if (c == 0) return 1;
        // a/b vs c/d == 1/(b/a) vs 1/(d/c): compare reciprocals reversed
        I128 t0 = a, t1 = b, t2 = c, t3 = d;
        a = t3;
        b = t2;
        c = t1;
        d = t0;
    }
}

// Compare the heights of two non-vertical segments at abscissa x.
// Both segments must bracket x: a1.x <= x <= a2.x with a1.x < a2.x.
inline int cmp_heights(Point a1, Point a2, Point b1, Point b2, std::int64_t x) {
    I128 dxa = a2.x - a1.x, dxb = b2.x - b1.x;
    I128 na = I128(a1.y) * dxa + I128(x - a1.x) * (a2.y - a1.y);
    I128 nb = I128(b1.y) * dxb + I128(x - b1.x) * (b2.y - b1.y);
    return cmp_ratio(na, dxa, nb, dxb);
}

// Compare slopes of a1->a2 vs b1->b2 (both with strictly increasing x).
inline int cmp_slopes(Point a1, Point a2, Point b1, Point b2) {
    ++predicate_evals;
    I128 lhs = I128(a2.y - a1.y) * (b2.x - b1.x);
    I128 rhs = I128(b2.y - b1.y) * (a2.x - a1.x);
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

}  // namespace geom
}  // namespace winhull
