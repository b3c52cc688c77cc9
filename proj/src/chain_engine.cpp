#include "winhull/chain_engine.hpp"

#include <cassert>

namespace winhull {

using geom::orient;

namespace {

void check_point(Point p) {
    if (!geom::in_coord_range(p)) throw ContractViolation("coordinate out of range");
}

}  // namespace

ChainEngine::ChainEngine(std::span<const Point> pts, std::vector<HullEdit>* edits) {
    if (pts.empty()) throw ContractViolation("build requires a nonempty point sequence");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        check_point(pts[i]);
        if (i > 0 && pts[i].x <= pts[i - 1].x)
            throw ContractViolation("build requires strictly increasing x");
        arena_.push_back(Node{pts[i], -1, -1, -1, {}, 0});
    }
    partition_ = std::int64_t(arena_.size()) - 1;
    build_range(0, edits);
}

namespace {
// node participation bits: one per procedure, plus a split of the
// deletion-type search by chain side
constexpr std::uint8_t kDelLeftBit = std::uint8_t(1) << int(Proc::kDeletionTangent);
constexpr std::uint8_t kDelRightBit = std::uint8_t(1) << 6;
}  // namespace

void ChainEngine::mark(std::int64_t g, Proc proc) {
    int bit = 1 << int(proc);
    Node& n = node(g);
    ++stats_.involvements[int(proc)];
    if (n.involved & bit)
        ++stats_.involvement_violations[int(proc)];
    else
        n.involved = std::uint8_t(n.involved | bit);
}

void ChainEngine::mark_deletion(std::int64_t g, bool right_side) {
    Node& n = node(g);
    ++stats_.involvements[int(Proc::kDeletionTangent)];
    if (n.involved & (kDelLeftBit | kDelRightBit))
        ++stats_.involvement_violations[int(Proc::kDeletionTangent)];
    std::uint8_t bit = right_side ? kDelRightBit : kDelLeftBit;
    if (n.involved & bit) ++stats_.deletion_side_violations;
    n.involved = std::uint8_t(n.involved | bit);
}

void ChainEngine::set_right_link(std::int64_t g, std::int64_t target) {
    Node& n = node(g);
    if (n.right_link != -1) throw InternalError("right link reassigned");
    n.right_link = target;
}

void ChainEngine::build_range(std::int64_t lo, std::vector<HullEdit>* edits) {
    std::int64_t hi = end_index();
    std::int64_t head = hi - 1;
    mark(head, Proc::kLeftHullConstruction);
    ++stats_.steps[int(Proc::kLeftHullConstruction)];
    if (edits) edits->push_back(HullEdit::push_left(node(head).p));
    for (std::int64_t g = hi - 2; g >= lo; --g) {
        mark(g, Proc::kLeftHullConstruction);
        ++stats_.steps[int(Proc::kLeftHullConstruction)];
        std::int64_t v = head;
        // drop leading vertices covered by g; collinear middles go too
        while (node(v).right_link != -1 &&
               orient(node(g).p, node(v).p, node(node(v).right_link).p) != Turn::Right) {
            if (edits) edits->push_back(HullEdit::pop_left());
            v = node(v).right_link;
            ++stats_.steps[int(Proc::kLeftHullConstruction)];
        }
        set_right_link(g, v);
        node(v).stack.push_back(g);
        node(v).left_link = g;
        head = g;
        if (edits) edits->push_back(HullEdit::push_left(node(g).p));
    }
}

void ChainEngine::insert_right(Point q, std::vector<HullEdit>& edits) {
    check_point(q);
    if (!arena_.empty() && q.x <= arena_.back().p.x)
        throw ContractViolation("insert requires x strictly greater than all points");
    ++stats_.updates;

    std::int64_t g = end_index();
    arena_.push_back(Node{q, -1, -1, -1, {}, 0});

    if (g == base_) {  // first point: S1 = {q}
        partition_ = g;
        edits.push_back(HullEdit::push_right(q));
        return;
    }

    if (chain_head_ < 0) {
        // S2 was empty: q starts the chain, re-anchor the tangent from the
        // rightmost left-hull vertex.
        chain_head_ = chain_tail_ = g;
        t2_ = g;
        ++stats_.steps[int(Proc::kRightHullUpdate)];
        t1_ = insertion_tangent_walk(partition_, g, edits);
        edits.push_back(HullEdit::push_right(q));
        return;
    }

    // Scan the chain from its right end.
    std::uint64_t scan_steps = 1;
    bool t2_popped = false;
    std::int64_t v = chain_tail_;
    while (node(v).left_link != -1 &&
           orient(node(node(v).left_link).p, node(v).p, q) != Turn::Right) {
        if (v >= t2_) {
            edits.push_back(HullEdit::pop_right());
            if (v == t2_) t2_popped = true;
        }
        mark(v, Proc::kRightHullUpdate);
        std::int64_t prev = node(v).left_link;
        node(v).left_link = -1;
        node(v).chain_next = -1;
        node(prev).chain_next = -1;
        v = prev;
        ++scan_steps;
    }
    stats_.steps[int(Proc::kRightHullUpdate)] += scan_steps;
    std::int64_t attach = v;
    node(attach).chain_next = g;
    node(g).left_link = attach;
    chain_tail_ = g;

    bool tangent_ok;
    if (attach > t2_)
        tangent_ok = true;
    else if (attach == t2_)
        tangent_ok = orient(node(t1_).p, node(t2_).p, q) == Turn::Right;
    else
        tangent_ok = false;

    if (!tangent_ok) {
        if (!t2_popped) edits.push_back(HullEdit::pop_right());  // old t2 leaves the hull
        t2_ = g;
        t1_ = insertion_tangent_walk(t1_, g, edits);
    }
    edits.push_back(HullEdit::push_right(q));
}

std::int64_t ChainEngine::insertion_tangent_walk(std::int64_t start, std::int64_t t2node,
                                                 std::vector<HullEdit>& edits) {
    std::int64_t p = start;
    std::uint64_t steps = 1;
    Point tp = node(t2node).p;
    for (;;) {
        std::int64_t lp = s1_left_neighbor(p);
        // move while the left neighbor is at or above the candidate tangent
        // line, so the final t1 absorbs any collinear run to the left
        if (lp == -1 || orient(node(p).p, tp, node(lp).p) == Turn::Right) break;
        edits.push_back(HullEdit::pop_right());
        if (p != start) mark(p, Proc::kInsertionTangent);
        p = lp;
        ++steps;
    }
    stats_.steps[int(Proc::kInsertionTangent)] += steps;
    return p;
}

void ChainEngine::deletion_tangent_walk(std::int64_t& p, std::int64_t& t2) {
    const std::int64_t p_start = p, t2_start = t2;
    std::uint64_t steps = 1;
    for (;;) {
        // stabilize the left point first: with a stale t2 it can never pass
        // the final tangent position
        for (;;) {
            std::int64_t lp = s1_left_neighbor(p);
            if (lp == -1 || orient(node(p).p, node(t2).p, node(lp).p) == Turn::Right) break;
            if (p != p_start) mark_deletion(p, false);
            p = lp;
            ++steps;
        }
        // then move the right point a single step; advancing it further
        // against an unstable left point can overshoot the tangent
        std::int64_t lt = node(t2).left_link;
        // strictly above only: a collinear neighbor stays hidden inside the
        // tangent segment
        if (lt == -1 || orient(node(p).p, node(t2).p, node(lt).p) != Turn::Left) break;
        if (t2 != t2_start) mark_deletion(t2, true);
        t2 = lt;
        ++steps;
    }
    stats_.steps[int(Proc::kDeletionTangent)] += steps;
}

Point ChainEngine::delete_left(std::vector<HullEdit>& edits) {
    if (arena_.empty()) throw ContractViolation("delete on empty window");
    ++stats_.updates;

    const std::int64_t gi = base_;
    const Point out = node(gi).p;

    if (partition_ == gi) {
        // gi is the only point left of the partition
        edits.push_back(HullEdit::pop_left());
        if (chain_head_ < 0) {  // last point overall
            arena_.pop_front();
            ++base_;
            partition_ = -1;
            t1_ = t2_ = -1;
            return out;
        }
        // chain vertices hidden left of t2 surface now, right to left
        for (std::int64_t v = node(t2_).left_link; v != -1; v = node(v).left_link)
            edits.push_back(HullEdit::push_left(node(v).p));
        arena_.pop_front();
        ++base_;
        // the old right part becomes the new left structure
        for (auto& n : arena_) {
            n.left_link = -1;
            n.chain_next = -1;
        }
        chain_head_ = chain_tail_ = -1;
        t1_ = t2_ = -1;
        partition_ = end_index() - 1;
        build_range(base_, nullptr);
        return out;
    }

    std::int64_t p = node(gi).right_link;
    if (p == -1 || node(p).stack.empty() || node(p).stack.back() != gi)
        throw InternalError("left structure corrupt at delete");
    node(p).stack.pop_back();
    edits.push_back(HullEdit::pop_left());

    if (chain_head_ >= 0 && t1_ == gi) {
        // tangent anchored at the deleted point: walk both chains leftward
        std::int64_t np = p, nt2 = t2_;
        deletion_tangent_walk(np, nt2);
        std::int64_t old_t2 = t2_;
        t1_ = np;
        t2_ = nt2;
        if (nt2 != old_t2) {
            for (std::int64_t v = node(old_t2).left_link;; v = node(v).left_link) {
                edits.push_back(HullEdit::push_left(node(v).p));
                if (v == nt2) break;
            }
        }
        edits.push_back(HullEdit::push_left(node(np).p));
        for (std::int64_t v = s1_left_neighbor(np); v != -1; v = s1_left_neighbor(v))
            edits.push_back(HullEdit::push_left(node(v).p));
    } else {
        // vertices hidden below the edge (gi, p) surface, right to left
        std::uint64_t steps = 1;
        for (std::int64_t v = s1_left_neighbor(p); v != -1; v = s1_left_neighbor(v)) {
            edits.push_back(HullEdit::push_left(node(v).p));
            mark(v, Proc::kTreeUpdate);
            ++steps;
        }
        stats_.steps[int(Proc::kTreeUpdate)] += steps;
    }

    arena_.pop_front();
    ++base_;
    return out;
}

std::vector<Point> ChainEngine::chain_vertices() const {
    std::vector<Point> out;
    if (arena_.empty()) return out;
    std::int64_t g = base_;
    if (chain_head_ < 0) {
        while (g != -1) {
            out.push_back(node(g).p);
            g = node(g).right_link;
        }
        return out;
    }
    for (;;) {
        out.push_back(node(g).p);
        if (g == t1_) break;
        g = node(g).right_link;
        if (g == -1) throw InternalError("left hull walk missed the tangent");
    }
    for (g = t2_; g != -1; g = node(g).chain_next) out.push_back(node(g).p);
    return out;
}

void ChainEngine::debug_validate() const {
    if (arena_.empty()) return;
    auto verts = chain_vertices();
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        if (verts[i].x >= verts[i + 1].x) throw InternalError("hull not x-sorted");
        if (i + 2 < verts.size() &&
            orient(verts[i], verts[i + 1], verts[i + 2]) != Turn::Right)
            throw InternalError("hull not strictly convex");
    }
    if (chain_head_ >= 0) {
        // every point at or below the tangent line
        Point a = node(t1_).p, b = node(t2_).p;
        for (std::int64_t g = base_; g < end_index(); ++g)
            if (orient(a, b, node(g).p) == Turn::Left) throw InternalError("tangent invalid");
    }
}

}  // namespace winhull
