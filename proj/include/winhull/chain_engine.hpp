#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "winhull/finger_seq.hpp"
#include "winhull/geom.hpp"

namespace winhull {

// Procedures whose cost the engine meters. The first four come with a
// participate-at-most-once guarantee per point over an entire run.
enum class Proc : int {
    kInsertionTangent = 0,
    kDeletionTangent = 1,
    kLeftHullConstruction = 2,
    kRightHullUpdate = 3,
    kTreeUpdate = 4,
};
inline constexpr int kProcCount = 5;

struct ProcedureStats {
    std::array<std::uint64_t, kProcCount> steps{};
    std::array<std::uint64_t, kProcCount> involvements{};
    // a point participating twice in a once-only procedure bumps this
    std::array<std::uint64_t, kProcCount> involvement_violations{};
    // stricter per-chain-side accounting of the deletion-type search: a
    // point can cross from the right chain into the left structure when the
    // partition advances and legitimately participate once on each side;
    // participating twice on the SAME side bumps this
    std::uint64_t deletion_side_violations = 0;
    std::uint64_t updates = 0;

    std::uint64_t total_steps() const {
        std::uint64_t s = 0;
        for (auto v : steps) s += v;
        return s;
    }
    ProcedureStats& merge(const ProcedureStats& o) {
        for (int i = 0; i < kProcCount; ++i) {
            steps[i] += o.steps[i];
            involvements[i] += o.involvements[i];
            involvement_violations[i] += o.involvement_violations[i];
        }
        deletion_side_violations += o.deletion_side_violations;
        updates += o.updates;
        return *this;
    }
};

// One monotone hull chain under window-sliding updates: points enter strictly
// to the right and leave strictly from the left. Maintains the left part S1
// with per-node stacks of historical left neighbors plus immutable right
// links, the right part S2 as a doubly linked upper-hull chain, and the
// common tangent (t1, t2) joining the two. All hull-membership changes are
// emitted as end-only HullEdit events.
class ChainEngine {
public:
    ChainEngine() = default;

    // Builds the left structure over points in strictly increasing x
    // (S2 empty afterwards). Emits the construction edit stream.
    explicit ChainEngine(std::span<const Point> pts, std::vector<HullEdit>* edits = nullptr);

    void insert_right(Point q, std::vector<HullEdit>& edits);
    Point delete_left(std::vector<HullEdit>& edits);

    // Current hull vertex list, left to right, in O(h).
    std::vector<Point> chain_vertices() const;

    std::size_t size() const { return arena_.size(); }
    bool empty() const { return arena_.empty(); }
    const ProcedureStats& stats() const { return stats_; }

    std::optional<std::pair<Point, Point>> tangent() const {
        if (chain_head_ < 0) return std::nullopt;
        return std::make_pair(node(t1_).p, node(t2_).p);
    }
    std::size_t s1_size() const { return empty() ? 0 : std::size_t(partition_ - base_ + 1); }
    std::size_t s2_size() const { return size() - s1_size(); }
    std::int64_t partition_x() const { return node(partition_).p.x; }

    // Exhaustive invariant walk, test use only (O(n) or worse).
    void debug_validate() const;

private:
    struct Node {
        Point p;
        std::int64_t right_link = -1;  // immutable once assigned by a leftward build
        std::int64_t left_link = -1;   // chain prev while in S2; working left ptr during builds
        std::int64_t chain_next = -1;  // chain next while in S2
        std::vector<std::int64_t> stack;  // historical left neighbors, top = most recent
        std::uint8_t involved = 0;        // once-only participation bits, by Proc
    };

    Node& node(std::int64_t g) { return arena_[std::size_t(g - base_)]; }
    const Node& node(std::int64_t g) const { return arena_[std::size_t(g - base_)]; }
    std::int64_t end_index() const { return base_ + std::int64_t(arena_.size()); }

    std::int64_t s1_left_neighbor(std::int64_t g) const {
        const auto& st = node(g).stack;
        return st.empty() ? -1 : st.back();
    }

    void mark(std::int64_t g, Proc proc);
    void mark_deletion(std::int64_t g, bool right_side);
    void set_right_link(std::int64_t g, std::int64_t target);

    // Leftward walk restoring t1 after the right side changed; emits one
    // PopRight per vertex the walk leaves behind.
    std::int64_t insertion_tangent_walk(std::int64_t start, std::int64_t t2node,
                                        std::vector<HullEdit>& edits);
    void deletion_tangent_walk(std::int64_t& p, std::int64_t& t2);

    // Graham scan right-to-left over [lo, end); rebuilds stacks/right links.
    void build_range(std::int64_t lo, std::vector<HullEdit>* edits);

    std::deque<Node> arena_;     // front = leftmost live point
    std::int64_t base_ = 0;      // global index of arena_.front()
    std::int64_t partition_ = -1;  // rightmost S1 point; S2 = (partition_, end)
    std::int64_t chain_head_ = -1, chain_tail_ = -1;  // U(S2) list ends
    std::int64_t t1_ = -1, t2_ = -1;                  // tangent, valid iff S2 nonempty
    ProcedureStats stats_;
};

}  // namespace winhull
