#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <vector>

#include "winhull/geom.hpp"

namespace winhull {

// End-only edit events emitted by the chain engine. Replaying them against an
// end-updatable sequence reproduces the hull vertex list after every update.
struct HullEdit {
    enum Kind { kPushLeft, kPopLeft, kPushRight, kPopRight };
    Kind kind;
    Point p;  // meaningful for pushes; informational for pops

    static HullEdit push_left(Point q) { return {kPushLeft, q}; }
    static HullEdit pop_left() { return {kPopLeft, Point{}}; }
    static HullEdit push_right(Point q) { return {kPushRight, q}; }
    static HullEdit pop_right() { return {kPopRight, Point{}}; }
};

// Ordered hull-vertex sequence with amortized O(1) edits at both ends and
// O(1) positional access, so binary searches run in O(log h). Backed by a
// segmented double-ended buffer.
class FingerSeq {
public:
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const Point& operator[](std::size_t i) const { return items_[i]; }
    const Point& front() const { return items_.front(); }
    const Point& back() const { return items_.back(); }

    std::uint64_t edit_steps() const { return edit_steps_; }

    void apply_edit(const HullEdit& e) {
        ++edit_steps_;
        switch (e.kind) {
            case HullEdit::kPushLeft:
                if (!items_.empty() && e.p.x >= items_.front().x)
                    throw InternalError("push_left: x not strictly decreasing");
                items_.push_front(e.p);
                break;
            case HullEdit::kPopLeft:
                if (items_.empty()) throw InternalError("pop_left on empty sequence");
                items_.pop_front();
                break;
            case HullEdit::kPushRight:
                if (!items_.empty() && e.p.x <= items_.back().x)
                    throw InternalError("push_right: x not strictly increasing");
                items_.push_back(e.p);
                break;
            case HullEdit::kPopRight:
                if (items_.empty()) throw InternalError("pop_right on empty sequence");
                items_.pop_back();
                break;
        }
    }

    // First index in [0, domain) where pred flips to true; pred must be
    // monotone false -> true. Returns domain when pred is false everywhere.
    template <class Pred>
    std::size_t search(std::size_t domain, Pred pred) const {
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

    std::vector<Point> slice(std::size_t lo, std::size_t hi) const {
        if (lo > hi || hi >= items_.size()) throw ContractViolation("slice: invalid range");
        std::vector<Point> out;
        out.reserve(hi - lo + 1);
        for (std::size_t i = lo; i <= hi; ++i) out.push_back(items_[i]);
        return out;
    }

    std::vector<Point> to_vector() const { return std::vector<Point>(items_.begin(), items_.end()); }

private:
    std::deque<Point> items_;
    std::uint64_t edit_steps_ = 0;
};

}  // namespace winhull
