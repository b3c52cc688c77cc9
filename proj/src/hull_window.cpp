#include "winhull/hull_window.hpp"

#include <cassert>

namespace winhull {

namespace {
Point neg(Point p) { return Point{p.x, -p.y}; }
}  // namespace

void HullWindow::apply_upper(const std::vector<HullEdit>& edits) {
    for (const HullEdit& e : edits) {
        useq_.apply_edit(e);
        if (log_edits_) edit_log_.push_back(TaggedEdit{true, e});
    }
}

void HullWindow::apply_lower(const std::vector<HullEdit>& edits) {
    for (HullEdit e : edits) {
        e.p = neg(e.p);
        lseq_.apply_edit(e);
        if (log_edits_) edit_log_.push_back(TaggedEdit{false, e});
    }
}

void HullWindow::push_right(Point p) {
    if (!geom::in_coord_range(p)) throw ContractViolation("coordinate out of range");
    if (!window_.empty()) {
        if (p.x == window_.back().x) throw ContractViolation("duplicate x coordinate");
        if (p.x < window_.back().x) throw ContractViolation("x must be strictly increasing");
    }
    window_.push_back(p);
    scratch_.clear();
    upper_.insert_right(p, scratch_);
    apply_upper(scratch_);
    scratch_.clear();
    lower_.insert_right(neg(p), scratch_);
    apply_lower(scratch_);
    assert(useq_.front() == lseq_.front() && useq_.back() == lseq_.back());
}

Point HullWindow::pop_left() {
    if (window_.empty()) throw EmptyWindowError();
    Point expect = window_.front();
    window_.pop_front();
    scratch_.clear();
    Point got = upper_.delete_left(scratch_);
    apply_upper(scratch_);
    scratch_.clear();
    Point got_low = lower_.delete_left(scratch_);
    apply_lower(scratch_);
    if (got != expect || neg(got_low) != expect) throw InternalError("engines out of step");
    assert(window_.empty() || (useq_.front() == lseq_.front() && useq_.back() == lseq_.back()));
    return expect;
}

HullSnapshot HullWindow::hull() const {
    HullSnapshot snap;
    last_hull_steps_ = 0;
    const std::size_t nl = lseq_.size(), nu = useq_.size();
    if (nl == 0) return snap;
    snap.vertices.reserve(nl + (nu > 2 ? nu - 2 : 0));
    for (std::size_t i = 0; i < nl; ++i) {
        snap.vertices.push_back(lseq_[i]);
        ++last_hull_steps_;
    }
    if (nu >= 3) {
        for (std::size_t i = nu - 2; i >= 1; --i) {
            snap.vertices.push_back(useq_[i]);
            ++last_hull_steps_;
        }
    }
    return snap;
}

std::size_t HullWindow::hull_vertex_count() const {
    if (window_.empty()) return 0;
    if (window_.size() == 1) return 1;
    return lseq_.size() + useq_.size() - 2;
}

}  // namespace winhull
