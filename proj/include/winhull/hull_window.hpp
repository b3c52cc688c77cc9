#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "winhull/chain_engine.hpp"
#include "winhull/finger_seq.hpp"
#include "winhull/geom.hpp"

namespace winhull {

// CCW polygon starting at the leftmost vertex; degenerate forms (point,
// segment) for fewer than three vertices.
struct HullSnapshot {
    std::vector<Point> vertices;
    friend bool operator==(const HullSnapshot& a, const HullSnapshot& b) {
        return a.vertices == b.vertices;
    }
};

// Facade over two chain engines: the upper hull directly and the lower hull
// via y-negation. Keeps one finger sequence per chain in sync by replaying
// the engines' edit streams. Single writer; queries must not overlap updates.
class HullWindow {
public:
    void push_right(Point p);
    Point pop_left();

    HullSnapshot hull() const;

    std::size_t size() const { return window_.size(); }
    bool empty() const { return window_.empty(); }
    const std::deque<Point>& window_points() const { return window_; }

    const FingerSeq& upper_vertices() const { return useq_; }
    const FingerSeq& lower_vertices() const { return lseq_; }
    std::size_t hull_vertex_count() const;

    ProcedureStats stats() const {
        ProcedureStats s = upper_.stats();
        s.merge(lower_.stats());
        s.updates /= 2;  // both engines see every update
        return s;
    }
    std::uint64_t last_hull_steps() const { return last_hull_steps_; }
    std::uint64_t seq_edit_steps() const { return useq_.edit_steps() + lseq_.edit_steps(); }
    std::size_t live_node_count() const { return upper_.size() + lower_.size(); }

    const ChainEngine& upper_engine() const { return upper_; }
    const ChainEngine& lower_engine() const { return lower_; }

    // Edits applied to the sequences since the last drain, in application
    // order (lower-chain edits carry un-negated points). Test hook for
    // model-replay checks; cleared on demand.
    struct TaggedEdit {
        bool upper;
        HullEdit edit;
    };
    std::vector<TaggedEdit> drain_edit_log() {
        auto out = std::move(edit_log_);
        edit_log_.clear();
        return out;
    }
    void set_edit_logging(bool on) { log_edits_ = on; }

private:
    void apply_upper(const std::vector<HullEdit>& edits);
    void apply_lower(const std::vector<HullEdit>& edits);

    ChainEngine upper_, lower_;
    FingerSeq useq_, lseq_;
    std::deque<Point> window_;
    std::vector<HullEdit> scratch_;
    std::vector<TaggedEdit> edit_log_;
    bool log_edits_ = false;
    mutable std::uint64_t last_hull_steps_ = 0;
};

}  // namespace winhull
