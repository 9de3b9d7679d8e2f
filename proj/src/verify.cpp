#include "dragonbound/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include "dragonbound/region.hpp"

namespace dragonbound {

namespace {

std::uint64_t seg_hash(const Segment& s) {
    auto mix = [](std::uint64_t h, std::int64_t v) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    };
    std::uint64_t h = 0;
    h = mix(h, s.a.x);
    h = mix(h, s.a.y);
    h = mix(h, s.b.x);
    return mix(h, s.b.y);
}

struct SegHash {
    std::size_t operator()(const Segment& s) const { return seg_hash(s); }
};

bool repeats_segment(const std::vector<Segment>& segs, Segment& first_repeat) {
    std::unordered_set<Segment, SegHash> seen;
    seen.reserve(segs.size() * 2);
    for (const Segment& s : segs) {
        if (!seen.insert(s).second) {
            first_repeat = s;
            return true;
        }
    }
    return false;
}

std::string seg_str(const Segment& s) {
    return "(" + std::to_string(s.a.x) + "," + std::to_string(s.a.y) + ")-(" +
           std::to_string(s.b.x) + "," + std::to_string(s.b.y) + ")";
}

VerifyReport fail(VerifyReport rep, std::string why, std::optional<Segment> seg = {}) {
    rep.pass = false;
    rep.failure = std::move(why);
    rep.mismatch = seg;
    return rep;
}

}  // namespace

VerifyReport verify_boundary(const FoldingSystem& sys, const BoundarySystem& tau,
                             unsigned level, std::uint64_t cap) {
    VerifyReport rep;
    rep.level = level;

    const FoldWord fold = expand_fold(sys, FoldLetter::MoveA, level, cap);
    const LatticePath fold_path = render_fold(fold);
    if (AvoidanceReport avoid = check_self_avoiding(fold_path); !avoid.ok)
        return fail(rep, "fold path not self-avoiding: " + avoid.reason);

    const DiamondRegion region = diamonds_of_path(fold_path);
    rep.cells = region.size();

    const BoundaryTrace trace = trace_boundary(region);
    rep.loop_count = trace.loops.size();
    if (trace.loops.size() != 1)
        return fail(rep, "region not simply connected (" +
                             std::to_string(trace.loops.size()) + " boundary loops)");
    const BoundaryLoop& outer = trace.loops[trace.outer];
    rep.segments = outer.segment_count();
    if (rep.segments > 4 * rep.cells)
        return fail(rep, "boundary loop longer than 4 cells' worth of edges");

    const auto headings = boundary_start_headings(Heading::East);
    const DirWord axiom_r =
        DirWord::finished({Dir::TurnRight}, {Parity::Even});
    const DirWord axiom_l =
        DirWord::finished({Dir::TurnLeft}, {Parity::Even});
    const DirWord left_word = expand_boundary(tau, axiom_r, level, cap);
    const DirWord right_word = expand_boundary(tau, axiom_l, level, cap);
    const LatticePath left_path = render_boundary(left_word, {0, 0}, headings.left_curve);
    const LatticePath right_path = render_boundary(right_word, {0, 0}, headings.right_curve);
    rep.left_segments = left_path.edge_count();
    rep.right_segments = right_path.edge_count();

    std::vector<Segment> left_segs = path_segments(left_path);
    std::vector<Segment> right_segs = path_segments(right_path);
    Segment repeat;
    if (repeats_segment(left_segs, repeat))
        return fail(rep, "left boundary word repeats segment " + seg_str(repeat), repeat);
    if (repeats_segment(right_segs, repeat))
        return fail(rep, "right boundary word repeats segment " + seg_str(repeat), repeat);

    std::vector<Segment> word_segs = std::move(left_segs);
    word_segs.insert(word_segs.end(), right_segs.begin(), right_segs.end());
    std::sort(word_segs.begin(), word_segs.end());

    std::vector<Segment> loop_segs = outer.segments();
    std::sort(loop_segs.begin(), loop_segs.end());

    if (loop_segs != word_segs) {
        auto [li, wi] = std::mismatch(loop_segs.begin(), loop_segs.end(), word_segs.begin(),
                                      word_segs.end());
        Segment diff;
        std::string side;
        if (li == loop_segs.end()) {
            diff = *wi;
            side = "boundary words only";
        } else if (wi == word_segs.end()) {
            diff = *li;
            side = "region boundary only";
        } else {
            diff = std::min(*li, *wi);
            side = *li < *wi ? "region boundary only" : "boundary words only";
        }
        return fail(rep, "segment sets differ; first difference " + seg_str(diff) + " (" +
                             side + ")",
                    diff);
    }

    if (left_path.end() != fold_path.end())
        return fail(rep, "left boundary word misses the fold end point");
    if (right_path.end() != fold_path.end())
        return fail(rep, "right boundary word misses the fold end point");

    rep.pass = true;
    return rep;
}

unsigned max_feasible_level(const FoldingSystem& sys, unsigned max_level, std::uint64_t cap) {
    unsigned level = 0;
    while (level < max_level && fold_length_at(sys, level + 1) <= cap) ++level;
    return level;
}

SweepResult verify_sweep(const FoldingSystem& sys, const BoundarySystem& tau,
                         unsigned max_level, std::uint64_t cap, bool parallel) {
    SweepResult result;
    const unsigned top = max_feasible_level(sys, max_level, cap);
    result.last_level = top;
    result.capped = top < max_level;
    result.levels.resize(top + 1);

    const int count = static_cast<int>(top) + 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
    for (int n = 0; n < count; ++n) {
        try {
            result.levels[n] = verify_boundary(sys, tau, static_cast<unsigned>(n), cap);
        } catch (const std::exception& e) {
            VerifyReport rep;
            rep.level = static_cast<unsigned>(n);
            rep.pass = false;
            rep.failure = e.what();
            result.levels[n] = rep;
        }
    }
    (void)parallel;

    for (const VerifyReport& r : result.levels)
        if (!r.pass) result.all_pass = false;
    return result;
}

}  // namespace dragonbound
