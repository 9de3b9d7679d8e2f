#include "dragonbound/geometry.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "dragonbound/kernels.hpp"

namespace dragonbound {

namespace {

// Packs a point whose coordinates fit in 32 bits into one key.
std::uint64_t pack_point(GridPoint p) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
           static_cast<std::uint32_t>(p.y);
}

// Axial slot of a neighbour direction: 0=E, 1=N, 2=W, 3=S.
int axial_slot(GridPoint from, GridPoint to) {
    const GridPoint d = to - from;
    if (d.x > 0) return 0;
    if (d.y > 0) return 1;
    if (d.x < 0) return 2;
    return 3;
}

// True when x lies strictly inside the counter-clockwise arc from a to b.
bool strictly_between(int x, int a, int b) {
    const int span = (b - a) & 3;
    const int off = (x - a) & 3;
    return 0 < off && off < span;
}

bool pairs_interleave(std::pair<int, int> u, std::pair<int, int> v) {
    const bool in1 = strictly_between(v.first, u.first, u.second);
    const bool in2 = strictly_between(v.second, u.first, u.second);
    return in1 != in2;
}

}  // namespace

std::string heading_name(Heading h) {
    static const char* names[8] = {"E", "NE", "N", "NW", "W", "SW", "S", "SE"};
    return names[static_cast<int>(h)];
}

LatticePath render_fold(const FoldWord& w, GridPoint start, Heading h) {
    if (!is_axial(h)) throw std::invalid_argument("fold paths use axial headings");
    if (start.x % 2 != 0 || start.y % 2 != 0)
        throw std::invalid_argument("fold paths start on square centers (even-even)");
    kernels::FoldTrace trace =
        (w.size() >= kernels::kParallelThreshold && kernels::openmp_enabled())
            ? kernels::render_fold_omp(w.letters(), start, h)
            : kernels::render_fold_serial(w.letters(), start, h);
    return LatticePath{start, h, std::move(trace.vertices), trace.final_heading};
}

LatticePath render_boundary(const DirWord& w, GridPoint start, Heading h) {
    if (!is_diagonal(h)) throw std::invalid_argument("boundary paths use diagonal headings");
    if (start.x % 2 != 0 || start.y % 2 != 0)
        throw std::invalid_argument("boundary paths start on square centers (even-even)");
    LatticePath path;
    path.start = start;
    path.initial_heading = h;
    path.vertices.reserve(2 * w.size() + 1);
    path.vertices.push_back(start);
    GridPoint pos = start;
    Heading cur = h;
    for (Dir d : w.dirs()) {
        pos = pos + unit_vec(cur);
        path.vertices.push_back(pos);
        switch (d) {
            case Dir::TurnLeft: cur = turn_left(cur); break;
            case Dir::TurnRight: cur = turn_right(cur); break;
            case Dir::Straight: break;
            case Dir::Reverse: cur = turn_reverse(cur); break;
        }
        pos = pos + unit_vec(cur);
        path.vertices.push_back(pos);
    }
    path.final_heading = cur;
    return path;
}

StartHeadings boundary_start_headings(Heading fold_heading) {
    if (!is_axial(fold_heading))
        throw std::invalid_argument("fold headings are axial");
    return {rotate45(fold_heading, 1), rotate45(fold_heading, -1)};
}

AvoidanceReport check_self_avoiding(const LatticePath& p) {
    const auto& v = p.vertices;
    if (v.size() < 2) return {};

    // Each undirected edge owns a unique midpoint.
    std::unordered_set<std::uint64_t> edges;
    edges.reserve(v.size() * 2);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const GridPoint mid{(v[i].x + v[i + 1].x) / 2, (v[i].y + v[i + 1].y) / 2};
        if (!edges.insert(pack_point(mid)).second)
            return {false, i, "edge revisited at step " + std::to_string(i + 1)};
    }

    // Transversal crossings: at every revisited vertex, the (in, out) slot
    // pairs of all visits must not interleave cyclically.
    std::unordered_map<std::uint64_t, std::vector<std::pair<int, int>>> visits;
    visits.reserve(v.size() * 2);
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const std::pair<int, int> pair{axial_slot(v[i], v[i - 1]), axial_slot(v[i], v[i + 1])};
        auto& bucket = visits[pack_point(v[i])];
        for (const auto& prev : bucket)
            if (pairs_interleave(prev, pair))
                return {false, i, "path crosses itself at vertex " + std::to_string(i)};
        bucket.push_back(pair);
    }
    return {};
}

std::vector<Segment> path_segments(const LatticePath& p) {
    std::vector<Segment> out;
    out.reserve(p.vertices.size());
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        out.push_back(make_segment(p.vertices[i], p.vertices[i + 1]));
    return out;
}

}  // namespace dragonbound
