#include "dragonbound/region.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "dragonbound/kernels.hpp"

namespace dragonbound {

Cell cell_of_edge(GridPoint a, GridPoint b) {
    const GridPoint mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    const std::int64_t u = mid.x + mid.y;
    const std::int64_t v = mid.x - mid.y;
    // Midpoints have one odd and one even coordinate, so u and v are odd.
    return Cell{(u - 1) / 2, (v - 1) / 2};
}

bool DiamondRegion::contains(const Cell& c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

DiamondRegion diamonds_of_path(const LatticePath& fold_path) {
    if (fold_path.vertices.size() < 2)
        throw std::invalid_argument("path has no edges");
    std::vector<Cell> cells =
        (fold_path.vertices.size() >= kernels::kParallelThreshold &&
         kernels::openmp_enabled())
            ? kernels::edge_cells_omp(fold_path.vertices)
            : kernels::edge_cells_serial(fold_path.vertices);
    std::sort(cells.begin(), cells.end());
    const auto dup = std::adjacent_find(cells.begin(), cells.end());
    if (dup != cells.end())
        throw curve_error("duplicate diamond cell: the path reuses an edge");
    return DiamondRegion{std::move(cells)};
}

std::vector<Segment> BoundaryLoop::segments() const {
    std::vector<Segment> out;
    out.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        out.push_back(make_segment(points[i], points[(i + 1) % points.size()]));
    return out;
}

namespace {

// Rotated-lattice corner key (coordinates fit comfortably in 32 bits here).
std::uint64_t pack_corner(std::int64_t p, std::int64_t q) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p)) << 32) |
           static_cast<std::uint32_t>(q);
}

// Direction deltas in rotated corner space, E,N,W,S.
constexpr std::int64_t kDp[4] = {1, 0, -1, 0};
constexpr std::int64_t kDq[4] = {0, 1, 0, -1};

}  // namespace

BoundaryTrace trace_boundary(const DiamondRegion& region) {
    if (region.cells.empty())
        throw std::invalid_argument("empty region");

    std::vector<kernels::RotEdge> edges =
        (region.cells.size() >= kernels::kParallelThreshold && kernels::openmp_enabled())
            ? kernels::boundary_edges_omp(region)
            : kernels::boundary_edges_serial(region);
    std::sort(edges.begin(), edges.end());

    // Outgoing directed edges per corner; a boundary corner has one or two.
    std::unordered_map<std::uint64_t, std::array<std::int32_t, 2>> outgoing;
    outgoing.reserve(edges.size() * 2);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [it, fresh] = outgoing.try_emplace(pack_corner(edges[i].p, edges[i].q),
                                                std::array<std::int32_t, 2>{-1, -1});
        auto& slots = it->second;
        (void)fresh;
        if (slots[0] < 0)
            slots[0] = static_cast<std::int32_t>(i);
        else
            slots[1] = static_cast<std::int32_t>(i);
    }

    std::vector<bool> used(edges.size(), false);
    BoundaryTrace trace;
    GridPoint best{INT64_MAX, INT64_MAX};

    for (std::size_t seed = 0; seed < edges.size(); ++seed) {
        if (used[seed]) continue;
        BoundaryLoop loop;
        std::size_t cur = seed;
        while (!used[cur]) {
            used[cur] = true;
            const auto& e = edges[cur];
            loop.points.push_back(corner_point(e.p, e.q));
            const std::int64_t hp = e.p + kDp[e.dir];
            const std::int64_t hq = e.q + kDq[e.dir];
            const auto it = outgoing.find(pack_corner(hp, hq));
            if (it == outgoing.end())
                throw std::logic_error("boundary walk left the edge set");
            // Prefer the sharpest left turn so pinched lobes stay separate.
            std::size_t next = edges.size();
            for (int turn : {1, 0, 3}) {
                const std::uint8_t want = static_cast<std::uint8_t>((e.dir + turn) % 4);
                for (std::int32_t cand : it->second)
                    if (cand >= 0 && edges[cand].dir == want) next = cand;
                if (next != edges.size()) break;
            }
            if (next == edges.size())
                throw std::logic_error("boundary walk found no continuation");
            cur = next;
        }
        for (const GridPoint& pt : loop.points) {
            if (pt < best) {
                best = pt;
                trace.outer = trace.loops.size();
            }
        }
        trace.loops.push_back(std::move(loop));
    }
    return trace;
}

}  // namespace dragonbound
