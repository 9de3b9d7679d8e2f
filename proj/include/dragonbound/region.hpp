#pragma once

#include <cstdint>
#include <vector>

#include "dragonbound/geometry.hpp"

namespace dragonbound {

/// Unit cell of the 45-degree rotated grid. Cell (a,b) is the diamond whose
/// corners map to doubled coordinates via (p,q) -> (p+q, p-q) for the four
/// rotated corners (a,b), (a+1,b), (a,b+1), (a+1,b+1).
struct Cell {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The diamond spanned by a unit folding edge; a bijection between folding
/// edges and rotated cells.
Cell cell_of_edge(GridPoint u, GridPoint v);

/// Rotated corner (p,q) back in doubled coordinates.
inline GridPoint corner_point(std::int64_t p, std::int64_t q) { return {p + q, p - q}; }

/// Union of per-edge diamonds, as sorted unique cells.
struct DiamondRegion {
    std::vector<Cell> cells;  // sorted, unique
    bool contains(const Cell& c) const;
    std::size_t size() const { return cells.size(); }
};

/// Build the diamond region of a folding path. Throws curve_error when two
/// edges map to the same cell (the path reuses an edge).
DiamondRegion diamonds_of_path(const LatticePath& fold_path);

/// A closed boundary loop in doubled coordinates; consecutive points (and
/// last-to-first) differ by a diagonal unit step.
struct BoundaryLoop {
    std::vector<GridPoint> points;
    std::size_t segment_count() const { return points.size(); }
    std::vector<Segment> segments() const;
};

struct BoundaryTrace {
    std::vector<BoundaryLoop> loops;
    std::size_t outer = 0;  // index of the loop through the extremal vertex
};

/// Extract the region's boundary: an edge is boundary iff exactly one of its
/// two cells lies in the region. Edges are linked into closed loops; at pinch
/// vertices the walk keeps the region on its left and prefers the sharpest
/// left turn, so touching lobes stay separate loops.
BoundaryTrace trace_boundary(const DiamondRegion& region);

}  // namespace dragonbound
