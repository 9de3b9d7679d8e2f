#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dragonbound/words.hpp"

namespace dragonbound {

/// Doubled integer coordinates: square centers sit at even-even points, one
/// folding step spans 2 units, boundary half-steps are exact (+-1,+-1).
struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline GridPoint operator+(GridPoint a, GridPoint b) { return {a.x + b.x, a.y + b.y}; }
inline GridPoint operator-(GridPoint a, GridPoint b) { return {a.x - b.x, a.y - b.y}; }

/// Eight compass directions, counter-clockwise in 45-degree steps.
enum class Heading : std::uint8_t {
    East = 0, NorthEast, North, NorthWest, West, SouthWest, South, SouthEast
};

constexpr Heading rotate45(Heading h, int steps) {
    return static_cast<Heading>((static_cast<int>(h) + steps % 8 + 8) % 8);
}
constexpr Heading turn_left(Heading h) { return rotate45(h, 2); }
constexpr Heading turn_right(Heading h) { return rotate45(h, -2); }
constexpr Heading turn_reverse(Heading h) { return rotate45(h, 4); }
constexpr bool is_axial(Heading h) { return static_cast<int>(h) % 2 == 0; }
constexpr bool is_diagonal(Heading h) { return !is_axial(h); }

/// Unit step of the heading; diagonal headings give the (+-1,+-1) half-step.
constexpr GridPoint unit_vec(Heading h) {
    constexpr std::int64_t dx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    constexpr std::int64_t dy[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    return {dx[static_cast<int>(h)], dy[static_cast<int>(h)]};
}

std::string heading_name(Heading h);

struct LatticePath {
    GridPoint start;
    Heading initial_heading = Heading::East;
    std::vector<GridPoint> vertices;  // includes start
    Heading final_heading = Heading::East;

    GridPoint end() const { return vertices.back(); }
    std::size_t edge_count() const { return vertices.size() - 1; }
};

/// Turtle-render a folding word: moves advance 2 units along the current
/// axial heading, '+' turns right, '-' turns left.
LatticePath render_fold(const FoldWord& w, GridPoint start = {}, Heading h = Heading::East);

/// Turtle-render a boundary word: per letter, half-step, turn, half-step on
/// the diagonal sublattice. Raw words with Reverse render as 180-degree
/// there-and-back pairs; parities never affect geometry.
LatticePath render_boundary(const DirWord& w, GridPoint start = {},
                            Heading h = Heading::NorthEast);

struct StartHeadings {
    Heading left_curve;   // the tau^n(R) family
    Heading right_curve;  // the tau^n(L) family
};

/// Initial headings of the two boundary curves relative to a fold heading.
StartHeadings boundary_start_headings(Heading fold_heading);

struct AvoidanceReport {
    bool ok = true;
    std::size_t index = 0;  // 0-based edge index (edge reuse) or vertex index (crossing)
    std::string reason;
};

/// A folding path is self-avoiding when no undirected edge repeats and no
/// vertex is crossed transversally (incident edge pairs never interleave).
AvoidanceReport check_self_avoiding(const LatticePath& p);

/// An undirected unit segment with canonically ordered endpoints.
struct Segment {
    GridPoint a, b;
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

inline Segment make_segment(GridPoint p, GridPoint q) {
    return p <= q ? Segment{p, q} : Segment{q, p};
}

/// All edges of a path as canonical segments (unsorted, in path order).
std::vector<Segment> path_segments(const LatticePath& p);

}  // namespace dragonbound
