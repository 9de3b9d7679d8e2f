#pragma once

// Data-parallel kernels for the hot paths, each with a serial reference twin.
// The serial versions are the behavioural ground truth; the OpenMP versions
// must produce bit-identical results (tests/bench compare them).

#include <cstdint>
#include <vector>

#include "dragonbound/geometry.hpp"
#include "dragonbound/region.hpp"
#include "dragonbound/words.hpp"

namespace dragonbound::kernels {

// Letter count below which the dispatchers stay serial.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

bool openmp_enabled();

// --- n-fold substitution ---------------------------------------------------

std::vector<FoldLetter> expand_fold_serial(const FoldingSystem& sys, FoldLetter start,
                                           unsigned level, std::uint64_t cap);
std::vector<FoldLetter> expand_fold_omp(const FoldingSystem& sys, FoldLetter start,
                                        unsigned level, std::uint64_t cap);

// --- turtle rendering of folding words --------------------------------------

// Vertex sequence (including start) and final heading of the rendered word.
struct FoldTrace {
    std::vector<GridPoint> vertices;
    Heading final_heading;
};

FoldTrace render_fold_serial(const std::vector<FoldLetter>& letters, GridPoint start,
                             Heading h);
FoldTrace render_fold_omp(const std::vector<FoldLetter>& letters, GridPoint start,
                          Heading h);

// --- edge -> rotated cell map ------------------------------------------------

std::vector<Cell> edge_cells_serial(const std::vector<GridPoint>& vertices);
std::vector<Cell> edge_cells_omp(const std::vector<GridPoint>& vertices);

// --- boundary edge extraction ------------------------------------------------

// Directed boundary edge in rotated corner coordinates; dir indexes E,N,W,S.
struct RotEdge {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::uint8_t dir = 0;
    friend auto operator<=>(const RotEdge&, const RotEdge&) = default;
};

std::vector<RotEdge> boundary_edges_serial(const DiamondRegion& region);
std::vector<RotEdge> boundary_edges_omp(const DiamondRegion& region);

}  // namespace dragonbound::kernels
