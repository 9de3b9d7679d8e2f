#include "dragonbound/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dragonbound::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace {

#ifdef _OPENMP
int worker_count() { return omp_get_max_threads(); }
#else
int worker_count() { return 1; }
#endif

// Evenly split [0, n) into `parts` ranges; returns part boundaries.
std::vector<std::size_t> split_ranges(std::size_t n, int parts) {
    std::vector<std::size_t> bounds(parts + 1);
    for (int t = 0; t <= parts; ++t)
        bounds[t] = n * static_cast<std::size_t>(t) / static_cast<std::size_t>(parts);
    return bounds;
}

void expand_once(const std::vector<FoldLetter>& cur, const std::vector<FoldLetter>& pa,
                 const std::vector<FoldLetter>& pb, std::vector<FoldLetter>& next) {
    for (FoldLetter l : cur) {
        switch (l) {
            case FoldLetter::MoveA: next.insert(next.end(), pa.begin(), pa.end()); break;
            case FoldLetter::MoveB: next.insert(next.end(), pb.begin(), pb.end()); break;
            default: next.push_back(l); break;
        }
    }
}

std::uint64_t checked_next_length(std::uint64_t cur_len, std::uint64_t prod_len,
                                  std::uint64_t cap) {
    // cur_len letters alternate move/turn and both ends are moves.
    const std::uint64_t moves = (cur_len + 1) / 2;
    const std::uint64_t turns = cur_len / 2;
    const std::uint64_t next = moves * prod_len + turns;
    if (next > cap) throw cap_error(next);
    return next;
}

}  // namespace

std::vector<FoldLetter> expand_fold_serial(const FoldingSystem& sys, FoldLetter start,
                                           unsigned level, std::uint64_t cap) {
    const auto& pa = sys.production_a().letters();
    const auto& pb = sys.production_b().letters();
    std::vector<FoldLetter> cur{start};
    for (unsigned step = 0; step < level; ++step) {
        const std::uint64_t next_len = checked_next_length(cur.size(), pa.size(), cap);
        std::vector<FoldLetter> next;
        next.reserve(next_len);
        expand_once(cur, pa, pb, next);
        cur = std::move(next);
    }
    return cur;
}

std::vector<FoldLetter> expand_fold_omp(const FoldingSystem& sys, FoldLetter start,
                                        unsigned level, std::uint64_t cap) {
    const auto& pa = sys.production_a().letters();
    const auto& pb = sys.production_b().letters();
    const std::size_t prod_len = pa.size();
    std::vector<FoldLetter> cur{start};
    for (unsigned step = 0; step < level; ++step) {
        const std::uint64_t next_len = checked_next_length(cur.size(), prod_len, cap);
        std::vector<FoldLetter> next(next_len);
        // Alternation fixes every output offset in closed form, so letters
        // can be written independently.
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (i % 2 == 0) {
                const std::size_t off = (i / 2) * (prod_len + 1);
                const auto& prod = cur[i] == FoldLetter::MoveA ? pa : pb;
                std::copy(prod.begin(), prod.end(), next.begin() + off);
            } else {
                const std::size_t off = ((i + 1) / 2) * prod_len + (i - 1) / 2;
                next[off] = cur[i];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------

namespace {

// Quarter-turn headings 0..3 = E,N,W,S; fold headings are axial.
int quarter_of(Heading h) { return static_cast<int>(h) / 2; }
Heading heading_of_quarter(int q) { return static_cast<Heading>(((q % 4) + 4) % 4 * 2); }

constexpr std::int64_t kQDx[4] = {1, 0, -1, 0};
constexpr std::int64_t kQDy[4] = {0, 1, 0, -1};

int turn_delta(FoldLetter l) { return l == FoldLetter::TurnPlus ? -1 : 1; }

}  // namespace

FoldTrace render_fold_serial(const std::vector<FoldLetter>& letters, GridPoint start,
                             Heading h) {
    FoldTrace trace;
    const std::size_t edges = (letters.size() + 1) / 2;
    trace.vertices.reserve(edges + 1);
    trace.vertices.push_back(start);
    GridPoint pos = start;
    int quarter = quarter_of(h);
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (is_move(letters[i])) {
            pos = {pos.x + 2 * kQDx[quarter & 3], pos.y + 2 * kQDy[quarter & 3]};
            trace.vertices.push_back(pos);
        } else {
            quarter = (quarter + turn_delta(letters[i])) & 3;
        }
    }
    trace.final_heading = heading_of_quarter(quarter);
    return trace;
}

FoldTrace render_fold_omp(const std::vector<FoldLetter>& letters, GridPoint start,
                          Heading h) {
    const std::size_t edges = (letters.size() + 1) / 2;
    FoldTrace trace;
    trace.vertices.assign(edges + 1, GridPoint{});
    trace.vertices[0] = start;

    const int workers = worker_count();
    const auto bounds = split_ranges(edges, workers);

    // Pass 1: per-block turn totals give each block its starting heading.
    std::vector<int> block_turn(workers + 1, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int t = 0; t < workers; ++t) {
        int sum = 0;
        for (std::size_t j = bounds[t]; j < bounds[t + 1]; ++j)
            if (j + 1 < edges) sum += turn_delta(letters[2 * j + 1]);
        block_turn[t + 1] = sum;
    }
    for (int t = 0; t < workers; ++t) block_turn[t + 1] += block_turn[t];

    // Pass 2: per-edge step vectors and per-block displacement totals.
    std::vector<GridPoint> steps(edges);
    std::vector<GridPoint> block_disp(workers + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int t = 0; t < workers; ++t) {
        int quarter = (quarter_of(h) + block_turn[t]) & 3;
        GridPoint disp{};
        for (std::size_t j = bounds[t]; j < bounds[t + 1]; ++j) {
            steps[j] = {2 * kQDx[quarter], 2 * kQDy[quarter]};
            disp = disp + steps[j];
            if (j + 1 < edges) quarter = (quarter + turn_delta(letters[2 * j + 1])) & 3;
        }
        block_disp[t + 1] = disp;
    }
    for (int t = 0; t < workers; ++t) block_disp[t + 1] = block_disp[t + 1] + block_disp[t];

    // Pass 3: vertices from block-offset prefix sums.
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int t = 0; t < workers; ++t) {
        GridPoint pos = start + block_disp[t];
        for (std::size_t j = bounds[t]; j < bounds[t + 1]; ++j) {
            pos = pos + steps[j];
            trace.vertices[j + 1] = pos;
        }
    }

    const int total_turns = block_turn[workers];
    trace.final_heading = heading_of_quarter(quarter_of(h) + total_turns);
    return trace;
}

// ---------------------------------------------------------------------------

std::vector<Cell> edge_cells_serial(const std::vector<GridPoint>& vertices) {
    std::vector<Cell> cells(vertices.size() - 1);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        cells[i] = cell_of_edge(vertices[i], vertices[i + 1]);
    return cells;
}

std::vector<Cell> edge_cells_omp(const std::vector<GridPoint>& vertices) {
    std::vector<Cell> cells(vertices.size() - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i] = cell_of_edge(vertices[i], vertices[i + 1]);
    return cells;
}

// ---------------------------------------------------------------------------

namespace {

// Boundary edges contributed by one cell, counter-clockwise (region on the
// left): bottom E, right N, top W, left S.
template <typename Sink>
void cell_boundary_edges(const DiamondRegion& region, const Cell& c, Sink&& sink) {
    if (!region.contains({c.a, c.b - 1})) sink(RotEdge{c.a, c.b, 0});
    if (!region.contains({c.a + 1, c.b})) sink(RotEdge{c.a + 1, c.b, 1});
    if (!region.contains({c.a, c.b + 1})) sink(RotEdge{c.a + 1, c.b + 1, 2});
    if (!region.contains({c.a - 1, c.b})) sink(RotEdge{c.a, c.b + 1, 3});
}

}  // namespace

std::vector<RotEdge> boundary_edges_serial(const DiamondRegion& region) {
    std::vector<RotEdge> edges;
    edges.reserve(region.cells.size() / 2 + 8);
    for (const Cell& c : region.cells)
        cell_boundary_edges(region, c, [&](RotEdge e) { edges.push_back(e); });
    return edges;
}

std::vector<RotEdge> boundary_edges_omp(const DiamondRegion& region) {
    const int workers = worker_count();
    const auto bounds = split_ranges(region.cells.size(), workers);
    std::vector<std::vector<RotEdge>> parts(workers);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int t = 0; t < workers; ++t) {
        auto& local = parts[t];
        for (std::size_t i = bounds[t]; i < bounds[t + 1]; ++i)
            cell_boundary_edges(region, region.cells[i],
                                [&](RotEdge e) { local.push_back(e); });
    }
    std::vector<RotEdge> edges;
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    edges.reserve(total);
    for (const auto& part : parts) edges.insert(edges.end(), part.begin(), part.end());
    return edges;
}

}  // namespace dragonbound::kernels
