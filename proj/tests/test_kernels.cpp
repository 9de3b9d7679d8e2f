#include <doctest.h>

#include <algorithm>

#include "dragonbound/kernels.hpp"
#include "dragonbound/region.hpp"
#include "test_support.hpp"

using namespace dragonbound;
using namespace testsupport;

TEST_CASE("omp kernels match the serial reference") {
    std::mt19937 rng(23);
    std::vector<std::pair<std::string, unsigned>> cases = {
        {"A-B", 0},  {"A-B", 1},   {"A-B", 7},  {"A-B", 17},
        {"A+B", 10}, {"A+B+A-B-A", 6}, {"B+A-B-A+B+A+B-A+B+A-B-A-B+A-B+A+B", 3},
    };
    for (int i = 0; i < 6; ++i)
        cases.emplace_back(random_fold_word(rng, 2 + rng() % 8).str(), 1 + rng() % 4);

    for (const auto& [sigma, level] : cases) {
        INFO(sigma, " at level ", level);
        const FoldingSystem sys = FoldingSystem::parse(sigma);
        if (fold_length_at(sys, level) > kDefaultCap) continue;

        const auto word_s = kernels::expand_fold_serial(sys, FoldLetter::MoveA, level,
                                                        kDefaultCap);
        const auto word_p = kernels::expand_fold_omp(sys, FoldLetter::MoveA, level,
                                                     kDefaultCap);
        CHECK(word_s == word_p);

        const auto trace_s = kernels::render_fold_serial(word_s, {0, 0}, Heading::North);
        const auto trace_p = kernels::render_fold_omp(word_s, {0, 0}, Heading::North);
        CHECK(trace_s.vertices == trace_p.vertices);
        CHECK(trace_s.final_heading == trace_p.final_heading);

        auto cells_s = kernels::edge_cells_serial(trace_s.vertices);
        auto cells_p = kernels::edge_cells_omp(trace_s.vertices);
        CHECK(cells_s == cells_p);

        std::sort(cells_s.begin(), cells_s.end());
        cells_s.erase(std::unique(cells_s.begin(), cells_s.end()), cells_s.end());
        const DiamondRegion region{cells_s};
        auto edges_s = kernels::boundary_edges_serial(region);
        auto edges_p = kernels::boundary_edges_omp(region);
        std::sort(edges_s.begin(), edges_s.end());
        std::sort(edges_p.begin(), edges_p.end());
        CHECK(edges_s == edges_p);
    }
}

TEST_CASE("kernel cap errors") {
    const FoldingSystem sys = FoldingSystem::parse("A-B");
    CHECK_THROWS_AS(kernels::expand_fold_serial(sys, FoldLetter::MoveA, 12, 100), cap_error);
    CHECK_THROWS_AS(kernels::expand_fold_omp(sys, FoldLetter::MoveA, 12, 100), cap_error);
}

TEST_CASE("closed-form offsets give the documented expansion") {
    const FoldingSystem sys = FoldingSystem::parse("A-B");
    const auto w = kernels::expand_fold_omp(sys, FoldLetter::MoveA, 2, kDefaultCap);
    CHECK(FoldWord(w).str() == "A-B-A+B");
}
