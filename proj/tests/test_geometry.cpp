#include <doctest.h>

#include "dragonbound/derive.hpp"
#include "dragonbound/geometry.hpp"
#include "test_support.hpp"

using namespace dragonbound;
using namespace testsupport;

namespace {

std::vector<GridPoint> pts(std::initializer_list<std::pair<int, int>> list) {
    std::vector<GridPoint> v;
    for (auto [x, y] : list) v.push_back({x, y});
    return v;
}

}  // namespace

TEST_CASE("render_fold") {
    const LatticePath p = render_fold(FoldWord::parse("A-B"));
    CHECK(p.vertices == pts({{0, 0}, {2, 0}, {2, 2}}));
    CHECK(p.final_heading == Heading::North);

    CHECK(render_fold(FoldWord::parse("A")).vertices == pts({{0, 0}, {2, 0}}));
    CHECK(render_fold(FoldWord::parse("A-B-A+B")).vertices ==
          pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 4}}));

    // '+' turns right
    CHECK(render_fold(FoldWord::parse("A+B")).vertices == pts({{0, 0}, {2, 0}, {2, -2}}));

    CHECK_THROWS_AS(render_fold(FoldWord::parse("A"), {1, 0}, Heading::East),
                    std::invalid_argument);
    CHECK_THROWS_AS(render_fold(FoldWord::parse("A"), {0, 0}, Heading::NorthEast),
                    std::invalid_argument);
}

TEST_CASE("render_boundary") {
    CHECK(render_boundary(DirWord::parse_finished("S"), {0, 0}, Heading::NorthEast).vertices ==
          pts({{0, 0}, {1, 1}, {2, 2}}));

    const LatticePath ll =
        render_boundary(DirWord::parse_finished("Ll"), {0, 0}, Heading::SouthEast);
    CHECK(ll.vertices == pts({{0, 0}, {1, -1}, {2, 0}, {3, 1}, {2, 2}}));

    // Reverse renders as a there-and-back pair with unchanged endpoints
    const LatticePath rvr =
        render_boundary(DirWord::parse_raw("RvR"), {0, 0}, Heading::NorthEast);
    const LatticePath s =
        render_boundary(DirWord::parse_raw("s"), {0, 0}, Heading::NorthEast);
    CHECK(rvr.end() == s.end());
    CHECK(rvr.end() == GridPoint{2, 2});
    CHECK(rvr.final_heading == s.final_heading);

    // parity has no geometric effect
    CHECK(render_boundary(DirWord::parse_finished("Ll"), {0, 0}, Heading::SouthEast)
              .vertices ==
          render_boundary(DirWord::parse_finished("LL"), {0, 0}, Heading::SouthEast).vertices);

    CHECK_THROWS_AS(render_boundary(DirWord::parse_raw("s"), {0, 0}, Heading::East),
                    std::invalid_argument);
}

TEST_CASE("boundary_start_headings") {
    CHECK(boundary_start_headings(Heading::East).left_curve == Heading::NorthEast);
    CHECK(boundary_start_headings(Heading::East).right_curve == Heading::SouthEast);
    CHECK(boundary_start_headings(Heading::North).left_curve == Heading::NorthWest);
    CHECK(boundary_start_headings(Heading::North).right_curve == Heading::NorthEast);

    // level-1 boundary words of the Heighway system end at the fold end point
    const BoundarySystem tau = derive_boundary_system(FoldingSystem::parse("A-B"));
    const auto h = boundary_start_headings(Heading::East);
    const LatticePath fold = render_fold(FoldWord::parse("A-B"));
    const LatticePath left = render_boundary(
        tau.production(Dir::TurnRight, Parity::Even), {0, 0}, h.left_curve);
    const LatticePath right = render_boundary(
        tau.production(Dir::TurnLeft, Parity::Even), {0, 0}, h.right_curve);
    CHECK(left.end() == fold.end());
    CHECK(right.end() == fold.end());
}

TEST_CASE("render_boundary is heading equivariant") {
    std::mt19937 rng(11);
    auto rot90 = [](GridPoint p) { return GridPoint{-p.y, p.x}; };
    for (int iter = 0; iter < 50; ++iter) {
        const DirWord w = random_raw_word(rng, 1 + rng() % 12);
        const Heading h = static_cast<Heading>((rng() % 4) * 2 + 1);
        const LatticePath a = render_boundary(w, {0, 0}, h);
        const LatticePath b = render_boundary(w, {0, 0}, turn_left(h));
        REQUIRE(a.vertices.size() == b.vertices.size());
        for (std::size_t i = 0; i < a.vertices.size(); ++i)
            CHECK(rot90(a.vertices[i]) == b.vertices[i]);
        CHECK(turn_left(a.final_heading) == b.final_heading);
    }
}

TEST_CASE("check_self_avoiding") {
    CHECK(check_self_avoiding(render_fold(FoldWord::parse("A"))).ok);

    const FoldingSystem heighway = FoldingSystem::parse("A-B");
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(check_self_avoiding(render_fold(expand_fold(heighway, FoldLetter::MoveA, n))).ok);

    // closing a square and repeating its first edge
    const AvoidanceReport reuse =
        check_self_avoiding(render_fold(FoldWord::parse("A+B+A+B+A")));
    CHECK(!reuse.ok);
    CHECK(reuse.index == 4);
    CHECK(reuse.reason.find("edge revisited") != std::string::npos);

    // a transversal crossing without edge reuse (not producible by folding
    // words, which always turn, so built directly)
    LatticePath cross;
    cross.start = {-2, 0};
    cross.initial_heading = Heading::East;
    cross.vertices = pts({{-2, 0}, {0, 0}, {2, 0}, {2, -2}, {0, -2}, {0, 0}, {0, 2}});
    cross.final_heading = Heading::North;
    const AvoidanceReport crossed = check_self_avoiding(cross);
    CHECK(!crossed.ok);
    CHECK(crossed.reason.find("crosses") != std::string::npos);

    // touching at a vertex with two corner pairs is allowed
    LatticePath touch;
    touch.start = {-2, 0};
    touch.initial_heading = Heading::East;
    touch.vertices = pts({{-2, 0}, {0, 0}, {0, 2}, {2, 2}, {2, 0}, {0, 0}, {0, -2}});
    touch.final_heading = Heading::South;
    CHECK(check_self_avoiding(touch).ok);
}

TEST_CASE("reduction preserves rendered endpoints") {
    for (const std::string& sigma : paper_sigmas()) {
        const FoldingSystem sys = FoldingSystem::parse(sigma);
        for (const DirWord& w : pipeline_raw_words(sys)) {
            const auto trace = reduce_trace_literal(w);
            REQUIRE(trace.has_value());
            const LatticePath original = render_boundary(w, {0, 0}, Heading::NorthEast);
            for (const DirWord& step : *trace) {
                const LatticePath p = render_boundary(step, {0, 0}, Heading::NorthEast);
                CHECK(p.vertices.front() == original.vertices.front());
                CHECK(p.end() == original.end());
                CHECK(p.final_heading == original.final_heading);
            }
        }
    }
}
