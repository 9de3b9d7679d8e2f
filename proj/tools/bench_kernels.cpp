// Times the OpenMP kernels against their serial reference twins and checks
// that both produce identical results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "dragonbound/catalog.hpp"
#include "dragonbound/kernels.hpp"
#include "dragonbound/region.hpp"

using namespace dragonbound;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

template <typename F>
double time_best(F&& fn, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

void report(const char* name, double serial_ms, double omp_ms, bool equal) {
    std::printf("%-18s serial %9.3f ms   omp %9.3f ms   speedup %5.2fx   equal %s\n", name,
                serial_ms, omp_ms, serial_ms / omp_ms, equal ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    std::string sigma = "A-B";
    unsigned level = 18;
    int reps = 5;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--sigma" && i + 1 < argc) sigma = argv[++i];
        else if (arg == "--level" && i + 1 < argc) level = std::stoul(argv[++i]);
        else if (arg == "--reps" && i + 1 < argc) reps = std::stoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: bench_kernels [--sigma word] [--level n] [--reps r]\n");
            return 2;
        }
    }

    const FoldingSystem sys = FoldingSystem::parse(sigma);
    const std::uint64_t cap = fold_length_at(sys, level) + 1;
    std::printf("sigma(A)=%s  level=%u  fold letters=%llu  openmp=%s\n", sigma.c_str(), level,
                static_cast<unsigned long long>(fold_length_at(sys, level)),
                kernels::openmp_enabled() ? "on" : "off");

    std::vector<FoldLetter> word_s, word_p;
    const double t_exp_s = time_best(
        [&] { word_s = kernels::expand_fold_serial(sys, FoldLetter::MoveA, level, cap); },
        reps);
    const double t_exp_p = time_best(
        [&] { word_p = kernels::expand_fold_omp(sys, FoldLetter::MoveA, level, cap); }, reps);
    report("expand_fold", t_exp_s, t_exp_p, word_s == word_p);

    kernels::FoldTrace trace_s, trace_p;
    const double t_ren_s = time_best(
        [&] { trace_s = kernels::render_fold_serial(word_s, {0, 0}, Heading::East); }, reps);
    const double t_ren_p = time_best(
        [&] { trace_p = kernels::render_fold_omp(word_s, {0, 0}, Heading::East); }, reps);
    report("render_fold", t_ren_s, t_ren_p,
           trace_s.vertices == trace_p.vertices &&
               trace_s.final_heading == trace_p.final_heading);

    std::vector<Cell> cells_s, cells_p;
    const double t_cel_s =
        time_best([&] { cells_s = kernels::edge_cells_serial(trace_s.vertices); }, reps);
    const double t_cel_p =
        time_best([&] { cells_p = kernels::edge_cells_omp(trace_s.vertices); }, reps);
    report("edge_cells", t_cel_s, t_cel_p, cells_s == cells_p);

    std::sort(cells_s.begin(), cells_s.end());
    const DiamondRegion region{cells_s};
    std::vector<kernels::RotEdge> edges_s, edges_p;
    const double t_bnd_s =
        time_best([&] { edges_s = kernels::boundary_edges_serial(region); }, reps);
    const double t_bnd_p =
        time_best([&] { edges_p = kernels::boundary_edges_omp(region); }, reps);
    std::sort(edges_s.begin(), edges_s.end());
    std::sort(edges_p.begin(), edges_p.end());
    report("boundary_edges", t_bnd_s, t_bnd_p, edges_s == edges_p);

    return 0;
}
