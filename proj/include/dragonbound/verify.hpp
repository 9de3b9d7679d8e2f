#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dragonbound/geometry.hpp"
#include "dragonbound/words.hpp"

namespace dragonbound {

/// Outcome of checking one expansion level against the region oracle.
struct VerifyReport {
    unsigned level = 0;
    bool pass = false;
    std::uint64_t cells = 0;           // diamonds of the fold path
    std::uint64_t loop_count = 0;      // boundary loops found
    std::uint64_t segments = 0;        // outer loop length
    std::uint64_t left_segments = 0;   // rendered tau^n(R) word
    std::uint64_t right_segments = 0;  // rendered tau^n(L) word
    std::string failure;               // empty when pass
    std::optional<Segment> mismatch;   // first differing segment, when located
};

/// Ground-truth check at one level: the outer boundary of the diamond region
/// of sigma^n(A) must equal, segment for segment, the union of the rendered
/// tau^n(R) and tau^n(L) words, sharing the fold path's endpoints.
VerifyReport verify_boundary(const FoldingSystem& sys, const BoundarySystem& tau,
                             unsigned level, std::uint64_t cap = kDefaultCap);

struct SweepResult {
    std::vector<VerifyReport> levels;
    bool all_pass = true;
    unsigned last_level = 0;  // highest level actually run
    bool capped = false;      // true when the cap cut the sweep short
};

/// Highest level whose fold expansion stays within the letter cap.
unsigned max_feasible_level(const FoldingSystem& sys, unsigned max_level,
                            std::uint64_t cap = kDefaultCap);

/// Run verify_boundary for levels 0..max_level (trimmed to the cap).
/// Levels may execute concurrently; reports come back in level order.
SweepResult verify_sweep(const FoldingSystem& sys, const BoundarySystem& tau,
                         unsigned max_level, std::uint64_t cap = kDefaultCap,
                         bool parallel = true);

}  // namespace dragonbound
