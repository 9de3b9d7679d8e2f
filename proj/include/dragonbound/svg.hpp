#pragma once

#include <cstdint>
#include <string>

#include "dragonbound/words.hpp"

namespace dragonbound {

struct SvgOptions {
    int scale = 10;              // pixels per doubled-coordinate unit
    bool with_boundary = false;  // add the two boundary polylines
};

/// SVG document with the level-n fold polyline (black) and, when requested,
/// the left boundary (red) and right boundary (blue). Deterministic for
/// fixed inputs and options.
std::string render_svg(const FoldingSystem& sys, unsigned level, const SvgOptions& opts,
                       std::uint64_t cap = kDefaultCap);

}  // namespace dragonbound
