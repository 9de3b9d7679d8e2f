#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "dragonbound/words.hpp"

namespace dragonbound {

/// A named folding system, optionally with its expected boundary system.
/// Catalog line: name <tab> sigmaA [<tab> L=..,R=..,l=..,r=..,S=..,s=..]
struct SystemRecord {
    std::string name;
    FoldingSystem system;
    std::optional<BoundarySystem> expected;
};

/// The bundled example curves with their known boundary systems.
const std::vector<SystemRecord>& bundled_catalog();

std::vector<SystemRecord> parse_catalog(std::istream& in);
std::string catalog_line(const SystemRecord& rec);

}  // namespace dragonbound
