#pragma once

#include "hvtomo/grid.hpp"

#include <optional>
#include <utility>

namespace hvtomo {

struct ReconstructionStats {
    int formulas_built = 0;
    long long clauses_generated = 0;
    int anchors_tried = 0;
    long long steps = 0; // loop iterations of the incremental driver
    double solve_seconds = 0.0;
    bool transposed = false;
};

struct ReconstructionResult {
    std::optional<BinaryGrid> grid;
    std::optional<std::pair<int, int>> anchor; // 1-based (k, l) when known
    ReconstructionStats stats;

    bool success() const { return grid.has_value(); }
};

} // namespace hvtomo
