#pragma once

#include "hvtomo/grid.hpp"
#include "hvtomo/reconstruction.hpp"

#include <utility>
#include <vector>

namespace hvtomo {

enum class PlanMode { full, pruned };

// Ordered list of anchor pairs (k, l) to try, 1-based. The full plan is all
// m^2 pairs in row-major order (k outer). The pruned plan keeps k in the
// multiples of c_1 plus m, l in the multiples of c_n plus m, and filters by
// min(k,l) <= m1 and max(k,l) >= m2, where m1 ends the longest nondecreasing
// prefix of r and m2 starts the longest nonincreasing suffix.
struct AnchorPlan {
    std::vector<std::pair<int, int>> anchors;
    PlanMode mode = PlanMode::full;
};

AnchorPlan full_anchor_plan(int m);
AnchorPlan pruned_anchor_plan(const Projections& p);

// Longest monotone prefix/suffix bounds used by the pruned plan.
std::pair<int, int> monotone_bounds(const std::vector<int>& r);

struct HvOptions {
    bool parallel = false;
};

// Try the anchors in plan order, solving the corner-region formula for each,
// and return the object extracted from the first satisfiable one. Unbalanced
// sums fail immediately. When m > n the instance is solved transposed (the
// plan is rebuilt for the transposed instance with the same mode) and the
// answer transposed back. Parallel mode still returns the earliest
// plan-order success. Throws std::invalid_argument on malformed projections.
ReconstructionResult reconstruct_hv(const Projections& p, const AnchorPlan& plan,
                                    const HvOptions& options = {});
ReconstructionResult reconstruct_hv(const Projections& p, PlanMode mode = PlanMode::full,
                                    const HvOptions& options = {});

} // namespace hvtomo
