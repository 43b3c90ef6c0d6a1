#pragma once

#include "hvtomo/grid.hpp"
#include "hvtomo/reconstruction.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvtomo {

class NotCenteredError : public std::invalid_argument {
public:
    explicit NotCenteredError(const std::string& what) : std::invalid_argument(what) {}
};

// Smallest 1-based row index whose sum spans the full width, or 0 when none.
int full_row(const Projections& p);

// An hv-convex realization with a full row is captured by the left end of
// each row's interval: row i occupies columns [t_i, t_i + r_i - 1].
using LeftEnds = std::vector<int>; // 1-based column values, entry i-1 is row i

BinaryGrid grid_from_left_ends(const LeftEnds& t, const std::vector<int>& row_lengths, int width);

// A contiguous block of rows [p, q] containing the full row k, with every
// column outside the window [alpha, beta] filled to exactly its target sum.
// alpha > beta encodes an empty window (no column below target). Column sums
// and window bounds are 1-based; colsum[0] is unused.
struct PartialRealization {
    int p = 0;
    int q = 0;
    int k = 0;
    LeftEnds t; // rows p..q, t[0] is row p
    std::vector<int> colsum;
    int alpha = 1;
    int beta = 0;

    int left_end(int row) const { return t[static_cast<std::size_t>(row - p)]; }
    bool window_empty() const { return alpha > beta; }
};

// The single-row block for the full row k with t_k = 1.
// Throws std::invalid_argument unless r_k = n.
PartialRealization seed(const Projections& p, int k);

// The window lies inside both end rows' intervals.
bool is_balanced(const Projections& p, const PartialRealization& x);

// No column strictly inside the window exceeds its target. Meant to be
// queried for balanced blocks, where it reduces to q-p+1 <= min window sum.
bool is_valid(const Projections& p, const PartialRealization& x);

enum class ExtendSide { above, below };

// The zero-to-two ways of growing the block one row up or down: the new row
// starts at alpha or ends at beta. Candidates survive only if they are again
// partial realizations (left-end bounds, interval nesting at the seam, window
// placement, exact sums outside the new window). When the grown block spans
// all rows, survivors are exactly the full realizations. A balanced block
// that is not valid has no extensions.
std::vector<PartialRealization> extend(const Projections& p, const PartialRealization& x,
                                       ExtendSide side);

// Linear-time driver: grow outward from the full row, keeping at most two
// candidate blocks, committing to one whenever it is balanced and valid.
// Returns the left ends of a realization or nullopt. Runs in O(m + n).
// Throws NotCenteredError when no row sum equals n.
std::optional<LeftEnds> reconstruct_centered_compact(const Projections& p,
                                                     ReconstructionStats* stats = nullptr,
                                                     std::ostream* trace = nullptr);

// Same, materialized as a grid.
ReconstructionResult reconstruct_centered(const Projections& p, std::ostream* trace = nullptr);

} // namespace hvtomo
