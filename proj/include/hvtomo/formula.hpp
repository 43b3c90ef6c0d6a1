#pragma once

#include "hvtomo/grid.hpp"
#include "hvtomo/twosat.hpp"

#include <iosfwd>
#include <string>

namespace hvtomo {

// The complement of an hv-convex polyomino splits into four regions, each
// closed toward one grid corner: A upper-left, B upper-right, C lower-left,
// D lower-right.
enum class Corner { A, B, C, D };

struct CornerVar {
    Corner region = Corner::A;
    int row = 1; // 1-based
    int col = 1; // 1-based
    bool operator==(const CornerVar&) const = default;
};

// Flat variable layout: ((region_rank*m + (row-1))*n + (col-1)) with ranks
// A=0, B=1, C=2, D=3. Fixed so dumps and golden tests stay stable.
int corner_var_index(const CornerVar& v, int m, int n);
CornerVar corner_var_at(int index, int m, int n);

// The disjointness family can emit all six region pairs per cell, or only
// A/B and C/D (the remaining pairs follow from the column-sum clauses).
enum class DisMode { full, reduced };

// The satisfiability formula for "some hv-convex polyomino realization
// touches the left border at row k and the right border at row l".
// Always over exactly 4*m*n variables. Any clause mentioning a cell outside
// the grid is dropped (such literals count as already true).
// Throws std::invalid_argument on malformed projections or k, l out of [1,m].
ClauseSet build_formula(const Projections& p, int k, int l, DisMode mode = DisMode::full);

// Cell (i,j) is in the object iff all four region variables there are false.
BinaryGrid extract_object(const Assignment& a, int m, int n);

struct CornerAssignment {
    BinaryGrid a;
    BinaryGrid b;
    BinaryGrid c;
    BinaryGrid d;
};

CornerAssignment corner_assignment_of(const Assignment& a, int m, int n);
Assignment assignment_of(const CornerAssignment& ca);

// The natural corner split of the complement of an hv-convex polyomino whose
// rows and columns are all nonempty: an empty cell left of its row interval
// goes to A or C, right of it to B or D, the upper/lower choice decided by
// the occupied interval of its column. Throws std::invalid_argument when the
// grid is not of that shape.
CornerAssignment corner_decomposition(const BinaryGrid& g);

// Membership propagates toward the region's corner.
bool is_corner_closed(const BinaryGrid& region, Corner corner);
bool are_pairwise_disjoint(const CornerAssignment& ca);

// "A[2,3]" / "!D[1,4]"
std::string corner_literal_name(Literal l, int m, int n);

// One clause per line, literals space-separated, named as above.
void dump_clauses(const ClauseSet& f, int m, int n, std::ostream& out);

} // namespace hvtomo
