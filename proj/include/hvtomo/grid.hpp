#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace hvtomo {

// Count type wide enough to hold m*n for the largest supported grids.
using CellCount = std::int64_t;

// Row and column sums (r_1..r_m, c_1..c_n) of an m x n binary image.
// Entries are expected to be positive with r_i <= n and c_j <= m;
// validate_projections() enforces those bounds. Whether the two sides agree
// (sum r == sum c) is deliberately not an invariant of the type — callers
// check balanced() where it matters.
struct Projections {
    std::vector<int> rows;
    std::vector<int> cols;

    int m() const { return static_cast<int>(rows.size()); }
    int n() const { return static_cast<int>(cols.size()); }
    CellCount row_total() const;
    CellCount col_total() const;
    bool balanced() const { return row_total() == col_total(); }

    bool operator==(const Projections&) const = default;
};

Projections transposed(const Projections& p);

// Throws std::invalid_argument on an empty dimension, a nonpositive entry,
// r_i > n or c_j > m. Messages use 1-based row/column numbers.
void validate_projections(const Projections& p);

// Dense m x n boolean image. Cells are addressed 0-based in code;
// diagnostics and file formats speak 1-based.
class BinaryGrid {
public:
    BinaryGrid(int height, int width);

    int height() const { return m_; }
    int width() const { return n_; }

    bool at(int i, int j) const { return cells_[index(i, j)] != 0; }
    void set(int i, int j, bool value) { cells_[index(i, j)] = value ? 1 : 0; }

    CellCount cell_count() const;
    BinaryGrid transposed() const;

    bool operator==(const BinaryGrid&) const = default;

private:
    std::size_t index(int i, int j) const {
        assert(i >= 0 && i < m_ && j >= 0 && j < n_);
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int m_;
    int n_;
    std::vector<std::uint8_t> cells_;
};

std::vector<int> row_sums(const BinaryGrid& g);
std::vector<int> col_sums(const BinaryGrid& g);
Projections projections_of(const BinaryGrid& g);

// True when every row's filled cells form one contiguous run. Empty rows
// count as convex; nonemptiness is enforced only against positive
// projections.
bool is_h_convex(const BinaryGrid& g);
bool is_v_convex(const BinaryGrid& g);

// 4-adjacency connectivity of the filled cells; false for an empty grid.
bool is_connected(const BinaryGrid& g);

bool is_hv_convex_polyomino(const BinaryGrid& g);

// Throws std::invalid_argument when the grid dimensions do not match (m, n).
bool is_realization(const BinaryGrid& g, const Projections& p);

} // namespace hvtomo
