#include "hvtomo/grid.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hvtomo {

CellCount Projections::row_total() const {
    return std::accumulate(rows.begin(), rows.end(), CellCount{0});
}

CellCount Projections::col_total() const {
    return std::accumulate(cols.begin(), cols.end(), CellCount{0});
}

Projections transposed(const Projections& p) {
    return Projections{p.cols, p.rows};
}

void validate_projections(const Projections& p) {
    const int m = p.m();
    const int n = p.n();
    if (m < 1 || n < 1) {
        throw std::invalid_argument("projections need at least one row and one column");
    }
    for (int i = 0; i < m; ++i) {
        if (p.rows[i] < 1 || p.rows[i] > n) {
            throw std::invalid_argument("row sum " + std::to_string(i + 1) + " is " +
                                        std::to_string(p.rows[i]) + ", expected 1.." +
                                        std::to_string(n));
        }
    }
    for (int j = 0; j < n; ++j) {
        if (p.cols[j] < 1 || p.cols[j] > m) {
            throw std::invalid_argument("column sum " + std::to_string(j + 1) + " is " +
                                        std::to_string(p.cols[j]) + ", expected 1.." +
                                        std::to_string(m));
        }
    }
}

BinaryGrid::BinaryGrid(int height, int width) : m_(height), n_(width) {
    if (height < 1 || width < 1) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    cells_.assign(static_cast<std::size_t>(height) * static_cast<std::size_t>(width), 0);
}

CellCount BinaryGrid::cell_count() const {
    CellCount total = 0;
    for (std::uint8_t c : cells_) total += c;
    return total;
}

BinaryGrid BinaryGrid::transposed() const {
    BinaryGrid out(n_, m_);
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < n_; ++j) {
            out.set(j, i, at(i, j));
        }
    }
    return out;
}

std::vector<int> row_sums(const BinaryGrid& g) {
    std::vector<int> sums(g.height(), 0);
    for (int i = 0; i < g.height(); ++i) {
        for (int j = 0; j < g.width(); ++j) {
            sums[i] += g.at(i, j) ? 1 : 0;
        }
    }
    return sums;
}

std::vector<int> col_sums(const BinaryGrid& g) {
    std::vector<int> sums(g.width(), 0);
    for (int i = 0; i < g.height(); ++i) {
        for (int j = 0; j < g.width(); ++j) {
            sums[j] += g.at(i, j) ? 1 : 0;
        }
    }
    return sums;
}

Projections projections_of(const BinaryGrid& g) {
    return Projections{row_sums(g), col_sums(g)};
}

namespace {

bool rows_contiguous(const BinaryGrid& g, bool transposed_axes) {
    const int rows = transposed_axes ? g.width() : g.height();
    const int cols = transposed_axes ? g.height() : g.width();
    for (int i = 0; i < rows; ++i) {
        int first = -1;
        int last = -1;
        int count = 0;
        for (int j = 0; j < cols; ++j) {
            const bool cell = transposed_axes ? g.at(j, i) : g.at(i, j);
            if (cell) {
                if (first < 0) first = j;
                last = j;
                ++count;
            }
        }
        if (count > 0 && last - first + 1 != count) return false;
    }
    return true;
}

} // namespace

bool is_h_convex(const BinaryGrid& g) { return rows_contiguous(g, false); }

bool is_v_convex(const BinaryGrid& g) { return rows_contiguous(g, true); }

bool is_connected(const BinaryGrid& g) {
    const int m = g.height();
    const int n = g.width();
    int start_i = -1;
    int start_j = -1;
    CellCount total = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (g.at(i, j)) {
                if (start_i < 0) {
                    start_i = i;
                    start_j = j;
                }
                ++total;
            }
        }
    }
    if (total == 0) return false;

    std::vector<std::uint8_t> seen(static_cast<std::size_t>(m) * n, 0);
    std::vector<std::pair<int, int>> stack;
    stack.emplace_back(start_i, start_j);
    seen[static_cast<std::size_t>(start_i) * n + start_j] = 1;
    CellCount reached = 0;
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        ++reached;
        constexpr int di[4] = {-1, 1, 0, 0};
        constexpr int dj[4] = {0, 0, -1, 1};
        for (int d = 0; d < 4; ++d) {
            const int ni = i + di[d];
            const int nj = j + dj[d];
            if (ni < 0 || ni >= m || nj < 0 || nj >= n) continue;
            auto idx = static_cast<std::size_t>(ni) * n + nj;
            if (!seen[idx] && g.at(ni, nj)) {
                seen[idx] = 1;
                stack.emplace_back(ni, nj);
            }
        }
    }
    return reached == total;
}

bool is_hv_convex_polyomino(const BinaryGrid& g) {
    return is_h_convex(g) && is_v_convex(g) && is_connected(g);
}

bool is_realization(const BinaryGrid& g, const Projections& p) {
    if (g.height() != p.m() || g.width() != p.n()) {
        throw std::invalid_argument("grid is " + std::to_string(g.height()) + "x" +
                                    std::to_string(g.width()) + " but projections expect " +
                                    std::to_string(p.m()) + "x" + std::to_string(p.n()));
    }
    return row_sums(g) == p.rows && col_sums(g) == p.cols;
}

} // namespace hvtomo
