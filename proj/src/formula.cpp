#include "hvtomo/formula.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

namespace hvtomo {

namespace {

inline int rank_of(Corner c) { return static_cast<int>(c); }

inline char letter_of(Corner c) {
    switch (c) {
        case Corner::A: return 'A';
        case Corner::B: return 'B';
        case Corner::C: return 'C';
        default: return 'D';
    }
}

} // namespace

int corner_var_index(const CornerVar& v, int m, int n) {
    if (v.row < 1 || v.row > m || v.col < 1 || v.col > n) {
        throw std::invalid_argument("corner variable cell out of range");
    }
    return (rank_of(v.region) * m + (v.row - 1)) * n + (v.col - 1);
}

CornerVar corner_var_at(int index, int m, int n) {
    if (index < 0 || index >= 4 * m * n) {
        throw std::invalid_argument("corner variable index out of range");
    }
    CornerVar v;
    v.col = index % n + 1;
    index /= n;
    v.row = index % m + 1;
    v.region = static_cast<Corner>(index / m);
    return v;
}

ClauseSet build_formula(const Projections& p, int k, int l, DisMode mode) {
    validate_projections(p);
    const int m = p.m();
    const int n = p.n();
    if (k < 1 || k > m || l < 1 || l > m) {
        throw std::invalid_argument("anchor rows must lie in 1.." + std::to_string(m));
    }

    ClauseSet f(4 * m * n);
    f.reserve(static_cast<std::size_t>(22) * m * n + 2 * n + 8);

    auto in_range = [&](int i, int j) { return i >= 1 && i <= m && j >= 1 && j <= n; };
    auto lit = [&](Corner r, int i, int j, bool positive) {
        return Literal{corner_var_index({r, i, j}, m, n), positive};
    };
    // clauses with any off-grid cell are dropped entirely
    auto clause2 = [&](Corner r1, int i1, int j1, bool pos1,
                       Corner r2, int i2, int j2, bool pos2) {
        if (!in_range(i1, j1) || !in_range(i2, j2)) return;
        f.add_clause(lit(r1, i1, j1, pos1), lit(r2, i2, j2, pos2));
    };
    // X(i1,j1) => Y(i2,j2)
    auto imply = [&](Corner r1, int i1, int j1, Corner r2, int i2, int j2) {
        clause2(r1, i1, j1, false, r2, i2, j2, true);
    };
    // X(i1,j1) => !Y(i2,j2)
    auto exclude = [&](Corner r1, int i1, int j1, Corner r2, int i2, int j2) {
        clause2(r1, i1, j1, false, r2, i2, j2, false);
    };
    auto forbid = [&](Corner r, int i, int j) {
        if (!in_range(i, j)) return;
        f.add_unit(lit(r, i, j, false));
    };

    // corner closure: membership propagates toward each region's corner
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            imply(Corner::A, i, j, Corner::A, i - 1, j);
            imply(Corner::A, i, j, Corner::A, i, j - 1);
            imply(Corner::B, i, j, Corner::B, i - 1, j);
            imply(Corner::B, i, j, Corner::B, i, j + 1);
            imply(Corner::C, i, j, Corner::C, i + 1, j);
            imply(Corner::C, i, j, Corner::C, i, j - 1);
            imply(Corner::D, i, j, Corner::D, i + 1, j);
            imply(Corner::D, i, j, Corner::D, i, j + 1);
        }
    }

    // disjointness, one clause per unordered region pair
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            exclude(Corner::A, i, j, Corner::B, i, j);
            if (mode == DisMode::full) {
                exclude(Corner::A, i, j, Corner::C, i, j);
                exclude(Corner::A, i, j, Corner::D, i, j);
                exclude(Corner::B, i, j, Corner::C, i, j);
                exclude(Corner::B, i, j, Corner::D, i, j);
            }
            exclude(Corner::C, i, j, Corner::D, i, j);
        }
    }

    // connectivity: opposite corner regions may not touch diagonally
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            exclude(Corner::A, i, j, Corner::D, i + 1, j + 1);
            exclude(Corner::B, i, j, Corner::C, i + 1, j - 1);
        }
    }

    // anchors: cells (k,1) and (l,n) belong to the object
    forbid(Corner::A, k, 1);
    forbid(Corner::B, k, 1);
    forbid(Corner::C, k, 1);
    forbid(Corner::D, k, 1);
    forbid(Corner::A, l, n);
    forbid(Corner::B, l, n);
    forbid(Corner::C, l, n);
    forbid(Corner::D, l, n);

    // column-sum lower bounds: an upper region cell at (i,j) pushes the lower
    // regions at least c_j rows down, and the top c_j rows of a column can
    // never be in a lower region
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int cj = p.cols[j - 1];
            exclude(Corner::A, i, j, Corner::C, i + cj, j);
            exclude(Corner::A, i, j, Corner::D, i + cj, j);
            exclude(Corner::B, i, j, Corner::C, i + cj, j);
            exclude(Corner::B, i, j, Corner::D, i + cj, j);
        }
    }
    for (int j = 1; j <= n; ++j) {
        forbid(Corner::C, p.cols[j - 1], j);
        forbid(Corner::D, p.cols[j - 1], j);
    }

    // row-sum upper bounds: !X(i,j) => Y(i, j + r_i), by row band
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= std::min(k, l); ++i) {
            clause2(Corner::A, i, j, true, Corner::B, i, j + p.rows[i - 1], true);
        }
        for (int i = k; i <= l; ++i) {
            clause2(Corner::C, i, j, true, Corner::B, i, j + p.rows[i - 1], true);
        }
        for (int i = l; i <= k; ++i) {
            clause2(Corner::A, i, j, true, Corner::D, i, j + p.rows[i - 1], true);
        }
        for (int i = std::max(k, l); i <= m; ++i) {
            clause2(Corner::C, i, j, true, Corner::D, i, j + p.rows[i - 1], true);
        }
    }

    return f;
}

BinaryGrid extract_object(const Assignment& a, int m, int n) {
    if (a.values.size() != static_cast<std::size_t>(4 * m * n)) {
        throw std::invalid_argument("assignment size does not match 4*m*n");
    }
    BinaryGrid g(m, n);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            bool in_any_region = false;
            for (Corner r : {Corner::A, Corner::B, Corner::C, Corner::D}) {
                if (a.values[static_cast<std::size_t>(corner_var_index({r, i, j}, m, n))]) {
                    in_any_region = true;
                    break;
                }
            }
            g.set(i - 1, j - 1, !in_any_region);
        }
    }
    return g;
}

CornerAssignment corner_assignment_of(const Assignment& a, int m, int n) {
    if (a.values.size() != static_cast<std::size_t>(4 * m * n)) {
        throw std::invalid_argument("assignment size does not match 4*m*n");
    }
    CornerAssignment ca{BinaryGrid(m, n), BinaryGrid(m, n), BinaryGrid(m, n), BinaryGrid(m, n)};
    std::array<BinaryGrid*, 4> grids = {&ca.a, &ca.b, &ca.c, &ca.d};
    for (int rank = 0; rank < 4; ++rank) {
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= n; ++j) {
                const CornerVar v{static_cast<Corner>(rank), i, j};
                grids[static_cast<std::size_t>(rank)]->set(
                    i - 1, j - 1,
                    a.values[static_cast<std::size_t>(corner_var_index(v, m, n))]);
            }
        }
    }
    return ca;
}

Assignment assignment_of(const CornerAssignment& ca) {
    const int m = ca.a.height();
    const int n = ca.a.width();
    std::array<const BinaryGrid*, 4> grids = {&ca.a, &ca.b, &ca.c, &ca.d};
    for (const BinaryGrid* g : grids) {
        if (g->height() != m || g->width() != n) {
            throw std::invalid_argument("corner matrices disagree on dimensions");
        }
    }
    Assignment out;
    out.values.resize(static_cast<std::size_t>(4 * m * n));
    for (int rank = 0; rank < 4; ++rank) {
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= n; ++j) {
                const CornerVar v{static_cast<Corner>(rank), i, j};
                out.values[static_cast<std::size_t>(corner_var_index(v, m, n))] =
                    grids[static_cast<std::size_t>(rank)]->at(i - 1, j - 1);
            }
        }
    }
    return out;
}

CornerAssignment corner_decomposition(const BinaryGrid& g) {
    const int m = g.height();
    const int n = g.width();
    if (!is_hv_convex_polyomino(g)) {
        throw std::invalid_argument("corner decomposition needs an hv-convex polyomino");
    }

    // 0-based closed intervals per row and per column
    std::vector<int> row_lo(m, -1), row_hi(m, -1), col_lo(n, -1), col_hi(n, -1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!g.at(i, j)) continue;
            if (row_lo[i] < 0) row_lo[i] = j;
            row_hi[i] = j;
            if (col_lo[j] < 0) col_lo[j] = i;
            col_hi[j] = i;
        }
    }
    for (int i = 0; i < m; ++i) {
        if (row_lo[i] < 0) throw std::invalid_argument("row " + std::to_string(i + 1) + " is empty");
    }
    for (int j = 0; j < n; ++j) {
        if (col_lo[j] < 0) throw std::invalid_argument("column " + std::to_string(j + 1) + " is empty");
    }

    CornerAssignment ca{BinaryGrid(m, n), BinaryGrid(m, n), BinaryGrid(m, n), BinaryGrid(m, n)};
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (g.at(i, j)) continue;
            const bool left = j < row_lo[i];
            const bool right = j > row_hi[i];
            const bool above = i < col_lo[j];
            const bool below = i > col_hi[j];
            if (left == right || above == below) {
                throw std::invalid_argument("cell classification failed; grid is not hv-convex");
            }
            if (left) {
                (above ? ca.a : ca.c).set(i, j, true);
            } else {
                (above ? ca.b : ca.d).set(i, j, true);
            }
        }
    }
    return ca;
}

bool is_corner_closed(const BinaryGrid& region, Corner corner) {
    const int m = region.height();
    const int n = region.width();
    const bool toward_top = corner == Corner::A || corner == Corner::B;
    const bool toward_left = corner == Corner::A || corner == Corner::C;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!region.at(i, j)) continue;
            const int vi = toward_top ? i - 1 : i + 1;
            const int vj = toward_left ? j - 1 : j + 1;
            if (vi >= 0 && vi < m && !region.at(vi, j)) return false;
            if (vj >= 0 && vj < n && !region.at(i, vj)) return false;
        }
    }
    return true;
}

bool are_pairwise_disjoint(const CornerAssignment& ca) {
    const int m = ca.a.height();
    const int n = ca.a.width();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const int members = (ca.a.at(i, j) ? 1 : 0) + (ca.b.at(i, j) ? 1 : 0) +
                                (ca.c.at(i, j) ? 1 : 0) + (ca.d.at(i, j) ? 1 : 0);
            if (members > 1) return false;
        }
    }
    return true;
}

std::string corner_literal_name(Literal l, int m, int n) {
    const CornerVar v = corner_var_at(l.var, m, n);
    std::string out = l.positive ? "" : "!";
    out += letter_of(v.region);
    out += "[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
    return out;
}

void dump_clauses(const ClauseSet& f, int m, int n, std::ostream& out) {
    for (const Clause& cl : f.clauses()) {
        out << corner_literal_name(cl.first(), m, n);
        if (cl.size() == 2) {
            out << ' ' << corner_literal_name(cl.second(), m, n);
        }
        out << '\n';
    }
}

} // namespace hvtomo
