#include "hvtomo/centered.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <ostream>
#include <stdexcept>

namespace hvtomo {

int full_row(const Projections& p) {
    for (int i = 1; i <= p.m(); ++i) {
        if (p.rows[static_cast<std::size_t>(i - 1)] == p.n()) return i;
    }
    return 0;
}

BinaryGrid grid_from_left_ends(const LeftEnds& t, const std::vector<int>& row_lengths, int width) {
    if (t.size() != row_lengths.size() || t.empty()) {
        throw std::invalid_argument("left ends and row lengths must have equal, positive size");
    }
    BinaryGrid g(static_cast<int>(t.size()), width);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const int lo = t[i];
        const int hi = t[i] + row_lengths[i] - 1;
        if (lo < 1 || hi > width) {
            throw std::invalid_argument("row " + std::to_string(i + 1) + " does not fit the grid");
        }
        for (int j = lo; j <= hi; ++j) {
            g.set(static_cast<int>(i), j - 1, true);
        }
    }
    return g;
}

namespace {

void recompute_window(const Projections& proj, PartialRealization& x) {
    const int n = proj.n();
    x.alpha = 1;
    while (x.alpha <= n && x.colsum[static_cast<std::size_t>(x.alpha)] >=
                               proj.cols[static_cast<std::size_t>(x.alpha - 1)]) {
        ++x.alpha;
    }
    x.beta = n;
    while (x.beta >= 1 && x.colsum[static_cast<std::size_t>(x.beta)] >=
                              proj.cols[static_cast<std::size_t>(x.beta - 1)]) {
        --x.beta;
    }
}

} // namespace

PartialRealization seed(const Projections& proj, int k) {
    validate_projections(proj);
    const int m = proj.m();
    const int n = proj.n();
    if (k < 1 || k > m) throw std::invalid_argument("row index out of range");
    if (proj.rows[static_cast<std::size_t>(k - 1)] != n) {
        throw std::invalid_argument("row " + std::to_string(k) + " does not span the full width");
    }
    PartialRealization x;
    x.p = x.q = x.k = k;
    x.t = {1};
    x.colsum.assign(static_cast<std::size_t>(n) + 1, 1);
    x.colsum[0] = 0;
    recompute_window(proj, x);
    return x;
}

bool is_balanced(const Projections& proj, const PartialRealization& x) {
    if (x.window_empty()) return true;
    const int tp = x.left_end(x.p);
    const int tq = x.left_end(x.q);
    const int rp = proj.rows[static_cast<std::size_t>(x.p - 1)];
    const int rq = proj.rows[static_cast<std::size_t>(x.q - 1)];
    return std::max(tp, tq) <= x.alpha && x.beta < std::min(tp + rp, tq + rq);
}

bool is_valid(const Projections& proj, const PartialRealization& x) {
    for (int j = x.alpha + 1; j <= x.beta - 1; ++j) {
        if (x.colsum[static_cast<std::size_t>(j)] > proj.cols[static_cast<std::size_t>(j - 1)]) {
            return false;
        }
    }
    return true;
}

std::vector<PartialRealization> extend(const Projections& proj, const PartialRealization& x,
                                       ExtendSide side) {
    const int m = proj.m();
    const int n = proj.n();
    const bool above = side == ExtendSide::above;
    if (above && x.p <= 1) throw std::invalid_argument("no row above the block");
    if (!above && x.q >= m) throw std::invalid_argument("no row below the block");

    std::vector<PartialRealization> out;
    if (x.window_empty()) return out; // any further row would overfill a finished column
    if (is_balanced(proj, x) && !is_valid(proj, x)) return out;

    const int row = above ? x.p - 1 : x.q + 1;
    const int len = proj.rows[static_cast<std::size_t>(row - 1)];
    std::array<int, 2> candidates{x.alpha, x.beta - len + 1};
    const int candidate_count = candidates[0] == candidates[1] ? 1 : 2;

    for (int ci = 0; ci < candidate_count; ++ci) {
        const int v = candidates[static_cast<std::size_t>(ci)];
        if (v < 1 || v > n - len + 1) continue;
        // the new interval must nest inside its neighbor's
        const int nb = above ? x.p : x.q;
        const int nb_t = x.left_end(nb);
        const int nb_len = proj.rows[static_cast<std::size_t>(nb - 1)];
        if (v < nb_t || v + len > nb_t + nb_len) continue;

        PartialRealization y;
        y.k = x.k;
        y.p = above ? x.p - 1 : x.p;
        y.q = above ? x.q : x.q + 1;
        y.t = x.t;
        if (above) {
            y.t.insert(y.t.begin(), v);
        } else {
            y.t.push_back(v);
        }
        y.colsum = x.colsum;
        for (int j = v; j < v + len; ++j) ++y.colsum[static_cast<std::size_t>(j)];
        recompute_window(proj, y);

        if (y.p == 1 && y.q == m) {
            bool exact = true;
            for (int j = 1; j <= n && exact; ++j) {
                exact = y.colsum[static_cast<std::size_t>(j)] ==
                        proj.cols[static_cast<std::size_t>(j - 1)];
            }
            if (exact) out.push_back(std::move(y));
            continue;
        }

        if (y.window_empty()) continue; // remaining rows could no longer be placed
        const int tp2 = y.left_end(y.p);
        const int tq2 = y.left_end(y.q);
        const int rp2 = proj.rows[static_cast<std::size_t>(y.p - 1)];
        const int rq2 = proj.rows[static_cast<std::size_t>(y.q - 1)];
        if (std::min(tp2, tq2) > y.alpha) continue;
        if (y.beta >= std::max(tp2 + rp2, tq2 + rq2)) continue;
        bool exact_outside = true;
        for (int j = 1; j <= n && exact_outside; ++j) {
            if (j >= y.alpha && j <= y.beta) continue;
            exact_outside = y.colsum[static_cast<std::size_t>(j)] ==
                            proj.cols[static_cast<std::size_t>(j - 1)];
        }
        if (!exact_outside) continue;
        out.push_back(std::move(y));
    }
    return out;
}

namespace {

// Committed-window columns threaded in ascending target order. Deletion is
// O(1) by column index; the head walk skips columns outside a caller's
// window without removing them (a sibling block may still need them).
class ColumnList {
public:
    void build(const std::vector<int>& target, int lo, int hi, int max_target) {
        const int n = static_cast<int>(target.size()) - 1;
        next_.assign(static_cast<std::size_t>(n) + 1, 0);
        prev_.assign(static_cast<std::size_t>(n) + 1, 0);
        present_.assign(static_cast<std::size_t>(n) + 1, 0);
        head_ = 0;
        if (lo > hi) return;
        std::vector<std::vector<int>> bucket(static_cast<std::size_t>(max_target) + 1);
        for (int j = lo; j <= hi; ++j) {
            bucket[static_cast<std::size_t>(target[static_cast<std::size_t>(j)])].push_back(j);
        }
        int tail = 0;
        for (const auto& b : bucket) {
            for (int j : b) {
                if (tail == 0) {
                    head_ = j;
                } else {
                    next_[static_cast<std::size_t>(tail)] = j;
                }
                prev_[static_cast<std::size_t>(j)] = tail;
                present_[static_cast<std::size_t>(j)] = 1;
                tail = j;
            }
        }
        if (tail != 0) next_[static_cast<std::size_t>(tail)] = 0;
    }

    void remove(int j) {
        if (!present_[static_cast<std::size_t>(j)]) return;
        present_[static_cast<std::size_t>(j)] = 0;
        const int a = prev_[static_cast<std::size_t>(j)];
        const int b = next_[static_cast<std::size_t>(j)];
        if (a) {
            next_[static_cast<std::size_t>(a)] = b;
        } else {
            head_ = b;
        }
        if (b) prev_[static_cast<std::size_t>(b)] = a;
    }

    int min_in(int lo, int hi) const {
        int j = head_;
        while (j != 0 && (j < lo || j > hi)) j = next_[static_cast<std::size_t>(j)];
        return j;
    }

private:
    std::vector<int> next_;
    std::vector<int> prev_;
    std::vector<std::uint8_t> present_;
    int head_ = 0;
};

// One candidate block during the outward growth. Only the rows added since
// the last committed block are stored here; column cover counts for the
// rows above k (resp. below k) are implicit inside the current end row's
// interval, where every stored row overlaps, and explicit in up_sum/down_sum
// on the rest of the window.
struct Lineage {
    bool alive = false;
    int tp = 1, tq = 1; // left ends of the block's top and bottom rows
    int lo = 1, hi = 0; // window of columns still below target
    std::vector<int> up_rows;
    std::vector<int> down_rows;
    std::vector<int> up_sum;
    std::vector<int> down_sum;
};

struct Probe {
    bool ok = false;
    bool complete = false; // grown block spans all rows and meets every target
    int lo = 0, hi = 0;
};

struct Engine {
    const int m;
    const int n;
    std::vector<int> r; // 1-based row sums
    std::vector<int> c; // 1-based column targets
    std::ostream* trace;

    int k = 0;
    std::vector<int> t;         // committed left ends
    int cp = 0, cq = 0;         // committed row range
    int cw_lo = 1, cw_hi = 0;   // committed window
    ColumnList list;
    std::array<Lineage, 2> slot;
    int p = 0, q = 0;
    long long steps = 0;

    Engine(const Projections& proj, std::ostream* tr)
        : m(proj.m()), n(proj.n()), r(static_cast<std::size_t>(m) + 1),
          c(static_cast<std::size_t>(n) + 1), trace(tr), t(static_cast<std::size_t>(m) + 1, 0) {
        for (int i = 1; i <= m; ++i) r[static_cast<std::size_t>(i)] = proj.rows[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= n; ++j) c[static_cast<std::size_t>(j)] = proj.cols[static_cast<std::size_t>(j - 1)];
        for (Lineage& L : slot) {
            L.up_sum.assign(static_cast<std::size_t>(n) + 2, 0);
            L.down_sum.assign(static_cast<std::size_t>(n) + 2, 0);
        }
    }

    int cover_above(const Lineage& L, int j) const {
        if (p == k) return 0;
        if (j >= L.tp && j < L.tp + r[static_cast<std::size_t>(p)]) return k - p;
        return L.up_sum[static_cast<std::size_t>(j)];
    }

    int cover_below(const Lineage& L, int j) const {
        if (q == k) return 0;
        if (j >= L.tq && j < L.tq + r[static_cast<std::size_t>(q)]) return q - k;
        return L.down_sum[static_cast<std::size_t>(j)];
    }

    int colsum(const Lineage& L, int j) const { return cover_above(L, j) + 1 + cover_below(L, j); }

    bool balanced(const Lineage& L) const {
        if (L.lo > L.hi) return true;
        return std::max(L.tp, L.tq) <= L.lo &&
               L.hi < std::min(L.tp + r[static_cast<std::size_t>(p)],
                               L.tq + r[static_cast<std::size_t>(q)]);
    }

    bool valid_balanced(const Lineage& L) const {
        if (L.lo > L.hi) return true;
        const int j = list.min_in(L.lo, L.hi);
        if (j == 0) throw std::logic_error("active-column list lost a window column");
        return q - p + 1 <= c[static_cast<std::size_t>(j)];
    }

    Probe probe(const Lineage& L, bool above, int v, int np, int nq) const {
        Probe res;
        const int len = above ? r[static_cast<std::size_t>(np)] : r[static_cast<std::size_t>(nq)];
        if (L.lo > L.hi) return res;
        // a row poking outside the window would overfill an already-finished column
        if (v < L.lo || v + len - 1 > L.hi) return res;
        // interval nesting at the seam
        if (above) {
            if (v < L.tp || v + len > L.tp + r[static_cast<std::size_t>(p)]) return res;
        } else {
            if (v < L.tq || v + len > L.tq + r[static_cast<std::size_t>(q)]) return res;
        }
        assert(v >= 1 && v + len - 1 <= n);

        auto sum2 = [&](int j) { return colsum(L, j) + (j >= v && j < v + len ? 1 : 0); };
        int a = L.lo;
        int b = L.hi;
        // columns leaving the window must land exactly on their target
        while (a <= b) {
            const int s = sum2(a);
            if (s < c[static_cast<std::size_t>(a)]) break;
            if (s > c[static_cast<std::size_t>(a)]) return res;
            ++a;
        }
        while (b >= a) {
            const int s = sum2(b);
            if (s < c[static_cast<std::size_t>(b)]) break;
            if (s > c[static_cast<std::size_t>(b)]) return res;
            --b;
        }

        const bool full_span = np == 1 && nq == m;
        if (a > b) {
            if (!full_span) return res;
            res.ok = true;
            res.complete = true;
            res.lo = a;
            res.hi = b;
            return res;
        }
        if (full_span) return res; // some column still below target

        const int t_top = above ? v : L.tp;
        const int t_bot = above ? L.tq : v;
        if (std::min(t_top, t_bot) > a) return res;
        if (b >= std::max(t_top + r[static_cast<std::size_t>(np)],
                          t_bot + r[static_cast<std::size_t>(nq)])) {
            return res;
        }
        res.ok = true;
        res.lo = a;
        res.hi = b;
        return res;
    }

    static void fill_range(std::vector<int>& arr, int from, int to, int value) {
        for (int j = from; j <= to; ++j) arr[static_cast<std::size_t>(j)] = value;
    }

    void apply(Lineage& L, bool above, int v, const Probe& pr, int np, int nq) {
        if (above) {
            const int len = r[static_cast<std::size_t>(np)];
            const int fill = k - p; // rows p..k-1 all cover the old top interval
            fill_range(L.up_sum, std::max(L.tp, L.lo), std::min(v - 1, L.hi), fill);
            fill_range(L.up_sum, std::max(v + len, L.lo),
                       std::min(L.tp + r[static_cast<std::size_t>(p)] - 1, L.hi), fill);
            L.tp = v;
            L.up_rows.push_back(v);
        } else {
            const int len = r[static_cast<std::size_t>(nq)];
            const int fill = q - k;
            fill_range(L.down_sum, std::max(L.tq, L.lo), std::min(v - 1, L.hi), fill);
            fill_range(L.down_sum, std::max(v + len, L.lo),
                       std::min(L.tq + r[static_cast<std::size_t>(q)] - 1, L.hi), fill);
            L.tq = v;
            L.down_rows.push_back(v);
        }
        L.lo = pr.lo;
        L.hi = pr.hi;
    }

    void fold(Lineage& L) {
        for (std::size_t s = 0; s < L.up_rows.size(); ++s) {
            t[static_cast<std::size_t>(cp - 1) - s] = L.up_rows[s];
        }
        cp -= static_cast<int>(L.up_rows.size());
        for (std::size_t s = 0; s < L.down_rows.size(); ++s) {
            t[static_cast<std::size_t>(cq + 1) + s] = L.down_rows[s];
        }
        cq += static_cast<int>(L.down_rows.size());
        L.up_rows.clear();
        L.down_rows.clear();
    }

    void commit(Lineage& L) {
        fold(L);
        assert(cp == p && cq == q);
        for (int j = cw_lo; j < L.lo; ++j) list.remove(j);
        for (int j = L.hi + 1; j <= cw_hi; ++j) list.remove(j);
        cw_lo = L.lo;
        cw_hi = L.hi;
    }

    LeftEnds materialize(int id) {
        if (id >= 0) fold(slot[static_cast<std::size_t>(id)]);
        assert(cp == 1 && cq == m);
        LeftEnds out(static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i) out[static_cast<std::size_t>(i - 1)] = t[static_cast<std::size_t>(i)];
        return out;
    }

    void trace_line(const std::vector<int>& order) {
        *trace << "p=" << p << " q=" << q << " fronts=" << order.size();
        for (int id : order) {
            const Lineage& L = slot[static_cast<std::size_t>(id)];
            const bool bal = balanced(L);
            *trace << " | t_top=" << L.tp << " t_bot=" << L.tq << " win=[" << L.lo << ","
                   << L.hi << "] bal=" << (bal ? 'Y' : 'N') << " val=";
            if (bal) {
                *trace << (valid_balanced(L) ? 'Y' : 'N');
            } else {
                *trace << '-';
            }
        }
        *trace << "\n";
    }

    std::optional<LeftEnds> run(int full_k) {
        k = full_k;
        t[static_cast<std::size_t>(k)] = 1;
        cp = cq = k;
        p = q = k;

        // the full row puts one cell in every column
        cw_lo = 1;
        while (cw_lo <= n && c[static_cast<std::size_t>(cw_lo)] <= 1) ++cw_lo;
        cw_hi = n;
        while (cw_hi >= 1 && c[static_cast<std::size_t>(cw_hi)] <= 1) --cw_hi;

        if (m == 1) {
            if (cw_lo > cw_hi) return materialize(-1);
            return std::nullopt;
        }
        if (cw_lo > cw_hi) return std::nullopt; // every later row would overfill

        list.build(c, cw_lo, cw_hi, m);
        slot[0].alive = true;
        slot[0].tp = slot[0].tq = 1;
        slot[0].lo = cw_lo;
        slot[0].hi = cw_hi;
        slot[0].up_rows.clear();
        slot[0].down_rows.clear();
        slot[1].alive = false;

        std::vector<int> order{0};
        std::vector<int> next_order;
        if (trace) trace_line(order);

        while (p != 1 || q != m) {
            ++steps;
            const bool above =
                p > 1 && (q == m || r[static_cast<std::size_t>(p - 1)] >= r[static_cast<std::size_t>(q + 1)]);
            const int np = above ? p - 1 : p;
            const int nq = above ? q : q + 1;
            const int len = above ? r[static_cast<std::size_t>(np)] : r[static_cast<std::size_t>(nq)];

            int chosen = -1;
            for (int id : order) {
                const Lineage& L = slot[static_cast<std::size_t>(id)];
                if (balanced(L) && valid_balanced(L)) {
                    chosen = id;
                    break;
                }
            }

            next_order.clear();
            if (chosen >= 0) {
                Lineage& Y = slot[static_cast<std::size_t>(chosen)];
                commit(Y);
                const int base_tp = Y.tp;
                const int base_tq = Y.tq;
                for (Lineage& L : slot) {
                    L.alive = false;
                    L.up_rows.clear();
                    L.down_rows.clear();
                }
                const std::array<int, 2> cand{cw_lo, cw_hi - len + 1};
                const int cand_n = cand[0] == cand[1] ? 1 : 2;
                int made = 0;
                for (int ci = 0; ci < cand_n; ++ci) {
                    Lineage& L = slot[static_cast<std::size_t>(made)];
                    L.tp = base_tp;
                    L.tq = base_tq;
                    L.lo = cw_lo;
                    L.hi = cw_hi;
                    const Probe pr = probe(L, above, cand[static_cast<std::size_t>(ci)], np, nq);
                    if (!pr.ok) continue;
                    apply(L, above, cand[static_cast<std::size_t>(ci)], pr, np, nq);
                    L.alive = true;
                    next_order.push_back(made);
                    ++made;
                }
            } else {
                for (int id : order) {
                    Lineage& L = slot[static_cast<std::size_t>(id)];
                    if (balanced(L)) {
                        L.alive = false; // balanced but invalid: cannot be completed
                        continue;
                    }
                    const int vl = L.lo;
                    const int vr = L.hi - len + 1;
                    const Probe pl = probe(L, above, vl, np, nq);
                    const Probe pr = vr == vl ? Probe{} : probe(L, above, vr, np, nq);
                    if (pl.ok && pr.ok) {
                        throw std::logic_error("unbalanced block produced two extensions");
                    }
                    if (pl.ok) {
                        apply(L, above, vl, pl, np, nq);
                        next_order.push_back(id);
                    } else if (pr.ok) {
                        apply(L, above, vr, pr, np, nq);
                        next_order.push_back(id);
                    } else {
                        L.alive = false;
                    }
                }
            }

            order = next_order;
            p = np;
            q = nq;
            if (trace) trace_line(order);
            if (order.size() > 2) throw std::logic_error("front bound exceeded");
            if (order.empty()) return std::nullopt;
        }

        return materialize(order.front());
    }
};

} // namespace

std::optional<LeftEnds> reconstruct_centered_compact(const Projections& proj,
                                                     ReconstructionStats* stats,
                                                     std::ostream* trace) {
    validate_projections(proj);
    const int k = full_row(proj);
    if (k == 0) {
        throw NotCenteredError("no row sum equals the width (" + std::to_string(proj.n()) +
                               "); the instance has no full row");
    }
    const auto started = std::chrono::steady_clock::now();
    std::optional<LeftEnds> out;
    long long steps = 0;
    if (proj.balanced()) {
        Engine engine(proj, trace);
        out = engine.run(k);
        steps = engine.steps;
    }
    if (stats) {
        stats->steps = steps;
        stats->solve_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }
    return out;
}

ReconstructionResult reconstruct_centered(const Projections& proj, std::ostream* trace) {
    ReconstructionResult result;
    const auto t = reconstruct_centered_compact(proj, &result.stats, trace);
    if (t) {
        result.grid = grid_from_left_ends(*t, proj.rows, proj.n());
    }
    return result;
}

} // namespace hvtomo
