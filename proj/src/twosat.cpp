#include "hvtomo/twosat.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace hvtomo {

ClauseSet::ClauseSet(int variable_count) : variable_count_(variable_count) {
    if (variable_count < 0) {
        throw std::invalid_argument("variable count must be nonnegative");
    }
}

void ClauseSet::check(Literal l) const {
    if (l.var < 0 || l.var >= variable_count_) {
        throw std::invalid_argument("literal references variable " + std::to_string(l.var) +
                                    " outside [0, " + std::to_string(variable_count_) + ")");
    }
}

void ClauseSet::add_unit(Literal a) {
    check(a);
    clauses_.push_back(Clause::unit(a));
}

void ClauseSet::add_clause(Literal a, Literal b) {
    check(a);
    check(b);
    clauses_.push_back(Clause::binary(a, b));
}

namespace {

// node 2v is "v true", node 2v+1 is "v false"
inline int node_of(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }

template <typename Emit>
void for_each_edge(const ClauseSet& f, Emit&& emit) {
    for (const Clause& cl : f.clauses()) {
        const Literal a = cl.first();
        if (cl.size() == 1) {
            emit(node_of(~a), node_of(a));
        } else {
            const Literal b = cl.second();
            emit(node_of(~a), node_of(b));
            emit(node_of(~b), node_of(a));
        }
    }
}

} // namespace

std::optional<Assignment> solve(const ClauseSet& f) {
    const int vars = f.variable_count();
    const int nodes = 2 * vars;

    // adjacency in CSR form, edges in clause order
    std::vector<int> head(nodes + 1, 0);
    for_each_edge(f, [&](int u, int) { ++head[u + 1]; });
    for (int i = 0; i < nodes; ++i) head[i + 1] += head[i];
    std::vector<int> cursor(head.begin(), head.end() - 1);
    std::vector<int> target(static_cast<std::size_t>(head[nodes]));
    for_each_edge(f, [&](int u, int v) { target[static_cast<std::size_t>(cursor[u]++)] = v; });

    // iterative Tarjan; components are numbered in the order they complete,
    // which is reverse topological order of the condensation
    std::vector<int> idx(nodes, -1);
    std::vector<int> low(nodes, 0);
    std::vector<int> comp(nodes, -1);
    std::vector<std::uint8_t> on_stack(nodes, 0);
    std::vector<int> scc_stack;
    std::vector<std::pair<int, int>> call; // (node, next edge offset)
    int next_index = 0;
    int comp_count = 0;

    for (int root = 0; root < nodes; ++root) {
        if (idx[root] != -1) continue;
        idx[root] = low[root] = next_index++;
        scc_stack.push_back(root);
        on_stack[root] = 1;
        call.emplace_back(root, head[root]);
        while (!call.empty()) {
            const int u = call.back().first;
            int& edge = call.back().second;
            if (edge < head[u + 1]) {
                const int v = target[static_cast<std::size_t>(edge)];
                ++edge;
                if (idx[v] == -1) {
                    idx[v] = low[v] = next_index++;
                    scc_stack.push_back(v);
                    on_stack[v] = 1;
                    call.emplace_back(v, head[v]); // invalidates `edge`; re-fetched next round
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], idx[v]);
                }
            } else {
                if (low[u] == idx[u]) {
                    while (true) {
                        const int w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = comp_count;
                        if (w == u) break;
                    }
                    ++comp_count;
                }
                call.pop_back();
                if (!call.empty()) {
                    low[call.back().first] = std::min(low[call.back().first], low[u]);
                }
            }
        }
    }

    Assignment result;
    result.values.resize(static_cast<std::size_t>(vars));
    for (int v = 0; v < vars; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        // smaller component id = closer to a sink: make that side true
        result.values[static_cast<std::size_t>(v)] = comp[2 * v] < comp[2 * v + 1];
    }
    return result;
}

bool evaluate(const ClauseSet& f, const Assignment& a) {
    if (a.values.size() != static_cast<std::size_t>(f.variable_count())) {
        throw std::invalid_argument("assignment has " + std::to_string(a.values.size()) +
                                    " values, formula has " +
                                    std::to_string(f.variable_count()) + " variables");
    }
    auto sat = [&](Literal l) { return a.values[static_cast<std::size_t>(l.var)] == l.positive; };
    for (const Clause& cl : f.clauses()) {
        if (sat(cl.first())) continue;
        if (cl.size() == 2 && sat(cl.second())) continue;
        return false;
    }
    return true;
}

std::string default_literal_name(Literal l) {
    return (l.positive ? "" : "!") + std::string("x") + std::to_string(l.var);
}

void dump_implication_graph(const ClauseSet& f, std::ostream& out,
                            const std::function<std::string(Literal)>& name) {
    auto literal_of_node = [](int node) {
        return Literal{node / 2, node % 2 == 0};
    };
    for_each_edge(f, [&](int u, int v) {
        out << name(literal_of_node(u)) << " -> " << name(literal_of_node(v)) << "\n";
    });
}

} // namespace hvtomo
