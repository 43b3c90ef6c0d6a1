#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hvtomo {

struct Literal {
    int var = 0;
    bool positive = true;

    static Literal pos(int v) { return {v, true}; }
    static Literal neg(int v) { return {v, false}; }
    Literal operator~() const { return {var, !positive}; }

    bool operator==(const Literal&) const = default;
};

// One- or two-literal clause. Unit clauses are first-class: they are common
// in the formulas we build and duplicating the literal would double the
// implication edges for no benefit.
class Clause {
public:
    static Clause unit(Literal a) { return Clause(a, a, 1); }
    static Clause binary(Literal a, Literal b) { return Clause(a, b, 2); }

    int size() const { return size_; }
    Literal first() const { return a_; }
    Literal second() const { return b_; }

private:
    Clause(Literal a, Literal b, int size) : a_(a), b_(b), size_(size) {}

    Literal a_;
    Literal b_;
    int size_;
};

// CNF with at most two literals per clause over variables [0, variable_count).
// Clause order is preserved, which makes solving deterministic.
class ClauseSet {
public:
    explicit ClauseSet(int variable_count);

    void add_unit(Literal a);
    void add_clause(Literal a, Literal b);
    void reserve(std::size_t clause_capacity) { clauses_.reserve(clause_capacity); }

    int variable_count() const { return variable_count_; }
    const std::vector<Clause>& clauses() const { return clauses_; }

private:
    void check(Literal l) const;

    int variable_count_;
    std::vector<Clause> clauses_;
};

struct Assignment {
    std::vector<bool> values;
};

// Implication-graph satisfiability test. Builds the graph (clause (a v b)
// yields !a -> b and !b -> a, a unit clause (a) yields !a -> a), runs an
// iterative SCC pass, and reports unsatisfiable iff some variable shares a
// component with its own negation. Models are extracted by reverse
// topological component order, so the result is a pure function of the
// clause order. Linear in variables + clauses.
std::optional<Assignment> solve(const ClauseSet& f);

// Throws std::invalid_argument when the assignment length does not match.
bool evaluate(const ClauseSet& f, const Assignment& a);

std::string default_literal_name(Literal l);

// One edge per line, "u -> v". Naming is pluggable so callers with
// structured variables can print them readably.
void dump_implication_graph(const ClauseSet& f, std::ostream& out,
                            const std::function<std::string(Literal)>& name = default_literal_name);

} // namespace hvtomo
