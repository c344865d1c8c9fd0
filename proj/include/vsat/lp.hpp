#pragma once

#include "vsat/rational.hpp"

#include <optional>
#include <vector>

namespace vsat::lp {

enum class Rel { Le, Ge, Eq, Lt, Gt };

struct Constraint {
    std::vector<Rational> a;
    Rel rel = Rel::Le;
    Rational b = 0;
};

// Variables are nonnegative unless marked free.
struct Problem {
    int n = 0;
    std::vector<Constraint> rows;
    std::vector<char> free_var;

    explicit Problem(int vars = 0, bool all_free = false) : n(vars), free_var(vars, all_free ? 1 : 0) {}
    void add(std::vector<Rational> a, Rel rel, Rational b);
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Rational value = 0;
    std::vector<Rational> x;
};

// Exact two-phase simplex with Bland's rule. Strict rows are not allowed here.
Result maximize(const Problem& p, const std::vector<Rational>& c);

// A point satisfying every row, strict ones included, or nullopt. Strict rows
// get a common slack t, maximized subject to t <= 1.
std::optional<std::vector<Rational>> find_point(const Problem& p);

bool satisfies(const Problem& p, const std::vector<Rational>& x);

// Rank over Q of a list of rows.
int rank(std::vector<std::vector<Rational>> rows);

} // namespace vsat::lp
