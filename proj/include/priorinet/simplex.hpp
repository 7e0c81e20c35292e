#pragma once

#include <optional>
#include <vector>

#include "priorinet/rational.hpp"

namespace priorinet {

// Small exact-rational LP solver (dictionary simplex, Bland's rule). Intended
// for the desk-scale feasibility and activity programs in this project; no
// attempt at sparse or large-scale performance.
enum class LpRel { Le, Eq, Ge };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpRow {
    std::vector<Rat> a;
    LpRel rel = LpRel::Le;
    Rat b;
};

struct LpProblem {
    int nvars = 0;
    std::vector<Rat> maximize;                // objective coefficients
    std::vector<LpRow> rows;
    std::vector<std::optional<Rat>> lower;    // per-variable bounds; nullopt = free
    std::vector<std::optional<Rat>> upper;
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;
    std::vector<Rat> x;
};

LpResult lp_solve(const LpProblem& p);

}  // namespace priorinet
