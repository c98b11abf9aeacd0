#pragma once

#include <limits>
#include <vector>

#include "ldpcsense/rational.hpp"

// Self-contained dense linear-program solver: two-phase primal simplex with
// Bland's rule. Problems are stated as
//
//     minimize    c . x
//     subject to  A x = b,   lower <= x <= upper
//
// with per-variable bounds (-inf and +inf allowed). Float mode runs on
// doubles with tol_piv = 1e-9 / tol_feas = 1e-8; rational mode pivots in
// exact fraction arithmetic and returns exact basic solutions.

namespace ldpcsense {

inline constexpr double kLpInf = std::numeric_limits<double>::infinity();
inline constexpr double kLpPivTol = 1e-9;
inline constexpr double kLpFeasTol = 1e-8;

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class SolveMode { Float, Rational };

struct LpProblem {
    std::vector<double> objective;
    std::vector<std::vector<double>> eq_lhs;
    std::vector<double> eq_rhs;
    std::vector<double> lower;  // -kLpInf for free below
    std::vector<double> upper;  // +kLpInf for free above

    std::size_t num_vars() const { return objective.size(); }
    // All-variable bound helpers.
    static std::vector<double> nonneg(std::size_t n) { return std::vector<double>(n, 0.0); }
    static std::vector<double> unbounded(std::size_t n, double sign) {
        return std::vector<double>(n, sign * kLpInf);
    }
    void validate() const;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective_value = 0.0;
};

struct RationalLpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rat> x;
    Rat objective_value;
};

LpSolution lp_solve(const LpProblem& p, SolveMode mode = SolveMode::Float);
RationalLpSolution lp_solve_exact(const LpProblem& p);

// l1-minimal solution of A x = b via the standard positive/negative split.
// Throws std::runtime_error when the system is infeasible.
struct L1Result {
    std::vector<double> x;
    double value = 0.0;
};
L1Result minimize_l1(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                     SolveMode mode = SolveMode::Float);

}  // namespace ldpcsense
