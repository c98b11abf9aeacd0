#include "ldpcsense/lp.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace ldpcsense {

void LpProblem::validate() const {
    const std::size_t n = objective.size();
    if (n == 0) throw std::invalid_argument("LpProblem: no variables");
    if (lower.size() != n || upper.size() != n)
        throw std::invalid_argument("LpProblem: bounds size mismatch");
    if (eq_lhs.size() != eq_rhs.size()) throw std::invalid_argument("LpProblem: rhs size mismatch");
    for (const auto& row : eq_lhs)
        if (row.size() != n) throw std::invalid_argument("LpProblem: row size mismatch");
    for (std::size_t j = 0; j < n; ++j)
        if (lower[j] > upper[j]) throw std::invalid_argument("LpProblem: lower > upper");
}

namespace {

template <typename T>
struct Scalar;

template <>
struct Scalar<double> {
    static double zero() { return 0.0; }
    static bool neg(double x) { return x < -kLpPivTol; }
    static bool pos(double x) { return x > kLpPivTol; }
    static bool feas_pos(double x) { return x > kLpFeasTol; }
    static double from_double(double x) { return x; }
    static double to_double(double x) { return x; }
};

template <>
struct Scalar<Rat> {
    static Rat zero() { return Rat(0); }
    static bool neg(const Rat& x) { return sgn(x) < 0; }
    static bool pos(const Rat& x) { return sgn(x) > 0; }
    static bool feas_pos(const Rat& x) { return sgn(x) > 0; }
    static Rat from_double(double x) { return rat_from_double(x); }
    static double to_double(const Rat& x) { return x.get_d(); }
};

// Full-tableau simplex. Columns [0, n_cols) are variables of the standard
// form; b holds the rhs; cost is the current reduced-cost row.
template <typename T>
struct Tableau {
    std::size_t n_rows = 0, n_cols = 0;
    std::vector<std::vector<T>> a;
    std::vector<T> b;
    std::vector<T> cost;
    T neg_obj = Scalar<T>::zero();
    std::vector<std::size_t> basis;

    void pivot(std::size_t pr, std::size_t pc) {
        T inv = a[pr][pc];
        for (std::size_t j = 0; j < n_cols; ++j) a[pr][j] /= inv;
        b[pr] /= inv;
        a[pr][pc] = T(1);
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (i == pr) continue;
            T factor = a[i][pc];
            if (factor == Scalar<T>::zero()) continue;
            for (std::size_t j = 0; j < n_cols; ++j) a[i][j] -= factor * a[pr][j];
            a[i][pc] = Scalar<T>::zero();
            b[i] -= factor * b[pr];
        }
        T factor = cost[pc];
        if (factor != Scalar<T>::zero()) {
            for (std::size_t j = 0; j < n_cols; ++j) cost[j] -= factor * a[pr][j];
            cost[pc] = Scalar<T>::zero();
            neg_obj -= factor * b[pr];
        }
        basis[pr] = pc;
    }

    // Bland's rule: entering column = lowest index with negative reduced
    // cost; leaving row = min ratio, ties broken by lowest basic variable
    // index. Returns false when unbounded.
    bool run(const std::vector<bool>& usable) {
        const std::size_t max_iters = 20000 + 200 * (n_rows + n_cols);
        for (std::size_t iter = 0; iter < max_iters; ++iter) {
            std::size_t enter = n_cols;
            for (std::size_t j = 0; j < n_cols; ++j) {
                if (usable[j] && Scalar<T>::neg(cost[j])) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_cols) return true;
            std::size_t leave = n_rows;
            T best_ratio = Scalar<T>::zero();
            for (std::size_t i = 0; i < n_rows; ++i) {
                if (!Scalar<T>::pos(a[i][enter])) continue;
                T ratio = b[i] / a[i][enter];
                if (leave == n_rows || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == n_rows) return false;
            pivot(leave, enter);
        }
        throw std::runtime_error("simplex: iteration limit exceeded");
    }
};

// Mapping from a standard-form variable back to the original one.
struct VarMap {
    enum class Kind { Shifted, Flipped, SplitPos, SplitNeg } kind;
    std::size_t original;
    double offset;  // lower bound (Shifted) or upper bound (Flipped)
};

template <typename T>
struct StandardForm {
    std::vector<std::vector<T>> rows;
    std::vector<T> rhs;
    std::vector<T> obj;
    std::vector<VarMap> vmap;
    std::size_t n_vars = 0;
};

// Rewrites bounded variables as nonnegative ones. Finite upper bounds turn
// into extra equality rows with a slack variable.
template <typename T>
StandardForm<T> standardize(const LpProblem& p) {
    const std::size_t n = p.num_vars();
    StandardForm<T> sf;
    std::vector<std::vector<std::pair<std::size_t, T>>> expansion(n);
    std::vector<T> shift(n, Scalar<T>::zero());
    std::size_t next = 0;
    struct UpperRow {
        std::size_t var;
        T range;
    };
    std::vector<UpperRow> upper_rows;
    for (std::size_t j = 0; j < n; ++j) {
        bool lo = std::isfinite(p.lower[j]), hi = std::isfinite(p.upper[j]);
        if (lo) {
            sf.vmap.push_back({VarMap::Kind::Shifted, j, p.lower[j]});
            expansion[j].push_back({next, T(1)});
            shift[j] = Scalar<T>::from_double(p.lower[j]);
            if (hi) upper_rows.push_back({next, Scalar<T>::from_double(p.upper[j] - p.lower[j])});
            ++next;
        } else if (hi) {
            sf.vmap.push_back({VarMap::Kind::Flipped, j, p.upper[j]});
            expansion[j].push_back({next, T(-1)});
            shift[j] = Scalar<T>::from_double(p.upper[j]);
            ++next;
        } else {
            sf.vmap.push_back({VarMap::Kind::SplitPos, j, 0.0});
            sf.vmap.push_back({VarMap::Kind::SplitNeg, j, 0.0});
            expansion[j].push_back({next, T(1)});
            expansion[j].push_back({next + 1, T(-1)});
            next += 2;
        }
    }
    const std::size_t n_slack = upper_rows.size();
    sf.n_vars = next + n_slack;
    sf.obj.assign(sf.n_vars, Scalar<T>::zero());
    for (std::size_t j = 0; j < n; ++j) {
        T c = Scalar<T>::from_double(p.objective[j]);
        for (const auto& [idx, sign] : expansion[j]) sf.obj[idx] += c * sign;
    }
    for (std::size_t r = 0; r < p.eq_lhs.size(); ++r) {
        std::vector<T> row(sf.n_vars, Scalar<T>::zero());
        T rhs = Scalar<T>::from_double(p.eq_rhs[r]);
        for (std::size_t j = 0; j < n; ++j) {
            T coeff = Scalar<T>::from_double(p.eq_lhs[r][j]);
            if (coeff == Scalar<T>::zero()) continue;
            for (const auto& [idx, sign] : expansion[j]) row[idx] += coeff * sign;
            rhs -= coeff * shift[j];
        }
        sf.rows.push_back(std::move(row));
        sf.rhs.push_back(rhs);
    }
    for (std::size_t u = 0; u < upper_rows.size(); ++u) {
        std::vector<T> row(sf.n_vars, Scalar<T>::zero());
        row[upper_rows[u].var] = T(1);
        row[next + u] = T(1);
        sf.rows.push_back(std::move(row));
        sf.rhs.push_back(upper_rows[u].range);
    }
    return sf;
}

template <typename T>
struct SimplexResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<T> x;  // original-variable values
    T objective = Scalar<T>::zero();
};

template <typename T>
SimplexResult<T> solve_impl(const LpProblem& p) {
    p.validate();
    StandardForm<T> sf = standardize<T>(p);
    const std::size_t m = sf.rows.size(), ns = sf.n_vars;
    SimplexResult<T> result;

    Tableau<T> t;
    t.n_rows = m;
    t.n_cols = ns + m;  // artificials appended
    t.a.assign(m, std::vector<T>(t.n_cols, Scalar<T>::zero()));
    t.b = sf.rhs;
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = t.b[i] < Scalar<T>::zero();
        for (std::size_t j = 0; j < ns; ++j) t.a[i][j] = flip ? -sf.rows[i][j] : sf.rows[i][j];
        if (flip) t.b[i] = -t.b[i];
        t.a[i][ns + i] = T(1);
        t.basis[i] = ns + i;
    }

    // Phase 1: minimize the sum of artificials.
    t.cost.assign(t.n_cols, Scalar<T>::zero());
    t.neg_obj = Scalar<T>::zero();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < ns; ++j) t.cost[j] -= t.a[i][j];
        t.neg_obj -= t.b[i];
    }
    std::vector<bool> usable(t.n_cols, true);
    if (!t.run(usable)) throw std::runtime_error("simplex: phase 1 unbounded");
    if (Scalar<T>::feas_pos(-t.neg_obj)) {
        result.status = LpStatus::Infeasible;
        return result;
    }

    // Drive leftover artificials out of the basis; rows with no structural
    // entry are redundant and stay parked on a zeroed artificial.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < ns) continue;
        std::size_t best = ns;
        for (std::size_t j = 0; j < ns; ++j) {
            if (Scalar<T>::pos(t.a[i][j]) || Scalar<T>::neg(t.a[i][j])) {
                best = j;
                break;
            }
        }
        if (best < ns) t.pivot(i, best);
    }
    for (std::size_t j = ns; j < t.n_cols; ++j) usable[j] = false;

    // Phase 2: price the structural objective against the current basis.
    t.cost.assign(t.n_cols, Scalar<T>::zero());
    for (std::size_t j = 0; j < ns; ++j) t.cost[j] = sf.obj[j];
    t.neg_obj = Scalar<T>::zero();
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] >= ns) continue;
        T cb = sf.obj[t.basis[i]];
        if (cb == Scalar<T>::zero()) continue;
        for (std::size_t j = 0; j < t.n_cols; ++j) t.cost[j] -= cb * t.a[i][j];
        t.neg_obj -= cb * t.b[i];
    }
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < ns) t.cost[t.basis[i]] = Scalar<T>::zero();
    if (!t.run(usable)) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    std::vector<T> std_x(ns, Scalar<T>::zero());
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < ns) std_x[t.basis[i]] = t.b[i];
    result.x.assign(p.num_vars(), Scalar<T>::zero());
    for (std::size_t sj = 0; sj < sf.vmap.size(); ++sj) {
        const VarMap& vm = sf.vmap[sj];
        switch (vm.kind) {
            case VarMap::Kind::Shifted:
                result.x[vm.original] = std_x[sj] + Scalar<T>::from_double(vm.offset);
                break;
            case VarMap::Kind::Flipped:
                result.x[vm.original] = Scalar<T>::from_double(vm.offset) - std_x[sj];
                break;
            case VarMap::Kind::SplitPos:
                result.x[vm.original] += std_x[sj];
                break;
            case VarMap::Kind::SplitNeg:
                result.x[vm.original] -= std_x[sj];
                break;
        }
    }
    result.objective = Scalar<T>::zero();
    for (std::size_t j = 0; j < p.num_vars(); ++j)
        result.objective += Scalar<T>::from_double(p.objective[j]) * result.x[j];
    result.status = LpStatus::Optimal;
    return result;
}

}  // namespace

LpSolution lp_solve(const LpProblem& p, SolveMode mode) {
    LpSolution out;
    if (mode == SolveMode::Float) {
        SimplexResult<double> r = solve_impl<double>(p);
        out.status = r.status;
        out.x = std::move(r.x);
        out.objective_value = r.objective;
    } else {
        SimplexResult<Rat> r = solve_impl<Rat>(p);
        out.status = r.status;
        out.x = double_vector(r.x);
        out.objective_value = r.objective.get_d();
    }
    return out;
}

RationalLpSolution lp_solve_exact(const LpProblem& p) {
    SimplexResult<Rat> r = solve_impl<Rat>(p);
    RationalLpSolution out;
    out.status = r.status;
    out.x = std::move(r.x);
    out.objective_value = r.objective;
    return out;
}

L1Result minimize_l1(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                     SolveMode mode) {
    if (a.empty() || a[0].empty()) throw std::invalid_argument("minimize_l1: matrix must have columns");
    const std::size_t m = a.size(), n = a[0].size();
    LpProblem p;
    p.objective.assign(2 * n, 1.0);
    p.lower = LpProblem::nonneg(2 * n);
    p.upper = LpProblem::unbounded(2 * n, +1.0);
    p.eq_rhs = b;
    p.eq_lhs.assign(m, std::vector<double>(2 * n, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("minimize_l1: ragged matrix");
        for (std::size_t j = 0; j < n; ++j) {
            p.eq_lhs[i][j] = a[i][j];
            p.eq_lhs[i][n + j] = -a[i][j];
        }
    }
    LpSolution sol = lp_solve(p, mode);
    if (sol.status == LpStatus::Infeasible) throw std::runtime_error("minimize_l1: infeasible system");
    if (sol.status == LpStatus::Unbounded) throw std::runtime_error("minimize_l1: unbounded (unexpected)");
    L1Result r;
    r.x.resize(n);
    for (std::size_t j = 0; j < n; ++j) r.x[j] = sol.x[j] - sol.x[n + j];
    r.value = sol.objective_value;
    return r;
}

}  // namespace ldpcsense
