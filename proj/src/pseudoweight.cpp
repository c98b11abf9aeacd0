#include "ldpcsense/pseudoweight.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ldpcsense/lp.hpp"
#include "ldpcsense/polytope.hpp"

namespace ldpcsense {

namespace {

// Smallest xi with F(xi) = target, for F the piecewise-linear cumulative of
// the sorted-descending profile (infimum preimage on flat segments).
template <typename T>
T sorted_cumulative_inverse(const std::vector<T>& sorted_desc, const T& target) {
    T cum(0);
    for (std::size_t i = 0; i < sorted_desc.size(); ++i) {
        if (sorted_desc[i] <= T(0)) break;
        T next = cum + sorted_desc[i];
        if (next >= target) return T(static_cast<int>(i)) + (target - cum) / sorted_desc[i];
        cum = next;
    }
    return T(static_cast<int>(sorted_desc.size()));
}

// Effective-weight case split: e is the smallest integer where the head
// l1 mass reaches the tail; equality gives 2e, strict excess gives 2e-1.
template <typename T>
long bsc_prime_impl(const std::vector<T>& sorted_desc) {
    const std::size_t n = sorted_desc.size();
    std::vector<T> suffix(n + 1, T(0));
    for (std::size_t i = n; i > 0; --i) suffix[i - 1] = suffix[i] + sorted_desc[i - 1];
    T head(0);
    for (std::size_t e = 1; e <= n; ++e) {
        head += sorted_desc[e - 1];
        if (head >= suffix[e]) return head == suffix[e] ? 2 * static_cast<long>(e) : 2 * static_cast<long>(e) - 1;
    }
    return 0;  // unreachable for nonzero input
}

struct ExactWeights {
    Rat awgnc, bsc, maxfrac;
    long bsc_prime = 0;
    std::size_t bec = 0;
};

ExactWeights exact_weights(std::vector<Rat> omega) {
    ExactWeights w;
    Rat l1(0), l2sq(0), linf(0);
    std::size_t supp = 0;
    for (const Rat& x : omega) {
        if (sgn(x) < 0) throw std::invalid_argument("pseudo_weights: negative entry");
        if (sgn(x) != 0) ++supp;
        l1 += x;
        l2sq += x * x;
        if (x > linf) linf = x;
    }
    if (supp == 0) {
        w.awgnc = w.bsc = w.maxfrac = Rat(0);
        return w;
    }
    std::sort(omega.begin(), omega.end(), [](const Rat& a, const Rat& b) { return a > b; });
    w.awgnc = l1 * l1 / l2sq;
    w.bsc = 2 * sorted_cumulative_inverse(omega, Rat(l1 / 2));
    w.bsc_prime = bsc_prime_impl(omega);
    w.bec = supp;
    w.maxfrac = l1 / linf;
    return w;
}

}  // namespace

WeightReport pseudo_weights(const std::vector<double>& omega) {
    std::vector<double> sorted = omega;
    double l1 = 0.0, l2sq = 0.0, linf = 0.0;
    std::size_t supp = 0;
    for (double x : sorted) {
        if (x < 0.0) throw std::invalid_argument("pseudo_weights: negative entry");
        if (x != 0.0) ++supp;
        l1 += x;
        l2sq += x * x;
        linf = std::max(linf, x);
    }
    WeightReport r;
    if (supp == 0) return r;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    r.awgnc = l1 * l1 / l2sq;
    r.bsc = 2.0 * sorted_cumulative_inverse(sorted, l1 / 2.0);
    r.bsc_prime = static_cast<double>(bsc_prime_impl(sorted));
    r.bec = supp;
    r.maxfrac = l1 / linf;
    return r;
}

bool bsc_prime_relation_check(const std::vector<double>& omega) {
    WeightReport r = pseudo_weights(omega);
    long bp = static_cast<long>(std::lround(r.bsc_prime));
    if (bp % 2 == 0) return std::abs(r.bsc - r.bsc_prime) <= 1e-9;
    return r.bsc > r.bsc_prime - 1.0 && r.bsc < r.bsc_prime + 1.0;
}

bool lemma4_check(const Gf2Matrix& h, const std::vector<double>& omega,
                  const std::vector<std::size_t>& s) {
    if (omega.size() != h.cols()) throw std::invalid_argument("lemma4_check: length mismatch");
    WeightReport r = pseudo_weights(omega);
    double size = static_cast<double>(s.size());
    if (!(size < r.bsc / 2.0) && !(size < r.bsc_prime / 2.0)) return true;  // lemma is silent
    std::vector<char> in_s(omega.size(), 0);
    for (std::size_t i : s) in_s[i] = 1;
    double mass_s = 0.0, mass_rest = 0.0;
    for (std::size_t i = 0; i < omega.size(); ++i) (in_s[i] ? mass_s : mass_rest) += omega[i];
    return mass_s < mass_rest;
}

namespace {

// min sum(omega) over the fundamental cone with omega_i pinned to 1.
LpProblem maxfrac_lp(const Gf2Matrix& h, std::size_t pin) {
    const std::size_t n = h.cols();
    std::vector<std::vector<std::size_t>> rows(h.rows());
    std::size_t n_cone = 0;
    for (std::size_t j = 0; j < h.rows(); ++j) {
        for (std::size_t i = 0; i < n; ++i)
            if (h.get(j, i)) rows[j].push_back(i);
        n_cone += rows[j].size();
    }
    LpProblem p;
    p.objective.assign(n + n_cone, 0.0);
    for (std::size_t i = 0; i < n; ++i) p.objective[i] = 1.0;
    p.lower.assign(n + n_cone, 0.0);
    p.upper.assign(n + n_cone, kLpInf);
    std::size_t slack = n;
    for (std::size_t j = 0; j < h.rows(); ++j) {
        for (std::size_t i : rows[j]) {
            // omega_i - sum_{i' in I_j \ i} omega_{i'} + slack = 0
            std::vector<double> row(n + n_cone, 0.0);
            for (std::size_t i2 : rows[j]) row[i2] = i2 == i ? 1.0 : -1.0;
            row[slack++] = 1.0;
            p.eq_lhs.push_back(std::move(row));
            p.eq_rhs.push_back(0.0);
        }
    }
    std::vector<double> pin_row(n + n_cone, 0.0);
    pin_row[pin] = 1.0;
    p.eq_lhs.push_back(std::move(pin_row));
    p.eq_rhs.push_back(1.0);
    return p;
}

}  // namespace

double min_maxfrac_weight(const Gf2Matrix& h) {
    double best = kWeightInfinite;
    for (std::size_t i = 0; i < h.cols(); ++i) {
        LpSolution sol = lp_solve(maxfrac_lp(h, i), SolveMode::Float);
        if (sol.status == LpStatus::Optimal) best = std::min(best, sol.objective_value);
    }
    return best;
}

ExactMaxfrac min_maxfrac_weight_exact(const Gf2Matrix& h) {
    ExactMaxfrac best;
    for (std::size_t i = 0; i < h.cols(); ++i) {
        RationalLpSolution sol = lp_solve_exact(maxfrac_lp(h, i));
        if (sol.status != LpStatus::Optimal) continue;
        if (!best.finite || sol.objective_value < best.value) {
            best.value = sol.objective_value;
            best.finite = true;
        }
    }
    return best;
}

double min_pseudoweight_enumerated(const Gf2Matrix& h, PseudoWeightKind kind, std::size_t cap) {
    bool found = false;
    Rat best_rat;
    long best_long = 0;
    std::size_t best_size = 0;
    for (const auto& vertex : fundamental_polytope_vertices(h, cap)) {
        bool zero = true;
        for (const Rat& x : vertex)
            if (sgn(x) != 0) zero = false;
        if (zero) continue;
        ExactWeights w = exact_weights(vertex);
        switch (kind) {
            case PseudoWeightKind::Awgnc:
                if (!found || w.awgnc < best_rat) best_rat = w.awgnc;
                break;
            case PseudoWeightKind::Bsc:
                if (!found || w.bsc < best_rat) best_rat = w.bsc;
                break;
            case PseudoWeightKind::MaxFrac:
                if (!found || w.maxfrac < best_rat) best_rat = w.maxfrac;
                break;
            case PseudoWeightKind::BscPrime:
                if (!found || w.bsc_prime < best_long) best_long = w.bsc_prime;
                break;
            case PseudoWeightKind::Bec:
                if (!found || w.bec < best_size) best_size = w.bec;
                break;
        }
        found = true;
    }
    if (!found) return kWeightInfinite;
    switch (kind) {
        case PseudoWeightKind::BscPrime:
            return static_cast<double>(best_long);
        case PseudoWeightKind::Bec:
            return static_cast<double>(best_size);
        default:
            return best_rat.get_d();
    }
}

}  // namespace ldpcsense
