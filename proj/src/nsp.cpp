#include "ldpcsense/nsp.hpp"

#include <cmath>
#include <stdexcept>

#include "ldpcsense/cslpd.hpp"
#include "ldpcsense/lp.hpp"
#include "ldpcsense/rng.hpp"

namespace ldpcsense {

namespace {

std::size_t rational_rank_of(const std::vector<std::vector<double>>& h) {
    std::vector<std::vector<Rat>> m;
    for (const auto& row : h) m.push_back(rat_vector(row));
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || sgn(m[r][col]) == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            for (std::size_t c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    return rank;
}

// LP for one sign pattern: variables u_i = sigma_i nu_i >= 0.
LpProblem pattern_lp(const std::vector<std::vector<double>>& h, const std::vector<char>& in_s,
                     double c, std::uint32_t sigma_mask) {
    const std::size_t m = h.size(), n = h[0].size();
    LpProblem p;
    p.objective.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        // maximize C sum_S u - sum_Sbar u  ==  minimize the negation
        p.objective[i] = in_s[i] ? -c : 1.0;
    }
    p.lower = LpProblem::nonneg(n);
    p.upper = LpProblem::unbounded(n, +1.0);
    p.eq_lhs.assign(m + 1, std::vector<double>(n, 0.0));
    p.eq_rhs.assign(m + 1, 0.0);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i < n; ++i)
            p.eq_lhs[r][i] = ((sigma_mask >> i) & 1 ? -1.0 : 1.0) * h[r][i];
    for (std::size_t i = 0; i < n; ++i) p.eq_lhs[m][i] = 1.0;
    p.eq_rhs[m] = 1.0;
    return p;
}

constexpr double kDecisionBand = 1e-9;

}  // namespace

NspCertificate check_nsp_set(const std::vector<std::vector<double>>& h,
                             const std::vector<std::size_t>& s, double c, bool strict) {
    if (h.empty() || h[0].empty()) throw std::invalid_argument("check_nsp_set: empty matrix");
    const std::size_t n = h[0].size();
    if (n > 16) throw std::length_error("check_nsp_set: dimension too large (n > 16)");
    if (c < 0.0) throw std::invalid_argument("check_nsp_set: need C >= 0");
    std::vector<char> in_s(n, 0);
    for (std::size_t i : s) {
        if (i >= n) throw std::invalid_argument("check_nsp_set: index out of range");
        in_s[i] = 1;
    }

    NspCertificate cert;
    cert.k = s.size();
    cert.c = c;
    cert.strict = strict;

    if (rational_rank_of(h) == n) {  // trivial nullspace
        cert.holds = true;
        return cert;
    }

    bool have_best = false;
    bool best_exact = false;
    Rat best_exact_margin;
    double best_margin = 0.0;
    std::vector<double> best_nu;
    std::uint32_t best_sigma = 0;

    const std::uint32_t patterns = std::uint32_t{1} << (n - 1);
    for (std::uint32_t half = 0; half < patterns; ++half) {
        std::uint32_t sigma_mask = half << 1;  // leading sign pinned positive
        LpProblem p = pattern_lp(h, in_s, c, sigma_mask);
        LpSolution sol = lp_solve(p, SolveMode::Float);
        if (sol.status == LpStatus::Infeasible) continue;
        if (sol.status == LpStatus::Unbounded) throw std::runtime_error("check_nsp_set: unexpected unbounded LP");
        double margin = -sol.objective_value;
        bool exact = false;
        Rat exact_margin;
        std::vector<double> u = sol.x;
        if (margin > -kDecisionBand) {
            // Near the strict/non-strict boundary: re-decide exactly.
            RationalLpSolution rsol = lp_solve_exact(p);
            if (rsol.status == LpStatus::Infeasible) continue;
            exact = true;
            exact_margin = -rsol.objective_value;
            margin = exact_margin.get_d();
            u = double_vector(rsol.x);
        }
        bool better = !have_best || margin > best_margin ||
                      (exact && best_exact && exact_margin > best_exact_margin);
        if (better) {
            have_best = true;
            best_exact = exact;
            best_exact_margin = exact_margin;
            best_margin = margin;
            best_nu = std::move(u);
            best_sigma = sigma_mask;
        }
    }

    if (!have_best) {  // no feasible pattern: nullspace is trivial after all
        cert.holds = true;
        return cert;
    }
    if (best_exact) {
        int sg = sgn(best_exact_margin);
        cert.holds = strict ? sg < 0 : sg <= 0;
    } else {
        cert.holds = best_margin < 0.0;  // clearly below the decision band
    }
    NspWorstCase wc;
    wc.s = s;
    wc.margin = best_margin;
    wc.nu.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        wc.nu[i] = ((best_sigma >> i) & 1 ? -1.0 : 1.0) * best_nu[i];
    cert.worst_case = std::move(wc);
    return cert;
}

NspCertificate check_nsp_k(const std::vector<std::vector<double>>& h, std::size_t k, double c,
                           bool strict) {
    if (h.empty() || h[0].empty()) throw std::invalid_argument("check_nsp_k: empty matrix");
    const std::size_t n = h[0].size();
    NspCertificate best;
    best.k = k;
    best.c = c;
    best.strict = strict;
    best.holds = true;
    if (k == 0) return best;
    if (k > n) throw std::invalid_argument("check_nsp_k: k > n");

    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    bool have_margin = false;
    while (true) {
        NspCertificate cert = check_nsp_set(h, subset, c, strict);
        cert.k = k;
        if (!cert.holds) return cert;
        if (cert.worst_case &&
            (!have_margin || cert.worst_case->margin > best.worst_case->margin)) {
            best.worst_case = cert.worst_case;
            have_margin = true;
        }
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return best;
}

bool thm2_equivalence(const std::vector<std::vector<double>>& h, std::size_t k, std::size_t trials,
                      std::uint64_t seed) {
    if (k == 0) return true;
    NspCertificate cert = check_nsp_k(h, k, 1.0, true);
    if (!cert.holds) throw std::logic_error("thm2_equivalence: strict NSP(k,1) not certified");
    const std::size_t n = h[0].size();
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        std::vector<double> e(n, 0.0);
        for (std::size_t i : rng.sample_without_replacement(k, n)) e[i] = rng.signed_unit();
        MeasurementInstance inst = MeasurementInstance::from_error(h, e);
        RecoveryResult rec = cs_lpd(inst);
        if (!rec.exact) return false;
        CsOptResult opt = cs_opt_bruteforce(inst, k);
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(opt.e[i] - e[i]) > 1e-6) return false;
    }
    return true;
}

}  // namespace ldpcsense
