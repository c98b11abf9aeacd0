#include "ldpcsense/cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ldpcsense/lp.hpp"
#include "ldpcsense/rng.hpp"

namespace ldpcsense {

std::vector<double> lift_vector(const std::vector<double>& a, std::size_t M) {
    if (M == 0) throw std::invalid_argument("lift_vector: M must be positive");
    std::vector<double> out(a.size() * M);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t m = 0; m < M; ++m) out[i * M + m] = a[i];
    return out;
}

std::vector<double> project_vector(const std::vector<double>& a_tilde, std::size_t M) {
    if (M == 0 || a_tilde.size() % M != 0)
        throw std::invalid_argument("project_vector: length not divisible by M");
    std::vector<double> out(a_tilde.size() / M, 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        double acc = 0.0;
        for (std::size_t m = 0; m < M; ++m) acc += a_tilde[i * M + m];
        out[i] = acc / static_cast<double>(M);
    }
    return out;
}

Gf2Matrix realize_cover(const TannerGraph& g, const CoverSpec& spec) {
    const std::size_t M = spec.M;
    Gf2Matrix lifted(g.n_chk * M, g.n_var * M);
    if (spec.edges.size() != spec.edge_perm.size())
        throw std::invalid_argument("realize_cover: edge/permutation count mismatch");
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        const auto& [j, i] = spec.edges[e];
        const auto& perm = spec.edge_perm[e];
        if (perm.size() != M) throw std::invalid_argument("realize_cover: permutation size mismatch");
        std::vector<char> seen(M, 0);
        for (std::size_t m = 0; m < M; ++m) {
            if (perm[m] >= M || seen[perm[m]])
                throw std::invalid_argument("realize_cover: not a bijection");
            seen[perm[m]] = 1;
            lifted.set(j * M + perm[m], i * M + m, true);
        }
    }
    return lifted;
}

std::pair<CoverSpec, LiftedMatrix> make_cover(const TannerGraph& g, std::size_t M,
                                              std::uint64_t seed) {
    if (M == 0) throw std::invalid_argument("make_cover: M must be positive");
    CoverSpec spec;
    spec.M = M;
    spec.seed = seed;
    Rng rng(seed);
    for (std::size_t j = 0; j < g.n_chk; ++j)
        for (std::size_t i : g.chk_adj[j]) {
            spec.edges.emplace_back(j, i);
            spec.edge_perm.push_back(rng.permutation(M));
        }
    LiftedMatrix lm;
    lm.base_rows = g.n_chk;
    lm.base_cols = g.n_var;
    lm.M = M;
    lm.realized = realize_cover(g, spec);
    return {std::move(spec), std::move(lm)};
}

namespace {

double linf_residual(const std::vector<std::vector<double>>& a, const std::vector<double>& x,
                     const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        double acc = -b[r];
        for (std::size_t c = 0; c < x.size(); ++c) acc += a[r][c] * x[c];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

double l1_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

std::size_t pick_m(const std::vector<std::size_t>& m_set, Rng& rng) {
    if (m_set.empty()) throw std::invalid_argument("cover check: empty M set");
    return m_set[rng.below(m_set.size())];
}

// Signed {0,+1,-1} cover: the base Tanner graph lifted with the base entry's
// sign carried onto each permutation block.
std::vector<std::vector<double>> lift_signed(const std::vector<std::vector<double>>& h,
                                             std::size_t M, std::uint64_t seed) {
    const std::size_t m = h.size(), n = h[0].size();
    std::vector<std::vector<double>> out(m * M, std::vector<double>(n * M, 0.0));
    Rng rng(seed);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (h[j][i] == 0.0) continue;
            std::vector<std::size_t> perm = rng.permutation(M);
            for (std::size_t x = 0; x < M; ++x) out[j * M + perm[x]][i * M + x] = h[j][i];
        }
    return out;
}

// Exact nullspace basis of a matrix with double entries (converted exactly).
std::vector<std::vector<double>> rational_nullspace(const std::vector<std::vector<double>>& a) {
    const std::size_t m = a.size(), n = a[0].size();
    std::vector<std::vector<Rat>> mat(m, std::vector<Rat>(n));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) mat[r][c] = rat_from_double(a[r][c]);
    std::vector<std::size_t> pivot_of_row;
    std::vector<char> is_pivot(n, 0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pivot = rank;
        while (pivot < m && sgn(mat[pivot][col]) == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(mat[pivot], mat[rank]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || sgn(mat[r][col]) == 0) continue;
            Rat f = mat[r][col] / mat[rank][col];
            for (std::size_t c2 = col; c2 < n; ++c2) mat[r][c2] -= f * mat[rank][c2];
        }
        pivot_of_row.push_back(col);
        is_pivot[col] = 1;
        ++rank;
    }
    std::vector<std::vector<double>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<double> v(n, 0.0);
        v[free] = 1.0;
        for (std::size_t r = 0; r < rank; ++r) {
            Rat val = -mat[r][free] / mat[r][pivot_of_row[r]];
            v[pivot_of_row[r]] = val.get_d();
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

bool thm15_check(const Gf2Matrix& h, const std::vector<double>& s, std::size_t covers,
                 const std::vector<std::size_t>& m_set, std::uint64_t seed) {
    TannerGraph g = TannerGraph::from_matrix(h);
    std::vector<std::vector<double>> h_real = h.to_real();
    L1Result base = minimize_l1(h_real, s);  // throws when the base is infeasible

    Rng rng(seed);
    for (std::size_t c = 0; c < covers; ++c) {
        std::size_t M = pick_m(m_set, rng);
        auto [spec, lifted] = make_cover(g, M, derive_seed(seed, c));
        std::vector<std::vector<double>> h_lift = lifted.realized.to_real();
        std::vector<double> s_lift = lift_vector(s, M);
        L1Result up = minimize_l1(h_lift, s_lift);
        double lifted_value = up.value / static_cast<double>(M);
        if (lifted_value < base.value - 1e-7) return false;
        std::vector<double> phi = project_vector(up.x, M);
        if (linf_residual(h_real, phi, s) > 1e-7) return false;  // projection must stay feasible
        double phi_l1 = l1_norm(phi);
        if (phi_l1 < base.value - 1e-7) return false;
        if (phi_l1 > lifted_value + 1e-7) return false;  // fiber-averaging never raises the cost
    }
    return true;
}

bool cclpd_graphcover_check(const Gf2Matrix& h, const LlrVector& lambda, std::size_t covers,
                            const std::vector<std::size_t>& m_set, std::uint64_t seed,
                            std::size_t cap) {
    TannerGraph g = TannerGraph::from_matrix(h);
    Gf2Vector ml = mld_bruteforce(h, lambda, cap);
    double ml_cost = 0.0;
    for (std::size_t i : ml.support()) ml_cost += lambda.lambda[i];
    double lp_cost = cclpd_decode(h, lambda).cost;

    Rng rng(seed);
    bool any = false;
    double best = 0.0;
    for (std::size_t c = 0; c < covers; ++c) {
        std::size_t M = pick_m(m_set, rng);
        auto [spec, lifted] = make_cover(g, M, derive_seed(seed, c));
        std::vector<double> lifted_lambda = lift_vector(lambda.lambda, M);
        for (const Gf2Vector& word : enumerate_codewords(lifted.realized, cap)) {
            double cost = 0.0;
            for (std::size_t i : word.support()) cost += lifted_lambda[i];
            cost /= static_cast<double>(M);
            if (!any || cost < best) best = cost;
            any = true;
        }
    }
    if (!any) return false;
    return best <= ml_cost + 1e-9 && best >= lp_cost - 1e-7;
}

double zero_infinity(const std::vector<double>& a, double tol) {
    std::size_t support = 0;
    double linf = 0.0;
    for (double x : a) {
        if (std::abs(x) > tol) ++support;
        linf = std::max(linf, std::abs(x));
    }
    return static_cast<double>(support) * linf;
}

bool csrel_lower_bound_check(const std::vector<std::vector<double>>& h_signed,
                             const std::vector<double>& s, std::size_t covers,
                             const std::vector<std::size_t>& m_set, std::uint64_t seed) {
    if (h_signed.empty() || h_signed[0].empty())
        throw std::invalid_argument("csrel_lower_bound_check: empty matrix");
    for (const auto& row : h_signed)
        for (double x : row)
            if (x != 0.0 && x != 1.0 && x != -1.0)
                throw std::invalid_argument("csrel_lower_bound_check: entries must be in {0,1,-1}");

    L1Result base = minimize_l1(h_signed, s);
    const std::size_t n = h_signed[0].size();

    Rng rng(seed);
    for (std::size_t c = 0; c < covers; ++c) {
        std::size_t M = pick_m(m_set, rng);
        std::vector<std::vector<double>> h_lift = lift_signed(h_signed, M, derive_seed(seed, c));
        // One feasible sample per cover: lift of a base-feasible point plus
        // lifted-nullspace noise, so the projected syndrome equals s by
        // construction.
        std::vector<double> e_tilde = lift_vector(base.x, M);
        std::vector<std::vector<double>> nullspace = rational_nullspace(h_lift);
        for (const auto& v : nullspace) {
            double coef = rng.real(-2.0, 2.0);
            for (std::size_t i = 0; i < n * M; ++i) e_tilde[i] += coef * v[i];
        }
        double value = zero_infinity(e_tilde) / static_cast<double>(M);
        if (value < base.value - 1e-7) return false;
    }
    return true;
}

}  // namespace ldpcsense
