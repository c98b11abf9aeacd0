#include "ldpcsense/cclpd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ldpcsense/polytope.hpp"

namespace ldpcsense {

ChannelModel ChannelModel::bsc(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5)) throw std::invalid_argument("bsc: need 0 < epsilon < 1/2");
    return {ChannelKind::Bsc, epsilon};
}

ChannelModel ChannelModel::awgn(double snr) {
    if (!(snr > 0.0)) throw std::invalid_argument("awgn: need snr > 0");
    return {ChannelKind::Awgn, snr};
}

ChannelModel ChannelModel::bec(double p) {
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("bec: need 0 <= p < 1");
    return {ChannelKind::Bec, p};
}

std::vector<double> transmit(const ChannelModel& ch, const Gf2Vector& x, Rng& rng) {
    const std::size_t n = x.size();
    std::vector<double> y(n);
    switch (ch.kind) {
        case ChannelKind::Bsc:
            for (std::size_t i = 0; i < n; ++i) {
                bool flip = rng.real01() < ch.param;
                y[i] = static_cast<double>(x.get(i) != flip);
            }
            break;
        case ChannelKind::Awgn: {
            // Unit-energy BPSK with noise variance 1/(2 snr); Box-Muller.
            double sigma = std::sqrt(1.0 / (2.0 * ch.param));
            for (std::size_t i = 0; i < n; ++i) {
                double u1 = 1.0 - rng.real01();
                double u2 = rng.real01();
                double g = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
                y[i] = (x.get(i) ? -1.0 : 1.0) + sigma * g;
            }
            break;
        }
        case ChannelKind::Bec:
            for (std::size_t i = 0; i < n; ++i)
                y[i] = rng.real01() < ch.param ? kErasure : static_cast<double>(x.get(i));
            break;
    }
    return y;
}

LlrVector llr(const ChannelModel& ch, const std::vector<double>& y) {
    LlrVector out;
    out.lambda.resize(y.size());
    switch (ch.kind) {
        case ChannelKind::Bsc: {
            double mag = std::log((1.0 - ch.param) / ch.param);
            for (std::size_t i = 0; i < y.size(); ++i) {
                if (y[i] != 0.0 && y[i] != 1.0) throw std::invalid_argument("llr: BSC symbol not in {0,1}");
                out.lambda[i] = y[i] == 0.0 ? mag : -mag;
            }
            break;
        }
        case ChannelKind::Awgn: {
            double sigma2 = 1.0 / (2.0 * ch.param);
            for (std::size_t i = 0; i < y.size(); ++i) {
                if (!std::isfinite(y[i])) throw std::invalid_argument("llr: AWGN symbol not finite");
                out.lambda[i] = 2.0 * y[i] / sigma2;
            }
            break;
        }
        case ChannelKind::Bec:
            for (std::size_t i = 0; i < y.size(); ++i) {
                if (std::isnan(y[i]))
                    out.lambda[i] = 0.0;
                else if (y[i] == 0.0)
                    out.lambda[i] = kBecLlrSurrogate;
                else if (y[i] == 1.0)
                    out.lambda[i] = -kBecLlrSurrogate;
                else
                    throw std::invalid_argument("llr: BEC symbol not in {0,1,erasure}");
            }
            break;
    }
    return out;
}

namespace {

double llr_cost(const std::vector<double>& lambda, const Gf2Vector& x) {
    double c = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.get(i)) c += lambda[i];
    return c;
}

}  // namespace

Gf2Vector mld_bruteforce(const Gf2Matrix& h, const LlrVector& lambda, std::size_t cap) {
    if (lambda.lambda.size() != h.cols()) throw std::invalid_argument("mld_bruteforce: length mismatch");
    std::vector<Gf2Vector> words = enumerate_codewords(h, cap);
    std::size_t best = 0;
    double best_cost = llr_cost(lambda.lambda, words[0]);
    for (std::size_t w = 1; w < words.size(); ++w) {
        double c = llr_cost(lambda.lambda, words[w]);
        if (c < best_cost || (c == best_cost && words[w].lex_less(words[best]))) {
            best = w;
            best_cost = c;
        }
    }
    return words[best];
}

DecodeResult cclpd_decode(const Gf2Matrix& h, const LlrVector& lambda, SolveMode mode) {
    const std::size_t n = h.cols();
    if (lambda.lambda.size() != n) throw std::invalid_argument("cclpd_decode: length mismatch");
    std::vector<Halfspace> cuts = fundamental_polytope_cuts(h);

    // min <lambda, x> over 0 <= x <= 1 and cut + slack = rhs, slack >= 0.
    const std::size_t nc = cuts.size();
    LpProblem p;
    p.objective.assign(n + nc, 0.0);
    for (std::size_t i = 0; i < n; ++i) p.objective[i] = lambda.lambda[i];
    p.lower.assign(n + nc, 0.0);
    p.upper.assign(n + nc, kLpInf);
    for (std::size_t i = 0; i < n; ++i) p.upper[i] = 1.0;
    p.eq_lhs.assign(nc, std::vector<double>(n + nc, 0.0));
    p.eq_rhs.assign(nc, 0.0);
    for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t i = 0; i < n; ++i) p.eq_lhs[c][i] = cuts[c].normal[i].get_d();
        p.eq_lhs[c][n + c] = 1.0;
        p.eq_rhs[c] = cuts[c].rhs.get_d();
    }
    LpSolution sol = lp_solve(p, mode);
    if (sol.status != LpStatus::Optimal) throw std::runtime_error("cclpd_decode: LP not optimal");
    DecodeResult r;
    r.point.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(n));
    r.cost = 0.0;
    r.is_integral = true;
    for (std::size_t i = 0; i < n; ++i) {
        r.cost += lambda.lambda[i] * r.point[i];
        if (std::abs(r.point[i]) > 1e-6 && std::abs(r.point[i] - 1.0) > 1e-6) r.is_integral = false;
    }
    return r;
}

double cone_margin(const Gf2Matrix& h, const std::vector<double>& omega) {
    if (omega.size() != h.cols()) throw std::invalid_argument("cone_margin: length mismatch");
    double margin = std::numeric_limits<double>::infinity();
    for (double w : omega) margin = std::min(margin, w);
    for (std::size_t j = 0; j < h.rows(); ++j) {
        double row_sum = 0.0;
        for (std::size_t i = 0; i < h.cols(); ++i)
            if (h.get(j, i)) row_sum += omega[i];
        for (std::size_t i = 0; i < h.cols(); ++i)
            if (h.get(j, i)) margin = std::min(margin, row_sum - 2.0 * omega[i]);
    }
    return margin;
}

bool cone_membership(const Gf2Matrix& h, const std::vector<double>& omega, double tol) {
    return cone_margin(h, omega) >= -tol;
}

bool lemma2_certificate(const Gf2Matrix& h, const std::vector<std::size_t>& s, std::size_t cap) {
    std::vector<char> in_s(h.cols(), 0);
    for (std::size_t i : s) {
        if (i >= h.cols()) throw std::invalid_argument("lemma2_certificate: index out of range");
        in_s[i] = 1;
    }
    for (const auto& vertex : fundamental_polytope_vertices(h, cap)) {
        Rat mass_s(0), mass_rest(0);
        bool zero = true;
        for (std::size_t i = 0; i < vertex.size(); ++i) {
            if (sgn(vertex[i]) != 0) zero = false;
            (in_s[i] ? mass_s : mass_rest) += vertex[i];
        }
        if (!zero && mass_s >= mass_rest) return false;
    }
    return true;
}

std::pair<Gf2Vector, Gf2Vector> hard_decision_and_syndrome(const LlrVector& lambda,
                                                           const Gf2Matrix& h) {
    if (lambda.lambda.size() != h.cols())
        throw std::invalid_argument("hard_decision_and_syndrome: length mismatch");
    Gf2Vector ybar(h.cols());
    for (std::size_t i = 0; i < h.cols(); ++i)
        if (lambda.lambda[i] < 0.0) ybar.set(i, true);
    return {ybar, syndrome_gf2(h, ybar)};
}

bool mld3_equivalence_check(const Gf2Matrix& h, const LlrVector& lambda, std::size_t cap) {
    std::vector<Gf2Vector> words = enumerate_codewords(h, cap);
    auto [ybar, syn] = hard_decision_and_syndrome(lambda, h);
    (void)syn;  // e = ybar + x automatically satisfies H e = s

    double best1 = std::numeric_limits<double>::infinity();
    double best3 = std::numeric_limits<double>::infinity();
    std::vector<double> cost1(words.size()), cost3(words.size());
    for (std::size_t w = 0; w < words.size(); ++w) {
        cost1[w] = llr_cost(lambda.lambda, words[w]);
        Gf2Vector e = ybar;
        e ^= words[w];
        double c3 = 0.0;
        for (std::size_t i : e.support()) c3 += std::abs(lambda.lambda[i]);
        cost3[w] = c3;
        best1 = std::min(best1, cost1[w]);
        best3 = std::min(best3, cost3[w]);
    }
    // The two argmin sets must coincide under the coset map e = ybar + x.
    for (std::size_t w = 0; w < words.size(); ++w)
        if ((cost1[w] == best1) != (cost3[w] == best3)) return false;
    return true;
}

}  // namespace ldpcsense
