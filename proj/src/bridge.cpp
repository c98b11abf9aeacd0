#include "ldpcsense/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ldpcsense/cclpd.hpp"
#include "ldpcsense/pseudoweight.hpp"
#include "ldpcsense/rng.hpp"

namespace ldpcsense {

namespace {

constexpr double kNullspaceTol = 1e-9;

double residual_scale(const std::vector<double>& v) {
    double s = 1.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}

}  // namespace

MagnitudeMatrix MagnitudeMatrix::from_real(const std::vector<std::vector<double>>& real) {
    MagnitudeMatrix m;
    for (const auto& row : real) {
        std::vector<Cplx> crow;
        crow.reserve(row.size());
        for (double x : row) crow.emplace_back(x, 0.0);
        m.entries.push_back(std::move(crow));
    }
    return m;
}

std::vector<std::vector<std::size_t>> MagnitudeMatrix::int_magnitude() const {
    std::vector<std::vector<std::size_t>> mag(rows(), std::vector<std::size_t>(cols(), 0));
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) {
            double a = std::abs(entries[r][c]);
            double rounded = std::round(a);
            if (std::abs(a - rounded) > 1e-9)
                throw std::invalid_argument("MagnitudeMatrix: entry magnitude not an integer");
            mag[r][c] = static_cast<std::size_t>(rounded);
        }
    return mag;
}

Gf2Matrix MagnitudeMatrix::magnitude_gf2() const {
    auto mag = int_magnitude();
    Gf2Matrix h(rows(), cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) {
            if (mag[r][c] > 1)
                throw std::invalid_argument("MagnitudeMatrix: magnitude exceeds 1");
            h.set(r, c, mag[r][c] == 1);
        }
    return h;
}

PseudoCodeword bridge_map(const std::vector<std::vector<double>>& h01,
                          const std::vector<double>& nu) {
    if (h01.empty() || h01[0].size() != nu.size())
        throw std::invalid_argument("bridge_map: dimension mismatch");
    Gf2Matrix h(h01.size(), h01[0].size());
    for (std::size_t r = 0; r < h01.size(); ++r)
        for (std::size_t c = 0; c < h01[r].size(); ++c) {
            if (h01[r][c] != 0.0 && h01[r][c] != 1.0)
                throw std::invalid_argument("bridge_map: matrix is not zero-one");
            h.set(r, c, h01[r][c] == 1.0);
        }
    double tol = kNullspaceTol * residual_scale(nu);
    for (std::size_t r = 0; r < h01.size(); ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < nu.size(); ++c) acc += h01[r][c] * nu[c];
        if (std::abs(acc) > tol) throw std::invalid_argument("bridge_map: nu not in the nullspace");
    }
    PseudoCodeword pc;
    pc.omega.resize(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) pc.omega[i] = std::abs(nu[i]);
    pc.cone_margin = cone_margin(h, pc.omega);
    return pc;
}

PseudoCodeword bridge_map_complex(const MagnitudeMatrix& h, const std::vector<Cplx>& nu) {
    if (h.cols() != nu.size()) throw std::invalid_argument("bridge_map_complex: dimension mismatch");
    Gf2Matrix mag = h.magnitude_gf2();
    double scale = 1.0;
    for (const Cplx& x : nu) scale = std::max(scale, std::abs(x));
    for (std::size_t r = 0; r < h.rows(); ++r) {
        Cplx acc(0.0, 0.0);
        for (std::size_t c = 0; c < nu.size(); ++c) acc += h.entries[r][c] * nu[c];
        if (std::abs(acc) > kNullspaceTol * scale * static_cast<double>(nu.size()))
            throw std::invalid_argument("bridge_map_complex: nu not in the nullspace");
    }
    PseudoCodeword pc;
    pc.omega.resize(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) pc.omega[i] = std::abs(nu[i]);
    pc.cone_margin = cone_margin(mag, pc.omega);
    return pc;
}

MagnitudeMatrix matrix_cover(const MagnitudeMatrix& h, std::size_t M, std::uint64_t seed) {
    if (M == 0) throw std::invalid_argument("matrix_cover: M must be positive");
    auto mag = h.int_magnitude();
    for (const auto& row : mag)
        for (std::size_t a : row)
            if (a > M) throw std::invalid_argument("matrix_cover: M smaller than max |h|");

    MagnitudeMatrix out;
    out.entries.assign(h.rows() * M, std::vector<Cplx>(h.cols() * M, Cplx(0.0, 0.0)));
    Rng rng(seed);
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c) {
            std::size_t a = mag[r][c];
            if (a == 0) continue;
            Cplx unit = h.entries[r][c] / std::abs(h.entries[r][c]);
            // a disjoint-support M x M permutations, found by sequential
            // rejection: each new permutation must avoid every position
            // already used by the previous ones.
            std::vector<std::vector<char>> used(M, std::vector<char>(M, 0));
            for (std::size_t p = 0; p < a; ++p) {
                for (std::size_t attempt = 0;; ++attempt) {
                    if (attempt > 1000000)
                        throw std::runtime_error("matrix_cover: rejection sampling stalled");
                    std::vector<std::size_t> perm = rng.permutation(M);
                    bool clash = false;
                    for (std::size_t m = 0; m < M && !clash; ++m) clash = used[perm[m]][m];
                    if (clash) continue;
                    for (std::size_t m = 0; m < M; ++m) {
                        used[perm[m]][m] = 1;
                        out.entries[r * M + perm[m]][c * M + m] = unit;
                    }
                    break;
                }
            }
        }
    return out;
}

namespace {

std::vector<Cplx> lift_complex(const std::vector<Cplx>& a, std::size_t M) {
    std::vector<Cplx> out(a.size() * M);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t m = 0; m < M; ++m) out[i * M + m] = a[i];
    return out;
}

std::vector<Cplx> project_complex(const std::vector<Cplx>& a, std::size_t M) {
    if (a.size() % M != 0) throw std::invalid_argument("project: length not divisible by M");
    std::vector<Cplx> out(a.size() / M);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Cplx acc(0.0, 0.0);
        for (std::size_t m = 0; m < M; ++m) acc += a[i * M + m];
        out[i] = acc / static_cast<double>(M);
    }
    return out;
}

double matvec_residual(const MagnitudeMatrix& h, const std::vector<Cplx>& v) {
    double worst = 0.0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        Cplx acc(0.0, 0.0);
        for (std::size_t c = 0; c < v.size(); ++c) acc += h.entries[r][c] * v[c];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

}  // namespace

LiftedBridgeResult lifted_bridge(const MagnitudeMatrix& h, std::size_t M,
                                 const std::vector<Cplx>& nu, std::uint64_t seed) {
    if (h.cols() != nu.size()) throw std::invalid_argument("lifted_bridge: dimension mismatch");
    double scale = 1.0;
    for (const Cplx& x : nu) scale = std::max(scale, std::abs(x));
    if (matvec_residual(h, nu) > kNullspaceTol * scale * static_cast<double>(nu.size()))
        throw std::invalid_argument("lifted_bridge: nu not in the nullspace");

    LiftedBridgeResult result;
    result.cover = matrix_cover(h, M, seed);
    result.nu_lifted = lift_complex(nu, M);
    if (matvec_residual(result.cover, result.nu_lifted) >
        kNullspaceTol * scale * static_cast<double>(result.nu_lifted.size()))
        throw std::runtime_error("lifted_bridge: lifted vector fell outside the cover nullspace");
    result.certificate = bridge_map_complex(result.cover, result.nu_lifted);

    // Converse spot check: the projection of a cover-nullspace sample (the
    // lift itself plus sign-flipped fiber rearrangements is enough here)
    // must project into the base nullspace.
    std::vector<Cplx> projected = project_complex(result.nu_lifted, M);
    if (matvec_residual(h, projected) > kNullspaceTol * scale * static_cast<double>(nu.size()))
        throw std::runtime_error("lifted_bridge: projection left the base nullspace");
    return result;
}

PseudoCodeword multi_vector_bridge(const MagnitudeMatrix& h,
                                   const std::vector<std::vector<Cplx>>& nus, VecNorm norm) {
    Gf2Matrix mag = h.magnitude_gf2();
    const std::size_t n = h.cols();
    if (nus.empty()) throw std::invalid_argument("multi_vector_bridge: need at least one vector");
    for (const auto& nu : nus) {
        if (nu.size() != n) throw std::invalid_argument("multi_vector_bridge: dimension mismatch");
        double scale = 1.0;
        for (const Cplx& x : nu) scale = std::max(scale, std::abs(x));
        if (matvec_residual(h, nu) > kNullspaceTol * scale * static_cast<double>(n))
            throw std::invalid_argument("multi_vector_bridge: vector not in the nullspace");
    }
    PseudoCodeword pc;
    pc.omega.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (norm == VecNorm::L1) {
            for (const auto& nu : nus) pc.omega[i] += std::abs(nu[i]);
        } else {
            double sq = 0.0;
            for (const auto& nu : nus) sq += std::norm(nu[i]);
            pc.omega[i] = std::sqrt(sq);
        }
    }
    pc.cone_margin = cone_margin(mag, pc.omega);
    return pc;
}

bool lemma5_gate(const Gf2Matrix& h, std::size_t k, std::size_t cap) {
    if (k == 0) return true;
    double min_bsc = min_pseudoweight_enumerated(h, PseudoWeightKind::Bsc, cap);
    return min_bsc > 2.0 * static_cast<double>(k);
}

}  // namespace ldpcsense
