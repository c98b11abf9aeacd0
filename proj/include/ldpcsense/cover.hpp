#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ldpcsense/cclpd.hpp"
#include "ldpcsense/gf2.hpp"
#include "ldpcsense/tanner.hpp"

// Tanner-graph M-covers, fiber lift/projection maps, the graph-cover
// reformulation checks for both LP relaxations, and the zero-infinity
// objective. Coordinates of lifted vectors are blocked by base index:
// position (i, m) lives at i*M + m.

namespace ldpcsense {

struct CoverSpec {
    std::size_t M = 1;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // base edges (check, var)
    std::vector<std::vector<std::size_t>> edge_perm;         // per edge, a permutation of [M]
};

struct LiftedMatrix {
    std::size_t base_rows = 0, base_cols = 0, M = 1;
    Gf2Matrix realized;

    LiftedMatrix() : realized(1, 1) {}
};

// a^{lift M}: each coordinate repeated across its fiber.
std::vector<double> lift_vector(const std::vector<double>& a, std::size_t M);
// Fiber averages; inverse of lift on lifted vectors.
std::vector<double> project_vector(const std::vector<double>& a_tilde, std::size_t M);

// Uniformly seeded edge permutations; M = 1 reproduces the base matrix.
std::pair<CoverSpec, LiftedMatrix> make_cover(const TannerGraph& g, std::size_t M,
                                              std::uint64_t seed);
Gf2Matrix realize_cover(const TannerGraph& g, const CoverSpec& spec);

// For each sampled cover, the lifted l1 relaxation value (1/M) |e~|_1 with
// H~ e~ = s^{lift} must equal the base value within 1e-7, and the projected
// optimum must be base-feasible with no smaller l1 cost.
bool thm15_check(const Gf2Matrix& h, const std::vector<double>& s, std::size_t covers,
                 const std::vector<std::size_t>& m_set, std::uint64_t seed);

// Sandwich bounds for blockwise graph-cover decoding: over sampled covers,
// min (1/M) <lambda^{lift}, x~> over lifted codewords is <= the base ML cost
// and >= the base LP cost - 1e-7. Sampling gives bounds only, never the
// all-covers minimum.
bool cclpd_graphcover_check(const Gf2Matrix& h, const LlrVector& lambda, std::size_t covers,
                            const std::vector<std::size_t>& m_set, std::uint64_t seed,
                            std::size_t cap);

// |a|_0 * |a|_inf; support counted above tol.
double zero_infinity(const std::vector<double>& a, double tol = 1e-9);

// First direction of the zero-infinity relaxation equivalence: for sampled
// covers of a {0,+1,-1} matrix and sampled lifted-feasible (e~, s~) with
// projected syndrome s, (1/M) |e~|_{0,inf} >= the base l1 value - 1e-7.
bool csrel_lower_bound_check(const std::vector<std::vector<double>>& h_signed,
                             const std::vector<double>& s, std::size_t covers,
                             const std::vector<std::size_t>& m_set, std::uint64_t seed);

}  // namespace ldpcsense
