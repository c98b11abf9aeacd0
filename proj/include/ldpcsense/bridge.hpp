#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ldpcsense/gf2.hpp"

// The nullspace-to-fundamental-cone mapping over a shared zero-one matrix,
// its complex / lifted / multi-vector extensions, and the pseudo-weight gate
// that certifies the strict nullspace property. All results are one-way:
// cone membership is never used to infer nullspace membership.

namespace ldpcsense {

using Cplx = std::complex<double>;

struct PseudoCodeword {
    std::vector<double> omega;
    double cone_margin = 0.0;  // min slack over the cone inequalities
};

// Complex (or signed-integer) matrix carrying its entrywise-magnitude view.
struct MagnitudeMatrix {
    std::vector<std::vector<Cplx>> entries;

    static MagnitudeMatrix from_real(const std::vector<std::vector<double>>& real);
    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
    // Entrywise |h|, rounded; throws when a magnitude is not an integer
    // within 1e-9.
    std::vector<std::vector<std::size_t>> int_magnitude() const;
    // Magnitude view as a parity-check matrix; requires |h| in {0,1}.
    Gf2Matrix magnitude_gf2() const;
};

// |nu| with a passing cone certificate; requires H nu = 0 within 1e-9 scale
// and entries in {0,1}.
PseudoCodeword bridge_map(const std::vector<std::vector<double>>& h01,
                          const std::vector<double>& nu);

// Complex variant: entrywise |nu_i| lies in the cone of |H| whenever
// |h_{j,i}| is 0 or 1 and H nu = 0.
PseudoCodeword bridge_map_complex(const MagnitudeMatrix& h, const std::vector<Cplx>& nu);

// M-fold cover per the magnitude procedure: each nonzero entry h becomes
// (h/|h|) times a sum of |h| disjoint-support M x M permutation matrices
// (seed-chosen); zero entries become zero blocks. Requires M >= max |h|.
MagnitudeMatrix matrix_cover(const MagnitudeMatrix& h, std::size_t M, std::uint64_t seed);

struct LiftedBridgeResult {
    MagnitudeMatrix cover;
    std::vector<Cplx> nu_lifted;
    PseudoCodeword certificate;  // |nu^{lift}| in the cone of |cover|
};

// Lifts nu into the nullspace of a seeded cover and certifies the image;
// also spot-checks the converse direction (projections of cover-nullspace
// samples land in the base nullspace).
LiftedBridgeResult lifted_bridge(const MagnitudeMatrix& h, std::size_t M,
                                 const std::vector<Cplx>& nu, std::uint64_t seed);

enum class VecNorm { L1, L2 };

// omega_i = ||(nu^(1)_i, ..., nu^(L)_i)|| for nullspace vectors nu^(l);
// scalar combinations are expressed by pre-scaling the inputs.
PseudoCodeword multi_vector_bridge(const MagnitudeMatrix& h,
                                   const std::vector<std::vector<Cplx>>& nus, VecNorm norm);

// True iff the minimum BSC pseudo-weight over the fundamental polytope
// exceeds 2k, certifying the strict nullspace property at (k, C = 1).
// k = 0 always passes.
bool lemma5_gate(const Gf2Matrix& h, std::size_t k, std::size_t cap);

}  // namespace ldpcsense
