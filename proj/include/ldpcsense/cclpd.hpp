#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "ldpcsense/gf2.hpp"
#include "ldpcsense/lp.hpp"
#include "ldpcsense/rng.hpp"

// Channel models and LLRs, blockwise ML decoding by brute force, LP decoding
// over the fundamental polytope, cone membership, and the brute-force
// reformulation checks.

namespace ldpcsense {

enum class ChannelKind { Bsc, Awgn, Bec };

// Received-vector alphabet: BSC wants exact 0/1 entries, AWGN wants finite
// reals (BPSK 0 -> +1, 1 -> -1 plus noise), BEC wants 0/1 with erasures
// encoded as kErasure.
inline const double kErasure = std::numeric_limits<double>::quiet_NaN();

// Surrogate magnitude standing in for the infinite LLR of a known BEC bit;
// keeps the erasure channel on the one LP code path.
inline constexpr double kBecLlrSurrogate = 1e6;

struct ChannelModel {
    ChannelKind kind = ChannelKind::Bsc;
    double param = 0.0;  // epsilon (BSC), snr (AWGN, linear), p (BEC)

    static ChannelModel bsc(double epsilon);
    static ChannelModel awgn(double snr);
    static ChannelModel bec(double p);
};

struct LlrVector {
    std::vector<double> lambda;
};

// Simulates one transmission of codeword x through the channel.
std::vector<double> transmit(const ChannelModel& ch, const Gf2Vector& x, Rng& rng);

// Per-symbol log-likelihood ratios. Throws on alphabet mismatch.
LlrVector llr(const ChannelModel& ch, const std::vector<double>& y);

// Codeword minimizing <lambda, x>; ties broken lexicographically. Throws
// when 2^(n - rank) exceeds cap.
Gf2Vector mld_bruteforce(const Gf2Matrix& h, const LlrVector& lambda, std::size_t cap);

struct DecodeResult {
    std::vector<double> point;  // optimal vertex in [0,1]^n
    bool is_integral = false;   // every coordinate within 1e-6 of {0,1}
    double cost = 0.0;
};

// LP decoding: min <lambda, x> over the fundamental polytope, realized by
// the odd-subset cuts of every check row. Throws when a row has degree > 12.
DecodeResult cclpd_decode(const Gf2Matrix& h, const LlrVector& lambda,
                          SolveMode mode = SolveMode::Float);

// Fundamental-cone membership: omega >= 0 and, per check j and i in I_j,
// omega_i <= sum of the other omega over I_j; all within tol.
bool cone_membership(const Gf2Matrix& h, const std::vector<double>& omega, double tol = kLpFeasTol);
// Smallest slack over all cone inequalities (negative = violated).
double cone_margin(const Gf2Matrix& h, const std::vector<double>& omega);

// True iff every nonzero vertex omega of the fundamental polytope satisfies
// |omega_S|_1 < |omega_Sbar|_1 (sufficient for the whole cone by conic
// scaling). Exact arithmetic; throws when the vertex count exceeds cap.
bool lemma2_certificate(const Gf2Matrix& h, const std::vector<std::size_t>& s, std::size_t cap);

// Hard decisions (lambda_i > 0 -> 0, ties to 0) and the induced syndrome.
std::pair<Gf2Vector, Gf2Vector> hard_decision_and_syndrome(const LlrVector& lambda,
                                                           const Gf2Matrix& h);

// Double brute force: the <lambda, x>-minimizing codewords map, via
// e = ybar - x (mod 2), onto the minimizers of |lambda_supp(e)|_1 subject to
// H e = s (mod 2); argmin sets compared as sets.
bool mld3_equivalence_check(const Gf2Matrix& h, const LlrVector& lambda, std::size_t cap);

}  // namespace ldpcsense
