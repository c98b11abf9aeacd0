#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "ldpcsense/gf2.hpp"
#include "ldpcsense/rational.hpp"

// Channel pseudo-weights of nonnegative vectors, their minimum over a
// parity-check matrix's fundamental polytope / cone, and the set-size
// balancedness check they certify.

namespace ldpcsense {

struct WeightReport {
    double awgnc = 0.0;      // |w|_1^2 / |w|_2^2
    double bsc = 0.0;        // 2 F^{-1}(|w|_1 / 2), F the sorted cumulative profile
    double bsc_prime = 0.0;  // effective-weight case split (integer-valued)
    std::size_t bec = 0;     // |supp(w)|
    double maxfrac = 0.0;    // |w|_1 / |w|_inf
};

// All five functionals; zero vector maps to the all-zero report. Throws on
// negative entries.
WeightReport pseudo_weights(const std::vector<double>& omega);

// bsc_prime even  => bsc == bsc_prime;
// bsc_prime odd   => bsc_prime - 1 < bsc < bsc_prime + 1.
bool bsc_prime_relation_check(const std::vector<double>& omega);

// If |S| < bsc/2 or |S| < bsc_prime/2, asserts the strict balancedness
// |w_S|_1 < |w_Sbar|_1 and returns its outcome; vacuously true otherwise.
bool lemma4_check(const Gf2Matrix& h, const std::vector<double>& omega,
                  const std::vector<std::size_t>& s);

inline constexpr double kWeightInfinite = std::numeric_limits<double>::infinity();

// min over i of (min |w|_1 over the fundamental cone with w_i = 1); equals
// the minimum max-fractional weight. Infinite sentinel when the cone is {0}.
double min_maxfrac_weight(const Gf2Matrix& h);
// Same quantity decided in exact arithmetic; nullopt-like infinite encoded
// as denominator-zero avoided: throws nothing, returns (value, finite flag).
struct ExactMaxfrac {
    Rat value;
    bool finite = false;
};
ExactMaxfrac min_maxfrac_weight_exact(const Gf2Matrix& h);

enum class PseudoWeightKind { Awgnc, Bsc, BscPrime, Bec, MaxFrac };

// Minimum of the chosen functional over the nonzero vertices of the
// fundamental polytope (equals the cone minimum by scale invariance).
// Infinite sentinel when the polytope is {0}; throws when the vertex count
// exceeds cap.
double min_pseudoweight_enumerated(const Gf2Matrix& h, PseudoWeightKind kind, std::size_t cap);

}  // namespace ldpcsense
