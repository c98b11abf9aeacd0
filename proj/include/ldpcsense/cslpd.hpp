#pragma once

#include <cstddef>
#include <vector>

#include "ldpcsense/lp.hpp"

// Compressed-sensing recovery: sparsest-solution brute force, basis-pursuit
// recovery, and the approximation-guarantee calculators and verifier.

namespace ldpcsense {

struct MeasurementInstance {
    std::vector<std::vector<double>> h;  // m x n measurement matrix
    std::vector<double> e_true;
    std::vector<double> s;  // h * e_true

    static MeasurementInstance from_error(std::vector<std::vector<double>> h,
                                          std::vector<double> e_true);
    std::size_t n() const { return h.empty() ? 0 : h[0].size(); }
};

struct CsOptResult {
    std::vector<double> e;
    std::size_t k = 0;  // support size of the first feasible support found
};

// Smallest-support solution of H e = s, found by enumerating supports in
// increasing size (lexicographic within a size) and solving each restricted
// system by rational elimination. Throws when no support of size <= kmax
// admits a solution.
CsOptResult cs_opt_bruteforce(const MeasurementInstance& inst, std::size_t kmax);

struct RecoveryResult {
    std::vector<double> e_hat;
    double l1_value = 0.0;
    bool exact = false;  // linf distance to e_true <= 1e-6
};

RecoveryResult cs_lpd(const MeasurementInstance& inst, SolveMode mode = SolveMode::Float);

// l1/l1 error bound 2 (C+1)/(C-1) |e_Sbar|_1; requires C > 1.
double thm3_bound(double c, const std::vector<double>& e_true, const std::vector<std::size_t>& s);
// l2/l1 bound (C''/sqrt(k)) |e_Sbar|_1 with C'' = 1/(sqrt(C'/4k) - 1); C' > 4k.
double thm6_bound(double c_prime, std::size_t k, const std::vector<double>& e_true,
                  const std::vector<std::size_t>& s);
// linf/l1 bound (C''/k) |e_Sbar|_1 with C'' = 1/(C'/2k - 1); C' > 2k.
double thm7_bound(double c_prime, std::size_t k, const std::vector<double>& e_true,
                  const std::vector<std::size_t>& s);

enum class GuaranteeKind { L1L1, L2L1, LinfL1 };

// Runs cs_lpd and checks the error norm against the bound (tolerance 1e-7).
// The caller certifies the matching hypothesis through the nsp or
// pseudoweight module; passing certified = false throws.
bool verify_guarantee(const MeasurementInstance& inst, const std::vector<std::size_t>& s_set,
                      GuaranteeKind kind, double bound_value, bool certified);

}  // namespace ldpcsense
