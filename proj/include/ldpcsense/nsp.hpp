#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

// Exact verification of the (strict) nullspace property by sign-pattern LP
// enumeration, and the sparse-recovery equivalence test it certifies.

namespace ldpcsense {

struct NspWorstCase {
    std::vector<std::size_t> s;
    std::vector<double> nu;   // nullspace vector scaled to |nu|_1 = 1
    double margin = 0.0;      // C |nu_S|_1 - |nu_Sbar|_1 at the maximizer
};

struct NspCertificate {
    std::size_t k = 0;
    double c = 1.0;
    bool strict = true;
    bool holds = false;
    std::optional<NspWorstCase> worst_case;
};

// Maximizes C |nu_S|_1 - |nu_Sbar|_1 over the nullspace slice |nu|_1 = 1,
// one LP per sign pattern (the leading sign is pinned; a pattern and its
// negation give the same value). The property holds iff the maximum is < 0
// (strict) or <= 0 (non-strict). Float prescreen; any margin within 1e-9 of
// zero is re-decided in exact rational arithmetic. Requires n <= 16;
// trivial nullspaces hold vacuously.
NspCertificate check_nsp_set(const std::vector<std::vector<double>>& h,
                             const std::vector<std::size_t>& s, double c, bool strict);

// Conjunction over all S with |S| = k (subsets inherit by monotonicity);
// returns the first violating S if any. k = 0 holds trivially.
NspCertificate check_nsp_k(const std::vector<std::vector<double>>& h, std::size_t k, double c,
                           bool strict);

// Requires a strict NSP(k, C=1) certificate, then checks on random k-sparse
// signals that basis pursuit recovers exactly and agrees with the sparsest
// solution. Throws when the hypothesis is not certified.
bool thm2_equivalence(const std::vector<std::vector<double>>& h, std::size_t k, std::size_t trials,
                      std::uint64_t seed);

}  // namespace ldpcsense
