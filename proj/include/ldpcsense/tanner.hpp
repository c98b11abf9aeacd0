#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldpcsense/gf2.hpp"

// Tanner graphs, deterministic matrix constructions, girth computation,
// brute-force vertex-expansion certification, and alist file I/O.

namespace ldpcsense {

struct TannerGraph {
    std::size_t n_var = 0, n_chk = 0;
    std::vector<std::vector<std::size_t>> chk_adj;  // per check: sorted variable indices
    std::vector<std::vector<std::size_t>> var_adj;  // per variable: sorted check indices

    static TannerGraph from_matrix(const Gf2Matrix& h);
    Gf2Matrix to_matrix() const;
    std::size_t num_edges() const;
};

enum class ConstructionKind { GallagerRegular, GirthPeg, RandomColumnWeight, DensePm1 };

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::GallagerRegular;
    std::size_t dv = 3;  // column weight (left degree)
    std::size_t dc = 6;  // row weight (right degree); fixes m = n*dv/dc
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

// Binary construction result, or a signed {-1,0,+1} matrix for DensePm1.
struct ConstructedMatrix {
    ConstructionKind kind;
    std::optional<Gf2Matrix> binary;
    std::vector<std::vector<int>> signed_entries;  // DensePm1 only
};

ConstructedMatrix construct(const ConstructionSpec& spec);

// Shortest cycle length (even for bipartite graphs); nullopt for forests.
std::optional<std::size_t> girth(const TannerGraph& g);

// Independent girth oracle: smallest closed-walk length whose trace-style
// non-backtracking walk count is positive. Used to cross-check girth().
std::optional<std::size_t> girth_trace_oracle(const TannerGraph& g);

struct ExpansionReport {
    std::size_t dv = 0;
    double gamma = 0.0;
    double delta = 0.0;
    bool is_expander = false;
    std::optional<std::vector<std::size_t>> witness;  // failing left-subset, if any
};

// Exhaustively tests every variable subset S with |S| <= gamma * n_var for
// |N(S)| >= delta * dv * |S|. Throws when the graph is not left-regular or
// the subset count exceeds cap.
ExpansionReport check_expansion(const TannerGraph& g, double gamma, double delta, std::size_t cap);

// Recoverable-sparsity bound (3d-2)/(2d-1) * (gamma*n - 1) for a
// (dv, gamma, delta)-expander. Requires delta > 2/3 + 1/(3 dv) and
// delta * dv integral.
double corollary1_k_bound(std::size_t dv, double gamma, double delta, std::size_t n);

// Reference recoverable-sparsity fractions reported for three ensembles at
// m/n = 1/2; asymptotic values, recorded for documentation only.
inline constexpr double kAlphaExpanderDv32 = 0.000175;   // dv = 32 expander, worst case
inline constexpr double kAlphaRandomDv8 = 0.002;         // dv = 8 random columns, random support
inline constexpr double kAlphaRegular36Girth = 0.05;     // (3,6)-regular, logarithmic girth

// alist text format:
//   line 1: "n m"            line 2: "max_col_deg max_row_deg"
//   line 3: column degrees   line 4: row degrees
//   then per-column 1-based check indices padded with 0 to max_col_deg,
//   then per-row variable indices likewise.
void write_alist(const std::string& path, const Gf2Matrix& h);
Gf2Matrix read_alist(const std::string& path);

}  // namespace ldpcsense
