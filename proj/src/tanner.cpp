#include "ldpcsense/tanner.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ldpcsense/rng.hpp"

namespace ldpcsense {

TannerGraph TannerGraph::from_matrix(const Gf2Matrix& h) {
    TannerGraph g;
    g.n_chk = h.rows();
    g.n_var = h.cols();
    g.chk_adj.resize(g.n_chk);
    g.var_adj.resize(g.n_var);
    for (std::size_t j = 0; j < g.n_chk; ++j)
        for (std::size_t i = 0; i < g.n_var; ++i)
            if (h.get(j, i)) {
                g.chk_adj[j].push_back(i);
                g.var_adj[i].push_back(j);
            }
    return g;
}

Gf2Matrix TannerGraph::to_matrix() const {
    Gf2Matrix h(n_chk, n_var);
    for (std::size_t j = 0; j < n_chk; ++j)
        for (std::size_t i : chk_adj[j]) h.set(j, i, true);
    return h;
}

std::size_t TannerGraph::num_edges() const {
    std::size_t e = 0;
    for (const auto& a : chk_adj) e += a.size();
    return e;
}

namespace {

std::size_t implied_rows(const ConstructionSpec& spec) {
    if (spec.dc == 0 || (spec.n * spec.dv) % spec.dc != 0)
        throw std::invalid_argument("construct: n*dv must be divisible by dc");
    return spec.n * spec.dv / spec.dc;
}

Gf2Matrix construct_gallager(const ConstructionSpec& spec) {
    if (spec.dv < 2) throw std::invalid_argument("construct: dv must be >= 2");
    if (spec.n % spec.dc != 0) throw std::invalid_argument("construct: n must be divisible by dc");
    const std::size_t m = implied_rows(spec);
    const std::size_t block_rows = spec.n / spec.dc;
    Gf2Matrix h(m, spec.n);
    Rng rng(spec.seed);
    for (std::size_t b = 0; b < spec.dv; ++b) {
        // Block 0 has dc consecutive ones per row; later blocks apply a
        // seed-derived column permutation to it.
        std::vector<std::size_t> perm(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i) perm[i] = i;
        if (b > 0) rng.shuffle(perm);
        for (std::size_t r = 0; r < block_rows; ++r)
            for (std::size_t c = r * spec.dc; c < (r + 1) * spec.dc; ++c)
                h.set(b * block_rows + r, perm[c], true);
    }
    return h;
}

// Progressive edge growth: each new edge attaches the variable to a check as
// far away as possible in the graph built so far, preferring low check
// degree; remaining ties are broken by the seeded RNG.
Gf2Matrix construct_peg(const ConstructionSpec& spec) {
    if (spec.dv < 2) throw std::invalid_argument("construct: dv must be >= 2");
    const std::size_t m = implied_rows(spec);
    const std::size_t n = spec.n;
    std::vector<std::vector<std::size_t>> var_adj(n), chk_adj(m);
    std::vector<std::size_t> chk_deg(m, 0);
    Rng rng(spec.seed);
    constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(m);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < spec.dv; ++k) {
            // BFS from v over the current graph, distances to checks.
            std::fill(dist.begin(), dist.end(), kUnreached);
            std::vector<std::size_t> var_dist(n, kUnreached);
            var_dist[v] = 0;
            std::deque<std::pair<bool, std::size_t>> queue;  // (is_check, index)
            queue.push_back({false, v});
            while (!queue.empty()) {
                auto [is_chk, u] = queue.front();
                queue.pop_front();
                if (is_chk) {
                    for (std::size_t w : chk_adj[u])
                        if (var_dist[w] == kUnreached) {
                            var_dist[w] = dist[u] + 1;
                            queue.push_back({false, w});
                        }
                } else {
                    for (std::size_t c : var_adj[u])
                        if (dist[c] == kUnreached) {
                            dist[c] = var_dist[u] + 1;
                            queue.push_back({true, c});
                        }
                }
            }
            std::vector<std::size_t> candidates;
            std::size_t best_dist = 0;
            bool any_unreached = false;
            for (std::size_t c = 0; c < m; ++c) {
                if (std::find(var_adj[v].begin(), var_adj[v].end(), c) != var_adj[v].end()) continue;
                if (dist[c] == kUnreached) {
                    if (!any_unreached) candidates.clear();
                    any_unreached = true;
                    candidates.push_back(c);
                } else if (!any_unreached) {
                    if (candidates.empty() || dist[c] > best_dist) {
                        best_dist = dist[c];
                        candidates.assign(1, c);
                    } else if (dist[c] == best_dist) {
                        candidates.push_back(c);
                    }
                }
            }
            if (candidates.empty()) throw std::runtime_error("construct: PEG ran out of checks");
            std::size_t min_deg = chk_deg[candidates[0]];
            for (std::size_t c : candidates) min_deg = std::min(min_deg, chk_deg[c]);
            std::vector<std::size_t> lightest;
            for (std::size_t c : candidates)
                if (chk_deg[c] == min_deg) lightest.push_back(c);
            std::size_t chosen = lightest[rng.below(lightest.size())];
            var_adj[v].push_back(chosen);
            chk_adj[chosen].push_back(v);
            ++chk_deg[chosen];
        }
    }
    Gf2Matrix h(m, n);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t v : chk_adj[c]) h.set(c, v, true);
    return h;
}

Gf2Matrix construct_random_columns(const ConstructionSpec& spec) {
    if (spec.dv < 2) throw std::invalid_argument("construct: dv must be >= 2");
    const std::size_t m = implied_rows(spec);
    if (spec.dv > m) throw std::invalid_argument("construct: dv exceeds row count");
    Gf2Matrix h(m, spec.n);
    Rng rng(spec.seed);
    for (std::size_t c = 0; c < spec.n; ++c)
        for (std::size_t r : rng.sample_without_replacement(spec.dv, m)) h.set(r, c, true);
    return h;
}

std::vector<std::vector<int>> construct_dense_pm1(const ConstructionSpec& spec) {
    const std::size_t m = implied_rows(spec);
    std::vector<std::vector<int>> h(m, std::vector<int>(spec.n, 0));
    Rng rng(spec.seed);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < spec.n; ++c) {
            double u = rng.real01();
            if (u < 1.0 / 6.0)
                h[r][c] = 1;
            else if (u >= 5.0 / 6.0)
                h[r][c] = -1;
        }
    return h;
}

}  // namespace

ConstructedMatrix construct(const ConstructionSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("construct: n must be positive");
    ConstructedMatrix out;
    out.kind = spec.kind;
    switch (spec.kind) {
        case ConstructionKind::GallagerRegular:
            out.binary = construct_gallager(spec);
            break;
        case ConstructionKind::GirthPeg:
            out.binary = construct_peg(spec);
            break;
        case ConstructionKind::RandomColumnWeight:
            out.binary = construct_random_columns(spec);
            break;
        case ConstructionKind::DensePm1:
            out.signed_entries = construct_dense_pm1(spec);
            break;
    }
    return out;
}

std::optional<std::size_t> girth(const TannerGraph& g) {
    // Girth = min over edges (u,w) of dist(u,w) in G minus that edge, + 1.
    const std::size_t n = g.n_var, m = g.n_chk;
    const std::size_t total = n + m;  // vars first, then checks
    std::vector<std::vector<std::size_t>> adj(total);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t v : g.chk_adj[c]) {
            adj[v].push_back(n + c);
            adj[n + c].push_back(v);
        }
    constexpr std::size_t kInf = static_cast<std::size_t>(-1);
    std::size_t best = kInf;
    std::vector<std::size_t> dist(total);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t c : g.var_adj[v]) {
            std::size_t target = n + c;
            std::fill(dist.begin(), dist.end(), kInf);
            dist[v] = 0;
            std::deque<std::size_t> queue{v};
            while (!queue.empty()) {
                std::size_t u = queue.front();
                queue.pop_front();
                if (best != kInf && dist[u] + 1 >= best) continue;
                for (std::size_t w : adj[u]) {
                    if (u == v && w == target) continue;  // skip the probed edge
                    if (w == v && u == target) continue;
                    if (dist[w] != kInf) continue;
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
            if (dist[target] != kInf) best = std::min(best, dist[target] + 1);
        }
    }
    if (best == kInf) return std::nullopt;
    return best;
}

std::optional<std::size_t> girth_trace_oracle(const TannerGraph& g) {
    // Boolean diagonal of powers of the directed-edge non-backtracking
    // transition matrix: the smallest length with a closed walk is the girth.
    struct DirEdge {
        std::size_t from, to;
    };
    const std::size_t n = g.n_var, m = g.n_chk;
    std::vector<DirEdge> edges;
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t v : g.chk_adj[c]) {
            edges.push_back({v, n + c});
            edges.push_back({n + c, v});
        }
    const std::size_t ne = edges.size();
    if (ne == 0) return std::nullopt;
    std::vector<std::vector<std::size_t>> out_of(n + m);
    for (std::size_t e = 0; e < ne; ++e) out_of[edges[e].from].push_back(e);
    std::vector<std::vector<std::size_t>> succ(ne);
    for (std::size_t e = 0; e < ne; ++e)
        for (std::size_t f : out_of[edges[e].to])
            if (edges[f].to != edges[e].from) succ[e].push_back(f);

    const std::size_t max_len = 2 * std::min(n, m);
    std::vector<std::vector<char>> reach(ne, std::vector<char>(ne, 0));
    for (std::size_t e = 0; e < ne; ++e) reach[e][e] = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
        bool closed = false;
        for (std::size_t start = 0; start < ne; ++start) {
            std::vector<char> next(ne, 0);
            for (std::size_t e = 0; e < ne; ++e)
                if (reach[start][e])
                    for (std::size_t f : succ[e]) next[f] = 1;
            reach[start] = std::move(next);
            if (reach[start][start]) closed = true;
        }
        if (closed) return len;
    }
    return std::nullopt;
}

ExpansionReport check_expansion(const TannerGraph& g, double gamma, double delta, std::size_t cap) {
    if (g.n_var == 0) throw std::invalid_argument("check_expansion: empty graph");
    const std::size_t dv = g.var_adj[0].size();
    for (const auto& a : g.var_adj)
        if (a.size() != dv) throw std::invalid_argument("check_expansion: graph is not left-regular");
    const std::size_t max_size =
        std::min(g.n_var, static_cast<std::size_t>(std::floor(gamma * static_cast<double>(g.n_var) + 1e-12)));
    // Count subsets before enumerating them.
    double total = 0.0;
    {
        double binom = 1.0;
        for (std::size_t s = 1; s <= max_size; ++s) {
            binom = binom * static_cast<double>(g.n_var - s + 1) / static_cast<double>(s);
            total += binom;
            if (total > static_cast<double>(cap)) throw std::length_error("check_expansion: cap exceeded");
        }
    }
    ExpansionReport report;
    report.dv = dv;
    report.gamma = gamma;
    report.delta = delta;
    report.is_expander = true;

    std::vector<char> in_nbhd(g.n_chk, 0);
    std::vector<std::size_t> subset;
    // Depth-first enumeration of all subsets of size 1..max_size.
    auto neighborhood_size = [&](const std::vector<std::size_t>& s) {
        std::fill(in_nbhd.begin(), in_nbhd.end(), 0);
        std::size_t count = 0;
        for (std::size_t v : s)
            for (std::size_t c : g.var_adj[v])
                if (!in_nbhd[c]) {
                    in_nbhd[c] = 1;
                    ++count;
                }
        return count;
    };
    std::vector<std::size_t> stack;
    auto recurse = [&](auto&& self, std::size_t start) -> bool {
        if (!stack.empty()) {
            double required = delta * static_cast<double>(dv) * static_cast<double>(stack.size());
            if (static_cast<double>(neighborhood_size(stack)) < required - 1e-12) {
                report.is_expander = false;
                report.witness = stack;
                return false;
            }
        }
        if (stack.size() == max_size) return true;
        for (std::size_t v = start; v < g.n_var; ++v) {
            stack.push_back(v);
            if (!self(self, v + 1)) return false;
            stack.pop_back();
        }
        return true;
    };
    recurse(recurse, 0);
    return report;
}

double corollary1_k_bound(std::size_t dv, double gamma, double delta, std::size_t n) {
    if (dv == 0) throw std::invalid_argument("corollary1_k_bound: dv must be positive");
    double threshold = 2.0 / 3.0 + 1.0 / (3.0 * static_cast<double>(dv));
    if (!(delta > threshold)) throw std::domain_error("corollary1_k_bound: expansion too weak");
    double dd = delta * static_cast<double>(dv);
    if (std::abs(dd - std::round(dd)) > 1e-9 || std::round(dd) < 1.0)
        throw std::domain_error("corollary1_k_bound: delta*dv must be a positive integer");
    return (3.0 * delta - 2.0) / (2.0 * delta - 1.0) * (gamma * static_cast<double>(n) - 1.0);
}

void write_alist(const std::string& path, const Gf2Matrix& h) {
    const std::size_t n = h.cols(), m = h.rows();
    std::vector<std::vector<std::size_t>> col_idx(n), row_idx(m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (h.get(r, c)) {
                col_idx[c].push_back(r + 1);
                row_idx[r].push_back(c + 1);
            }
    std::size_t max_col = 0, max_row = 0;
    for (const auto& v : col_idx) max_col = std::max(max_col, v.size());
    for (const auto& v : row_idx) max_row = std::max(max_row, v.size());

    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_alist: cannot open " + path);
    out << n << " " << m << "\n";
    out << max_col << " " << max_row << "\n";
    for (std::size_t c = 0; c < n; ++c) out << col_idx[c].size() << (c + 1 < n ? " " : "\n");
    for (std::size_t r = 0; r < m; ++r) out << row_idx[r].size() << (r + 1 < m ? " " : "\n");
    auto emit_padded = [&](const std::vector<std::size_t>& v, std::size_t width) {
        for (std::size_t i = 0; i < width; ++i) out << (i < v.size() ? v[i] : 0) << (i + 1 < width ? " " : "\n");
    };
    for (std::size_t c = 0; c < n; ++c) emit_padded(col_idx[c], max_col);
    for (std::size_t r = 0; r < m; ++r) emit_padded(row_idx[r], max_row);
    if (!out) throw std::runtime_error("write_alist: write failed for " + path);
}

namespace {

class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}
    long long next() {
        long long v;
        if (!(in_ >> v)) throw std::runtime_error("read_alist: malformed file (unexpected end or token)");
        return v;
    }
    bool at_end() {
        long long dummy;
        return !(in_ >> dummy);
    }

private:
    std::istream& in_;
};

}  // namespace

Gf2Matrix read_alist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_alist: cannot open " + path);
    TokenReader tok(in);
    long long n = tok.next(), m = tok.next();
    if (n <= 0 || m <= 0) throw std::runtime_error("read_alist: malformed file (dimensions)");
    long long max_col = tok.next(), max_row = tok.next();
    if (max_col < 0 || max_row < 0 || max_col > m || max_row > n)
        throw std::runtime_error("read_alist: degree overflow");
    std::vector<long long> col_deg(n), row_deg(m);
    for (auto& d : col_deg) {
        d = tok.next();
        if (d < 0 || d > max_col) throw std::runtime_error("read_alist: degree overflow");
    }
    for (auto& d : row_deg) {
        d = tok.next();
        if (d < 0 || d > max_row) throw std::runtime_error("read_alist: degree overflow");
    }
    Gf2Matrix h(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (long long c = 0; c < n; ++c) {
        for (long long k = 0; k < max_col; ++k) {
            long long r = tok.next();
            if (k < col_deg[c]) {
                if (r < 1 || r > m) throw std::runtime_error("read_alist: malformed file (check index)");
                if (h.get(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c)))
                    throw std::runtime_error("read_alist: malformed file (repeated entry)");
                h.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c), true);
            } else if (r != 0) {
                throw std::runtime_error("read_alist: malformed file (inconsistent padding)");
            }
        }
    }
    for (long long r = 0; r < m; ++r) {
        std::vector<std::size_t> seen;
        for (long long k = 0; k < max_row; ++k) {
            long long c = tok.next();
            if (k < row_deg[r]) {
                if (c < 1 || c > n) throw std::runtime_error("read_alist: malformed file (variable index)");
                seen.push_back(static_cast<std::size_t>(c - 1));
            } else if (c != 0) {
                throw std::runtime_error("read_alist: malformed file (inconsistent padding)");
            }
        }
        // Row lists must agree with the column lists already applied.
        std::sort(seen.begin(), seen.end());
        std::vector<std::size_t> actual;
        for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c)
            if (h.get(static_cast<std::size_t>(r), c)) actual.push_back(c);
        if (seen != actual) throw std::runtime_error("read_alist: malformed file (row/column mismatch)");
    }
    if (!tok.at_end()) throw std::runtime_error("read_alist: malformed file (trailing tokens)");
    return h;
}

}  // namespace ldpcsense
