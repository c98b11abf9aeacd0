#include "ldpcsense/polytope.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ldpcsense {

std::vector<Halfspace> fundamental_polytope_cuts(const Gf2Matrix& h, std::size_t max_row_degree) {
    const std::size_t n = h.cols();
    std::vector<Halfspace> cuts;
    for (std::size_t j = 0; j < h.rows(); ++j) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            if (h.get(j, i)) support.push_back(i);
        const std::size_t d = support.size();
        if (d == 0) continue;
        if (d > max_row_degree) throw std::length_error("fundamental_polytope_cuts: row too dense");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
            if (!(std::popcount(mask) & 1)) continue;
            Halfspace cut;
            cut.normal.assign(n, Rat(0));
            for (std::size_t t = 0; t < d; ++t) cut.normal[support[t]] = (mask >> t) & 1 ? Rat(1) : Rat(-1);
            cut.rhs = Rat(static_cast<long>(std::popcount(mask)) - 1);
            cuts.push_back(std::move(cut));
        }
    }
    return cuts;
}

std::vector<Halfspace> fundamental_polytope_halfspaces(const Gf2Matrix& h, std::size_t max_row_degree) {
    const std::size_t n = h.cols();
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < n; ++i) {
        Halfspace lo, hi;
        lo.normal.assign(n, Rat(0));
        lo.normal[i] = Rat(-1);
        lo.rhs = Rat(0);
        hi.normal.assign(n, Rat(0));
        hi.normal[i] = Rat(1);
        hi.rhs = Rat(1);
        hs.push_back(std::move(lo));
        hs.push_back(std::move(hi));
    }
    for (auto& cut : fundamental_polytope_cuts(h, max_row_degree)) hs.push_back(std::move(cut));
    return hs;
}

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) s += a[i] * b[i];
    return s;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || sgn(rows[r][col]) == 0) continue;
            Rat f = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

std::vector<std::vector<Rat>> enumerate_vertices(const std::vector<Halfspace>& halfspaces,
                                                 std::size_t dim, const Rat& box_lo, const Rat& box_hi,
                                                 std::size_t cap) {
    if (dim == 0 || dim > 20) throw std::length_error("enumerate_vertices: dimension out of range");
    const std::size_t work_limit = std::max<std::size_t>(8 * cap + 1024, std::size_t{1} << dim);

    std::vector<std::vector<Rat>> vertices;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
        std::vector<Rat> corner(dim);
        for (std::size_t i = 0; i < dim; ++i) corner[i] = (mask >> i) & 1 ? box_hi : box_lo;
        vertices.push_back(std::move(corner));
    }

    // Box facets participate in vertex tightness tests alongside processed
    // halfspaces.
    std::vector<Halfspace> processed;
    for (std::size_t i = 0; i < dim; ++i) {
        Halfspace lo, hi;
        lo.normal.assign(dim, Rat(0));
        lo.normal[i] = Rat(-1);
        lo.rhs = -box_lo;
        hi.normal.assign(dim, Rat(0));
        hi.normal[i] = Rat(1);
        hi.rhs = box_hi;
        processed.push_back(std::move(lo));
        processed.push_back(std::move(hi));
    }

    auto is_vertex = [&](const std::vector<Rat>& p) {
        std::vector<std::vector<Rat>> tight;
        for (const Halfspace& hs : processed)
            if (dot(hs.normal, p) == hs.rhs) tight.push_back(hs.normal);
        return tight.size() >= dim && rational_rank(std::move(tight)) == dim;
    };

    for (const Halfspace& hs : halfspaces) {
        std::vector<Rat> value(vertices.size());
        for (std::size_t v = 0; v < vertices.size(); ++v) value[v] = dot(hs.normal, vertices[v]) - hs.rhs;
        processed.push_back(hs);

        std::vector<std::vector<Rat>> next;
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (sgn(value[v]) <= 0) next.push_back(vertices[v]);
        // New vertices lie on the hyperplane, on segments between a strictly
        // feasible and a strictly infeasible old vertex; non-edge crossings
        // are discarded by the tight-rank test below.
        std::vector<std::vector<Rat>> crossings;
        for (std::size_t u = 0; u < vertices.size(); ++u) {
            if (sgn(value[u]) >= 0) continue;
            for (std::size_t w = 0; w < vertices.size(); ++w) {
                if (sgn(value[w]) <= 0) continue;
                Rat t = -value[u] / (value[w] - value[u]);
                std::vector<Rat> p(dim);
                for (std::size_t i = 0; i < dim; ++i)
                    p[i] = vertices[u][i] + t * (vertices[w][i] - vertices[u][i]);
                crossings.push_back(std::move(p));
            }
        }
        std::sort(crossings.begin(), crossings.end(), lex_less);
        crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());
        for (auto& p : crossings)
            if (is_vertex(p)) next.push_back(std::move(p));

        std::sort(next.begin(), next.end(), lex_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        vertices = std::move(next);
        if (vertices.size() > work_limit) throw std::length_error("enumerate_vertices: cap exceeded");
    }
    if (vertices.size() > cap) throw std::length_error("enumerate_vertices: cap exceeded");
    return vertices;
}

std::vector<std::vector<Rat>> fundamental_polytope_vertices(const Gf2Matrix& h, std::size_t cap) {
    return enumerate_vertices(fundamental_polytope_halfspaces(h), h.cols(), Rat(0), Rat(1), cap);
}

}  // namespace ldpcsense
