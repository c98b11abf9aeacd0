#pragma once

#include <cstddef>
#include <vector>

#include "ldpcsense/gf2.hpp"
#include "ldpcsense/rational.hpp"

// Fundamental polytope and cone of a parity-check matrix, plus an exact
// vertex enumerator for desk-scale halfspace systems.

namespace ldpcsense {

// One halfspace a . x <= b.
struct Halfspace {
    std::vector<Rat> normal;
    Rat rhs;
};

// Per check row j with support I_j, one cut for every odd T subseteq I_j:
//   sum_{i in T} x_i - sum_{i in I_j \ T} x_i <= |T| - 1.
// Throws when a row has more than max_row_degree entries.
std::vector<Halfspace> fundamental_polytope_cuts(const Gf2Matrix& h, std::size_t max_row_degree = 12);

// Cuts plus the box 0 <= x <= 1.
std::vector<Halfspace> fundamental_polytope_halfspaces(const Gf2Matrix& h,
                                                       std::size_t max_row_degree = 12);

// Exact vertices of the bounded polyhedron { x : a.x <= b for all given
// halfspaces } via incremental halfspace intersection, starting from an
// axis-aligned bounding box the caller guarantees contains the polyhedron.
// Throws std::length_error when the vertex count exceeds cap.
std::vector<std::vector<Rat>> enumerate_vertices(const std::vector<Halfspace>& halfspaces,
                                                 std::size_t dim, const Rat& box_lo, const Rat& box_hi,
                                                 std::size_t cap);

// Vertices of the fundamental polytope of h (the all-zero vertex included).
std::vector<std::vector<Rat>> fundamental_polytope_vertices(const Gf2Matrix& h, std::size_t cap);

}  // namespace ldpcsense
