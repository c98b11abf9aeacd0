#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <vector>

// Exact rational scalar used by the rational simplex mode, the nullspace
// property verdicts, and the polytope vertex enumeration.

namespace ldpcsense {

using Rat = mpq_class;

// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite input");
    Rat r(x);
    r.canonicalize();
    return r;
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline std::vector<Rat> rat_vector(const std::vector<double>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(rat_from_double(x));
    return out;
}

inline std::vector<double> double_vector(const std::vector<Rat>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const Rat& x : v) out.push_back(x.get_d());
    return out;
}

inline int rat_sign(const Rat& r) { return sgn(r); }

}  // namespace ldpcsense
