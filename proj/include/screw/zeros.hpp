#pragma once

#include <vector>

#include "screw/expr.hpp"

namespace screw {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool contains(double u) const { return lo <= u && u <= hi; }
};

struct Zero {
    double u = 0.0;
    // Jet vanishing order at u; max_order()+1 when the jet is flat.
    int multiplicity = 0;
};

struct ZeroOptions {
    double accept_tol = 1e-12;   // |f(u*)| allowed at an accepted zero
    double merge_tol = 1e-9;     // zeros closer than this are one zero
    double order_tol = 1e-9;     // coefficient tolerance for multiplicity
    int max_multiplicity = 5;
};

// Zeros of f on [lo, hi]: sign changes of f and of f' on a uniform grid of
// n_grid intervals, refined by bisection; sorted and de-duplicated.
std::vector<Zero> find_zeros(const ScalarFunction& f, Interval range, int n_grid,
                             const ZeroOptions& opt = {});

}  // namespace screw
