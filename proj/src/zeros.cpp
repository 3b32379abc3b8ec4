#include "screw/zeros.hpp"

#include <algorithm>
#include <cmath>

#include "screw/errors.hpp"

namespace screw {

namespace {

template <class F>
double bisect(F&& g, double lo, double hi, double glo) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<Zero> find_zeros(const ScalarFunction& f, Interval range, int n_grid,
                             const ZeroOptions& opt) {
    if (n_grid < 1) throw EmptyGrid("zero search needs at least one interval");
    const int deriv_order = std::min(1, f.max_order());
    std::vector<double> u(n_grid + 1), val(n_grid + 1), der(n_grid + 1);
    for (int i = 0; i <= n_grid; ++i) {
        u[i] = i == n_grid ? range.hi : range.lo + range.length() * i / n_grid;
        const Jet j = f.jet(u[i], deriv_order);
        val[i] = j.value();
        der[i] = deriv_order >= 1 ? j[1] : 0.0;
    }

    auto value = [&](double x) { return f.jet(x, 0).value(); };
    auto slope = [&](double x) { return f.jet(x, 1)[1]; };

    std::vector<double> candidates;
    for (int i = 0; i <= n_grid; ++i) {
        if (std::abs(val[i]) <= opt.accept_tol) candidates.push_back(u[i]);
    }
    for (int i = 0; i < n_grid; ++i) {
        if (val[i] * val[i + 1] < 0.0) {
            candidates.push_back(bisect(value, u[i], u[i + 1], val[i]));
        } else if (deriv_order >= 1 && der[i] * der[i + 1] < 0.0) {
            const double c = bisect(slope, u[i], u[i + 1], der[i]);
            if (std::abs(value(c)) <= opt.accept_tol) candidates.push_back(c);
        }
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<double> merged;
    for (double c : candidates) {
        if (!merged.empty() && c - merged.back() <= opt.merge_tol) {
            if (std::abs(value(c)) < std::abs(value(merged.back()))) merged.back() = c;
        } else {
            merged.push_back(c);
        }
    }

    const int max_order = std::min(opt.max_multiplicity, f.max_order());
    std::vector<Zero> out;
    out.reserve(merged.size());
    for (double c : merged) {
        const Jet j = f.jet(c, max_order);
        out.push_back({c, j.vanishing_order(opt.order_tol)});
    }
    return out;
}

}  // namespace screw
