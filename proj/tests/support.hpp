#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "screw/fixtures.hpp"
#include "screw/singularity.hpp"

namespace screw::support {

// Seed from the SEED environment variable, fixed otherwise.
inline std::uint64_t suite_seed() {
    if (const char* s = std::getenv("SEED"); s != nullptr && *s != '\0') {
        return std::strtoull(s, nullptr, 10);
    }
    return 20261017ULL;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(suite_seed() ^ (salt * 0x9E3779B97F4A7C15ULL));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double rel_err(double got, double want, double floor = 1.0) {
    return std::abs(got - want) / std::max(std::abs(want), floor);
}

inline double dist(const Vec2& p, const Vec2& q) { return std::hypot(p[0] - q[0], p[1] - q[1]); }
inline double dist(const Vec3& p, const Vec3& q) {
    return std::sqrt((p[0] - q[0]) * (p[0] - q[0]) + (p[1] - q[1]) * (p[1] - q[1]) +
                     (p[2] - q[2]) * (p[2] - q[2]));
}

// The polynomial carried by a jet, usable as a profile component.
inline ScalarFunction polynomial_function(const Jet& j) {
    return ScalarFunction(
        [j](double u, int order) { return j.shifted(u - j.base_point()).truncated(order); },
        j.order());
}

// Profile curve whose components are the Taylor polynomials of a germ.
inline LegendreCurve germ_curve(const CurveGerm& g, Interval domain) {
    return {polynomial_function(g.x), polynomial_function(g.z), polynomial_function(g.a),
            polynomial_function(g.b), domain};
}

// Curvature data with ell = sum l_k u^k and beta = sum b_k u^k, as order-n jets at 0.
inline Jet coefficient_jet(const std::vector<double>& coeffs, int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (std::size_t k = 0; k < coeffs.size() && k < c.size(); ++k) c[k] = coeffs[k];
    return Jet(0.0, c);
}

// Classical curvatures from the first and second fundamental forms of r,
// with the unit normal N = r_u x r_v / |r_u x r_v|.
struct ClassicalCurvature {
    double K = 0.0;
    double H = 0.0;
    Vec3 normal{};
};

inline ClassicalCurvature classical_curvature(const SurfaceMap& r, double u, double v) {
    auto second = [&](Direction d) {
        const JetVec3 j = r(u, v, d, 2);
        return std::array<Vec3, 2>{Vec3{j[0][1], j[1][1], j[2][1]},
                                   Vec3{2 * j[0][2], 2 * j[1][2], 2 * j[2][2]}};
    };
    const auto [ru, ruu] = second(kAlongU);
    const auto [rv, rvv] = second(kAlongV);
    // Along (1, 1) the second derivative is r_uu + 2 r_uv + r_vv.
    const auto [rd, rdd] = second(Direction{1.0, 1.0});
    (void)rd;
    Vec3 ruv{};
    for (int i = 0; i < 3; ++i) ruv[i] = (rdd[i] - ruu[i] - rvv[i]) / 2.0;
    const Vec3 c = cross(ru, rv);
    const double cn = norm(c);
    const Vec3 N{c[0] / cn, c[1] / cn, c[2] / cn};
    const double E = dot(ru, ru), F = dot(ru, rv), G = dot(rv, rv);
    const double L = dot(ruu, N), M = dot(ruv, N), Nn = dot(rvv, N);
    const double det1 = E * G - F * F;
    return {(L * Nn - M * M) / det1, (E * Nn - 2 * F * M + G * L) / (2 * det1), N};
}

}  // namespace screw::support
