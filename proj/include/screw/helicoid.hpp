#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "screw/framed.hpp"
#include "screw/legendre.hpp"

namespace screw {

// r(u, v) = (x cos v, x sin v, z + lambda v).
struct HelicoidalSurface {
    LegendreCurve profile;
    double lambda = 0.5;
    LegendreCurvature curvature;

    // Throws InvalidPitch unless |lambda| > 1e-12.
    HelicoidalSurface(LegendreCurve profile, double lambda);
};

struct HelicoidPoint {
    Vec3 point{}, r_u{}, r_v{};
    Vec3 nu{};             // r_u x r_v
    Vec3 nu_decomposed{};  // alpha_r nu1 + beta_r nu2
    double alpha_r = 0.0;
    double beta_r = 0.0;
};

HelicoidPoint helicoid_eval(const HelicoidalSurface& h, double u, double v);

// Jet of t -> f(u + t du).
Jet along(const ScalarFunction& f, double u, Direction d, int order);

SurfaceMap helicoid_map(const HelicoidalSurface& h);
// nu1 = (a cos v, a sin v, b), nu2 = (-sin v, cos v, 0).
SurfaceMap gfs_nu1_map(const HelicoidalSurface& h);
SurfaceMap gfs_nu2_map(const HelicoidalSurface& h);

BasicInvariants<double> gfs_invariants(const HelicoidalSurface& h, double u);
BasicInvariants<Jet> gfs_invariant_jets(const HelicoidalSurface& h, double u, int order);
InvariantField gfs_field(const HelicoidalSurface& h);

enum class SelectionStrategy { Default, UserSupplied };

struct CommonZero {
    double u = 0.0;
    int order_first = 0;
    int order_second = 0;
    int deflation = 0;  // min of the two orders
};

// (P, Q) / |(P, Q)| continued through isolated common zeros of P and Q by
// removing the factor (u - u*)^m; the sign is kept continuous in u.
class SmoothUnitPair {
public:
    SmoothUnitPair(ScalarFunction p, ScalarFunction q, Interval domain, int n_grid);

    std::array<Jet, 2> jets(double u, int order) const;
    const std::vector<CommonZero>& common_zeros() const { return zeros_; }
    int max_order() const { return max_order_; }

private:
    double sign_excluding(double u, const CommonZero* skip) const;

    ScalarFunction p_, q_;
    std::vector<CommonZero> zeros_;
    std::vector<double> windows_;
    int max_order_ = 0;
};

struct UnitPairSelection {
    ScalarFunction first, second;
    SelectionStrategy strategy = SelectionStrategy::Default;
    std::vector<CommonZero> deflated_at;
};

// (k1, k2) with k1^2 + k2^2 = 1 and -k1 x + k2 b lambda = 0.
using FrameSelection = UnitPairSelection;
// (l1, l2) with l1^2 + l2^2 = 1 and l1 b lambda + l2 x a = 0.
using SlicePair = UnitPairSelection;

inline constexpr int kSelectionGrid = 512;

FrameSelection select_k(const HelicoidalSurface& h, int n_grid = kSelectionGrid);
SlicePair select_slice_pair(const HelicoidalSurface& h, int n_grid = kSelectionGrid);

// Validates a caller-supplied pair on a grid; throws InvalidSelection.
FrameSelection user_frame(const HelicoidalSurface& h, ScalarFunction k1, ScalarFunction k2,
                          const std::vector<double>& grid);
SlicePair user_slice_pair(const HelicoidalSurface& h, ScalarFunction l1, ScalarFunction l2,
                          const std::vector<double>& grid);

double frame_constraint(const HelicoidalSurface& h, const FrameSelection& k, double u);
double slice_constraint(const HelicoidalSurface& h, const SlicePair& l, double u);

// n = (k2 a cos v + k1 sin v, k2 a sin v - k1 cos v, k2 b),
// s = (-b cos v, -b sin v, a).
SurfaceMap frame_n_map(const HelicoidalSurface& h, const FrameSelection& k);
SurfaceMap frame_s_map(const HelicoidalSurface& h);

BasicInvariants<double> framed_invariants(const HelicoidalSurface& h, const FrameSelection& k,
                                          double u);
BasicInvariants<Jet> framed_invariant_jets(const HelicoidalSurface& h, const FrameSelection& k,
                                           double u, int order);
InvariantField framed_field(const HelicoidalSurface& h, const FrameSelection& k);

FramedCurvature helicoid_curvature(const HelicoidalSurface& h, const FrameSelection& k, double u);

enum class SingularCase { Regular, One, Two, Three };
const char* to_string(SingularCase c);

// Trichotomy by zero tests on beta and on (x, b).
SingularCase singular_case(const HelicoidalSurface& h, double u);

enum class SliceVariant { S, C };

// S: (x cos(z/lambda), -x sin(z/lambda)); C: (x cos(z/lambda), x sin(z/lambda)).
Vec2 slice_curve(const HelicoidalSurface& h, double u, SliceVariant variant);

struct SliceLegendre {
    double l1 = 0.0, l2 = 0.0;
    Vec2 point{}, nu{}, mu{};
    // Closed forms as printed.
    double ell_s = 0.0, beta_s = 0.0;
    // nu^s' . mu^s and s' . mu^s by direct differentiation.
    double ell_s_identity = 0.0, beta_s_identity = 0.0;
    double constraint_residual = 0.0;
    double ell_mismatch() const;
    double beta_mismatch() const;
};

SliceLegendre slice_legendre(const HelicoidalSurface& h, const SlicePair& l, double u);

Vec3 parallel_surface(const HelicoidalSurface& h, const FrameSelection& k, double t_tilde, double u,
                      double v);
Vec2 parallel_slice(const HelicoidalSurface& h, const SlicePair& l, double t, double u);

struct ParallelData {
    double t_tilde = 0.0;
    double t = 0.0;
    double A = 0.0, theta = 0.0;
    double B = 0.0, tau = 0.0;
    std::array<Vec2, 2> M{};   // rows
    Vec2 lhs{};                // slice of the parallel surface, polar form
    Vec2 direct{};             // slice of the parallel surface at its z = 0 crossing
    Vec2 rhs{};                // M times the parallel slice
    double residual = 0.0;     // |lhs - rhs|
};

// Throws PolarDataUndefined when A < 1e-9.
ParallelData parallel_data(const HelicoidalSurface& h, const FrameSelection& k, const SlicePair& l,
                           double t_tilde, double u);
double rotation_relation_residual(const HelicoidalSurface& h, const FrameSelection& k,
                                  const SlicePair& l, double t_tilde, double u);
// Polar angles continued across 2 pi jumps along increasing u.
std::vector<ParallelData> parallel_data_along(const HelicoidalSurface& h, const FrameSelection& k,
                                              const SlicePair& l, double t_tilde,
                                              const std::vector<double>& grid);

}  // namespace screw
