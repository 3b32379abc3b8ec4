#pragma once

#include <array>
#include <functional>
#include <ostream>
#include <vector>

#include "screw/jet.hpp"

namespace screw {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;
using JetVec3 = std::array<Jet, 3>;

Vec3 cross(const Vec3& p, const Vec3& q);
double dot(const Vec3& p, const Vec3& q);
double norm(const Vec3& p);

inline constexpr double kEpsZero = 1e-9;
inline constexpr double kEpsMarginal = 1e-6;

// Tri-state zero test: |v| <= 1e-9 is Zero, |v| < 1e-6 is Marginal.
enum class Zeroness { Zero, Marginal, NonZero };
Zeroness zeroness(double v);

// Parameter direction along which a surface map is expanded.
struct Direction {
    double du = 1.0;
    double dv = 0.0;
};
inline constexpr Direction kAlongU{1.0, 0.0};
inline constexpr Direction kAlongV{0.0, 1.0};

// Jets of t -> f(u + t du, v + t dv).
using SurfaceMap = std::function<JetVec3(double u, double v, Direction dir, int order)>;

// Builds a SurfaceMap from a formula evaluated on the two argument jets.
SurfaceMap make_surface_map(std::function<JetVec3(const Jet& U, const Jet& V)> f);

// Framed: x_u = a1 s + b1 t, (n, s, t)_u = F1 (n, s, t), t = n x s.
// Generalised: x_u = a1 nu1 + b1 nu2 + c1 nu3, (nu1, nu2, nu3)_u = F1 (...),
// nu3 = nu1 x nu2, and x_u x x_v = alpha nu1 + beta nu2.
template <class T>
struct BasicInvariants {
    T a1{}, b1{}, c1{}, a2{}, b2{}, c2{};
    T e1{}, f1{}, g1{}, e2{}, f2{}, g2{};
    T alpha{}, beta{};
    bool generalised = false;
};

// F = [[0, e, f], [-e, 0, g], [-f, -g, 0]].
Mat3 skew_matrix(double e, double f, double g);

// Jet-valued invariants reduced to their values.
BasicInvariants<double> values_of(const BasicInvariants<Jet>& inv);

// alpha = b1 c2 - c1 b2, beta = c1 a2 - a1 c2.
template <class T>
void fill_normal_coefficients(BasicInvariants<T>& inv) {
    inv.alpha = inv.b1 * inv.c2 - inv.c1 * inv.b2;
    inv.beta = inv.c1 * inv.a2 - inv.a1 * inv.c2;
}

BasicInvariants<double> basic_invariants(const SurfaceMap& x, const SurfaceMap& n,
                                         const SurfaceMap& s, double u, double v);

// Same for a generalised frame (nu1, nu2).
BasicInvariants<double> basic_invariants_generalised(const SurfaceMap& x, const SurfaceMap& nu1,
                                                     const SurfaceMap& nu2, double u, double v);

// Invariant field whose entries are expanded along one parameter direction.
using InvariantField =
    std::function<BasicInvariants<Jet>(double u, double v, Direction dir, int order)>;

struct IntegrabilityResidual {
    std::array<double, 7> r{};
    int count = 0;  // 6 for framed, 7 for generalised
    double max_abs() const;
};

IntegrabilityResidual integrability_residual(const InvariantField& field, double u, double v);

struct FramedCurvature {
    double JF = 0.0;
    double KF = 0.0;
    double HF = 0.0;
    double norm() const;
};

FramedCurvature framed_curvature(const BasicInvariants<double>& inv);

struct ImmersionPredicates {
    bool surface_regular = false;
    bool legendre_immersion = false;
    bool surface_marginal = false;
    bool legendre_marginal = false;
};

ImmersionPredicates immersion_predicates(const FramedCurvature& cf);

struct InvariantRow {
    double u = 0.0;
    double v = 0.0;
    BasicInvariants<double> inv;
    FramedCurvature cf;
    IntegrabilityResidual residual;
};

// Framed rows only. Columns: u, v, a1, b1, a2, b2, e1..g2, JF, KF, HF, residual1..6.
void write_invariants_csv(std::ostream& os, const std::vector<InvariantRow>& rows);

}  // namespace screw
