#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "screw/helicoid.hpp"

namespace screw {

enum class CuspTag { RegularPoint, Cusp_3_2, Cusp_5_2, Cusp_4_3, Cusp_5_3, Degenerate };
const char* to_string(CuspTag t);

using Witnesses = std::vector<std::pair<std::string, double>>;

struct CuspClass {
    CuspTag tag = CuspTag::Degenerate;
    bool marginal = false;  // a decisive quantity fell in (1e-9, 1e-6)
    Witnesses witnesses;
    double witness(const std::string& name) const;
};

// Plane curve given by the jets of its two coordinates (order >= 5).
CuspClass classify_plane_cusp(const Jet& first, const Jet& second);

// Column (C11, C21) of the n-th derivative matrix of c; the full matrix is
// [[C11, -C21], [C21, C11]] acting on (cos(z/lambda), sin(z/lambda)).
struct SliceJetMatrix {
    int n = 0;
    double C11 = 0.0;
    double C21 = 0.0;
};

// Closed forms for n = 2..5; n = 5 throws C5RequiresXZero unless x(u0) = 0.
SliceJetMatrix slice_jet_closed_form(const HelicoidalSurface& h, double u0, int n);
// c^(n)(u0) from the matrix.
Vec2 slice_derivative(const HelicoidalSurface& h, double u0, const SliceJetMatrix& m);
// Jets of c = (x cos(z/lambda), x sin(z/lambda)) by direct lifting.
std::pair<Jet, Jet> slice_c_jets(const HelicoidalSurface& h, double u0, int order);

double det_identity_check(double x11, double x21, double y11, double y21, double v1, double v2);

enum class EdgeTag {
    RegularSurfacePoint,
    GammaEdge,
    CuspidalEdge_3_2,
    CuspidalEdge_5_2,
    CuspidalEdge_4_3,
    CuspidalEdge_5_3,
    Degenerate
};
const char* to_string(EdgeTag t);

// Edge cases at x(u0) = 0.
enum class CriteriaCase { None, I, II, III };
const char* to_string(CriteriaCase c);

struct EdgeWitnesses {
    double beta = 0.0, beta_dot = 0.0, beta_ddot = 0.0;
    double ell = 0.0, ell_dot = 0.0;
    double x = 0.0, a = 0.0, b = 0.0;
    double nu_norm = 0.0;
    double ell_beta_dot = 0.0;
    Witnesses determinants;
};

struct EdgeClass {
    EdgeTag tag = EdgeTag::Degenerate;
    SingularCase singular_case = SingularCase::Regular;
    CriteriaCase criteria_case = CriteriaCase::None;
    std::optional<CuspClass> gamma_cusp;
    bool marginal = false;
    EdgeWitnesses witnesses;
    std::string note;
};

EdgeClass classify_helicoid_singularity(const HelicoidalSurface& h, double u0);

struct SingularPoint {
    double u = 0.0;
    SingularCase singular_case = SingularCase::Regular;
    EdgeClass edge;
};

// Zeros of beta and common zeros of (x, b) on the interval; n_grid >= 64.
std::vector<SingularPoint> singular_locus_scan(const HelicoidalSurface& h, Interval interval,
                                               int n_grid);

}  // namespace screw
