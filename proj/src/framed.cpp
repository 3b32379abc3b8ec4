#include "screw/framed.hpp"

#include <cmath>
#include <iomanip>

#include "screw/errors.hpp"

namespace screw {

Vec3 cross(const Vec3& p, const Vec3& q) {
    return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

double dot(const Vec3& p, const Vec3& q) { return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]; }

double norm(const Vec3& p) { return std::sqrt(dot(p, p)); }

Zeroness zeroness(double v) {
    const double a = std::abs(v);
    if (a <= kEpsZero) return Zeroness::Zero;
    if (a < kEpsMarginal) return Zeroness::Marginal;
    return Zeroness::NonZero;
}

SurfaceMap make_surface_map(std::function<JetVec3(const Jet& U, const Jet& V)> f) {
    return [f = std::move(f)](double u, double v, Direction d, int order) {
        Jet U = Jet::constant(u, u, order);
        Jet V = Jet::constant(v, u, order);
        if (order >= 1) {
            U[1] = d.du;
            V[1] = d.dv;
        }
        return f(U, V);
    };
}

Mat3 skew_matrix(double e, double f, double g) {
    return {Vec3{0.0, e, f}, Vec3{-e, 0.0, g}, Vec3{-f, -g, 0.0}};
}

BasicInvariants<double> values_of(const BasicInvariants<Jet>& j) {
    BasicInvariants<double> d;
    d.a1 = j.a1.value();
    d.b1 = j.b1.value();
    d.c1 = j.c1.value();
    d.a2 = j.a2.value();
    d.b2 = j.b2.value();
    d.c2 = j.c2.value();
    d.e1 = j.e1.value();
    d.f1 = j.f1.value();
    d.g1 = j.g1.value();
    d.e2 = j.e2.value();
    d.f2 = j.f2.value();
    d.g2 = j.g2.value();
    d.alpha = j.alpha.value();
    d.beta = j.beta.value();
    d.generalised = j.generalised;
    return d;
}

namespace {

Vec3 values(const JetVec3& j) { return {j[0].value(), j[1].value(), j[2].value()}; }
Vec3 slopes(const JetVec3& j) { return {j[0][1], j[1][1], j[2][1]}; }

struct FrameSample {
    Vec3 xu, xv;      // tangent vectors
    Vec3 p, q, w;     // first frame vector, second, and their cross product
    Vec3 pu, qu, wu;  // u-derivatives
    Vec3 pv, qv, wv;  // v-derivatives
};

FrameSample sample_frame(const SurfaceMap& x, const SurfaceMap& p, const SurfaceMap& q, double u,
                         double v) {
    FrameSample s;
    s.xu = slopes(x(u, v, kAlongU, 1));
    s.xv = slopes(x(u, v, kAlongV, 1));
    const JetVec3 pu = p(u, v, kAlongU, 1);
    const JetVec3 pv = p(u, v, kAlongV, 1);
    const JetVec3 qu = q(u, v, kAlongU, 1);
    const JetVec3 qv = q(u, v, kAlongV, 1);
    s.p = values(pu);
    s.q = values(qu);
    s.w = cross(s.p, s.q);
    s.pu = slopes(pu);
    s.pv = slopes(pv);
    s.qu = slopes(qu);
    s.qv = slopes(qv);
    // (p x q)' = p' x q + p x q'
    const Vec3 a = cross(s.pu, s.q);
    const Vec3 b = cross(s.p, s.qu);
    const Vec3 c = cross(s.pv, s.q);
    const Vec3 d = cross(s.p, s.qv);
    for (int i = 0; i < 3; ++i) {
        s.wu[i] = a[i] + b[i];
        s.wv[i] = c[i] + d[i];
    }
    if (std::abs(norm(s.p) - 1.0) > 1e-10 || std::abs(norm(s.q) - 1.0) > 1e-10 ||
        std::abs(dot(s.p, s.q)) > 1e-10) {
        throw FrameNotOrthonormal("at (u, v) = (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
    return s;
}

}  // namespace

BasicInvariants<double> basic_invariants(const SurfaceMap& x, const SurfaceMap& n,
                                         const SurfaceMap& s, double u, double v) {
    const FrameSample f = sample_frame(x, n, s, u, v);
    if (std::abs(dot(f.xu, f.p)) > 1e-9 || std::abs(dot(f.xv, f.p)) > 1e-9) {
        throw NotTangent("x_u . n = " + std::to_string(dot(f.xu, f.p)) +
                         ", x_v . n = " + std::to_string(dot(f.xv, f.p)));
    }
    BasicInvariants<double> inv;
    inv.a1 = dot(f.xu, f.q);
    inv.b1 = dot(f.xu, f.w);
    inv.a2 = dot(f.xv, f.q);
    inv.b2 = dot(f.xv, f.w);
    inv.e1 = dot(f.pu, f.q);
    inv.f1 = dot(f.pu, f.w);
    inv.g1 = dot(f.qu, f.w);
    inv.e2 = dot(f.pv, f.q);
    inv.f2 = dot(f.pv, f.w);
    inv.g2 = dot(f.qv, f.w);
    return inv;
}

BasicInvariants<double> basic_invariants_generalised(const SurfaceMap& x, const SurfaceMap& nu1,
                                                     const SurfaceMap& nu2, double u, double v) {
    const FrameSample f = sample_frame(x, nu1, nu2, u, v);
    BasicInvariants<double> inv;
    inv.generalised = true;
    inv.a1 = dot(f.xu, f.p);
    inv.b1 = dot(f.xu, f.q);
    inv.c1 = dot(f.xu, f.w);
    inv.a2 = dot(f.xv, f.p);
    inv.b2 = dot(f.xv, f.q);
    inv.c2 = dot(f.xv, f.w);
    inv.e1 = dot(f.pu, f.q);
    inv.f1 = dot(f.pu, f.w);
    inv.g1 = dot(f.qu, f.w);
    inv.e2 = dot(f.pv, f.q);
    inv.f2 = dot(f.pv, f.w);
    inv.g2 = dot(f.qv, f.w);
    fill_normal_coefficients(inv);
    return inv;
}

double IntegrabilityResidual::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < count; ++i) m = std::max(m, std::abs(r[i]));
    return m;
}

IntegrabilityResidual integrability_residual(const InvariantField& field, double u, double v) {
    const BasicInvariants<Jet> ju = field(u, v, kAlongU, 1);
    const BasicInvariants<Jet> jv = field(u, v, kAlongV, 1);
    const BasicInvariants<double> p = values_of(ju);
    auto du = [](const Jet& j) { return j[1]; };
    auto dv = [](const Jet& j) { return j[1]; };

    IntegrabilityResidual res;
    const double n4 = (dv(jv.e1) - p.f1 * p.g2) - (du(ju.e2) - p.f2 * p.g1);
    const double n5 = (dv(jv.f1) - p.e2 * p.g1) - (du(ju.f2) - p.e1 * p.g2);
    const double n6 = (dv(jv.g1) - p.e1 * p.f2) - (du(ju.g2) - p.e2 * p.f1);
    if (!ju.generalised) {
        res.count = 6;
        res.r[0] = (dv(jv.a1) - p.b1 * p.g2) - (du(ju.a2) - p.b2 * p.g1);
        res.r[1] = (dv(jv.b1) - p.a2 * p.g1) - (du(ju.b2) - p.a1 * p.g2);
        res.r[2] = (p.a1 * p.e2 + p.b1 * p.f2) - (p.a2 * p.e1 + p.b2 * p.f1);
    } else {
        res.count = 7;
        res.r[0] = (dv(jv.a1) - p.b1 * p.e2 - p.c1 * p.f2) - (du(ju.a2) - p.b2 * p.e1 - p.c2 * p.f1);
        res.r[1] = (dv(jv.b1) + p.a1 * p.e2 - p.c1 * p.g2) - (du(ju.b2) + p.a2 * p.e1 - p.c2 * p.g1);
        res.r[2] = (dv(jv.c1) + p.a1 * p.f2 + p.b1 * p.g2) - (du(ju.c2) + p.a2 * p.f1 + p.b2 * p.g1);
        res.r[6] = p.a1 * p.b2 - p.a2 * p.b1;
    }
    res.r[3] = n4;
    res.r[4] = n5;
    res.r[5] = n6;
    return res;
}

double FramedCurvature::norm() const { return std::sqrt(JF * JF + KF * KF + HF * HF); }

FramedCurvature framed_curvature(const BasicInvariants<double>& inv) {
    if (inv.generalised || inv.c1 != 0.0 || inv.c2 != 0.0) {
        throw NotStrictFramed("c1 = " + std::to_string(inv.c1) + ", c2 = " + std::to_string(inv.c2));
    }
    FramedCurvature cf;
    cf.JF = inv.a1 * inv.b2 - inv.a2 * inv.b1;
    cf.KF = inv.e1 * inv.f2 - inv.e2 * inv.f1;
    cf.HF = -0.5 * ((inv.a1 * inv.f2 - inv.a2 * inv.f1) - (inv.b1 * inv.e2 - inv.b2 * inv.e1));
    return cf;
}

ImmersionPredicates immersion_predicates(const FramedCurvature& cf) {
    ImmersionPredicates p;
    const Zeroness j = zeroness(cf.JF);
    const Zeroness c = zeroness(cf.norm());
    p.surface_regular = j != Zeroness::Zero;
    p.legendre_immersion = c != Zeroness::Zero;
    p.surface_marginal = j == Zeroness::Marginal;
    p.legendre_marginal = c == Zeroness::Marginal;
    return p;
}

void write_invariants_csv(std::ostream& os, const std::vector<InvariantRow>& rows) {
    os << "u,v,a1,b1,a2,b2,e1,f1,g1,e2,f2,g2,JF,KF,HF,"
          "residual1,residual2,residual3,residual4,residual5,residual6\r\n";
    const auto old_precision = os.precision(17);
    for (const InvariantRow& row : rows) {
        const auto& i = row.inv;
        const double cols[] = {row.u,  row.v,  i.a1,  i.b1,  i.a2,  i.b2,  i.e1,
                               i.f1,   i.g1,   i.e2,  i.f2,  i.g2,  row.cf.JF, row.cf.KF,
                               row.cf.HF};
        for (double c : cols) os << c << ',';
        for (int k = 0; k < 6; ++k) os << row.residual.r[k] << (k == 5 ? "\r\n" : ",");
    }
    os.precision(old_precision);
}

}  // namespace screw
