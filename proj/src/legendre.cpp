#include "screw/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "screw/errors.hpp"

namespace screw {

LegendreCurve LegendreCurve::from_strings(const std::string& x, const std::string& z,
                                          const std::string& a, const std::string& b,
                                          Interval domain) {
    return {ScalarFunction::parse(x), ScalarFunction::parse(z), ScalarFunction::parse(a),
            ScalarFunction::parse(b), domain};
}

std::vector<double> uniform_grid(Interval range, int n_points) {
    std::vector<double> g;
    if (n_points <= 0) return g;
    if (n_points == 1) return {range.lo};
    g.reserve(n_points);
    for (int i = 0; i < n_points; ++i) {
        g.push_back(i == n_points - 1 ? range.hi
                                      : range.lo + range.length() * i / (n_points - 1));
    }
    return g;
}

LegendreReport legendre_check(const LegendreCurve& curve, const std::vector<double>& grid) {
    if (grid.empty()) throw EmptyGrid("legendre_check needs at least one point");
    LegendreReport r;
    for (double u : grid) {
        const Jet x = curve.x.jet(u, 1);
        const Jet z = curve.z.jet(u, 1);
        const double a = curve.a(u);
        const double b = curve.b(u);
        r.max_norm_deviation = std::max(r.max_norm_deviation, std::abs(std::hypot(a, b) - 1.0));
        r.max_tangency_deviation =
            std::max(r.max_tangency_deviation, std::abs(x[1] * a + z[1] * b));
    }
    return r;
}

LegendreCurvature curvature_functions(const LegendreCurve& curve) {
    const int max_order = std::min({curve.x.max_order(), curve.z.max_order(),
                                    curve.a.max_order(), curve.b.max_order()}) - 1;
    auto ell = [curve](double u, int n) {
        const Jet a = curve.a.jet(u, n + 1);
        const Jet b = curve.b.jet(u, n + 1);
        return (b.differentiated() * a.truncated(n) - a.differentiated() * b.truncated(n));
    };
    auto beta = [curve](double u, int n) {
        const Jet a = curve.a.jet(u, n);
        const Jet b = curve.b.jet(u, n);
        const Jet x = curve.x.jet(u, n + 1);
        const Jet z = curve.z.jet(u, n + 1);
        return z.differentiated() * a - x.differentiated() * b;
    };
    return {ScalarFunction(ell, max_order), ScalarFunction(beta, max_order)};
}

CurvatureAt curvature_of_legendre(const LegendreCurve& curve, double u0) {
    const LegendreCurvature k = curvature_functions(curve);
    CurvatureAt out;
    out.ell_jet = k.ell.jet(u0, 4);
    out.beta_jet = k.beta.jet(u0, 4);
    out.ell = out.ell_jet.value();
    out.beta = out.beta_jet.value();
    return out;
}

LegendreCurve transformed(const LegendreCurve& curve, double angle, Vec2 shift) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    auto rotate = [c, s](const ScalarFunction& p, const ScalarFunction& q, double sign_c,
                         double sign_s, double offset) {
        return ScalarFunction(
            [=](double u, int n) { return sign_c * c * p.jet(u, n) + sign_s * s * q.jet(u, n) + offset; },
            std::min(p.max_order(), q.max_order()));
    };
    LegendreCurve out;
    out.x = rotate(curve.x, curve.z, 1.0, -1.0, shift[0]);
    out.z = rotate(curve.z, curve.x, 1.0, 1.0, shift[1]);
    out.a = rotate(curve.a, curve.b, 1.0, -1.0, 0.0);
    out.b = rotate(curve.b, curve.a, 1.0, 1.0, 0.0);
    out.domain = curve.domain;
    return out;
}

Vec2 SampledCurve::nu(std::size_t i) const { return {std::cos(theta[i]), std::sin(theta[i])}; }

namespace {

// Cubic Hermite segment in the local variable s = u - u_i.
Jet hermite_jet(double p0, double m0, double p1, double m1, double h, double s, int order) {
    const double d = (p1 - p0) / h;
    const double c2 = (3.0 * d - 2.0 * m0 - m1) / h;
    const double c3 = (m0 + m1 - 2.0 * d) / (h * h);
    Jet j(0.0, 3);
    j[0] = p0;
    j[1] = m0;
    j[2] = c2;
    j[3] = c3;
    return j.shifted(s).truncated(order);
}

struct HermiteData {
    std::vector<double> u, x, z, a, b, dx, dz, da, db;
};

std::size_t segment_of(const std::vector<double>& nodes, double t) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
    std::size_t i = it == nodes.begin() ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
    return std::min(i, nodes.size() - 2);
}

}  // namespace

LegendreCurve SampledCurve::interpolated() const {
    if (u.size() < 2) throw EmptyGrid("interpolation needs two nodes");
    auto d = std::make_shared<HermiteData>();
    d->u = u;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double s = std::sin(theta[i]);
        const double c = std::cos(theta[i]);
        d->x.push_back(x[i]);
        d->z.push_back(z[i]);
        d->a.push_back(c);
        d->b.push_back(s);
        d->dx.push_back(-beta[i] * s);
        d->dz.push_back(beta[i] * c);
        d->da.push_back(-ell[i] * s);
        d->db.push_back(ell[i] * c);
    }
    auto component = [d](const std::vector<double> HermiteData::*val,
                         const std::vector<double> HermiteData::*der) {
        return ScalarFunction(
            [d, val, der](double t, int order) {
                const auto& nodes = d->u;
                const std::size_t i = segment_of(nodes, t);
                const double h = nodes[i + 1] - nodes[i];
                const auto& p = (*d).*val;
                const auto& m = (*d).*der;
                Jet j = hermite_jet(p[i], m[i], p[i + 1], m[i + 1], h, t - nodes[i], order);
                return Jet(t, j.coeffs());
            },
            3);
    };
    LegendreCurve out;
    out.x = component(&HermiteData::x, &HermiteData::dx);
    out.z = component(&HermiteData::z, &HermiteData::dz);
    out.a = component(&HermiteData::a, &HermiteData::da);
    out.b = component(&HermiteData::b, &HermiteData::db);
    out.domain = {u.front(), u.back()};
    return out;
}

namespace {

// Integrates theta' = ell and gamma' = beta (-sin theta, cos theta) from the
// first node with per-step Simpson rules; h may be negative.
void integrate_branch(const LegendreCurvature& k, double u0, double h, int steps, double theta0,
                      Vec2 gamma0, SampledCurve& out) {
    double theta = theta0;
    double gx = gamma0[0];
    double gz = gamma0[1];
    double u = u0;
    double ell0 = k.ell(u);
    double beta0 = k.beta(u);
    for (int i = 0; i < steps; ++i) {
        const double uq = u + 0.25 * h;
        const double um = u + 0.5 * h;
        const double u1 = u0 + (i + 1) * h;
        const double ell_q = k.ell(uq);
        const double ell_m = k.ell(um);
        const double ell_1 = k.ell(u1);
        const double theta_m = theta + (0.5 * h) / 6.0 * (ell0 + 4.0 * ell_q + ell_m);
        const double theta_1 = theta + h / 6.0 * (ell0 + 4.0 * ell_m + ell_1);
        const double beta_m = k.beta(um);
        const double beta_1 = k.beta(u1);
        gx += h / 6.0 *
              (-beta0 * std::sin(theta) - 4.0 * beta_m * std::sin(theta_m) -
               beta_1 * std::sin(theta_1));
        gz += h / 6.0 *
              (beta0 * std::cos(theta) + 4.0 * beta_m * std::cos(theta_m) +
               beta_1 * std::cos(theta_1));
        theta = theta_1;
        u = u1;
        ell0 = ell_1;
        beta0 = beta_1;
        out.u.push_back(u);
        out.x.push_back(gx);
        out.z.push_back(gz);
        out.theta.push_back(theta);
        out.ell.push_back(ell0);
        out.beta.push_back(beta0);
    }
}

}  // namespace

SampledCurve reconstruct_curve(const LegendreCurvature& curvature, const ReconstructionInit& init,
                               Interval range, int n_steps) {
    if (n_steps < 16) {
        throw StepCountTooSmall("n_steps = " + std::to_string(n_steps) + " (need >= 16)");
    }
    if (!(range.lo <= init.u0 && init.u0 <= range.hi) || !(range.length() > 0.0)) {
        throw DomainError("u0 must lie in a non-empty integration range");
    }
    const double span = range.length();
    int left = static_cast<int>(std::lround(n_steps * (init.u0 - range.lo) / span));
    left = std::clamp(left, 0, n_steps);
    if (left == 0 && init.u0 > range.lo) left = 1;
    int right = n_steps - left;
    if (right == 0 && init.u0 < range.hi) {
        right = 1;
        left = n_steps - 1;
    }

    SampledCurve back;
    if (left > 0) {
        integrate_branch(curvature, init.u0, (range.lo - init.u0) / left, left, init.angle0,
                         init.gamma0, back);
    }
    SampledCurve out;
    for (std::size_t i = back.size(); i-- > 0;) {
        out.u.push_back(back.u[i]);
        out.x.push_back(back.x[i]);
        out.z.push_back(back.z[i]);
        out.theta.push_back(back.theta[i]);
        out.ell.push_back(back.ell[i]);
        out.beta.push_back(back.beta[i]);
    }
    if (!out.u.empty()) out.u.front() = range.lo;
    out.u.push_back(init.u0);
    out.x.push_back(init.gamma0[0]);
    out.z.push_back(init.gamma0[1]);
    out.theta.push_back(init.angle0);
    out.ell.push_back(curvature.ell(init.u0));
    out.beta.push_back(curvature.beta(init.u0));
    if (right > 0) {
        integrate_branch(curvature, init.u0, (range.hi - init.u0) / right, right, init.angle0,
                         init.gamma0, out);
        out.u.back() = range.hi;
    }
    return out;
}

LegendreCurve SampledCurve::interpolated(const LegendreCurvature& curvature) const {
    if (u.size() < 2) throw EmptyGrid("interpolation needs two nodes");
    auto nodes = std::make_shared<const SampledCurve>(*this);
    auto k = std::make_shared<const LegendreCurvature>(curvature);
    const int max_order =
        std::min({kJetCapacity, k->ell.max_order() + 1, k->beta.max_order() + 1});
    // Germ at t seeded with the interpolated state (gamma, theta) at t.
    auto germ = [nodes, k](double t, int order) {
        const SampledCurve& n = *nodes;
        const std::size_t i = segment_of(n.u, t);
        const double h = n.u[i + 1] - n.u[i];
        const double s = t - n.u[i];
        auto at = [&](const std::vector<double>& p, double m0, double m1) {
            return hermite_jet(p[i], m0, p[i + 1], m1, h, s, 0).value();
        };
        ReconstructionInit init;
        init.u0 = t;
        init.angle0 = at(n.theta, n.ell[i], n.ell[i + 1]);
        init.gamma0 = {at(n.x, -n.beta[i] * std::sin(n.theta[i]), -n.beta[i + 1] * std::sin(n.theta[i + 1])),
                       at(n.z, n.beta[i] * std::cos(n.theta[i]), n.beta[i + 1] * std::cos(n.theta[i + 1]))};
        const int m = std::max(order - 1, 0);
        return reconstruct_jets(k->ell.jet(t, m), k->beta.jet(t, m), init);
    };
    auto component = [germ, max_order](Jet CurveGerm::*field) {
        return ScalarFunction(
            [germ, field](double t, int order) {
                const CurveGerm g = germ(t, order);
                return Jet(t, (g.*field).truncated(order).coeffs());
            },
            max_order);
    };
    LegendreCurve out;
    out.x = component(&CurveGerm::x);
    out.z = component(&CurveGerm::z);
    out.a = component(&CurveGerm::a);
    out.b = component(&CurveGerm::b);
    out.domain = {u.front(), u.back()};
    return out;
}

CurveGerm reconstruct_jets(const Jet& ell, const Jet& beta, const ReconstructionInit& init) {
    CurveGerm g;
    g.theta = ell.integrated(init.angle0);
    Jet s, c;
    sincos(g.theta, s, c);
    g.a = c;
    g.b = s;
    const int n = beta.order();
    g.x = (-beta * s.truncated(n)).integrated(init.gamma0[0]);
    g.z = (beta * c.truncated(n)).integrated(init.gamma0[1]);
    return g;
}

}  // namespace screw
