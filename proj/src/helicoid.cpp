#include "screw/helicoid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "screw/errors.hpp"

namespace screw {

HelicoidalSurface::HelicoidalSurface(LegendreCurve p, double lam)
    : profile(std::move(p)), lambda(lam), curvature(curvature_functions(profile)) {
    if (!(std::abs(lambda) > 1e-12)) {
        throw InvalidPitch("lambda = " + std::to_string(lambda));
    }
}

Jet along(const ScalarFunction& f, double u, Direction d, int order) {
    return f.jet(u, order).scaled_argument(d.du);
}

namespace {

Jet angle_jet(double u, double v, Direction d, int order) {
    Jet V = Jet::constant(v, u, order);
    if (order >= 1) V[1] = d.dv;
    return V;
}

Jet zero_jet(double u, int order) { return Jet(u, order); }

template <class F>
void for_each_entry(BasicInvariants<Jet>& inv, F&& f) {
    for (Jet* j : {&inv.a1, &inv.b1, &inv.c1, &inv.a2, &inv.b2, &inv.c2, &inv.e1, &inv.f1,
                   &inv.g1, &inv.e2, &inv.f2, &inv.g2, &inv.alpha, &inv.beta}) {
        f(*j);
    }
}

// v-independent fields: expansion along a direction only sees du.
BasicInvariants<Jet> directional(BasicInvariants<Jet> inv, Direction d) {
    for_each_entry(inv, [&](Jet& j) { j = j.scaled_argument(d.du); });
    return inv;
}

}  // namespace

HelicoidPoint helicoid_eval(const HelicoidalSurface& h, double u, double v) {
    const LegendreCurve& c = h.profile;
    const double x = c.x(u), z = c.z(u), a = c.a(u), b = c.b(u);
    const double beta = h.curvature.beta(u);
    const double cv = std::cos(v), sv = std::sin(v);
    HelicoidPoint p;
    p.point = {x * cv, x * sv, z + h.lambda * v};
    p.r_u = {-beta * b * cv, -beta * b * sv, beta * a};
    p.r_v = {-x * sv, x * cv, h.lambda};
    p.nu = cross(p.r_u, p.r_v);
    p.alpha_r = -beta * x;
    p.beta_r = beta * b * h.lambda;
    const Vec3 nu1{a * cv, a * sv, b};
    const Vec3 nu2{-sv, cv, 0.0};
    for (int i = 0; i < 3; ++i) p.nu_decomposed[i] = p.alpha_r * nu1[i] + p.beta_r * nu2[i];
    return p;
}

SurfaceMap helicoid_map(const HelicoidalSurface& h) {
    return [h](double u, double v, Direction d, int order) {
        const Jet X = along(h.profile.x, u, d, order);
        const Jet Z = along(h.profile.z, u, d, order);
        const Jet V = angle_jet(u, v, d, order);
        Jet s, c;
        sincos(V, s, c);
        return JetVec3{X * c, X * s, Z + h.lambda * V};
    };
}

SurfaceMap gfs_nu1_map(const HelicoidalSurface& h) {
    return [h](double u, double v, Direction d, int order) {
        const Jet A = along(h.profile.a, u, d, order);
        const Jet B = along(h.profile.b, u, d, order);
        Jet s, c;
        sincos(angle_jet(u, v, d, order), s, c);
        return JetVec3{A * c, A * s, B};
    };
}

SurfaceMap gfs_nu2_map(const HelicoidalSurface&) {
    return [](double u, double v, Direction d, int order) {
        Jet s, c;
        sincos(angle_jet(u, v, d, order), s, c);
        return JetVec3{-s, c, zero_jet(u, order)};
    };
}

BasicInvariants<Jet> gfs_invariant_jets(const HelicoidalSurface& h, double u, int order) {
    const LegendreCurve& c = h.profile;
    const Jet beta = h.curvature.beta.jet(u, order);
    const Jet ell = h.curvature.ell.jet(u, order);
    const Jet a = c.a.jet(u, order);
    const Jet b = c.b.jet(u, order);
    const Jet x = c.x.jet(u, order);
    const Jet zero = zero_jet(u, order);
    BasicInvariants<Jet> inv;
    inv.generalised = true;
    inv.a1 = zero;
    inv.b1 = zero;
    inv.c1 = beta;
    inv.a2 = h.lambda * b;
    inv.b2 = x;
    inv.c2 = h.lambda * a;
    inv.e1 = zero;
    inv.f1 = ell;
    inv.g1 = zero;
    inv.e2 = a;
    inv.f2 = zero;
    inv.g2 = b;
    fill_normal_coefficients(inv);
    return inv;
}

BasicInvariants<double> gfs_invariants(const HelicoidalSurface& h, double u) {
    return values_of(gfs_invariant_jets(h, u, 0));
}

InvariantField gfs_field(const HelicoidalSurface& h) {
    return [h](double u, double, Direction d, int order) {
        return directional(gfs_invariant_jets(h, u, order), d);
    };
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kCommonZeroTol = 1e-9;
constexpr double kDeflationWindow = 0.1;
constexpr int kOrderProbe = 12;

}  // namespace

SmoothUnitPair::SmoothUnitPair(ScalarFunction p, ScalarFunction q, Interval domain, int n_grid)
    : p_(std::move(p)), q_(std::move(q)) {
    max_order_ = std::min(p_.max_order(), q_.max_order());
    std::vector<double> cand;
    for (const Zero& z : find_zeros(q_, domain, n_grid)) {
        if (std::abs(p_(z.u)) <= kCommonZeroTol) cand.push_back(z.u);
    }
    for (const Zero& z : find_zeros(p_, domain, n_grid)) {
        if (std::abs(q_(z.u)) <= kCommonZeroTol) cand.push_back(z.u);
    }
    std::sort(cand.begin(), cand.end());

    const double spacing = domain.length() / n_grid;
    const int probe = std::min(kOrderProbe, max_order_);
    for (double u : cand) {
        if (!zeros_.empty() && u - zeros_.back().u <= kCommonZeroTol) continue;
        if (!zeros_.empty() && u - zeros_.back().u < 1.5 * spacing) {
            throw NoSmoothSelection("common zeros are not isolated near u = " + std::to_string(u));
        }
        CommonZero cz;
        cz.u = u;
        cz.order_first = p_.jet(u, probe).vanishing_order(kCommonZeroTol);
        cz.order_second = q_.jet(u, probe).vanishing_order(kCommonZeroTol);
        cz.deflation = std::min(cz.order_first, cz.order_second);
        if (cz.deflation == 0) continue;
        if (cz.deflation > kMaxOrder - 1) {
            throw NoSmoothSelection("common vanishing order at u = " + std::to_string(u) +
                                    " exceeds " + std::to_string(kMaxOrder - 1));
        }
        zeros_.push_back(cz);
    }
    for (std::size_t i = 0; i < zeros_.size(); ++i) {
        double w = kDeflationWindow;
        if (i > 0) w = std::min(w, 0.45 * (zeros_[i].u - zeros_[i - 1].u));
        if (i + 1 < zeros_.size()) w = std::min(w, 0.45 * (zeros_[i + 1].u - zeros_[i].u));
        windows_.push_back(w);
    }
}

double SmoothUnitPair::sign_excluding(double u, const CommonZero* skip) const {
    double s = 1.0;
    for (const CommonZero& z : zeros_) {
        if (&z == skip || z.deflation % 2 == 0) continue;
        if (u < z.u) s = -s;
    }
    return s;
}

std::array<Jet, 2> SmoothUnitPair::jets(double u, int order) const {
    const CommonZero* near = nullptr;
    for (std::size_t i = 0; i < zeros_.size(); ++i) {
        if (std::abs(u - zeros_[i].u) < windows_[i]) near = &zeros_[i];
    }
    Jet P, Q;
    if (near != nullptr) {
        const int cap = std::min(kJetCapacity, max_order_);
        if (cap - near->deflation < order) {
            throw JetOrderTooLow("deflated pair needs order " +
                                 std::to_string(order + near->deflation));
        }
        const double h = u - near->u;
        P = Jet(u, p_.jet(near->u, cap).deflated(near->deflation).shifted(h).truncated(order).coeffs());
        Q = Jet(u, q_.jet(near->u, cap).deflated(near->deflation).shifted(h).truncated(order).coeffs());
    } else {
        P = p_.jet(u, order);
        Q = q_.jet(u, order);
    }
    Jet N;
    try {
        N = sqrt(P * P + Q * Q);
    } catch (const SqrtOfVanishing&) {
        throw NoSmoothSelection("pair vanishes at u = " + std::to_string(u) +
                                " outside any isolated common zero");
    }
    const double s = sign_excluding(u, near);
    return {s * P / N, s * Q / N};
}

namespace {

UnitPairSelection selection_from(std::shared_ptr<const SmoothUnitPair> pair) {
    UnitPairSelection sel;
    const int max_order = pair->max_order();
    sel.first = ScalarFunction([pair](double u, int n) { return pair->jets(u, n)[0]; }, max_order);
    sel.second = ScalarFunction([pair](double u, int n) { return pair->jets(u, n)[1]; }, max_order);
    sel.deflated_at = pair->common_zeros();
    return sel;
}

ScalarFunction scaled(const ScalarFunction& f, double s) {
    return ScalarFunction([f, s](double u, int n) { return s * f.jet(u, n); }, f.max_order());
}

ScalarFunction product(const ScalarFunction& f, const ScalarFunction& g) {
    return ScalarFunction([f, g](double u, int n) { return f.jet(u, n) * g.jet(u, n); },
                          std::min(f.max_order(), g.max_order()));
}

}  // namespace

FrameSelection select_k(const HelicoidalSurface& h, int n_grid) {
    const LegendreCurve& c = h.profile;
    return selection_from(std::make_shared<SmoothUnitPair>(scaled(c.b, h.lambda), c.x, c.domain, n_grid));
}

SlicePair select_slice_pair(const HelicoidalSurface& h, int n_grid) {
    const LegendreCurve& c = h.profile;
    return selection_from(
        std::make_shared<SmoothUnitPair>(product(c.x, c.a), scaled(c.b, -h.lambda), c.domain, n_grid));
}

double frame_constraint(const HelicoidalSurface& h, const FrameSelection& k, double u) {
    const LegendreCurve& c = h.profile;
    return -k.first(u) * c.x(u) + k.second(u) * c.b(u) * h.lambda;
}

double slice_constraint(const HelicoidalSurface& h, const SlicePair& l, double u) {
    const LegendreCurve& c = h.profile;
    return l.first(u) * c.b(u) * h.lambda + l.second(u) * c.x(u) * c.a(u);
}

namespace {

UnitPairSelection validated(ScalarFunction f, ScalarFunction s, const std::vector<double>& grid,
                            const std::function<double(const UnitPairSelection&, double)>& constraint) {
    UnitPairSelection sel;
    sel.first = std::move(f);
    sel.second = std::move(s);
    sel.strategy = SelectionStrategy::UserSupplied;
    for (double u : grid) {
        const double p = sel.first(u);
        const double q = sel.second(u);
        if (std::abs(p * p + q * q - 1.0) > 1e-10) {
            throw InvalidSelection("pair is not unit at u = " + std::to_string(u));
        }
        if (std::abs(constraint(sel, u)) > 1e-9) {
            throw InvalidSelection("constraint violated at u = " + std::to_string(u));
        }
    }
    return sel;
}

}  // namespace

FrameSelection user_frame(const HelicoidalSurface& h, ScalarFunction k1, ScalarFunction k2,
                          const std::vector<double>& grid) {
    return validated(std::move(k1), std::move(k2), grid,
                     [&h](const UnitPairSelection& k, double u) { return frame_constraint(h, k, u); });
}

SlicePair user_slice_pair(const HelicoidalSurface& h, ScalarFunction l1, ScalarFunction l2,
                          const std::vector<double>& grid) {
    return validated(std::move(l1), std::move(l2), grid,
                     [&h](const UnitPairSelection& l, double u) { return slice_constraint(h, l, u); });
}

SurfaceMap frame_n_map(const HelicoidalSurface& h, const FrameSelection& k) {
    return [h, k](double u, double v, Direction d, int order) {
        const Jet K1 = along(k.first, u, d, order);
        const Jet K2 = along(k.second, u, d, order);
        const Jet A = along(h.profile.a, u, d, order);
        const Jet B = along(h.profile.b, u, d, order);
        Jet s, c;
        sincos(angle_jet(u, v, d, order), s, c);
        return JetVec3{K2 * A * c + K1 * s, K2 * A * s - K1 * c, K2 * B};
    };
}

SurfaceMap frame_s_map(const HelicoidalSurface& h) {
    return [h](double u, double v, Direction d, int order) {
        const Jet A = along(h.profile.a, u, d, order);
        const Jet B = along(h.profile.b, u, d, order);
        Jet s, c;
        sincos(angle_jet(u, v, d, order), s, c);
        return JetVec3{-B * c, -B * s, A};
    };
}

BasicInvariants<Jet> framed_invariant_jets(const HelicoidalSurface& h, const FrameSelection& k,
                                           double u, int order) {
    const LegendreCurve& c = h.profile;
    const Jet k1w = k.first.jet(u, order + 1);
    const Jet k2w = k.second.jet(u, order + 1);
    const Jet k1 = k1w.truncated(order);
    const Jet k2 = k2w.truncated(order);
    const Jet beta = h.curvature.beta.jet(u, order);
    const Jet ell = h.curvature.ell.jet(u, order);
    const Jet a = c.a.jet(u, order);
    const Jet b = c.b.jet(u, order);
    const Jet x = c.x.jet(u, order);
    BasicInvariants<Jet> inv;
    inv.a1 = beta;
    inv.b1 = zero_jet(u, order);
    inv.c1 = zero_jet(u, order);
    inv.a2 = h.lambda * a;
    inv.b2 = -(k2 * x + h.lambda * k1 * b);
    inv.c2 = zero_jet(u, order);
    inv.e1 = k2 * ell;
    inv.f1 = k2 * k1w.differentiated() - k1 * k2w.differentiated();
    inv.g1 = k1 * ell;
    inv.e2 = -(k1 * b);
    inv.f2 = -a;
    inv.g2 = k2 * b;
    inv.alpha = zero_jet(u, order);
    inv.beta = zero_jet(u, order);
    return inv;
}

BasicInvariants<double> framed_invariants(const HelicoidalSurface& h, const FrameSelection& k,
                                          double u) {
    return values_of(framed_invariant_jets(h, k, u, 0));
}

InvariantField framed_field(const HelicoidalSurface& h, const FrameSelection& k) {
    return [h, k](double u, double, Direction d, int order) {
        return directional(framed_invariant_jets(h, k, u, order), d);
    };
}

FramedCurvature helicoid_curvature(const HelicoidalSurface& h, const FrameSelection& k, double u) {
    const LegendreCurve& c = h.profile;
    const Jet k1 = k.first.jet(u, 1);
    const Jet k2 = k.second.jet(u, 1);
    const double x = c.x(u), a = c.a(u), b = c.b(u);
    const double beta = h.curvature.beta(u);
    const double ell = h.curvature.ell(u);
    const double lam = h.lambda;
    const double m = k2.value() * x + k1.value() * b * lam;
    FramedCurvature cf;
    cf.JF = -beta * m;
    cf.KF = -(k2[1] * b + k2.value() * ell * a);
    cf.HF = -0.5 * (-beta * a - lam * a * (k2.value() * k1[1] - k1.value() * k2[1]) -
                    m * k2.value() * ell);
    return cf;
}

const char* to_string(SingularCase c) {
    switch (c) {
        case SingularCase::Regular: return "regular";
        case SingularCase::One: return "1";
        case SingularCase::Two: return "2";
        case SingularCase::Three: return "3";
    }
    return "?";
}

SingularCase singular_case(const HelicoidalSurface& h, double u) {
    const bool beta_zero = zeroness(h.curvature.beta(u)) == Zeroness::Zero;
    const bool xb_zero = zeroness(std::hypot(h.profile.x(u), h.profile.b(u))) == Zeroness::Zero;
    if (beta_zero) return xb_zero ? SingularCase::Three : SingularCase::One;
    return xb_zero ? SingularCase::Two : SingularCase::Regular;
}

Vec2 slice_curve(const HelicoidalSurface& h, double u, SliceVariant variant) {
    const double x = h.profile.x(u);
    const double phi = h.profile.z(u) / h.lambda;
    const double y = x * std::sin(phi);
    return {x * std::cos(phi), variant == SliceVariant::S ? -y : y};
}

double SliceLegendre::ell_mismatch() const { return std::abs(ell_s - ell_s_identity); }
double SliceLegendre::beta_mismatch() const { return std::abs(beta_s - beta_s_identity); }

SliceLegendre slice_legendre(const HelicoidalSurface& h, const SlicePair& l, double u) {
    const LegendreCurve& c = h.profile;
    const Jet X = c.x.jet(u, 1);
    const Jet Z = c.z.jet(u, 1);
    const Jet L1 = l.first.jet(u, 1);
    const Jet L2 = l.second.jet(u, 1);
    Jet sn, cs;
    sincos(Z / h.lambda, sn, cs);
    const Jet s1 = X * cs;
    const Jet s2 = -(X * sn);
    const Jet n1 = -(L2 * sn) - L1 * cs;
    const Jet n2 = -(L2 * cs) + L1 * sn;

    SliceLegendre out;
    out.l1 = L1.value();
    out.l2 = L2.value();
    out.point = {s1.value(), s2.value()};
    out.nu = {n1.value(), n2.value()};
    out.mu = {-n2.value(), n1.value()};
    out.ell_s_identity = n1[1] * out.mu[0] + n2[1] * out.mu[1];
    out.beta_s_identity = s1[1] * out.mu[0] + s2[1] * out.mu[1];

    const double a = c.a(u), b = c.b(u);
    const double beta = h.curvature.beta(u);
    out.ell_s = -a * beta + L1.value() * L2[1] - L1[1] * L2.value();
    out.beta_s = (L1.value() * X.value() * a - L2.value() * b) * beta;
    out.constraint_residual = L1.value() * b * h.lambda + L2.value() * X.value() * a;
    return out;
}

Vec3 parallel_surface(const HelicoidalSurface& h, const FrameSelection& k, double t_tilde, double u,
                      double v) {
    const Vec3 r = helicoid_eval(h, u, v).point;
    const JetVec3 n = frame_n_map(h, k)(u, v, kAlongU, 0);
    return {r[0] + t_tilde * n[0].value(), r[1] + t_tilde * n[1].value(),
            r[2] + t_tilde * n[2].value()};
}

Vec2 parallel_slice(const HelicoidalSurface& h, const SlicePair& l, double t, double u) {
    const SliceLegendre s = slice_legendre(h, l, u);
    return {s.point[0] + t * s.nu[0], s.point[1] + t * s.nu[1]};
}

ParallelData parallel_data(const HelicoidalSurface& h, const FrameSelection& k, const SlicePair& l,
                           double t_tilde, double u) {
    const LegendreCurve& c = h.profile;
    const double x = c.x(u), z = c.z(u), a = c.a(u), b = c.b(u);
    const double k1 = k.first(u), k2 = k.second(u);
    const double l1 = l.first(u), l2 = l.second(u);
    const double lam = h.lambda;

    ParallelData d;
    d.t_tilde = t_tilde;
    const double X = x + t_tilde * k2 * a;
    const double Y = t_tilde * k1;
    d.A = std::hypot(X, Y);
    if (d.A < 1e-9) {
        throw PolarDataUndefined("A = " + std::to_string(d.A) + " at u = " + std::to_string(u));
    }
    d.theta = std::atan2(Y, X);

    const double psi = t_tilde * k2 * b / lam;
    d.M = {Vec2{std::cos(psi), std::sin(psi)}, Vec2{-std::sin(psi), std::cos(psi)}};

    const double phi = (z + lam * d.theta + t_tilde * k2 * b) / lam;
    d.lhs = {d.A * std::cos(phi), -d.A * std::sin(phi)};
    const double v_star = -(z + t_tilde * k2 * b) / lam;
    d.direct = {X * std::cos(v_star) + Y * std::sin(v_star), X * std::sin(v_star) - Y * std::cos(v_star)};

    const double sigma = (k1 * l2 - k2 * a * l1) >= 0.0 ? 1.0 : -1.0;
    d.t = sigma * t_tilde * std::sqrt(std::max(0.0, 1.0 - k2 * k2 * b * b));
    d.B = std::hypot(x - d.t * l1, -d.t * l2);
    d.tau = std::atan2(-d.t * l2, x - d.t * l1);

    const Vec2 st = parallel_slice(h, l, d.t, u);
    d.rhs = {d.M[0][0] * st[0] + d.M[0][1] * st[1], d.M[1][0] * st[0] + d.M[1][1] * st[1]};
    d.residual = std::hypot(d.lhs[0] - d.rhs[0], d.lhs[1] - d.rhs[1]);
    return d;
}

double rotation_relation_residual(const HelicoidalSurface& h, const FrameSelection& k,
                                  const SlicePair& l, double t_tilde, double u) {
    return parallel_data(h, k, l, t_tilde, u).residual;
}

std::vector<ParallelData> parallel_data_along(const HelicoidalSurface& h, const FrameSelection& k,
                                              const SlicePair& l, double t_tilde,
                                              const std::vector<double>& grid) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    std::vector<ParallelData> out;
    out.reserve(grid.size());
    for (double u : grid) {
        ParallelData d = parallel_data(h, k, l, t_tilde, u);
        if (!out.empty()) {
            d.theta += kTwoPi * std::round((out.back().theta - d.theta) / kTwoPi);
            d.tau += kTwoPi * std::round((out.back().tau - d.tau) / kTwoPi);
        }
        out.push_back(d);
    }
    return out;
}

}  // namespace screw
