#include "screw/singularity.hpp"

#include <algorithm>
#include <cmath>

#include "screw/errors.hpp"

namespace screw {

const char* to_string(CuspTag t) {
    switch (t) {
        case CuspTag::RegularPoint: return "RegularPoint";
        case CuspTag::Cusp_3_2: return "Cusp_3_2";
        case CuspTag::Cusp_5_2: return "Cusp_5_2";
        case CuspTag::Cusp_4_3: return "Cusp_4_3";
        case CuspTag::Cusp_5_3: return "Cusp_5_3";
        case CuspTag::Degenerate: return "Degenerate";
    }
    return "?";
}

const char* to_string(EdgeTag t) {
    switch (t) {
        case EdgeTag::RegularSurfacePoint: return "RegularSurfacePoint";
        case EdgeTag::GammaEdge: return "GammaEdge";
        case EdgeTag::CuspidalEdge_3_2: return "CuspidalEdge_3_2";
        case EdgeTag::CuspidalEdge_5_2: return "CuspidalEdge_5_2";
        case EdgeTag::CuspidalEdge_4_3: return "CuspidalEdge_4_3";
        case EdgeTag::CuspidalEdge_5_3: return "CuspidalEdge_5_3";
        case EdgeTag::Degenerate: return "Degenerate";
    }
    return "?";
}

const char* to_string(CriteriaCase c) {
    switch (c) {
        case CriteriaCase::None: return "none";
        case CriteriaCase::I: return "I";
        case CriteriaCase::II: return "II";
        case CriteriaCase::III: return "III";
    }
    return "?";
}

double CuspClass::witness(const std::string& name) const {
    for (const auto& [k, v] : witnesses) {
        if (k == name) return v;
    }
    throw std::out_of_range("no witness named " + name);
}

namespace {

double det2(const Vec2& p, const Vec2& q) { return p[0] * q[1] - p[1] * q[0]; }
double len(const Vec2& p) { return std::hypot(p[0], p[1]); }

// Scale-free for large operands; raw for small ones, so tiny data stays tiny.
double normalized_det(const Vec2& p, const Vec2& q) {
    return det2(p, q) / (std::max(1.0, len(p)) * std::max(1.0, len(q)));
}

}  // namespace

CuspClass classify_plane_cusp(const Jet& first, const Jet& second) {
    if (std::min(first.order(), second.order()) < 5) {
        throw JetOrderTooLow("plane cusp test needs order-5 jets");
    }
    std::array<Vec2, 6> d{};
    for (int k = 1; k <= 5; ++k) d[k] = {first.derivative(k), second.derivative(k)};

    CuspClass out;
    auto decide = [&](Zeroness z) {
        if (z == Zeroness::Marginal) out.marginal = true;
        return z;
    };
    auto degenerate = [&]() {
        out.tag = CuspTag::Degenerate;
        return out;
    };

    const double speed = len(d[1]);
    out.witnesses.push_back({"speed", speed});
    const Zeroness zs = decide(zeroness(speed));
    if (zs == Zeroness::NonZero) {
        out.tag = CuspTag::RegularPoint;
        return out;
    }
    if (zs == Zeroness::Marginal) return degenerate();

    const double det23 = normalized_det(d[2], d[3]);
    out.witnesses.push_back({"det23", det23});
    const Zeroness z23 = decide(zeroness(det23));
    if (z23 == Zeroness::NonZero) {
        out.tag = CuspTag::Cusp_3_2;
        return out;
    }
    if (z23 == Zeroness::Marginal) return degenerate();

    const double acc = len(d[2]);
    out.witnesses.push_back({"second_derivative_norm", acc});
    const Zeroness z2 = decide(zeroness(acc));
    if (z2 == Zeroness::Marginal) return degenerate();
    if (z2 == Zeroness::NonZero) {
        const int i = std::abs(d[2][0]) >= std::abs(d[2][1]) ? 0 : 1;
        const double k = d[3][i] / d[2][i];
        const double off = d[3][1 - i] - k * d[2][1 - i];
        out.witnesses.push_back({"k", k});
        if (decide(zeroness(off / std::max(1.0, len(d[3])))) != Zeroness::Zero) return degenerate();
        const Vec2 w{3.0 * d[5][0] - 10.0 * k * d[4][0], 3.0 * d[5][1] - 10.0 * k * d[4][1]};
        const double det25 = normalized_det(d[2], w);
        out.witnesses.push_back({"det2_w", det25});
        if (decide(zeroness(det25)) == Zeroness::NonZero) {
            out.tag = CuspTag::Cusp_5_2;
            return out;
        }
        return degenerate();
    }

    const double det34 = normalized_det(d[3], d[4]);
    out.witnesses.push_back({"det34", det34});
    const Zeroness z34 = decide(zeroness(det34));
    if (z34 == Zeroness::NonZero) {
        out.tag = CuspTag::Cusp_4_3;
        return out;
    }
    if (z34 == Zeroness::Marginal) return degenerate();
    const double det35 = normalized_det(d[3], d[5]);
    out.witnesses.push_back({"det35", det35});
    if (decide(zeroness(det35)) == Zeroness::NonZero) {
        out.tag = CuspTag::Cusp_5_3;
        return out;
    }
    return degenerate();
}

namespace {

// Derivatives (not Taylor coefficients) of the profile data at u0.
struct Derivs {
    double B0, B1, B2, B3, B4;  // beta and derivatives
    double L0, L1, L2, L3;      // ell and derivatives
    double a, b, x;
};

Derivs derivs_at(const HelicoidalSurface& h, double u0, int n) {
    // Order n slice derivatives use beta^(n-1) and ell^(n-2).
    const int ob = std::max(n - 1, 0);
    const int ol = std::max(n - 2, 0);
    const Jet beta = h.curvature.beta.jet(u0, ob);
    const Jet ell = h.curvature.ell.jet(u0, ol);
    auto dv = [](const Jet& j, int k) { return k <= j.order() ? j.derivative(k) : 0.0; };
    return {dv(beta, 0), dv(beta, 1), dv(beta, 2), dv(beta, 3), dv(beta, 4),
            dv(ell, 0),  dv(ell, 1),  dv(ell, 2),  dv(ell, 3),
            h.profile.a(u0), h.profile.b(u0), h.profile.x(u0)};
}

}  // namespace

SliceJetMatrix slice_jet_closed_form(const HelicoidalSurface& h, double u0, int n) {
    if (n < 2 || n > 5) throw OrderOutOfRange("closed forms exist for n = 2..5");
    const Derivs D = derivs_at(h, u0, n);
    const double lam = h.lambda, l2 = lam * lam, l3 = l2 * lam, l4 = l2 * l2;
    const double a = D.a, b = D.b, x = D.x;
    const double B = D.B0, Bd = D.B1, Bdd = D.B2, Bddd = D.B3, B4 = D.B4;
    const double L = D.L0, Ld = D.L1, Ldd = D.L2, Lddd = D.L3;
    const double a2 = a * a, a3 = a2 * a, a4 = a2 * a2, b2 = b * b, b3 = b2 * b;
    const double B2 = B * B, B3 = B2 * B, B4p = B2 * B2, B5 = B4p * B;
    const double L2 = L * L, L3 = L2 * L, L4 = L2 * L2;

    SliceJetMatrix m;
    m.n = n;
    switch (n) {
        case 2:
            m.C11 = -b * Bd - L * a * B - B2 * a2 * x / l2;
            m.C21 = -(-x * a * Bd + 2.0 * a * b * B2 + L * x * b * B) / lam;
            break;
        case 3:
            m.C11 = -2.0 * L * a * Bd - b * Bdd - Ld * a * B + L2 * b * B +
                    (-3.0 * B * Bd * a2 * x + 3.0 * B2 * a * b * L * x + 3.0 * B3 * a2 * b) / l2;
            m.C21 = (-6.0 * a * b * B * Bd - 2.0 * x * b * L * Bd + x * a * Bdd + 3.0 * b2 * L * B2 -
                     3.0 * a2 * L * B2 - Ld * x * b * B - x * a * L2 * B) / lam -
                    B3 * a3 * x / l3;
            break;
        case 4:
            m.C11 = -3.0 * Ld * a * Bd + 3.0 * L2 * b * Bd - 3.0 * L * a * Bdd - b * Bddd -
                    Ldd * a * B + 3.0 * L * Ld * b * B + L3 * a * B +
                    (-3.0 * Bd * Bd * a2 * x - 4.0 * B * Bdd * a2 * x + 14.0 * B * Bd * a * L * b * x +
                     18.0 * B2 * Bd * a2 * b - 3.0 * B2 * b2 * L2 * x + 4.0 * B2 * a2 * L2 * x +
                     4.0 * B2 * a * b * Ld * x - 12.0 * B3 * a * b2 * L + 6.0 * B3 * a3 * L) / l2 +
                    B4p * a4 * x / l4;
            m.C21 = (14.0 * L * b2 * B * Bd - 14.0 * a2 * L * B * Bd - 6.0 * a * b * Bd * Bd -
                     8.0 * a * b * B * Bdd - 3.0 * L2 * a * x * Bd - 3.0 * x * b * Ld * Bd -
                     3.0 * x * b * L * Bdd + x * a * Bddd + 14.0 * a * b * L2 * B2 +
                     4.0 * b2 * Ld * B2 - 4.0 * a2 * Ld * B2 - Ldd * x * b * B -
                     3.0 * Ld * x * L * a * B + x * L3 * B * b) / lam +
                    (-6.0 * B2 * Bd * a3 * x + 4.0 * B4p * a3 * b + 6.0 * B3 * a2 * x * L * b) / l3;
            break;
        case 5:
            if (zeroness(x) != Zeroness::Zero) {
                throw C5RequiresXZero("x(u0) = " + std::to_string(x));
            }
            m.C11 = -b * B * L4 + 4.0 * a * L3 * Bd + 6.0 * a * B * L2 * Ld + 12.0 * b * L * Bd * Ld +
                    3.0 * b * B * Ld * Ld + 6.0 * b * L2 * Bdd - 6.0 * a * Ld * Bdd +
                    4.0 * b * B * L * Ldd - 4.0 * a * Bd * Ldd - 4.0 * a * L * Bddd - a * B * Lddd -
                    b * B4 +
                    (-60.0 * a2 * b * B3 * L2 + 15.0 * b3 * B3 * L2 + 50.0 * a3 * B2 * L * Bd -
                     100.0 * a * b2 * B2 * L * Bd + 45.0 * a2 * b * B * Bd * Bd +
                     10.0 * a3 * B3 * Ld - 20.0 * a * b2 * B3 * Ld + 30.0 * a2 * b * B2 * Bdd) / l2 -
                    5.0 * a4 * b * B5 / l4;
            m.C21 = (15.0 * a2 * B2 * L3 - 15.0 * b2 * B2 * L3 + 90.0 * a * b * B * L2 * Bd -
                     20.0 * a2 * L * Bd * Bd + 20.0 * b2 * L * Bd * Bd + 50.0 * a * b * B2 * L * Ld -
                     25.0 * a2 * B * Bd * Ld + 25.0 * b2 * B * Bd * Ld - 25.0 * a2 * B * L * Bdd +
                     25.0 * b2 * B * L * Bdd - 20.0 * a * b * Bd * Bdd - 5.0 * a2 * B2 * Ldd +
                     5.0 * b2 * B2 * Ldd - 10.0 * a * b * B * Bddd) / lam +
                    (10.0 * a4 * B4p * L - 30.0 * a2 * b2 * B4p * L + 40.0 * a3 * b * B3 * Bd) / l3;
            break;
    }
    return m;
}

Vec2 slice_derivative(const HelicoidalSurface& h, double u0, const SliceJetMatrix& m) {
    const double phi = h.profile.z(u0) / h.lambda;
    const double c = std::cos(phi), s = std::sin(phi);
    return {m.C11 * c - m.C21 * s, m.C21 * c + m.C11 * s};
}

std::pair<Jet, Jet> slice_c_jets(const HelicoidalSurface& h, double u0, int order) {
    const Jet X = h.profile.x.jet(u0, order);
    const Jet Z = h.profile.z.jet(u0, order);
    Jet s, c;
    sincos(Z / h.lambda, s, c);
    return {X * c, X * s};
}

double det_identity_check(double x11, double x21, double y11, double y21, double v1, double v2) {
    const Vec2 p{x11 * v1 - x21 * v2, x21 * v1 + x11 * v2};
    const Vec2 q{y11 * v1 - y21 * v2, y21 * v1 + y11 * v2};
    const double lhs = det2(p, q);
    const double rhs = (v1 * v1 + v2 * v2) * (x11 * y21 - y11 * x21);
    return std::abs(lhs - rhs);
}

EdgeClass classify_helicoid_singularity(const HelicoidalSurface& h, double u0) {
    const LegendreCurve& c = h.profile;
    const Jet beta = h.curvature.beta.jet(u0, 4);
    const Jet ell = h.curvature.ell.jet(u0, 3);
    EdgeClass out;
    EdgeWitnesses& w = out.witnesses;
    w.beta = beta.value();
    w.beta_dot = beta.derivative(1);
    w.beta_ddot = beta.derivative(2);
    w.ell = ell.value();
    w.ell_dot = ell.derivative(1);
    w.x = c.x(u0);
    w.a = c.a(u0);
    w.b = c.b(u0);
    w.ell_beta_dot = w.ell * w.beta_dot;
    w.nu_norm = std::abs(w.beta) * std::hypot(w.x, w.b * h.lambda);
    out.singular_case = singular_case(h, u0);

    auto decide = [&](double v) {
        const Zeroness z = zeroness(v);
        if (z == Zeroness::Marginal) out.marginal = true;
        return z;
    };
    auto degenerate = [&](std::string note) {
        out.tag = EdgeTag::Degenerate;
        out.note = std::move(note);
        return out;
    };

    const Zeroness znu = decide(w.nu_norm);
    if (znu == Zeroness::NonZero) {
        out.tag = EdgeTag::RegularSurfacePoint;
        return out;
    }
    if (znu == Zeroness::Marginal) return degenerate("|nu| is numerically marginal");

    const Zeroness zx = decide(w.x);
    if (zx == Zeroness::Marginal) return degenerate("x is numerically marginal");
    if (zx == Zeroness::NonZero) {
        const Jet X = c.x.jet(u0, 5);
        const Jet Z = c.z.jet(u0, 5);
        out.gamma_cusp = classify_plane_cusp(X, Z);
        out.marginal = out.marginal || out.gamma_cusp->marginal;
        out.tag = EdgeTag::GammaEdge;
        w.determinants = out.gamma_cusp->witnesses;
        return out;
    }

    // x(u0) = 0: slice-curve determinants as supporting witnesses.
    std::array<Vec2, 6> cd{};
    for (int n = 2; n <= 5; ++n) cd[n] = slice_derivative(h, u0, slice_jet_closed_form(h, u0, n));
    w.determinants.push_back({"det(c2,c3)", det2(cd[2], cd[3])});
    w.determinants.push_back({"det(c3,c4)", det2(cd[3], cd[4])});
    w.determinants.push_back({"det(c3,c5)", det2(cd[3], cd[5])});
    w.determinants.push_back({"|c2|", len(cd[2])});
    w.determinants.push_back({"|c3|", len(cd[3])});

    const Zeroness zb = decide(w.beta);
    const Zeroness zbb = decide(w.b);
    if (zb == Zeroness::Marginal || zbb == Zeroness::Marginal) {
        return degenerate("beta or b is numerically marginal");
    }
    if (zb == Zeroness::Zero && zbb == Zeroness::NonZero) {
        out.criteria_case = CriteriaCase::I;
        if (w.beta_dot != 0.0 && w.b != 0.0) {
            const double k = (2.0 * w.a * w.ell * w.beta_dot + w.b * w.beta_ddot) / (w.b * w.beta_dot);
            const Vec2 v{3.0 * cd[5][0] - 10.0 * k * cd[4][0], 3.0 * cd[5][1] - 10.0 * k * cd[4][1]};
            w.determinants.push_back({"det(c2,3c5-10kc4)", det2(cd[2], v)});
        }
        const Zeroness z = decide(w.ell_beta_dot);
        if (z == Zeroness::NonZero) {
            out.tag = EdgeTag::CuspidalEdge_5_2;
            return out;
        }
        return degenerate(z == Zeroness::Marginal ? "ell * beta' is numerically marginal"
                                                  : "ell * beta' = 0");
    }
    if (zb == Zeroness::NonZero && zbb == Zeroness::Zero) {
        out.criteria_case = CriteriaCase::II;
        const Zeroness zl = decide(w.ell);
        if (zl == Zeroness::NonZero) {
            out.tag = EdgeTag::CuspidalEdge_3_2;
            return out;
        }
        if (zl == Zeroness::Marginal) return degenerate("ell is numerically marginal");
        const Zeroness zld = decide(w.ell_dot);
        if (zld == Zeroness::NonZero) {
            out.tag = EdgeTag::CuspidalEdge_4_3;
            return out;
        }
        return degenerate(zld == Zeroness::Marginal ? "ell' is numerically marginal"
                                                    : "ell = ell' = 0");
    }
    if (zb == Zeroness::Zero && zbb == Zeroness::Zero) {
        out.criteria_case = CriteriaCase::III;
        const Zeroness z = decide(w.ell_beta_dot);
        if (z == Zeroness::NonZero) {
            out.tag = EdgeTag::CuspidalEdge_5_3;
            return out;
        }
        return degenerate(z == Zeroness::Marginal ? "ell * beta' is numerically marginal"
                                                  : "ell * beta' = 0");
    }
    return degenerate("inconsistent zero pattern");
}

std::vector<SingularPoint> singular_locus_scan(const HelicoidalSurface& h, Interval interval,
                                               int n_grid) {
    if (n_grid < 64) throw DomainError("n_grid must be at least 64");
    std::vector<double> cand;
    for (const Zero& z : find_zeros(h.curvature.beta, interval, n_grid)) cand.push_back(z.u);
    for (const Zero& z : find_zeros(h.profile.x, interval, n_grid)) {
        if (zeroness(h.profile.b(z.u)) == Zeroness::Zero) cand.push_back(z.u);
    }
    for (const Zero& z : find_zeros(h.profile.b, interval, n_grid)) {
        if (zeroness(h.profile.x(z.u)) == Zeroness::Zero) cand.push_back(z.u);
    }
    std::sort(cand.begin(), cand.end());
    std::vector<SingularPoint> out;
    for (double u : cand) {
        if (!out.empty() && u - out.back().u <= 1e-9) continue;
        SingularPoint p;
        p.u = u;
        p.singular_case = singular_case(h, u);
        p.edge = classify_helicoid_singularity(h, u);
        out.push_back(p);
    }
    return out;
}

}  // namespace screw
