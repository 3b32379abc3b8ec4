#include "screw/report.hpp"

#include <cmath>

#include "screw/errors.hpp"

namespace screw {

using nlohmann::ordered_json;

namespace {

std::string required_string(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) {
        throw MalformedSpec(std::string("missing string field '") + key + "'");
    }
    return j[key].get<std::string>();
}

ScalarFunction expression_field(const nlohmann::json& j, const char* key) {
    const std::string text = required_string(j, key);
    try {
        return ScalarFunction::parse(text);
    } catch (const ParseError& e) {
        throw MalformedSpec(std::string("field '") + key + "': " + e.what());
    }
}

double number_field(const nlohmann::json& j, const char* key) {
    if (!j[key].is_number()) throw MalformedSpec(std::string("field '") + key + "' must be a number");
    return j[key].get<double>();
}

}  // namespace

CurveSpec parse_curve_spec(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedSpec(e.what());
    }
    if (!j.is_object()) throw MalformedSpec("spec must be a JSON object");
    CurveSpec spec;
    const std::string kind = required_string(j, "kind");
    if (j.contains("lambda")) spec.lambda = number_field(j, "lambda");
    if (j.contains("steps")) {
        if (!j["steps"].is_number_integer()) throw MalformedSpec("'steps' must be an integer");
        spec.steps = j["steps"].get<int>();
    }
    if (j.contains("domain")) {
        const auto& d = j["domain"];
        if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number() ||
            !(d[0].get<double>() < d[1].get<double>())) {
            throw MalformedSpec("'domain' must be [lo, hi] with lo < hi");
        }
        spec.domain = Interval{d[0].get<double>(), d[1].get<double>()};
    }
    if (kind == "explicit") {
        spec.kind = CurveSpec::Kind::Explicit;
        spec.curve = {expression_field(j, "x"), expression_field(j, "z"), expression_field(j, "a"),
                      expression_field(j, "b"), spec.domain.value_or(Interval{-1.0, 1.0})};
        spec.curvature = curvature_functions(spec.curve);
    } else if (kind == "curvature") {
        spec.kind = CurveSpec::Kind::Curvature;
        spec.curvature = {expression_field(j, "ell"), expression_field(j, "beta")};
        if (j.contains("init")) {
            const auto& in = j["init"];
            if (!in.is_object()) throw MalformedSpec("'init' must be an object");
            if (in.contains("u0")) spec.init.u0 = number_field(in, "u0");
            if (in.contains("angle0")) spec.init.angle0 = number_field(in, "angle0");
            if (in.contains("gamma0")) {
                const auto& g = in["gamma0"];
                if (!g.is_array() || g.size() != 2 || !g[0].is_number() || !g[1].is_number()) {
                    throw MalformedSpec("'gamma0' must be [x, z]");
                }
                spec.init.gamma0 = {g[0].get<double>(), g[1].get<double>()};
            }
        }
    } else {
        throw MalformedSpec("unknown kind '" + kind + "'");
    }
    return spec;
}

ordered_json to_json(const CuspClass& c) {
    ordered_json j;
    j["tag"] = to_string(c.tag);
    j["marginal"] = c.marginal;
    ordered_json w = ordered_json::object();
    for (const auto& [k, v] : c.witnesses) w[k] = v;
    j["witnesses"] = w;
    return j;
}

ordered_json to_json(const SingularPoint& p) {
    const EdgeClass& e = p.edge;
    const EdgeWitnesses& w = e.witnesses;
    ordered_json j;
    j["u_star"] = p.u;
    j["case"] = to_string(p.singular_case);
    j["criteria_case"] = to_string(e.criteria_case);
    j["tag"] = to_string(e.tag);
    if (e.gamma_cusp) j["gamma_cusp"] = to_json(*e.gamma_cusp);
    j["marginal"] = e.marginal;
    if (!e.note.empty()) j["note"] = e.note;
    ordered_json wj;
    wj["beta"] = w.beta;
    wj["beta_dot"] = w.beta_dot;
    wj["beta_ddot"] = w.beta_ddot;
    wj["ell"] = w.ell;
    wj["ell_dot"] = w.ell_dot;
    wj["x"] = w.x;
    wj["a"] = w.a;
    wj["b"] = w.b;
    wj["nu_norm"] = w.nu_norm;
    wj["ell_beta_dot"] = w.ell_beta_dot;
    ordered_json d = ordered_json::object();
    for (const auto& [k, v] : w.determinants) d[k] = v;
    wj["determinants"] = d;
    j["witnesses"] = wj;
    return j;
}

ordered_json scan_report(const std::string& profile, const HelicoidalSurface& h, Interval interval,
                         const std::vector<SingularPoint>& points) {
    ordered_json j;
    j["profile"] = profile;
    j["lambda"] = h.lambda;
    j["interval"] = {interval.lo, interval.hi};
    ordered_json arr = ordered_json::array();
    for (const SingularPoint& p : points) arr.push_back(to_json(p));
    j["singular_points"] = arr;
    return j;
}

ordered_json profile_samples(const HelicoidalSurface& h, const FrameSelection* k,
                             const std::vector<double>& grid) {
    ordered_json arr = ordered_json::array();
    for (double u : grid) {
        const BasicInvariants<double> g = gfs_invariants(h, u);
        ordered_json row;
        row["u"] = u;
        row["x"] = h.profile.x(u);
        row["z"] = h.profile.z(u);
        row["a"] = h.profile.a(u);
        row["b"] = h.profile.b(u);
        row["ell"] = h.curvature.ell(u);
        row["beta"] = h.curvature.beta(u);
        row["alpha_r"] = g.alpha;
        row["beta_r"] = g.beta;
        row["nu_norm"] = std::hypot(g.alpha, g.beta);
        row["case"] = to_string(singular_case(h, u));
        if (k != nullptr) {
            const FramedCurvature cf = helicoid_curvature(h, *k, u);
            row["JF"] = cf.JF;
            row["KF"] = cf.KF;
            row["HF"] = cf.HF;
        }
        arr.push_back(row);
    }
    return arr;
}

void write_obj(std::ostream& os, const HelicoidalSurface& h, Interval u_range, Interval v_range,
               int nu, int nv) {
    if (nu < 2 || nv < 2) throw DomainError("mesh grid needs at least 2x2 vertices");
    const auto old_precision = os.precision(12);
    os << "# helicoidal surface, " << nu << "x" << nv << " grid\n";
    const std::vector<double> us = uniform_grid(u_range, nu);
    const std::vector<double> vs = uniform_grid(v_range, nv);
    for (double u : us) {
        const double x = h.profile.x(u);
        const double z = h.profile.z(u);
        for (double v : vs) {
            os << "v " << x * std::cos(v) << ' ' << x * std::sin(v) << ' ' << z + h.lambda * v << '\n';
        }
    }
    auto idx = [nv](int i, int j) { return static_cast<long>(i) * nv + j + 1; };
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j + 1 < nv; ++j) {
            os << "f " << idx(i, j) << ' ' << idx(i + 1, j) << ' ' << idx(i + 1, j + 1) << '\n';
            os << "f " << idx(i, j) << ' ' << idx(i + 1, j + 1) << ' ' << idx(i, j + 1) << '\n';
        }
    }
    os.precision(old_precision);
}

void write_slice_csv(std::ostream& os, const HelicoidalSurface& h, const std::vector<double>& grid) {
    const auto old_precision = os.precision(17);
    os << "u,s_x,s_y,c_x,c_y\r\n";
    for (double u : grid) {
        const Vec2 s = slice_curve(h, u, SliceVariant::S);
        const Vec2 c = slice_curve(h, u, SliceVariant::C);
        os << u << ',' << s[0] << ',' << s[1] << ',' << c[0] << ',' << c[1] << "\r\n";
    }
    os.precision(old_precision);
}

void write_curve_csv(std::ostream& os, const SampledCurve& curve) {
    const auto old_precision = os.precision(17);
    os << "u,x,z,a,b\r\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const Vec2 n = curve.nu(i);
        os << curve.u[i] << ',' << curve.x[i] << ',' << curve.z[i] << ',' << n[0] << ',' << n[1]
           << "\r\n";
    }
    os.precision(old_precision);
}

}  // namespace screw
