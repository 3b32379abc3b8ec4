#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "screw/errors.hpp"
#include "screw/fixtures.hpp"
#include "screw/report.hpp"

namespace screw::cli {

namespace {

struct Options {
    std::string builtin;
    std::string spec_path;
    std::optional<double> lambda;
    std::string u_range;
    std::string v_range;
    std::string grid = "50x50";
    std::string out_path;
    int samples = 0;
    int scan_grid = 512;
    std::string ell, beta;
    int steps = 4096;
    double u0 = std::nan("");
    double angle0 = 0.0;
    std::string gamma0;
};

Vec2 parse_pair(const std::string& text, const char* flag) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw MalformedSpec(std::string(flag) + " expects p:q");
    const std::string first = text.substr(0, colon), second = text.substr(colon + 1);
    try {
        std::size_t used_first = 0, used_second = 0;
        const Vec2 pair{std::stod(first, &used_first), std::stod(second, &used_second)};
        if (used_first == first.size() && used_second == second.size()) return pair;
    } catch (const std::logic_error&) {
    }
    throw MalformedSpec(std::string(flag) + " expects two numbers p:q");
}

Interval parse_interval(const std::string& text, const char* flag) {
    const Vec2 p = parse_pair(text, flag);
    if (!(p[0] < p[1])) throw MalformedSpec(std::string(flag) + " expects lo:hi with lo < hi");
    return {p[0], p[1]};
}

std::pair<int, int> parse_grid(const std::string& text) {
    int nu = 0, nv = 0;
    char x = 0;
    std::istringstream in(text);
    if (!(in >> nu >> x >> nv) || (x != 'x' && x != 'X') || !in.eof() || nu < 2 || nv < 2) {
        throw MalformedSpec("--grid expects NuxNv with both at least 2");
    }
    return {nu, nv};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedSpec("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Profile and default parameter ranges resolved from --builtin or --spec.
struct Input {
    std::string name;
    LegendreCurve curve;
    double lambda = 0.5;
    Interval u_range{-1.0, 1.0};
};

Input resolve_input(const Options& o) {
    if (o.builtin.empty() == o.spec_path.empty()) {
        throw MalformedSpec("exactly one of --builtin and --spec is required");
    }
    Input in;
    if (!o.builtin.empty()) {
        const Fixture& f = builtin_fixture(o.builtin);
        in.name = f.name;
        in.curve = f.curve();
        in.lambda = f.lambda;
        in.u_range = f.scan;
    } else {
        const CurveSpec spec = parse_curve_spec(read_file(o.spec_path));
        in.name = o.spec_path;
        in.lambda = spec.lambda.value_or(0.5);
        if (spec.kind == CurveSpec::Kind::Explicit) {
            in.curve = spec.curve;
            in.u_range = spec.domain.value_or(spec.curve.domain);
        } else {
            // Sampled base values; derivatives follow the curvature exactly.
            in.u_range = spec.domain.value_or(Interval{spec.init.u0 - 1.0, spec.init.u0 + 1.0});
            in.curve = reconstruct_curve(spec.curvature, spec.init, in.u_range,
                                         spec.steps.value_or(o.steps))
                           .interpolated(spec.curvature);
        }
    }
    if (o.lambda) in.lambda = *o.lambda;
    if (!o.u_range.empty()) in.u_range = parse_interval(o.u_range, "--u");
    return in;
}

Interval v_range_of(const Options& o) {
    return o.v_range.empty() ? Interval{0.0, 2.0 * std::numbers::pi} : parse_interval(o.v_range, "--v");
}

// Writes through --out when given, otherwise to the caller's stream.
template <class Fn>
void emit(const Options& o, std::ostream& out, Fn&& write) {
    if (o.out_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw DomainError("cannot write '" + o.out_path + "'");
    write(file);
}

void run_classify(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const HelicoidalSurface h(in.curve, in.lambda);
    auto report = scan_report(in.name, h, in.u_range,
                              singular_locus_scan(h, in.u_range, o.scan_grid));
    if (o.samples > 0) {
        const FrameSelection k = select_k(h);
        report["samples"] = profile_samples(h, &k, uniform_grid(in.u_range, o.samples));
    }
    emit(o, out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
}

void run_mesh(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const HelicoidalSurface h(in.curve, in.lambda);
    const auto [nu, nv] = parse_grid(o.grid);
    emit(o, out, [&](std::ostream& os) { write_obj(os, h, in.u_range, v_range_of(o), nu, nv); });
}

void run_invariants(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const HelicoidalSurface h(in.curve, in.lambda);
    const auto [nu, nv] = parse_grid(o.grid);
    const FrameSelection k = select_k(h);
    const InvariantField field = framed_field(h, k);
    std::vector<InvariantRow> rows;
    rows.reserve(static_cast<std::size_t>(nu) * nv);
    const std::vector<double> vs = uniform_grid(v_range_of(o), nv);
    for (double u : uniform_grid(in.u_range, nu)) {
        const BasicInvariants<double> inv = framed_invariants(h, k, u);
        const FramedCurvature cf = framed_curvature(inv);
        for (double v : vs) rows.push_back({u, v, inv, cf, integrability_residual(field, u, v)});
    }
    emit(o, out, [&](std::ostream& os) { write_invariants_csv(os, rows); });
}

void run_slice(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const HelicoidalSurface h(in.curve, in.lambda);
    const int n = o.samples > 0 ? o.samples : 512;
    emit(o, out, [&](std::ostream& os) { write_slice_csv(os, h, uniform_grid(in.u_range, n)); });
}

void run_reconstruct(const Options& o, std::ostream& out) {
    LegendreCurvature curvature;
    ReconstructionInit init;
    Interval range{0.0, 1.0};
    int steps = o.steps;
    if (!o.spec_path.empty()) {
        const CurveSpec spec = parse_curve_spec(read_file(o.spec_path));
        if (spec.kind != CurveSpec::Kind::Curvature) {
            throw MalformedSpec("reconstruct needs a spec of kind 'curvature'");
        }
        curvature = spec.curvature;
        init = spec.init;
        range = spec.domain.value_or(Interval{init.u0 - 1.0, init.u0 + 1.0});
        if (spec.steps) steps = *spec.steps;
    } else {
        if (o.ell.empty() || o.beta.empty()) {
            throw MalformedSpec("reconstruct needs --ell and --beta, or --spec");
        }
        auto field = [](const std::string& text, const char* flag) {
            try {
                return ScalarFunction::parse(text);
            } catch (const ParseError& e) {
                throw MalformedSpec(std::string(flag) + ": " + e.what());
            }
        };
        curvature = {field(o.ell, "--ell"), field(o.beta, "--beta")};
    }
    if (!o.u_range.empty()) range = parse_interval(o.u_range, "--u");
    init.u0 = std::isnan(o.u0) ? (o.spec_path.empty() ? range.lo : init.u0) : o.u0;
    if (o.spec_path.empty()) init.angle0 = o.angle0;
    if (!o.gamma0.empty()) {
        init.gamma0 = parse_pair(o.gamma0, "--gamma0");
    }
    const SampledCurve curve = reconstruct_curve(curvature, init, range, steps);
    emit(o, out, [&](std::ostream& os) { write_curve_csv(os, curve); });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Helicoidal surfaces of frontals: singularities, invariants and meshes", "screw"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--builtin", o.builtin, "Built-in profile: example1..example4");
        sub->add_option("--spec", o.spec_path, "Curve-spec JSON file");
        sub->add_option("--lambda", o.lambda, "Pitch of the screw motion");
        sub->add_option("--u", o.u_range, "Profile parameter range lo:hi");
        sub->add_option("--out", o.out_path, "Output file (default: standard output)");
    };

    CLI::App* classify = app.add_subcommand("classify", "Scan the singular locus and classify it");
    add_input(classify);
    classify->add_option("--scan-grid", o.scan_grid, "Grid intervals for the zero scan")
        ->check(CLI::Range(64, 1 << 20));
    classify->add_option("--samples", o.samples,
                         "Add this many per-u samples with framed curvature");

    CLI::App* mesh = app.add_subcommand("mesh", "Write the surface as an OBJ mesh");
    add_input(mesh);
    mesh->add_option("--v", o.v_range, "Rotation parameter range lo:hi (default 0:2pi)");
    mesh->add_option("--grid", o.grid, "Vertex grid NuxNv");

    CLI::App* invariants = app.add_subcommand("invariants", "Write framed invariants as CSV");
    add_input(invariants);
    invariants->add_option("--v", o.v_range, "Rotation parameter range lo:hi (default 0:2pi)");
    invariants->add_option("--grid", o.grid, "Sample grid NuxNv");

    CLI::App* slice = app.add_subcommand("slice", "Write the slice curves s and c as CSV");
    add_input(slice);
    slice->add_option("--samples", o.samples, "Number of samples (default 512)");

    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "Integrate a curvature pair to a sampled frontal");
    reconstruct->add_option("--ell", o.ell, "Curvature ell(u)");
    reconstruct->add_option("--beta", o.beta, "Curvature beta(u)");
    reconstruct->add_option("--spec", o.spec_path, "Curvature spec JSON file");
    reconstruct->add_option("--u", o.u_range, "Parameter range lo:hi");
    reconstruct->add_option("--steps", o.steps, "Integration steps");
    reconstruct->add_option("--u0", o.u0, "Initial parameter (default: range start)");
    reconstruct->add_option("--angle0", o.angle0, "Initial normal angle");
    reconstruct->add_option("--gamma0", o.gamma0, "Initial point x:z");
    reconstruct->add_option("--out", o.out_path, "Output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitMalformed;
    }

    try {
        if (classify->parsed()) run_classify(o, out);
        else if (mesh->parsed()) run_mesh(o, out);
        else if (invariants->parsed()) run_invariants(o, out);
        else if (slice->parsed()) run_slice(o, out);
        else run_reconstruct(o, out);
    } catch (const MalformedSpec& e) {
        err << e.what() << '\n';
        return kExitMalformed;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kExitMalformed;
    } catch (const NoSmoothSelection& e) {
        err << e.what() << '\n';
        return kExitNoSelection;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace screw::cli
