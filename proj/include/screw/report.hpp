#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "screw/singularity.hpp"

namespace screw {

// Curve-spec file: {"kind": "explicit", "x", "z", "a", "b"} or
// {"kind": "curvature", "ell", "beta", "init": {"u0", "gamma0", "angle0"}};
// optional "lambda", "domain": [lo, hi], "steps".
struct CurveSpec {
    enum class Kind { Explicit, Curvature } kind = Kind::Explicit;
    LegendreCurve curve;
    LegendreCurvature curvature;
    ReconstructionInit init;
    std::optional<double> lambda;
    std::optional<Interval> domain;
    std::optional<int> steps;
};

// Throws MalformedSpec (including for expression parse errors).
CurveSpec parse_curve_spec(const std::string& text);

nlohmann::ordered_json to_json(const CuspClass& c);
nlohmann::ordered_json to_json(const SingularPoint& p);
nlohmann::ordered_json scan_report(const std::string& profile, const HelicoidalSurface& h,
                                   Interval interval, const std::vector<SingularPoint>& points);
// Per-u invariants and case labels; framed columns only when k is given.
nlohmann::ordered_json profile_samples(const HelicoidalSurface& h, const FrameSelection* k,
                                       const std::vector<double>& grid);

// Vertices (u_i, v_j) row-major in i; two triangles per quad, 1-based faces.
void write_obj(std::ostream& os, const HelicoidalSurface& h, Interval u_range, Interval v_range,
               int nu, int nv);
// Columns u, s_x, s_y, c_x, c_y.
void write_slice_csv(std::ostream& os, const HelicoidalSurface& h, const std::vector<double>& grid);
// Columns u, x, z, a, b.
void write_curve_csv(std::ostream& os, const SampledCurve& curve);

}  // namespace screw
