#include "screw/fixtures.hpp"

#include "screw/errors.hpp"

namespace screw {

LegendreCurve Fixture::curve() const { return LegendreCurve::from_strings(x, z, a, b, domain); }

HelicoidalSurface Fixture::surface() const { return HelicoidalSurface(curve(), lambda); }

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> all = {
        {"example1", "u^2 + u^3", "u^2", "2/sqrt(8 + 12*u + 9*u^2)",
         "-(2 + 3*u)/sqrt(8 + 12*u + 9*u^2)", 0.5, {-2.0, 2.0}, {-2.0, 1.0}},
        {"example2", "u^2", "u", "1/sqrt(1 + 4*u^2)", "-2*u/sqrt(1 + 4*u^2)", 0.5,
         {-2.0, 2.0}, {-1.0, 1.0}},
        {"example3", "u^3", "u", "1/sqrt(1 + 9*u^4)", "-3*u^2/sqrt(1 + 9*u^4)", 0.5,
         {-2.0, 2.0}, {-1.0, 1.0}},
        {"example4", "u^3", "u^2", "2/sqrt(4 + 9*u^2)", "-3*u/sqrt(4 + 9*u^2)", 0.5,
         {-2.0, 2.0}, {-1.0, 1.0}},
    };
    return all;
}

const Fixture& builtin_fixture(const std::string& name) {
    for (const Fixture& f : builtin_fixtures()) {
        if (f.name == name) return f;
    }
    throw MalformedSpec("unknown builtin '" + name + "'");
}

}  // namespace screw
