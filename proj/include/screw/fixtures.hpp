#pragma once

#include <string>
#include <vector>

#include "screw/helicoid.hpp"

namespace screw {

struct Fixture {
    std::string name;  // example1 .. example4
    std::string x, z, a, b;
    double lambda = 0.5;
    Interval domain{-2.0, 2.0};
    Interval scan{-1.0, 1.0};

    LegendreCurve curve() const;
    HelicoidalSurface surface() const;
};

// Profiles whose helicoids carry 5/2-, 3/2-, 4/3- and 5/3-cuspidal edges at u = 0.
const std::vector<Fixture>& builtin_fixtures();
// Throws MalformedSpec for unknown names.
const Fixture& builtin_fixture(const std::string& name);

}  // namespace screw
