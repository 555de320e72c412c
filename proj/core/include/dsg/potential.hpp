#pragma once

#include <vector>

#include "dsg/errors.hpp"

namespace dsg {

/// Substrate potential family V(phi; a) = 1 - (1-a) cos(2 pi phi) - a cos(4 pi phi),
/// a in [0,1]. Period 1 in phi, reflection symmetric, non-negative.
double potential_value(double phi, double a);

/// dV/dphi.
double potential_d1(double phi, double a);

/// d^2V/dphi^2.
double potential_d2(double phi, double a);

enum class CriticalPointKind { AbsoluteMinimum, RelativeMinimum, Maximum };

struct CriticalPoint {
    double location;   // phi value within [0,1)
    CriticalPointKind kind;
    double curvature;  // d^2V/dphi^2 at the location
};

/// All critical points of V(.; a) inside one period [0,1), ascending by
/// location. phi = 0 is an absolute minimum for every a; phi = 1/2 is a
/// maximum for a < 1/5 and a minimum above (absolute at a = 1); for a > 1/5
/// an additional pair of maxima appears. Throws DegenerateCurvatureError
/// when a classification curvature vanishes (a = 1/5 at phi = 1/2).
std::vector<CriticalPoint> critical_points(double a);

}  // namespace dsg
