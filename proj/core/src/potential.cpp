#include "dsg/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dsg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
// Curvatures below this are indistinguishable from the degenerate family
// boundary a = 1/5 and refuse classification.
constexpr double kDegenerateCurvature = 1e-10;

void check_family_parameter(double a) {
    if (!(a >= 0.0 && a <= 1.0))
        throw DomainError("family parameter a must lie in [0,1]");
}

}  // namespace

double potential_value(double phi, double a) {
    check_family_parameter(a);
    // Written as a sum of non-negative terms so the result is >= 0 in
    // floating point and exactly 0 at the absolute minima.
    return (1.0 - a) * (1.0 - std::cos(kTwoPi * phi)) +
           a * (1.0 - std::cos(2.0 * kTwoPi * phi));
}

double potential_d1(double phi, double a) {
    check_family_parameter(a);
    return kTwoPi * (1.0 - a) * std::sin(kTwoPi * phi) +
           2.0 * kTwoPi * a * std::sin(2.0 * kTwoPi * phi);
}

double potential_d2(double phi, double a) {
    check_family_parameter(a);
    const double w = kTwoPi * kTwoPi;
    return w * (1.0 - a) * std::cos(kTwoPi * phi) +
           4.0 * w * a * std::cos(2.0 * kTwoPi * phi);
}

std::vector<CriticalPoint> critical_points(double a) {
    check_family_parameter(a);
    std::vector<CriticalPoint> pts;

    // phi = 0: minimum of every family member, V = 0.
    pts.push_back({0.0, CriticalPointKind::AbsoluteMinimum, potential_d2(0.0, a)});

    // phi = 1/2: curvature 4 pi^2 (5a - 1) changes sign at a = 1/5.
    const double curv_half = potential_d2(0.5, a);
    if (std::abs(curv_half) < kDegenerateCurvature)
        throw DegenerateCurvatureError(
            "degenerate curvature at phi = 1/2 (a = 1/5): classification "
            "impossible");
    if (curv_half < 0.0) {
        pts.push_back({0.5, CriticalPointKind::Maximum, curv_half});
    } else {
        // V(1/2) = 2(1 - a): absolute minimum only in the a = 1 limit.
        const auto kind = potential_value(0.5, a) == 0.0
                              ? CriticalPointKind::AbsoluteMinimum
                              : CriticalPointKind::RelativeMinimum;
        pts.push_back({0.5, kind, curv_half});
        // The pair of maxima at +-(1/pi) arctan sqrt((3a+1)/(5a-1)) exists
        // only once phi = 1/2 has turned into a minimum.
        const double loc = std::atan(std::sqrt((3.0 * a + 1.0) / (5.0 * a - 1.0))) / kPi;
        const double curv = potential_d2(loc, a);
        if (std::abs(curv) < kDegenerateCurvature)
            throw DegenerateCurvatureError(
                "degenerate curvature at the interior critical points");
        pts.push_back({loc, CriticalPointKind::Maximum, curv});
        pts.push_back({1.0 - loc, CriticalPointKind::Maximum,
                       potential_d2(1.0 - loc, a)});
    }

    std::sort(pts.begin(), pts.end(),
              [](const CriticalPoint& l, const CriticalPoint& r) {
                  return l.location < r.location;
              });
    return pts;
}

}  // namespace dsg
