#include "equitri/triangle_reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace equitri {

namespace {
constexpr double kClampTol = 1e-12;
constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;
}  // namespace

CenteredInvariants centered_invariants(const CollinearTriple& t) {
    validate(t);
    const double o = (t.a + t.b + t.c) / 3.0;
    const double y1 = t.a - o;
    const double y2 = t.b - o;
    const double y3 = t.c - o;
    // Centered values sum to zero, so p = -(y1^2+y2^2+y3^2)/2 < 0 strictly.
    const double p = y1 * y2 + y1 * y3 + y2 * y3;
    const double q = -(y1 * y2 * y3);
    return {o, {p, q}};
}

TrianglePose pose_from_triple(const CollinearTriple& t, int orientation,
                              std::vector<std::string>* warnings) {
    const CenteredInvariants inv = centered_invariants(t);
    const double p = inv.dc.p;
    const double q = inv.dc.q;

    const double radius = 2.0 * std::sqrt(-p / 3.0);
    double m = (3.0 * q / (2.0 * p)) * std::sqrt(-3.0 / p);
    if (std::abs(m) > 1.0 + kClampTol) {
        throw DegenerateInput("cos(3*theta) argument outside [-1, 1]");
    }
    if (std::abs(m) >= 1.0 - kClampTol && warnings != nullptr) {
        warnings->push_back(
            "conditioning: arccos argument within 1e-12 of +-1 "
            "(near-double point)");
    }
    m = std::clamp(m, -1.0, 1.0);
    const double theta = std::acos(m) / 3.0;

    return {inv.o, radius, theta, orientation >= 0 ? +1 : -1};
}

std::array<PlanePoint, 3> triangle_vertices(const TrianglePose& pose) {
    std::array<PlanePoint, 3> v;
    const double s = static_cast<double>(pose.orientation);
    for (int k = -1; k <= 1; ++k) {
        const double phi = pose.theta + k * kTwoThirdsPi;
        v[static_cast<std::size_t>(k + 1)] = {
            pose.o + pose.radius * std::cos(phi),
            s * pose.radius * std::sin(phi)};
    }
    return v;
}

CollinearTriple project_vertices(const TrianglePose& pose) {
    const auto v = triangle_vertices(pose);
    CollinearTriple t = sorted({v[0].x, v[1].x, v[2].x});
    if (!is_valid(t)) {
        throw DegenerateInput("vertex abscissas coincide (theta at boundary)");
    }
    return t;
}

}  // namespace equitri
