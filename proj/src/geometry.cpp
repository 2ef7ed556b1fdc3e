#include "equitri/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace equitri {

PlanePoint line_intersection(PlanePoint p1, PlanePoint p2,
                             PlanePoint q1, PlanePoint q2) {
    const double dx1 = p2.x - p1.x;
    const double dy1 = p2.y - p1.y;
    const double dx2 = q2.x - q1.x;
    const double dy2 = q2.y - q1.y;

    const double denom = dx1 * dy2 - dy1 * dx2;
    const double scale = std::max({std::abs(dx1), std::abs(dy1),
                                   std::abs(dx2), std::abs(dy2), 1.0});
    if (std::abs(denom) <= 1e-300 * scale * scale) {
        throw InternalError("line_intersection: parallel lines");
    }

    const double t = ((q1.x - p1.x) * dy2 - (q1.y - p1.y) * dx2) / denom;
    return {p1.x + t * dx1, p1.y + t * dy1};
}

PlanePoint intersect_axis(PlanePoint p1, PlanePoint p2) {
    const double dy = p2.y - p1.y;
    if (dy == 0.0) {
        if (p1.y == 0.0) return p1;  // line is the axis itself
        throw InternalError("intersect_axis: line parallel to r");
    }
    const double t = -p1.y / dy;
    return {p1.x + t * (p2.x - p1.x), 0.0};
}

PlanePoint intersect_vertical(PlanePoint p1, PlanePoint p2, double x0) {
    const double dx = p2.x - p1.x;
    if (dx == 0.0) {
        throw InternalError("intersect_vertical: line is vertical");
    }
    const double t = (x0 - p1.x) / dx;
    return {x0, p1.y + t * (p2.y - p1.y)};
}

}  // namespace equitri
