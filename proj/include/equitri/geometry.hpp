#pragma once

#include <cmath>

#include "equitri/errors.hpp"

namespace equitri {

// Cartesian point; the oriented line r is the x-axis.
struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

inline PlanePoint operator+(PlanePoint a, PlanePoint b) { return {a.x + b.x, a.y + b.y}; }
inline PlanePoint operator-(PlanePoint a, PlanePoint b) { return {a.x - b.x, a.y - b.y}; }
inline PlanePoint operator*(double s, PlanePoint p) { return {s * p.x, s * p.y}; }

inline double distance(PlanePoint a, PlanePoint b) {
    return std::hypot(b.x - a.x, b.y - a.y);
}

// Intersection of the line through (p1,p2) with the line through (q1,q2),
// each given by two distinct points. Parallel lines cannot occur in a valid
// construction; hitting that case is a bug, not a user error.
PlanePoint line_intersection(PlanePoint p1, PlanePoint p2,
                             PlanePoint q1, PlanePoint q2);

// Intersection with the x-axis (the line r).
PlanePoint intersect_axis(PlanePoint p1, PlanePoint p2);

// Intersection with the vertical line x = x0.
PlanePoint intersect_vertical(PlanePoint p1, PlanePoint p2, double x0);

}  // namespace equitri
