#pragma once

#include <array>
#include <string>
#include <vector>

#include "equitri/geometry.hpp"
#include "equitri/line_measures.hpp"

namespace equitri {

// Coefficients (p, q) of x^3 + p x + q = 0.
struct DepressedCubic {
    double p = 0.0;
    double q = 0.0;
};

// Complete parameterization of the solution triangle: circumcenter abscissa,
// circumradius, phase in [0, pi/3], and the side of r the k=0 vertex lies on.
// Vertex k has abscissa o + R*cos(theta + 2k*pi/3), k in {-1, 0, 1}.
struct TrianglePose {
    LinePoint o = 0.0;
    double radius = 0.0;
    double theta = 0.0;
    int orientation = +1;  // +1 or -1, reflection across r
};

struct CenteredInvariants {
    LinePoint o = 0.0;
    DepressedCubic dc;
};

// Center of mass o plus the elementary symmetric functions of the centered
// coordinates y_i = x_i - o, packed as the depressed cubic they solve:
// (x-y1)(x-y2)(x-y3) = x^3 + p x + q with p = sum y_i y_j, q = -y1 y2 y3.
CenteredInvariants centered_invariants(const CollinearTriple& t);

// Triangle whose vertex projections on r are the given triple.
// R = 2*sqrt(-p/3), cos(3 theta) = (3q/2p)*sqrt(-3/p).
// A ConditioningWarning string is appended to *warnings when the arccos
// argument is within 1e-12 of +-1 (near-double point).
TrianglePose pose_from_triple(const CollinearTriple& t, int orientation,
                              std::vector<std::string>* warnings = nullptr);

// Vertices in k order {-1, 0, +1}; vertex k = (o + R cos phi_k, s*R sin phi_k).
std::array<PlanePoint, 3> triangle_vertices(const TrianglePose& pose);

// Abscissas of the vertices, ascending. Throws DegenerateInput when two
// coincide (theta at a range boundary).
CollinearTriple project_vertices(const TrianglePose& pose);

}  // namespace equitri
