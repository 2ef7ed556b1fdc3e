#pragma once

#include <array>

#include "equitri/geometry.hpp"
#include "equitri/line_measures.hpp"

namespace equitri {

// Every named point of the four-step straightedge construction, for the
// sorted input triple (a, b, c). Name collisions between steps are resolved
// as Dtr/Dray (the two points called D), Fthales/F, and L1..L3 for the
// ladder points on the vertical line h.
struct ConstructionTrace {
    CollinearTriple input;    // sorted ascending
    bool reflected = false;   // construction ran on the mirrored triple

    // Step 1: Thales trisection locating the circumcenter O on r.
    PlanePoint Dtr;      // point D on r with (DA) = (BC)
    PlanePoint L1, L2, L3;  // ladder on the vertical through C, unit spacing
    PlanePoint Fthales;  // first trisection point on r
    PlanePoint O;        // circumcenter, on r

    // Step 2: midpoint ladder and the reflected center O'.
    PlanePoint M;        // midpoint of AB
    PlanePoint Dray;     // intersection of the pi/6 ray from A with x = M.x
    PlanePoint Oprime;   // reflection of O through Dray
    PlanePoint E;        // foot of the perpendicular from O' to r

    // Step 3: perpendicular bisector p of O O'.
    PlanePoint G;        // p meets the vertical through B
    PlanePoint H;        // corner of the rectangle over MB at Dray height
    PlanePoint I;        // p meets r

    // Step 4: remaining vertices.
    PlanePoint F;        // p meets the vertical through A
    PlanePoint K;        // line(O', O) meets the vertical through C

    std::array<PlanePoint, 3> vertices() const { return {F, G, K}; }
};

struct Step1Result {
    PlanePoint O;
    PlanePoint Dtr, L1, L2, L3, Fthales;
};

struct ResidualReport {
    double eq2_06 = 0.0;        // | |EO| - |OC| |
    double eq3_02 = 0.0;        // | |OG| - |OO'| |
    double eq4_01 = 0.0;        // | |OK| - |OO'| |
    double eq4_03 = 0.0;        // | |OF| - |OG| |
    double side_spread = 0.0;   // max - min pairwise side of FGK
    double radius_spread = 0.0; // max - min of |OF|, |OG|, |OK|
    double projection_error = 0.0;  // max |vertex.x - matching input point|
    double max_residual = 0.0;
    double tolerance = 0.0;     // tol * coordinate scale actually applied
    bool pass = false;
};

// Thales trisection of (DC) producing O with O.x = (a+b+c)/3. The triple is
// sorted internally; no reflection is needed for this step.
Step1Result step1_circumcenter(const CollinearTriple& t);

// Full four-step replay. Inputs with B closer to C than to A are mirrored
// (x -> -x), traced, and mapped back; vertex labels F/K swap accordingly so
// that F.x = a, G.x = b, K.x = c always holds for the sorted triple.
ConstructionTrace build_trace(const CollinearTriple& t);

// Residuals of the step identities; pass iff all <= tol * max(1,|a|,|b|,|c|).
ResidualReport verify_trace(const ConstructionTrace& trace, double tol);

}  // namespace equitri
