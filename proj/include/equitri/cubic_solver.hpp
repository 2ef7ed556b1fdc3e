#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equitri/triangle_reconstruction.hpp"

namespace equitri {

// aX^3 + bX^2 + cX + d, a != 0.
struct CubicCoefficients {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

enum class RootClass {
    ThreeDistinct,       // delta < 0
    OneDoubleOneSimple,  // delta = 0, p != 0
    Triple,              // delta = 0, p = q = 0
    OneReal,             // delta > 0
};

const char* to_string(RootClass c);

struct RootSet {
    RootClass classification = RootClass::ThreeDistinct;
    std::vector<double> roots;  // ascending; 3 entries, or 1 for OneReal
    double delta = 0.0;
};

struct Depressed {
    DepressedCubic dc;
    double shift = 0.0;  // -b/(3a); roots of dc map to original roots x + shift
};

// Tschirnhaus shift to x^3 + p x + q = 0.
// p = (3ac - b^2)/(3a^2), q = (2b^3 - 9abc + 27a^2 d)/(27a^3).
Depressed depress(const CubicCoefficients& cc);

// delta = (q/2)^2 + (p/3)^3 classified with zero-tolerance
// 1e-12 * max(1, (q/2)^2, |p/3|^3).
std::pair<double, RootClass> discriminant(const DepressedCubic& dc);

// Trigonometric real-root formula for the three-real-root regime:
// x_k = 2*sqrt(-p/3) * cos[(1/3) arccos((3q/2p) sqrt(-3/p)) + 2k*pi/3],
// k = -1, 0, 1. The arccos argument is clamped to +-1 within 1e-12;
// beyond that (delta > 0) throws DiscriminantPositive.
RootSet trig_roots(const DepressedCubic& dc);

// Independent oracle: bisection on the monotone pieces of x^3 + p x + q
// over [-2M, 2M], M = 1 + max(|p|, |q|), refined to 1e-14 relative width.
RootSet reference_roots(const DepressedCubic& dc);

// Depress, solve, shift back. For delta > 0 the single real root comes from
// reference_roots. `polish` applies one Newton step per root on the
// depressed polynomial before shifting.
RootSet solve_cubic(const CubicCoefficients& cc, bool polish = false);

}  // namespace equitri
