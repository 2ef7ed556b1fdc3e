#pragma once

#include "equitri/errors.hpp"

namespace equitri {

// Coordinate on the oriented line r (identified with the real axis).
using LinePoint = double;

// Three pairwise distinct abscissas A, B, C on r.
struct CollinearTriple {
    LinePoint a = 0.0;
    LinePoint b = 0.0;
    LinePoint c = 0.0;
};

bool is_valid(const CollinearTriple& t);

// Throws DegenerateInput on non-finite or non-distinct coordinates.
void validate(const CollinearTriple& t);

// Same coordinates in ascending order.
CollinearTriple sorted(const CollinearTriple& t);

// max(1, |a|, |b|, |c|) — the relative-tolerance scale used throughout.
double coordinate_scale(const CollinearTriple& t);

// Signed measure of the oriented segment from p to q: q - p.
// Antisymmetric, and additive over any intermediate point.
inline double signed_measure(LinePoint p, LinePoint q) { return q - p; }

// The unique point O with (OA)+(OB)+(OC) = 0: the arithmetic mean.
LinePoint circumcenter_abscissa(const CollinearTriple& t);

}  // namespace equitri
