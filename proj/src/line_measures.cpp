#include "equitri/line_measures.hpp"

#include <algorithm>
#include <cmath>

namespace equitri {

bool is_valid(const CollinearTriple& t) {
    if (!std::isfinite(t.a) || !std::isfinite(t.b) || !std::isfinite(t.c)) {
        return false;
    }
    return t.a != t.b && t.b != t.c && t.a != t.c;
}

void validate(const CollinearTriple& t) {
    if (!std::isfinite(t.a) || !std::isfinite(t.b) || !std::isfinite(t.c)) {
        throw DegenerateInput("triple coordinates must be finite");
    }
    if (t.a == t.b || t.b == t.c || t.a == t.c) {
        throw DegenerateInput("triple coordinates must be pairwise distinct");
    }
}

CollinearTriple sorted(const CollinearTriple& t) {
    double v[3] = {t.a, t.b, t.c};
    std::sort(v, v + 3);
    return {v[0], v[1], v[2]};
}

double coordinate_scale(const CollinearTriple& t) {
    return std::max({1.0, std::abs(t.a), std::abs(t.b), std::abs(t.c)});
}

LinePoint circumcenter_abscissa(const CollinearTriple& t) {
    validate(t);
    return (t.a + t.b + t.c) / 3.0;
}

}  // namespace equitri
