#include "equitri/cubic_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace equitri {

namespace {

constexpr double kClampTol = 1e-12;
constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;

double eval(const DepressedCubic& dc, double x) {
    return (x * x + dc.p) * x + dc.q;
}

// Bisection on [u, v] with f(u), f(v) of opposite sign (fu gives the sign
// at u), down to 1e-14 relative interval width.
double bisect(const DepressedCubic& dc, double u, double v, double fu) {
    while (v - u > 1e-14 * std::max({1.0, std::abs(u), std::abs(v)})) {
        const double mid = 0.5 * (u + v);
        if (mid <= u || mid >= v) break;
        const double fm = eval(dc, mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fu > 0.0)) {
            u = mid;
            fu = fm;
        } else {
            v = mid;
        }
    }
    return 0.5 * (u + v);
}

}  // namespace

const char* to_string(RootClass c) {
    switch (c) {
        case RootClass::ThreeDistinct: return "three_distinct";
        case RootClass::OneDoubleOneSimple: return "one_double_one_simple";
        case RootClass::Triple: return "triple";
        case RootClass::OneReal: return "one_real";
    }
    return "unknown";
}

Depressed depress(const CubicCoefficients& cc) {
    if (cc.a == 0.0 || !std::isfinite(cc.a)) {
        throw NotACubic("leading coefficient must be finite and nonzero");
    }
    if (!std::isfinite(cc.b) || !std::isfinite(cc.c) || !std::isfinite(cc.d)) {
        throw NotACubic("coefficients must be finite");
    }
    const double a = cc.a, b = cc.b, c = cc.c, d = cc.d;
    const double p = (3.0 * a * c - b * b) / (3.0 * a * a);
    const double q =
        (2.0 * b * b * b - 9.0 * a * b * c + 27.0 * a * a * d) / (27.0 * a * a * a);
    return {{p, q}, -b / (3.0 * a)};
}

std::pair<double, RootClass> discriminant(const DepressedCubic& dc) {
    const double half_q_sq = (dc.q / 2.0) * (dc.q / 2.0);
    const double third_p = dc.p / 3.0;
    const double third_p_cubed = third_p * third_p * third_p;
    const double delta = half_q_sq + third_p_cubed;
    const double tol =
        1e-12 * std::max({1.0, half_q_sq, std::abs(third_p_cubed)});
    RootClass cls;
    if (delta < -tol) {
        cls = RootClass::ThreeDistinct;
    } else if (delta > tol) {
        cls = RootClass::OneReal;
    } else if (std::abs(dc.p) <= 1e-12 && std::abs(dc.q) <= 1e-12) {
        cls = RootClass::Triple;
    } else {
        cls = RootClass::OneDoubleOneSimple;
    }
    return {delta, cls};
}

RootSet trig_roots(const DepressedCubic& dc) {
    const auto [delta, cls] = discriminant(dc);

    if (dc.p == 0.0 && dc.q == 0.0) {
        return {RootClass::Triple, {0.0, 0.0, 0.0}, delta};
    }
    if (dc.p >= 0.0) {
        // Eq. argument divides by p; p >= 0 with (p, q) != (0, 0) has delta > 0.
        throw DiscriminantPositive(
            "three-real-root formula inapplicable: p >= 0");
    }

    double m = (3.0 * dc.q / (2.0 * dc.p)) * std::sqrt(-3.0 / dc.p);
    bool clamped = false;
    if (std::abs(m) > 1.0) {
        if (std::abs(m) > 1.0 + kClampTol) {
            throw DiscriminantPositive(
                "discriminant positive: one real and two complex roots");
        }
        m = m > 0.0 ? 1.0 : -1.0;
        clamped = true;
    }

    const double radius = 2.0 * std::sqrt(-dc.p / 3.0);
    const double theta = std::acos(m) / 3.0;
    std::vector<double> roots = {radius * std::cos(theta - kTwoThirdsPi),
                                 radius * std::cos(theta),
                                 radius * std::cos(theta + kTwoThirdsPi)};
    std::sort(roots.begin(), roots.end());

    RootClass out_cls = cls;
    if (clamped && cls == RootClass::OneReal) {
        out_cls = RootClass::OneDoubleOneSimple;
    }
    return {out_cls, std::move(roots), delta};
}

RootSet reference_roots(const DepressedCubic& dc) {
    const auto [delta, cls] = discriminant(dc);
    const double m = 1.0 + std::max(std::abs(dc.p), std::abs(dc.q));
    const double lo = -2.0 * m;
    const double hi = 2.0 * m;

    // Stationary points split the domain into monotone pieces; one sign-change
    // bisection per piece finds every simple root.
    std::vector<double> breaks = {lo};
    if (dc.p < 0.0) {
        const double xc = std::sqrt(-dc.p / 3.0);
        breaks.push_back(-xc);
        breaks.push_back(xc);
    }
    breaks.push_back(hi);

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double u = breaks[i];
        const double v = breaks[i + 1];
        const double fu = eval(dc, u);
        const double fv = eval(dc, v);
        if (fu == 0.0 && i == 0) {
            roots.push_back(u);
        } else if (fu < 0.0 ? fv > 0.0 : fv < 0.0) {
            roots.push_back(bisect(dc, u, v, fu));
        }
        if (fv == 0.0) roots.push_back(v);
    }

    if (cls == RootClass::Triple) {
        const double r = roots.empty() ? std::cbrt(-dc.q) : roots.front();
        roots.assign(3, r);
    } else if (cls == RootClass::OneDoubleOneSimple) {
        // The double root sits at the stationary point where |f| is smallest.
        const double xc = std::sqrt(-dc.p / 3.0);
        const double xd =
            std::abs(eval(dc, xc)) <= std::abs(eval(dc, -xc)) ? xc : -xc;
        std::vector<double> merged;
        for (double r : roots) {
            // drop near-duplicates of the stationary root picked up by bisection
            if (std::abs(r - xd) > 1e-7 * std::max(1.0, std::abs(xd))) {
                merged.push_back(r);
            }
        }
        merged.push_back(xd);
        merged.push_back(xd);
        roots = std::move(merged);
    }

    std::sort(roots.begin(), roots.end());
    return {cls, std::move(roots), delta};
}

RootSet solve_cubic(const CubicCoefficients& cc, bool polish) {
    const Depressed dep = depress(cc);
    const auto [delta, cls] = discriminant(dep.dc);

    RootSet rs = cls == RootClass::OneReal ? reference_roots(dep.dc)
                                           : trig_roots(dep.dc);
    if (polish) {
        for (double& y : rs.roots) {
            const double deriv = 3.0 * y * y + dep.dc.p;
            if (deriv != 0.0) y -= eval(dep.dc, y) / deriv;
        }
    }
    for (double& y : rs.roots) y += dep.shift;
    std::sort(rs.roots.begin(), rs.roots.end());
    return rs;
}

}  // namespace equitri
