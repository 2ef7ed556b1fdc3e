#include "equitri/construction_trace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace equitri {

namespace {

constexpr double kLadderSpacing = 1.0;  // arbitrary by Thales; fixed for reproducibility
const double kTanPiSixth = std::tan(std::numbers::pi / 6.0);

Step1Result step1_sorted(double a, double b, double c) {
    Step1Result r;
    r.Dtr = {a - (c - b), 0.0};
    r.L1 = {c, kLadderSpacing};
    r.L2 = {c, 2.0 * kLadderSpacing};
    r.L3 = {c, 3.0 * kLadderSpacing};
    const PlanePoint dir = r.Dtr - r.L3;  // segment i, from T to D
    r.O = intersect_axis(r.L1, r.L1 + dir);
    r.Fthales = intersect_axis(r.L2, r.L2 + dir);
    return r;
}

// Assumes a < b < c with b - a <= c - b (B closer to A than to C).
ConstructionTrace trace_normalized(double a, double b, double c) {
    ConstructionTrace tr;
    tr.input = {a, b, c};

    const Step1Result s1 = step1_sorted(a, b, c);
    tr.Dtr = s1.Dtr;
    tr.L1 = s1.L1;
    tr.L2 = s1.L2;
    tr.L3 = s1.L3;
    tr.Fthales = s1.Fthales;
    tr.O = s1.O;

    // Step 2
    tr.M = {(a + b) / 2.0, 0.0};
    tr.Dray = {tr.M.x, (tr.M.x - a) * kTanPiSixth};
    tr.Oprime = 2.0 * tr.Dray - tr.O;
    tr.E = {tr.Oprime.x, 0.0};

    // Step 3: p = perpendicular bisector of O O'; Dray is its midpoint.
    const PlanePoint d = tr.Oprime - tr.O;
    const PlanePoint perp = {-d.y, d.x};
    tr.G = intersect_vertical(tr.Dray, tr.Dray + perp, b);
    tr.I = intersect_axis(tr.Dray, tr.Dray + perp);
    tr.H = {b, tr.Dray.y};

    // Step 4
    tr.F = intersect_vertical(tr.Dray, tr.Dray + perp, a);
    tr.K = intersect_vertical(tr.Oprime, tr.O, c);

    return tr;
}

void mirror_x(PlanePoint& p) { p.x = -p.x; }

}  // namespace

Step1Result step1_circumcenter(const CollinearTriple& t) {
    validate(t);
    const CollinearTriple s = sorted(t);
    return step1_sorted(s.a, s.b, s.c);
}

ConstructionTrace build_trace(const CollinearTriple& t) {
    validate(t);
    const CollinearTriple s = sorted(t);

    if (s.b - s.a <= s.c - s.b) {
        return trace_normalized(s.a, s.b, s.c);
    }

    // The recipe needs B closer to A; run on the mirrored triple and map back.
    ConstructionTrace tr = trace_normalized(-s.c, -s.b, -s.a);
    for (PlanePoint* p : {&tr.Dtr, &tr.L1, &tr.L2, &tr.L3, &tr.Fthales, &tr.O,
                          &tr.M, &tr.Dray, &tr.Oprime, &tr.E, &tr.G, &tr.H,
                          &tr.I, &tr.F, &tr.K}) {
        mirror_x(*p);
    }
    std::swap(tr.F, tr.K);  // keep F.x = a, K.x = c
    tr.reflected = true;
    tr.input = s;
    return tr;
}

ResidualReport verify_trace(const ConstructionTrace& trace, double tol) {
    const auto& t = trace.input;
    ResidualReport rep;

    // In the mirrored configuration the construction's point C maps back to
    // the original A, so the Step-2 identity compares against that endpoint.
    const double cx = trace.reflected ? t.a : t.c;
    const double eo = distance(trace.E, trace.O);
    const double oc = std::abs(cx - trace.O.x);
    rep.eq2_06 = std::abs(eo - oc);

    const double oo_prime = distance(trace.O, trace.Oprime);
    const double og = distance(trace.O, trace.G);
    const double ok = distance(trace.O, trace.K);
    const double of = distance(trace.O, trace.F);
    rep.eq3_02 = std::abs(og - oo_prime);
    rep.eq4_01 = std::abs(ok - oo_prime);
    rep.eq4_03 = std::abs(of - og);

    const double fg = distance(trace.F, trace.G);
    const double gk = distance(trace.G, trace.K);
    const double kf = distance(trace.K, trace.F);
    rep.side_spread = std::max({fg, gk, kf}) - std::min({fg, gk, kf});
    rep.radius_spread = std::max({of, og, ok}) - std::min({of, og, ok});

    rep.projection_error = std::max({std::abs(trace.F.x - t.a),
                                     std::abs(trace.G.x - t.b),
                                     std::abs(trace.K.x - t.c)});

    rep.max_residual = std::max({rep.eq2_06, rep.eq3_02, rep.eq4_01,
                                 rep.eq4_03, rep.side_spread,
                                 rep.radius_spread, rep.projection_error});
    rep.tolerance = tol * coordinate_scale(t);
    rep.pass = rep.max_residual <= rep.tolerance;
    return rep;
}

}  // namespace equitri
