#include "equitri/figure_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "equitri/cubic_solver.hpp"

namespace equitri {

namespace {

// Visual style constants; chosen once for reproducible output.
constexpr double kMarginFrac = 0.10;       // viewBox margin per side
constexpr double kMarkerRadiusPx = 3.0;
constexpr double kLabelOffsetX = 6.0;
constexpr double kLabelOffsetY = -6.0;
constexpr const char* kDashPattern = "6 4";

std::string fmt6(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void grow(Bounds& b, PlanePoint p, bool& first) {
    if (first) {
        b = {p.x, p.y, p.x, p.y};
        first = false;
        return;
    }
    b.xmin = std::min(b.xmin, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.xmax = std::max(b.xmax, p.x);
    b.ymax = std::max(b.ymax, p.y);
}

void finalize_bounds(Scene& scene) {
    bool first = true;
    Bounds b{};
    for (const auto& e : scene.elements) {
        for (const auto& p : e.pts) grow(b, p, first);
        if (e.kind == ElementKind::Circle || e.kind == ElementKind::AngleArc) {
            const PlanePoint c = e.pts.at(0);
            grow(b, {c.x - e.radius, c.y - e.radius}, first);
            grow(b, {c.x + e.radius, c.y + e.radius}, first);
        }
    }
    scene.bounds = b;
}

Element marker(PlanePoint p, std::string label) {
    Element e;
    e.kind = ElementKind::Marker;
    e.pts = {p};
    e.label = std::move(label);
    return e;
}

Element segment(PlanePoint a, PlanePoint b, bool dashed = false) {
    Element e;
    e.kind = ElementKind::Segment;
    e.pts = {a, b};
    e.dashed = dashed;
    return e;
}

Element infinite_line(PlanePoint a, PlanePoint b) {
    Element e;
    e.kind = ElementKind::Line;
    e.pts = {a, b};
    return e;
}

Element vertical_line(double x, double y_ref) {
    return infinite_line({x, 0.0}, {x, y_ref == 0.0 ? 1.0 : y_ref});
}

Element circle(PlanePoint center, double radius) {
    Element e;
    e.kind = ElementKind::Circle;
    e.pts = {center};
    e.radius = radius;
    return e;
}

Element polygon(std::vector<PlanePoint> pts) {
    Element e;
    e.kind = ElementKind::Polygon;
    e.pts = std::move(pts);
    return e;
}

Element angle_arc(PlanePoint vertex, double a0, double a1, double radius,
                  std::string label) {
    Element e;
    e.kind = ElementKind::AngleArc;
    e.pts = {vertex};
    e.a0 = a0;
    e.a1 = a1;
    e.radius = radius;
    e.label = std::move(label);
    return e;
}

Element axis_line(const CollinearTriple& t) {
    const CollinearTriple s = sorted(t);
    const double pad = std::max(1.0, 0.25 * (s.c - s.a));
    return infinite_line({s.a - pad, 0.0}, {s.c + pad, 0.0});
}

// Liang-Barsky clip of the infinite line through (a, b) against a rect.
bool clip_line(PlanePoint a, PlanePoint b, const Bounds& r,
               PlanePoint& out0, PlanePoint& out1) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    double t0 = -1e18, t1 = 1e18;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.x - r.xmin, r.xmax - a.x, a.y - r.ymin,
                         r.ymax - a.y};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
            continue;
        }
        const double t = q[i] / p[i];
        if (p[i] < 0.0) {
            t0 = std::max(t0, t);
        } else {
            t1 = std::min(t1, t);
        }
    }
    if (t0 > t1) return false;
    out0 = {a.x + t0 * dx, a.y + t0 * dy};
    out1 = {a.x + t1 * dx, a.y + t1 * dy};
    return true;
}

}  // namespace

Inventory tally(const Scene& scene) {
    Inventory n;
    for (const auto& e : scene.elements) {
        switch (e.kind) {
            case ElementKind::Marker: ++n.markers; break;
            case ElementKind::Segment: ++n.segments; break;
            case ElementKind::Line: ++n.lines; break;
            case ElementKind::Circle: ++n.circles; break;
            case ElementKind::Polygon: ++n.polygons; break;
            case ElementKind::AngleArc: ++n.arcs; break;
            case ElementKind::Text: ++n.texts; break;
        }
    }
    return n;
}

ViewTransform view_transform(const Scene& scene, int width_px) {
    const Bounds& b = scene.bounds;
    if (!(b.width() > 0.0) || !(b.height() > 0.0)) {
        throw EmptyScene("scene bounds have zero area");
    }
    const double mx = kMarginFrac * b.width();
    const double my = kMarginFrac * b.height();
    ViewTransform vt;
    vt.x0 = b.xmin - mx;
    vt.y0 = b.ymin - my;
    vt.scale = width_px / (b.width() + 2.0 * mx);
    vt.height_px = (b.height() + 2.0 * my) * vt.scale;
    return vt;
}

Scene scene_statement(const CollinearTriple& t, const TrianglePose& pose) {
    validate(t);
    const CollinearTriple s = sorted(t);
    const auto verts = triangle_vertices(pose);

    Scene scene;
    scene.elements.push_back(axis_line(s));
    scene.elements.push_back(marker({s.a, 0.0}, "A"));
    scene.elements.push_back(marker({s.b, 0.0}, "B"));
    scene.elements.push_back(marker({s.c, 0.0}, "C"));
    scene.elements.push_back(marker({pose.o, 0.0}, "O"));
    scene.elements.push_back(polygon({verts[0], verts[1], verts[2]}));
    scene.elements.push_back(circle({pose.o, 0.0}, pose.radius));
    for (const auto& v : verts) {
        scene.elements.push_back(segment(v, {v.x, 0.0}, /*dashed=*/true));
    }
    finalize_bounds(scene);
    return scene;
}

Scene scene_trace(const ConstructionTrace& tr, int step) {
    if (step < 1 || step > 4) {
        throw std::out_of_range("construction step must be in 1..4");
    }
    const CollinearTriple& t = tr.input;

    Scene scene;
    scene.elements.push_back(axis_line(t));

    if (step == 1) {
        scene.elements.push_back(vertical_line(t.c, tr.L3.y));  // line h
        scene.elements.push_back(marker({t.a, 0.0}, "A"));
        scene.elements.push_back(marker({t.b, 0.0}, "B"));
        scene.elements.push_back(marker({t.c, 0.0}, "C"));
        scene.elements.push_back(marker(tr.Dtr, "D"));
        scene.elements.push_back(marker(tr.L1, "R"));
        scene.elements.push_back(marker(tr.L2, "S"));
        scene.elements.push_back(marker(tr.L3, "T"));
        scene.elements.push_back(marker(tr.Fthales, "F"));
        scene.elements.push_back(marker(tr.O, "O"));
        scene.elements.push_back(segment(tr.L3, tr.Dtr));      // i
        scene.elements.push_back(segment(tr.L2, tr.Fthales));  // j, parallel
        scene.elements.push_back(segment(tr.L1, tr.O));        // k, parallel
    } else if (step == 2) {
        scene.elements.push_back(vertical_line(t.a, tr.Dray.y));   // a
        scene.elements.push_back(vertical_line(tr.M.x, tr.Dray.y));  // m
        scene.elements.push_back(vertical_line(t.b, tr.Dray.y));   // b
        scene.elements.push_back(vertical_line(t.c, tr.Dray.y));   // c
        // ray s from A through Dray
        const PlanePoint apex{t.a, 0.0};
        scene.elements.push_back(segment(apex, apex + 1.6 * (tr.Dray - apex)));
        scene.elements.push_back(segment(tr.O, tr.Oprime));
        scene.elements.push_back(marker({t.a, 0.0}, "A"));
        scene.elements.push_back(marker(tr.M, "M"));
        scene.elements.push_back(marker({t.b, 0.0}, "B"));
        scene.elements.push_back(marker({t.c, 0.0}, "C"));
        scene.elements.push_back(marker(tr.O, "O"));
        scene.elements.push_back(marker(tr.Dray, "D"));
        scene.elements.push_back(marker(tr.Oprime, "O'"));
        scene.elements.push_back(marker(tr.E, "E"));
        const double ray_dir = tr.Dray.x >= t.a ? 0.0 : std::numbers::pi;
        const double arc_span = std::numbers::pi / 6.0;
        scene.elements.push_back(angle_arc(
            {t.a, 0.0}, ray_dir == 0.0 ? 0.0 : std::numbers::pi - arc_span,
            ray_dir == 0.0 ? arc_span : std::numbers::pi,
            0.35 * std::abs(tr.Dray.x - t.a) + 0.1, "pi/6"));
    } else if (step == 3) {
        scene.elements.push_back(vertical_line(t.b, tr.G.y));  // b
        scene.elements.push_back(infinite_line(tr.I, tr.G));   // bisector p
        scene.elements.push_back(segment(tr.O, tr.Oprime));
        scene.elements.push_back(marker({t.a, 0.0}, "A"));
        scene.elements.push_back(marker(tr.M, "M"));
        scene.elements.push_back(marker({t.b, 0.0}, "B"));
        scene.elements.push_back(marker({t.c, 0.0}, "C"));
        scene.elements.push_back(marker(tr.O, "O"));
        scene.elements.push_back(marker(tr.Dray, "D"));
        scene.elements.push_back(marker(tr.Oprime, "O'"));
        scene.elements.push_back(marker(tr.E, "E"));
        scene.elements.push_back(marker(tr.G, "G"));
        scene.elements.push_back(marker(tr.H, "H"));
        scene.elements.push_back(marker(tr.I, "I"));
    } else {
        scene.elements.push_back(infinite_line(tr.F, tr.G));  // bisector p
        scene.elements.push_back(segment(tr.Oprime, tr.K));
        scene.elements.push_back(polygon({tr.F, tr.G, tr.K}));
        scene.elements.push_back(marker({t.a, 0.0}, "A"));
        scene.elements.push_back(marker({t.b, 0.0}, "B"));
        scene.elements.push_back(marker({t.c, 0.0}, "C"));
        scene.elements.push_back(marker(tr.O, "O"));
        scene.elements.push_back(marker(tr.Dray, "D"));
        scene.elements.push_back(marker(tr.Oprime, "O'"));
        scene.elements.push_back(marker(tr.E, "E"));
        scene.elements.push_back(marker(tr.F, "F"));
        scene.elements.push_back(marker(tr.G, "G"));
        scene.elements.push_back(marker(tr.K, "K"));
    }
    finalize_bounds(scene);
    return scene;
}

Scene scene_root_circle(const DepressedCubic& dc) {
    if (discriminant(dc).second == RootClass::OneReal) {
        throw DiscriminantPositive("root circle requires three real roots");
    }
    const double radius = 2.0 * std::sqrt(std::max(0.0, -dc.p / 3.0));
    const double arg =
        dc.p < 0.0
            ? std::clamp((3.0 * dc.q / (2.0 * dc.p)) * std::sqrt(-3.0 / dc.p),
                         -1.0, 1.0)
            : 1.0;
    const double theta = std::acos(arg) / 3.0;

    Scene scene;
    scene.elements.push_back(
        infinite_line({-1.5 * radius - 0.5, 0.0}, {1.5 * radius + 0.5, 0.0}));
    scene.elements.push_back(circle({0.0, 0.0}, radius));
    scene.elements.push_back(marker({0.0, 0.0}, "O"));
    const char* labels[3] = {"x2", "x1", "x3"};  // k = -1, 0, +1
    for (int k = -1; k <= 1; ++k) {
        const double phi = theta + k * 2.0 * std::numbers::pi / 3.0;
        const PlanePoint v = {radius * std::cos(phi), radius * std::sin(phi)};
        scene.elements.push_back(segment({0.0, 0.0}, v));
        scene.elements.push_back(segment(v, {v.x, 0.0}, /*dashed=*/true));
        scene.elements.push_back(marker({v.x, 0.0}, labels[k + 1]));
    }
    finalize_bounds(scene);
    return scene;
}

std::string render_svg(const Scene& scene, int width_px) {
    const ViewTransform vt = view_transform(scene, width_px);
    const Bounds clip = {vt.x0, vt.y0, vt.x0 + width_px / vt.scale,
                         vt.y0 + vt.height_px / vt.scale};

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt6(width_px) + "\" height=\"" + fmt6(vt.height_px) +
           "\" viewBox=\"0 0 " + fmt6(width_px) + " " + fmt6(vt.height_px) +
           "\">\n";

    auto px = [&](PlanePoint w) { return vt.to_pixel(w); };
    auto line_tag = [&](PlanePoint a, PlanePoint b, bool dashed,
                        const char* cls) {
        const PlanePoint pa = px(a), pb = px(b);
        svg += "<line class=\"" + std::string(cls) + "\" x1=\"" + fmt6(pa.x) +
               "\" y1=\"" + fmt6(pa.y) + "\" x2=\"" + fmt6(pb.x) + "\" y2=\"" +
               fmt6(pb.y) + "\" stroke=\"black\" stroke-width=\"1\"";
        if (dashed) svg += " stroke-dasharray=\"" + std::string(kDashPattern) + "\"";
        svg += "/>\n";
    };

    for (const auto& e : scene.elements) {
        switch (e.kind) {
            case ElementKind::Marker: {
                const PlanePoint p = px(e.pts[0]);
                svg += "<circle cx=\"" + fmt6(p.x) + "\" cy=\"" + fmt6(p.y) +
                       "\" r=\"" + fmt6(kMarkerRadiusPx) +
                       "\" fill=\"black\"/>\n";
                svg += "<text x=\"" + fmt6(p.x + kLabelOffsetX) + "\" y=\"" +
                       fmt6(p.y + kLabelOffsetY) + "\" font-size=\"14\">" +
                       e.label + "</text>\n";
                break;
            }
            case ElementKind::Segment:
                line_tag(e.pts[0], e.pts[1], e.dashed, "seg");
                break;
            case ElementKind::Line: {
                PlanePoint a, b;
                if (clip_line(e.pts[0], e.pts[1], clip, a, b)) {
                    line_tag(a, b, false, "line");
                }
                break;
            }
            case ElementKind::Circle: {
                const PlanePoint c = px(e.pts[0]);
                svg += "<circle cx=\"" + fmt6(c.x) + "\" cy=\"" + fmt6(c.y) +
                       "\" r=\"" + fmt6(e.radius * vt.scale) +
                       "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
                break;
            }
            case ElementKind::Polygon: {
                svg += "<polygon points=\"";
                for (std::size_t i = 0; i < e.pts.size(); ++i) {
                    const PlanePoint p = px(e.pts[i]);
                    if (i) svg += " ";
                    svg += fmt6(p.x) + "," + fmt6(p.y);
                }
                svg += "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
                break;
            }
            case ElementKind::AngleArc: {
                const PlanePoint v = e.pts[0];
                const PlanePoint s = px({v.x + e.radius * std::cos(e.a0),
                                         v.y + e.radius * std::sin(e.a0)});
                const PlanePoint t = px({v.x + e.radius * std::cos(e.a1),
                                         v.y + e.radius * std::sin(e.a1)});
                const double rp = e.radius * vt.scale;
                svg += "<path d=\"M " + fmt6(s.x) + " " + fmt6(s.y) + " A " +
                       fmt6(rp) + " " + fmt6(rp) + " 0 0 " +
                       (e.a1 > e.a0 ? "0" : "1") + " " + fmt6(t.x) + " " +
                       fmt6(t.y) +
                       "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
                const double mid = 0.5 * (e.a0 + e.a1);
                const PlanePoint lp = px({v.x + 1.6 * e.radius * std::cos(mid),
                                          v.y + 1.6 * e.radius * std::sin(mid)});
                svg += "<text x=\"" + fmt6(lp.x) + "\" y=\"" + fmt6(lp.y) +
                       "\" font-size=\"12\">" + e.label + "</text>\n";
                break;
            }
            case ElementKind::Text: {
                const PlanePoint p = px(e.pts[0]);
                svg += "<text x=\"" + fmt6(p.x) + "\" y=\"" + fmt6(p.y) +
                       "\" font-size=\"14\">" + e.label + "</text>\n";
                break;
            }
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace equitri
