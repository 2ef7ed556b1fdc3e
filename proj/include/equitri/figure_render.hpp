#pragma once

#include <string>
#include <vector>

#include "equitri/construction_trace.hpp"
#include "equitri/triangle_reconstruction.hpp"

namespace equitri {

enum class ElementKind {
    Marker,    // labeled point
    Segment,   // finite segment, optionally dashed
    Line,      // infinite line through two points, clipped at render time
    Circle,
    Polygon,
    AngleArc,  // arc at pts[0] from angle a0 to a1, with label
    Text,
};

struct Element {
    ElementKind kind = ElementKind::Marker;
    std::vector<PlanePoint> pts;
    double radius = 0.0;    // Circle, AngleArc
    double a0 = 0.0, a1 = 0.0;  // AngleArc, radians
    std::string label;
    bool dashed = false;
};

struct Bounds {
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;
    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
};

struct Scene {
    std::vector<Element> elements;
    Bounds bounds;  // tight bounds of all elements
};

struct Inventory {
    int markers = 0, segments = 0, lines = 0, circles = 0, polygons = 0,
        arcs = 0, texts = 0;
};

Inventory tally(const Scene& scene);

// Affine world->pixel map used by render_svg (y flipped, 10% margin).
struct ViewTransform {
    double scale = 1.0;
    double x0 = 0.0, y0 = 0.0;  // world coords of the pixel origin
    double height_px = 0.0;
    PlanePoint to_pixel(PlanePoint w) const {
        return {(w.x - x0) * scale, height_px - (w.y - y0) * scale};
    }
    PlanePoint from_pixel(PlanePoint p) const {
        return {p.x / scale + x0, (height_px - p.y) / scale + y0};
    }
};

ViewTransform view_transform(const Scene& scene, int width_px);

// Figure 0: line r, labeled A/B/C/O, the triangle, its circumcircle, and
// dashed projection drops.
Scene scene_statement(const CollinearTriple& t, const TrianglePose& pose);

// Figures 1.3 through 4, one per construction step.
Scene scene_trace(const ConstructionTrace& trace, int step);

// Figure 5: root circle with three radii and dashed drops to the axis.
Scene scene_root_circle(const DepressedCubic& dc);

// Deterministic SVG 1.1 document; throws EmptyScene on zero-area bounds.
std::string render_svg(const Scene& scene, int width_px);

}  // namespace equitri
