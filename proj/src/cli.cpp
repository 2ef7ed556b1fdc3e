#include "equitri/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "equitri/construction_trace.hpp"
#include "equitri/cubic_solver.hpp"
#include "equitri/figure_render.hpp"
#include "equitri/line_measures.hpp"
#include "equitri/triangle_reconstruction.hpp"

namespace equitri::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON numbers carry 17 significant digits so every double round-trips.
std::string jnum(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::string jarr(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += jnum(v[i]);
    }
    return out + "]";
}

std::string jpoint(PlanePoint p) {
    return "[" + jnum(p.x) + "," + jnum(p.y) + "]";
}

std::string jwarnings(const std::vector<std::string>& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += jstr(w[i]);
    }
    return out + "]";
}

// Locale-independent parse of a comma-separated numeric list.
std::vector<double> parse_numbers(const std::string& text, std::size_t count,
                                  const std::string& flag) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        double v = 0.0;
        const char* first = tok.data();
        const char* last = tok.data() + tok.size();
        auto [p, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || p != last || tok.empty()) {
            throw UsageError("malformed number '" + tok + "' in " + flag);
        }
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != count) {
        throw UsageError(flag + " expects " + std::to_string(count) +
                         " comma-separated numbers");
    }
    return out;
}

std::string root_set_json(const RootSet& rs) {
    return "{\"classification\":" + jstr(to_string(rs.classification)) +
           ",\"delta\":" + jnum(rs.delta) + ",\"roots\":" + jarr(rs.roots) + "}";
}

double max_poly_residual(const DepressedCubic& dc,
                         const std::vector<double>& roots, double shift) {
    double worst = 0.0;
    for (double x : roots) {
        const double y = x - shift;
        worst = std::max(worst, std::abs((y * y + dc.p) * y + dc.q));
    }
    return worst;
}

int cmd_solve(const std::string& coeffs, const std::string& depressed,
              bool json, bool polish, std::ostream& out) {
    RootSet rs;
    std::string inputs;
    DepressedCubic dc;
    double shift = 0.0;
    if (!coeffs.empty()) {
        const auto v = parse_numbers(coeffs, 4, "--coeffs");
        const CubicCoefficients cc{v[0], v[1], v[2], v[3]};
        const Depressed dep = depress(cc);
        dc = dep.dc;
        shift = dep.shift;
        rs = solve_cubic(cc, polish);
        inputs = "{\"a\":" + jnum(v[0]) + ",\"b\":" + jnum(v[1]) +
                 ",\"c\":" + jnum(v[2]) + ",\"d\":" + jnum(v[3]) + "}";
    } else {
        const auto v = parse_numbers(depressed, 2, "--depressed");
        dc = {v[0], v[1]};
        rs = discriminant(dc).second == RootClass::OneReal
                 ? reference_roots(dc)
                 : trig_roots(dc);
        if (polish) {
            for (double& y : rs.roots) {
                const double deriv = 3.0 * y * y + dc.p;
                if (deriv != 0.0) y -= ((y * y + dc.p) * y + dc.q) / deriv;
            }
        }
        inputs = "{\"p\":" + jnum(v[0]) + ",\"q\":" + jnum(v[1]) + "}";
    }

    if (json) {
        out << "{\"command\":\"solve\",\"inputs\":" << inputs
            << ",\"result\":" << root_set_json(rs)
            << ",\"residuals\":{\"max_poly_residual\":"
            << jnum(max_poly_residual(dc, rs.roots, shift))
            << "},\"warnings\":[]}\n";
    } else {
        out << to_string(rs.classification) << " delta=" << jnum(rs.delta)
            << " roots:";
        for (double r : rs.roots) out << " " << jnum(r);
        out << "\n";
    }
    return 0;
}

int cmd_reconstruct(const std::string& points, const std::string& orientation,
                    bool json, std::ostream& out) {
    const auto v = parse_numbers(points, 3, "--points");
    if (orientation != "+" && orientation != "-") {
        throw UsageError("--orientation must be + or -");
    }
    const int sign = orientation == "+" ? +1 : -1;
    const CollinearTriple t{v[0], v[1], v[2]};

    std::vector<std::string> warnings;
    const TrianglePose pose = pose_from_triple(t, sign, &warnings);
    const auto verts = triangle_vertices(pose);
    const CollinearTriple proj = project_vertices(pose);
    const CollinearTriple s = sorted(t);
    const double round_trip =
        std::max({std::abs(proj.a - s.a), std::abs(proj.b - s.b),
                  std::abs(proj.c - s.c)});

    if (json) {
        out << "{\"command\":\"reconstruct\",\"inputs\":{\"points\":"
            << jarr({v[0], v[1], v[2]}) << ",\"orientation\":"
            << pose.orientation << "},\"result\":{\"o\":" << jnum(pose.o)
            << ",\"radius\":" << jnum(pose.radius)
            << ",\"theta\":" << jnum(pose.theta)
            << ",\"orientation\":" << pose.orientation << ",\"vertices\":["
            << jpoint(verts[0]) << "," << jpoint(verts[1]) << ","
            << jpoint(verts[2]) << "],\"projections\":"
            << jarr({proj.a, proj.b, proj.c})
            << "},\"residuals\":{\"round_trip\":" << jnum(round_trip)
            << "},\"warnings\":" << jwarnings(warnings) << "}\n";
    } else {
        out << "o=" << jnum(pose.o) << " R=" << jnum(pose.radius)
            << " theta=" << jnum(pose.theta)
            << " orientation=" << (pose.orientation > 0 ? "+" : "-") << "\n";
    }
    return 0;
}

int cmd_trace(const std::string& points, double tol, bool json,
              std::ostream& out) {
    const auto v = parse_numbers(points, 3, "--points");
    const ConstructionTrace tr = build_trace({v[0], v[1], v[2]});
    const ResidualReport rep = verify_trace(tr, tol);

    if (json) {
        auto pt = [](const char* name, PlanePoint p) {
            return "\"" + std::string(name) + "\":" + jpoint(p);
        };
        out << "{\"command\":\"trace\",\"inputs\":{\"points\":"
            << jarr({v[0], v[1], v[2]}) << ",\"tol\":" << jnum(tol)
            << "},\"result\":{\"reflected\":" << (tr.reflected ? "true" : "false")
            << ",\"points\":{" << pt("Dtr", tr.Dtr) << "," << pt("L1", tr.L1)
            << "," << pt("L2", tr.L2) << "," << pt("L3", tr.L3) << ","
            << pt("Fthales", tr.Fthales) << "," << pt("O", tr.O) << ","
            << pt("M", tr.M) << "," << pt("Dray", tr.Dray) << ","
            << pt("Oprime", tr.Oprime) << "," << pt("E", tr.E) << ","
            << pt("G", tr.G) << "," << pt("H", tr.H) << "," << pt("I", tr.I)
            << "," << pt("F", tr.F) << "," << pt("K", tr.K)
            << "}},\"residuals\":{\"eq2_06\":" << jnum(rep.eq2_06)
            << ",\"eq3_02\":" << jnum(rep.eq3_02)
            << ",\"eq4_01\":" << jnum(rep.eq4_01)
            << ",\"eq4_03\":" << jnum(rep.eq4_03)
            << ",\"side_spread\":" << jnum(rep.side_spread)
            << ",\"radius_spread\":" << jnum(rep.radius_spread)
            << ",\"projection_error\":" << jnum(rep.projection_error)
            << ",\"max_residual\":" << jnum(rep.max_residual)
            << ",\"tolerance\":" << jnum(rep.tolerance)
            << ",\"pass\":" << (rep.pass ? "true" : "false")
            << "},\"warnings\":[]}\n";
    } else {
        out << "O=(" << jnum(tr.O.x) << ",0) max_residual="
            << jnum(rep.max_residual) << " pass="
            << (rep.pass ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_render(bool statement, int step,
               const std::string& points, const std::string& depressed,
               int width, const std::string& out_file, std::ostream& out) {
    Scene scene;
    if (statement || step > 0) {
        if (points.empty()) {
            throw UsageError("--statement/--step require --points");
        }
        const auto v = parse_numbers(points, 3, "--points");
        const CollinearTriple t{v[0], v[1], v[2]};
        if (statement) {
            scene = scene_statement(t, pose_from_triple(t, +1));
        } else {
            scene = scene_trace(build_trace(t), step);
        }
    } else {
        if (depressed.empty()) {
            throw UsageError("--circle requires --depressed");
        }
        const auto v = parse_numbers(depressed, 2, "--depressed");
        scene = scene_root_circle({v[0], v[1]});
    }

    const std::string svg = render_svg(scene, width);
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw UsageError("cannot open output file " + out_file);
        f << svg;
    } else {
        out << svg;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Equilateral-triangle reconstruction and trigonometric cubic solver"};
    app.require_subcommand(1);

    std::string coeffs, depressed, points, orientation = "+", out_file;
    bool json = false, polish = false;
    bool statement = false, root_circle = false;
    int step = 0, width = 800;
    double tol = 1e-9;

    auto* solve = app.add_subcommand("solve", "Solve a cubic equation");
    auto* sc = solve->add_option("--coeffs", coeffs, "a,b,c,d of aX^3+bX^2+cX+d");
    auto* sd = solve->add_option("--depressed", depressed, "p,q of x^3+px+q");
    sc->excludes(sd);
    solve->add_flag("--json", json, "JSON output");
    solve->add_flag("--polish", polish, "one Newton step per root");

    auto* rec = app.add_subcommand("reconstruct", "Triangle pose from a triple");
    rec->add_option("--points", points, "x1,x2,x3")->required();
    rec->add_option("--orientation", orientation, "+ or -");
    rec->add_flag("--json", json, "JSON output");

    auto* trc = app.add_subcommand("trace", "Replay the four-step construction");
    trc->add_option("--points", points, "x1,x2,x3")->required();
    trc->add_option("--tol", tol, "relative verification tolerance");
    trc->add_flag("--json", json, "JSON output");

    auto* ren = app.add_subcommand("render", "Render a figure as SVG");
    auto* rst = ren->add_flag("--statement", statement, "statement figure");
    auto* rsp = ren->add_option("--step", step, "construction step 1..4");
    auto* rci = ren->add_flag("--circle", root_circle, "root-circle figure");
    rst->excludes(rsp)->excludes(rci);
    rsp->excludes(rci);
    ren->add_option("--points", points, "x1,x2,x3");
    ren->add_option("--depressed", depressed, "p,q");
    ren->add_option("--width", width, "output width in pixels");
    ren->add_option("--out", out_file, "write SVG to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << "{\"error\":\"usage\",\"message\":" << "\"" << e.what() << "\"}\n";
        return 2;
    }

    try {
        if (solve->parsed()) {
            if (coeffs.empty() == depressed.empty()) {
                throw UsageError("solve needs exactly one of --coeffs/--depressed");
            }
            return cmd_solve(coeffs, depressed, json, polish, out);
        }
        if (rec->parsed()) {
            return cmd_reconstruct(points, orientation, json, out);
        }
        if (trc->parsed()) {
            return cmd_trace(points, tol, json, out);
        }
        if (ren->parsed()) {
            if (static_cast<int>(statement) + (step > 0 ? 1 : 0) +
                    static_cast<int>(root_circle) != 1 ||
                (rsp->count() > 0 && (step < 1 || step > 4))) {
                throw UsageError(
                    "render needs exactly one of --statement, --step 1..4, --circle");
            }
            return cmd_render(statement, step, points, depressed, width,
                              out_file, out);
        }
    } catch (const UsageError& e) {
        err << "{\"error\":\"usage\",\"message\":" << jstr(e.what()) << "}\n";
        return 2;
    } catch (const Error& e) {
        err << "{\"error\":" << jstr(e.code())
            << ",\"message\":" << jstr(e.what()) << "}\n";
        return 1;
    } catch (const std::exception& e) {
        err << "{\"error\":\"internal_error\",\"message\":" << jstr(e.what())
            << "}\n";
        return 1;
    }
    return 2;
}

}  // namespace equitri::cli
