// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs in well under a minute.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "equitri/cli.hpp"
#include "equitri/construction_trace.hpp"
#include "equitri/cubic_solver.hpp"
#include "equitri/figure_render.hpp"
#include "equitri/triangle_reconstruction.hpp"

using namespace equitri;
using nlohmann::json;

namespace {

CollinearTriple random_triple(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-100.0, 100.0);
    while (true) {
        CollinearTriple t = sorted({coord(rng), coord(rng), coord(rng)});
        if (t.b - t.a >= 1e-3 && t.c - t.b >= 1e-3) return t;
    }
}

bool xml_well_formed(const std::string& doc) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < doc.size()) {
        if (doc[i] != '<') {
            ++i;
            continue;
        }
        std::size_t close = i;
        bool in_quote = false;
        while (close < doc.size() && (doc[close] != '>' || in_quote)) {
            if (doc[close] == '"') in_quote = !in_quote;
            ++close;
        }
        if (close == doc.size()) return false;
        const std::string tag = doc.substr(i + 1, close - i - 1);
        if (tag.empty()) return false;
        if (tag.front() == '?') {
            if (tag.back() != '?') return false;
        } else if (tag.front() == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
        } else if (tag.back() != '/') {
            stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
        }
        i = close + 1;
    }
    return stack.empty();
}

bool criterion1_round_trip() {
    std::mt19937_64 rng(1001);
    for (int i = 0; i < 10000; ++i) {
        const CollinearTriple t = random_triple(rng);
        const double tol = 1e-10 * coordinate_scale(t);
        for (int s : {+1, -1}) {
            const CollinearTriple back = project_vertices(pose_from_triple(t, s));
            if (std::abs(back.a - t.a) > tol || std::abs(back.b - t.b) > tol ||
                std::abs(back.c - t.c) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool criterion2_trace_residuals() {
    std::mt19937_64 rng(1002);
    for (int i = 0; i < 1000; ++i) {
        const CollinearTriple t = random_triple(rng);
        const ConstructionTrace tr = build_trace(t);
        const ResidualReport rep = verify_trace(tr, 1e-9);
        if (!rep.pass) return false;

        ConstructionTrace bad = tr;
        switch (i % 3) {
            case 0: bad.G.y += 1e-3; break;
            case 1: bad.E.x += 1e-3; break;
            default: bad.K.y += 1e-3; break;
        }
        if (verify_trace(bad, 1e-9).pass) return false;
    }
    return true;
}

bool criterion3_trace_formula_agreement() {
    std::mt19937_64 rng(1003);
    for (int i = 0; i < 1000; ++i) {
        const CollinearTriple t = random_triple(rng);
        auto w = build_trace(t).vertices();
        std::sort(w.begin(), w.end(),
                  [](PlanePoint a, PlanePoint b) { return a.x < b.x; });
        const double tol = 1e-9 * coordinate_scale(t);
        bool matched = false;
        for (int s : {+1, -1}) {
            auto v = triangle_vertices(pose_from_triple(t, s));
            std::sort(v.begin(), v.end(),
                      [](PlanePoint a, PlanePoint b) { return a.x < b.x; });
            bool ok = true;
            for (std::size_t k = 0; k < 3; ++k) {
                ok = ok && std::abs(v[k].x - w[k].x) <= tol &&
                     std::abs(v[k].y - w[k].y) <= tol;
            }
            matched = matched || ok;
        }
        if (!matched) return false;
    }
    return true;
}

bool criterion4_solver_oracle() {
    std::mt19937_64 rng(1004);
    std::uniform_real_distribution<double> up(-10.0, 0.0), uq(-10.0, 10.0);
    int done = 0;
    while (done < 10000) {
        const DepressedCubic dc{up(rng), uq(rng)};
        if (discriminant(dc).first > -1e-6) continue;
        ++done;
        const auto trig = trig_roots(dc).roots;
        const auto ref = reference_roots(dc).roots;
        if (trig.size() != 3 || ref.size() != 3) return false;
        const double scale = std::max({1.0, std::abs(dc.p), std::abs(dc.q)});
        for (std::size_t k = 0; k < 3; ++k) {
            if (std::abs(trig[k] - ref[k]) > 1e-9 * scale) return false;
            const double y = trig[k];
            const double res = std::abs((y * y + dc.p) * y + dc.q);
            if (res > 1e-10 * std::max(1.0, std::abs(y * y * y))) return false;
        }
    }
    return true;
}

bool roots_close(const std::vector<double>& got, std::vector<double> want,
                 double tol) {
    if (got.size() != want.size()) return false;
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (std::abs(got[i] - want[i]) > tol) return false;
    }
    return true;
}

bool criterion5_exact_fixtures() {
    return roots_close(solve_cubic({1, -6, 11, -6}).roots, {1, 2, 3}, 1e-12) &&
           roots_close(trig_roots({-7, 6}).roots, {-3, 1, 2}, 1e-12) &&
           roots_close(trig_roots({-3, 2}).roots, {-2, 1, 1}, 1e-12) &&
           roots_close(trig_roots({-1, 0}).roots, {-1, 0, 1}, 1e-12);
}

bool criterion6_discriminant_consistency() {
    std::mt19937_64 rng(1006);
    for (int i = 0; i < 10000; ++i) {
        const CollinearTriple t = random_triple(rng);
        const auto inv = centered_invariants(t);
        if (!(inv.dc.p < 0.0)) return false;
        if (discriminant(inv.dc).first > 0.0) return false;
    }
    std::uniform_real_distribution<double> up(-10.0, 10.0), uq(-10.0, 10.0);
    int done = 0;
    while (done < 10000) {
        const DepressedCubic dc{up(rng), uq(rng)};
        if (discriminant(dc).first <= 1e-6) continue;
        ++done;
        try {
            (void)trig_roots(dc);
            return false;  // must refuse
        } catch (const DiscriminantPositive&) {
        }
        if (reference_roots(dc).roots.size() != 1) return false;
    }
    return true;
}

bool criterion7_boundary_conditioning() {
    for (double q : {2.0 * (1.0 - 1e-12), 2.0, 2.0 * (1.0 + 1e-12)}) {
        std::vector<double> roots;
        try {
            roots = trig_roots({-3.0, q}).roots;
        } catch (const DiscriminantPositive&) {
            continue;  // classified out of the regime: acceptable
        }
        for (double r : roots) {
            if (!std::isfinite(r)) return false;
        }
        if (!roots_close(roots, {-2, 1, 1}, 1e-5)) return false;
    }
    return true;
}

bool criterion8_rendering() {
    const CollinearTriple t{0, 1, 5};
    const ConstructionTrace tr = build_trace(t);

    struct Expect {
        Scene scene;
        Inventory want;
    };
    std::vector<Expect> figures;
    figures.push_back({scene_statement(t, pose_from_triple(t, +1)),
                       {4, 3, 1, 1, 1, 0, 0}});
    figures.push_back({scene_trace(tr, 1), {9, 3, 2, 0, 0, 0, 0}});
    figures.push_back({scene_trace(tr, 2), {8, 2, 5, 0, 0, 1, 0}});
    figures.push_back({scene_trace(tr, 3), {11, 1, 3, 0, 0, 0, 0}});
    figures.push_back({scene_trace(tr, 4), {10, 1, 2, 0, 1, 0, 0}});
    figures.push_back({scene_root_circle({-7, 6}), {4, 6, 1, 1, 0, 0, 0}});

    for (const auto& f : figures) {
        const Inventory n = tally(f.scene);
        if (n.markers != f.want.markers || n.segments != f.want.segments ||
            n.lines != f.want.lines || n.circles != f.want.circles ||
            n.polygons != f.want.polygons || n.arcs != f.want.arcs ||
            n.texts != f.want.texts) {
            return false;
        }
        const std::string svg = render_svg(f.scene, 800);
        if (!xml_well_formed(svg)) return false;
        if (render_svg(f.scene, 800) != svg) return false;
    }
    return true;
}

bool criterion9_cli_contract() {
    auto invoke = [](const std::vector<std::string>& args, int& code) {
        std::ostringstream out, err;
        code = equitri::cli::run(args, out, err);
        return std::pair<std::string, std::string>{out.str(), err.str()};
    };

    int code = 0;
    auto [out1, err1] = invoke({"solve", "--coeffs", "1,0,-7,6", "--json"}, code);
    if (code != 0) return false;
    {
        const json j = json::parse(out1);
        const auto& r = j["result"]["roots"];
        if (r.size() != 3 || std::abs(r[0].get<double>() + 3.0) > 1e-9 ||
            std::abs(r[1].get<double>() - 1.0) > 1e-9 ||
            std::abs(r[2].get<double>() - 2.0) > 1e-9) {
            return false;
        }
        for (const char* key : {"command", "inputs", "result", "residuals",
                                "warnings"}) {
            if (!j.contains(key)) return false;
        }
    }

    auto [out2, err2] = invoke({"reconstruct", "--points", "0,1,1"}, code);
    if (code != 1) return false;
    if (json::parse(err2)["error"] != "degenerate_input") return false;

    auto [out3, err3] = invoke({"trace", "--points", "0,1,5", "--json"}, code);
    if (code != 0) return false;
    {
        const json j = json::parse(out3);
        if (j["residuals"]["pass"] != true) return false;
        if (std::abs(j["result"]["points"]["O"][0].get<double>() - 2.0) > 1e-12)
            return false;
    }

    auto [out4, err4] = invoke({"solve", "--coeffs", "oops"}, code);
    if (code != 2) return false;

    auto [out5, err5] =
        invoke({"render", "--statement", "--points", "0,1,5"}, code);
    if (code != 0 || out5.find("<svg") == std::string::npos) return false;

    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"1. theorem round trip (10k triples, 1e-10*scale)", criterion1_round_trip},
        {"2. construction-trace residuals + fault injection", criterion2_trace_residuals},
        {"3. trace-formula agreement up to reflection", criterion3_trace_formula_agreement},
        {"4. solver-oracle equivalence (10k cubics)", criterion4_solver_oracle},
        {"5. exact root fixtures (1e-12)", criterion5_exact_fixtures},
        {"6. discriminant consistency both regimes", criterion6_discriminant_consistency},
        {"7. boundary conditioning near delta = 0", criterion7_boundary_conditioning},
        {"8. rendering determinism and inventories", criterion8_rendering},
        {"9. CLI contract", criterion9_cli_contract},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::printf("[FAIL] %s (exception: %s)\n", c.name, e.what());
            ++failures;
            continue;
        }
        std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", c.name);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
