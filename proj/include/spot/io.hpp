#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spot/geom.hpp"
#include "spot/minkowski.hpp"
#include "spot/optimizer.hpp"
#include "spot/spectral.hpp"

// JSON-shaped serialization of domains, obstacles, configs and results, and
// the CSV emitters (comma separator, dot decimal, LF line endings).

namespace spot {

using json = nlohmann::json;

inline json to_json(Vec2 v) { return json::array({v.x, v.y}); }

inline Vec2 vec2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const BoundaryPiece& b) {
    if (b.is_circle)
        return {{"circle", {{"center", to_json(b.circle.center)},
                            {"radius", b.circle.radius}}}};
    json verts = json::array();
    for (const Vec2 v : b.polygon) verts.push_back(to_json(v));
    return {{"polygon", {{"vertices", verts}}}};
}

inline BoundaryPiece boundary_from_json(const json& j) {
    BoundaryPiece b;
    if (j.contains("circle")) {
        b.is_circle = true;
        b.circle.center = vec2_from_json(j["circle"].at("center"));
        b.circle.radius = j["circle"].at("radius").get<double>();
        if (!(b.circle.radius > 0))
            throw std::invalid_argument("circle radius must be positive");
    } else if (j.contains("polygon")) {
        b.is_circle = false;
        for (const auto& v : j["polygon"].at("vertices")) b.polygon.push_back(vec2_from_json(v));
        if (b.polygon.size() < 3)
            throw std::invalid_argument("polygon needs at least 3 vertices");
    } else {
        throw std::invalid_argument("boundary piece must be a circle or a polygon");
    }
    return b;
}

inline json to_json(const Domain& d) {
    json holes = json::array();
    for (const auto& h : d.holes) holes.push_back(to_json(h));
    return {{"outer", to_json(d.outer)}, {"holes", holes}};
}

inline Domain domain_from_json(const json& j) {
    Domain d;
    d.outer = boundary_from_json(j.at("outer"));
    if (j.contains("holes"))
        for (const auto& h : j["holes"]) d.holes.push_back(boundary_from_json(h));
    return d;
}

inline json to_json(const FourierShape& f) {
    return {{"center", to_json(f.center)}, {"a0", f.a0}, {"a", f.a}, {"b", f.b}};
}

inline FourierShape fourier_from_json(const json& j) {
    FourierShape f;
    f.center = vec2_from_json(j.at("center"));
    f.a0 = j.at("a0").get<double>();
    if (j.contains("a")) f.a = j["a"].get<std::vector<double>>();
    if (j.contains("b")) f.b = j["b"].get<std::vector<double>>();
    if (f.b.size() != f.a.size()) f.b.resize(f.a.size(), 0.0);
    if (!(f.a0 > 0)) throw std::invalid_argument("fourier obstacle needs a0 > 0");
    return f;
}

inline json to_json(const Obstacle& o) {
    json j;
    j["kind"] = o.kind == ObstacleKind::region ? "region" : "chain";
    if (o.fourier) {
        j["fourier"] = to_json(*o.fourier);
    } else {
        json verts = json::array();
        for (const Vec2 v : o.vertices) verts.push_back(to_json(v));
        j["vertices"] = verts;
    }
    if (!o.tentacles.empty()) {
        json ts = json::array();
        for (const auto& t : o.tentacles) {
            json tv = json::array();
            for (const Vec2 v : t) tv.push_back(to_json(v));
            ts.push_back(tv);
        }
        j["tentacles"] = ts;
    }
    return j;
}

inline Obstacle obstacle_from_json(const json& j, int fourier_samples = 512) {
    Obstacle o;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "region") o.kind = ObstacleKind::region;
    else if (kind == "chain") o.kind = ObstacleKind::chain;
    else throw std::invalid_argument("obstacle kind must be region or chain");
    if (j.contains("fourier")) {
        const FourierShape f = fourier_from_json(j["fourier"]);
        o = from_fourier(f, fourier_samples, o.kind);
    } else if (j.contains("vertices")) {
        for (const auto& v : j["vertices"]) o.vertices.push_back(vec2_from_json(v));
    } else {
        throw std::invalid_argument("obstacle needs vertices or a fourier block");
    }
    if (j.contains("tentacles"))
        for (const auto& t : j["tentacles"]) {
            Polyline tent;
            for (const auto& v : t) tent.push_back(vec2_from_json(v));
            o.tentacles.push_back(std::move(tent));
        }
    validate_obstacle(o);
    return o;
}

inline json to_json(const EigenResult& r) {
    return {{"lambda1", r.lambda1},
            {"residual", r.residual},
            {"iterations", r.iterations},
            {"h", r.h},
            {"n_interior", r.n_interior}};
}

inline json to_json(const MinkowskiEstimate& e) {
    json samples = json::array();
    for (const auto& s : e.eps_samples)
        samples.push_back({{"eps", s.eps}, {"area", s.area}, {"quotient", s.quotient}});
    return {{"content", e.content}, {"grid_h", e.grid_h}, {"eps_samples", samples}};
}

inline const char* stop_reason_name(StopReason s) {
    switch (s) {
        case StopReason::converged: return "converged";
        case StopReason::stalled_max_iters: return "stalled";
        case StopReason::touching_boundary: return "touching";
    }
    return "unknown";
}

inline json to_json(const ObstacleResult& r) {
    json hist = json::array();
    for (const auto& it : r.history)
        hist.push_back({{"iter", it.iter},
                        {"lambda1", it.lambda1},
                        {"perimeter", it.perimeter},
                        {"step", it.step}});
    return {{"lambda1", r.lambda1},
            {"perimeter", r.perimeter},
            {"minkowski_content", r.minkowski_content},
            {"mu", r.mu},
            {"mu_fit", r.mu_fit},
            {"optimality_residual", r.optimality_residual},
            {"symmetry",
             {{"radial_deviation", r.symmetry.radial_deviation},
              {"best_axis_angle", r.symmetry.best_axis_angle},
              {"axial_deviation", r.symmetry.axial_deviation}}},
            {"coeffs", to_json(r.obstacle)},
            {"stop", stop_reason_name(r.stop)},
            {"eigensolves", r.eigensolves},
            {"history", hist}};
}

inline json config_to_json(const Domain& domain, const OptimizeConfig& c) {
    return {{"domain", to_json(domain)},
            {"L", c.L},
            {"K_max", c.K_max},
            {"step0", c.step0},
            {"max_iters", c.max_iters},
            {"h", c.h},
            {"tolerances",
             {{"eigen_tol", c.eigen_tol},
              {"constraint_tol", c.constraint_tol},
              {"stall_tol", c.stall_tol}}},
            {"init", to_json(c.init)},
            {"allow_center_motion", c.allow_center_motion},
            {"attachment", c.attachment == Attachment::none
                               ? "none"
                               : (c.attachment == Attachment::wrap_hole ? "wrap_hole"
                                                                        : "enclose_holes")},
            {"scheme", c.scheme == BoundaryScheme::ghost ? "ghost" : "mask"},
            {"quad_samples", c.quad_samples},
            {"polygon_samples", c.polygon_samples},
            {"margin_cells", c.margin_cells}};
}

inline std::pair<Domain, OptimizeConfig> config_from_json(const json& j) {
    const Domain domain = domain_from_json(j.at("domain"));
    OptimizeConfig c;
    c.L = j.at("L").get<double>();
    c.init = fourier_from_json(j.at("init"));
    c.K_max = j.value("K_max", c.init.order());
    if (c.K_max != c.init.order()) {
        c.init.a.resize(c.K_max, 0.0);
        c.init.b.resize(c.K_max, 0.0);
    }
    c.step0 = j.value("step0", c.step0);
    c.max_iters = j.value("max_iters", c.max_iters);
    c.h = j.value("h", c.h);
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        c.eigen_tol = t.value("eigen_tol", c.eigen_tol);
        c.constraint_tol = t.value("constraint_tol", c.constraint_tol);
        c.stall_tol = t.value("stall_tol", c.stall_tol);
    }
    c.allow_center_motion = j.value("allow_center_motion", c.allow_center_motion);
    const std::string at = j.value("attachment", std::string("none"));
    if (at == "none") c.attachment = Attachment::none;
    else if (at == "wrap_hole") c.attachment = Attachment::wrap_hole;
    else if (at == "enclose_holes") c.attachment = Attachment::enclose_holes;
    else throw std::invalid_argument("attachment must be none, wrap_hole or enclose_holes");
    const std::string sc = j.value("scheme", std::string("ghost"));
    if (sc == "ghost") c.scheme = BoundaryScheme::ghost;
    else if (sc == "mask") c.scheme = BoundaryScheme::mask;
    else throw std::invalid_argument("scheme must be ghost or mask");
    c.quad_samples = j.value("quad_samples", c.quad_samples);
    c.polygon_samples = j.value("polygon_samples", c.polygon_samples);
    c.margin_cells = j.value("margin_cells", c.margin_cells);
    if (!(c.eigen_tol > 0 && c.constraint_tol > 0 && c.stall_tol > 0))
        throw std::invalid_argument("tolerances must be positive");
    return {domain, c};
}

// --- CSV emitters -------------------------------------------------------

inline void write_minkowski_csv(const MinkowskiEstimate& e, std::ostream& os) {
    os << "eps,area,quotient\n";
    char line[128];
    for (const auto& s : e.eps_samples) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g\n", s.eps, s.area, s.quotient);
        os << line;
    }
}

inline void write_field_csv(const ScalarField& f, std::ostream& os) {
    os << "x,y,u\n";
    char line[160];
    for (int j = 0; j < f.ny; ++j)
        for (int i = 0; i < f.nx; ++i) {
            const Vec2 p = f.node(i, j);
            std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g\n", p.x, p.y, f.at(i, j));
            os << line;
        }
}

inline void write_trace_csv(const std::vector<IterRecord>& hist, std::ostream& os) {
    os << "iter,lambda1,perimeter,step\n";
    char line[160];
    for (const auto& it : hist) {
        std::snprintf(line, sizeof line, "%d,%.12g,%.12g,%.12g\n", it.iter, it.lambda1,
                      it.perimeter, it.step);
        os << line;
    }
}

inline void write_annulus_sweep_csv(const std::vector<std::array<double, 4>>& rows,
                                    std::ostream& os) {
    os << "r_in,r_out,lambda1_annulus,lambda1_half\n";
    char line[200];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g\n", r[0], r[1], r[2], r[3]);
        os << line;
    }
}

// --- Run manifest -------------------------------------------------------

struct RunManifest {
    std::string command;
    std::string config_path;
    std::string output_dir;
    std::uint64_t seed = 0;
    std::string version;
    double wall_clock_seconds = 0.0;
};

inline json to_json(const RunManifest& m) {
    return {{"command", m.command},
            {"config", m.config_path},
            {"output_dir", m.output_dir},
            {"seed", m.seed},
            {"version", m.version},
            {"wall_clock_seconds", m.wall_clock_seconds}};
}

inline void write_json_file(const json& j, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << j.dump(2) << "\n";
}

inline json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    json j;
    is >> j;
    return j;
}

}  // namespace spot
