#include "nlphase/scene.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nlphase/errors.hpp"

namespace nlphase {

namespace {

using nlohmann::json;

Point read_point(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) < dim)
        throw ConfigError("point needs at least dim coordinates");
    Point p{0, 0, 0};
    for (size_t a = 0; a < j.size() && a < 3; ++a) p[a] = j[a].get<double>();
    return p;
}

Grid read_grid(const json& j) {
    if (!j.contains("dim")) throw ConfigError("grid.dim missing");
    int dim = j.at("dim").get<int>();
    Point origin = read_point(j.at("origin"), dim);
    Point extent = read_point(j.at("extent"), dim);
    std::array<int64_t, 3> cells{1, 1, 1};
    const json& jc = j.at("cells");
    if (!jc.is_array() || static_cast<int>(jc.size()) < dim)
        throw ConfigError("grid.cells needs dim entries");
    for (size_t a = 0; a < jc.size() && a < 3; ++a) cells[a] = jc[a].get<int64_t>();
    return make_grid(dim, origin, extent, cells);
}

DoubleWell read_well(const json& j) {
    DoubleWell w;
    std::string form = j.value("form", "quartic");
    if (form == "quartic")
        w.form = WellForm::quartic;
    else if (form == "truncated_quadratic")
        w.form = WellForm::truncated_quadratic;
    else
        throw ConfigError("well.form must be quartic or truncated_quadratic");
    w.alpha = j.value("alpha", 0.0);
    w.beta = j.value("beta", 1.0);
    w.scale = j.value("scale", 1.0);
    if (!(w.beta > w.alpha)) throw ConfigError("well needs beta > alpha");
    return w;
}

KernelPlan read_plan(const json& j) {
    KernelPlan p;
    p.tile = j.value("tile", 64);
    p.threads = j.value("threads", 0);
    std::string mode = j.value("mode", "pairwise");
    if (mode == "pairwise")
        p.mode = SumMode::pairwise;
    else if (mode == "compensated")
        p.mode = SumMode::compensated;
    else
        throw ConfigError("plan.mode must be pairwise or compensated");
    if (p.tile < 1) throw ConfigError("plan.tile must be positive");
    if (p.threads < 0) throw ConfigError("plan.threads must be >= 0");
    return p;
}

PolyhedralInterface read_interface(const json& j, int dim) {
    PolyhedralInterface s;
    s.dim = dim;
    s.outside_is_alpha = j.value("outside_is_alpha", true);
    for (const auto& jf : j.at("facets")) {
        Facet f;
        f.normal = read_point(jf.at("normal"), dim);
        f.offset = jf.value("offset", 0.0);
        for (const auto& jv : jf.at("verts")) f.verts.push_back(read_point(jv, dim));
        s.facets.push_back(std::move(f));
    }
    if (s.facets.empty()) throw ConfigError("interface needs at least one facet");
    return s;
}

} // namespace

Scene parse_scene(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("scene is not valid json: ") + e.what());
    }
    try {
        Scene sc;
        sc.grid = read_grid(j.at("grid"));
        if (j.contains("well")) sc.well = read_well(j.at("well"));
        sc.eps = j.value("eps", 1e-2);
        if (!(sc.eps > 0) || sc.eps >= 1) throw ConfigError("eps must lie in (0, 1)");
        if (j.contains("plan")) sc.plan = read_plan(j.at("plan"));
        if (j.contains("interface"))
            sc.interface = read_interface(j.at("interface"), sc.grid.dim);
        if (j.contains("facet_density"))
            sc.facet_density = j.at("facet_density").get<std::vector<double>>();
        if (j.contains("atoms")) {
            for (const auto& ja : j.at("atoms")) {
                SceneAtom a;
                a.x = read_point(ja.at("x"), sc.grid.dim);
                a.mass = ja.at("mass").get<double>();
                a.radius = ja.value("radius", 0.0);
                sc.atoms.push_back(a);
            }
        }
        if (j.contains("ladder")) sc.ladder = j.at("ladder").get<std::vector<double>>();
        for (double e : sc.ladder)
            if (!(e > 0) || e >= 1) throw ConfigError("ladder entries must lie in (0, 1)");
        sc.route = j.value("route", "auto");
        if (sc.route != "auto" && sc.route != "grid" && sc.route != "quasi1d")
            throw ConfigError("route must be auto, grid or quasi1d");
        if (sc.interface && !sc.facet_density.empty() &&
            sc.facet_density.size() != sc.interface->facets.size())
            throw ConfigError("facet_density length must match interface facets");
        return sc;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("scene field error: ") + e.what());
    }
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scene file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str());
}

DiscreteMeasure scene_measure(const Scene& sc) {
    DiscreteMeasure mu;
    if (sc.interface) {
        mu.carrier = *sc.interface;
        mu.facet_density = sc.facet_density;
        mu.facet_density.resize(mu.carrier.facets.size(), 0.0);
    }
    for (const auto& a : sc.atoms) mu.atoms.push_back({a.x, a.mass, a.radius});
    return mu;
}

} // namespace nlphase
