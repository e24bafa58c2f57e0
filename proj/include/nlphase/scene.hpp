#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlphase/energy.hpp"
#include "nlphase/gamma_limit.hpp"
#include "nlphase/geometry.hpp"

namespace nlphase {

// one spike of the scene measure; radius is a construction parameter, the
// limit measure only keeps (x, mass)
struct SceneAtom {
    Point x{0, 0, 0};
    double mass = 0;
    double radius = 0;
};

struct Scene {
    Grid grid;
    DoubleWell well;
    double eps = 1e-2;
    KernelPlan plan;
    std::optional<PolyhedralInterface> interface;
    std::vector<double> facet_density; // aligned with interface facets, may be empty
    std::vector<SceneAtom> atoms;
    std::vector<double> ladder; // eps values for sweeps, descending
    std::string route = "auto"; // auto | grid | quasi1d
};

Scene load_scene(const std::string& path);
Scene parse_scene(const std::string& json_text);

// the measure the scene describes, for the limit functional
DiscreteMeasure scene_measure(const Scene& sc);

} // namespace nlphase
