#pragma once

#include <string>
#include <vector>

#include "nlphase/bounds.hpp"
#include "nlphase/recovery.hpp"
#include "nlphase/scene.hpp"

namespace nlphase {

// least squares y ~ a + b x; fewer than three points is flagged unreliable and
// must not be used to extrapolate
struct FitResult {
    double a = 0;
    double b = 0;
    double residual = 0; // rms of y - (a + b x)
    int n = 0;
    bool reliable = false;
};

FitResult fit_affine(const std::vector<double>& x, const std::vector<double>& y);

struct SweepRow {
    double eps = 0;
    double logscale = 0; // the log scale the construction converges in
    double term1 = 0, term2 = 0, term3 = 0, total = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    FitResult fit; // total against 1 / logscale; fit.a is the extrapolated limit
    std::string route;
};

// flat-interface sweep: one transition of unit cross-section, surfactant at
// areal density g (g = 0 means no surfactant). quasi1d runs on a graded mesh
// that resolves the band at every eps; grid requires the band resolved by the
// scene grid and throws ResolutionError otherwise. route "auto" picks quasi1d
// whenever any ladder eps is below the grid threshold.
SweepResult run_slab_sweep(int dim, double g, const std::vector<double>& ladder,
                           const std::string& route, const Scene& sc);

// spike sweep: mass / |ln eps| rows, extrapolating to the spike weight
SweepResult run_atom_sweep(const SceneAtom& atom, const std::vector<double>& ladder, int dim);

// bound suite on the scene geometry; used by the bounds subcommand
std::vector<BoundReport> run_bounds(const Scene& sc);

// deterministic emitters: shortest round-trip doubles, sorted keys, no clocks
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
std::string sweep_json(const SweepResult& r);
std::string bounds_json(const std::vector<BoundReport>& reports);
std::string breakdown_json(const EnergyBreakdown& e);
void write_text(const std::string& path, const std::string& text);

// profile oracle on a graded mesh: nonlocal value of the one-transition profile
// at scale eps, dimension dim, at least min_nodes mesh nodes
double slab_oracle_value(double eps, int dim, int min_nodes);

// log scale the flat construction converges in: |ln(half width)| rather than
// |ln eps| (the band width eps / |ln eps| shifts the abscissa at desk scale)
double slab_logscale(double eps);

} // namespace nlphase
