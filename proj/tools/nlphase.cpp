// command line front end: evaluate the functional, build constructions, run
// sweeps and bound checks on a scene file.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlphase/errors.hpp"
#include "nlphase/harness.hpp"

using namespace nlphase;

namespace {

struct CommonOpts {
    std::string scene_path;
    std::string out_path;
    int threads = -1; // -1 keeps the scene plan
    int tile = -1;
};

Scene load(const CommonOpts& c) {
    Scene sc = load_scene(c.scene_path);
    if (c.threads >= 0) sc.plan.threads = c.threads;
    if (c.tile > 0) sc.plan.tile = c.tile;
    return sc;
}

void deliver(const CommonOpts& c, const std::string& text) {
    if (c.out_path.empty())
        std::fputs(text.c_str(), stdout);
    else
        write_text(c.out_path, text);
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--scene", c.scene_path, "scene json file")->required();
    cmd->add_option("--out", c.out_path, "write result here instead of stdout");
    cmd->add_option("--threads", c.threads, "override scene thread count");
    cmd->add_option("--tile", c.tile, "override scene tile size");
}

RecoveryPair build_pair(const Scene& sc) {
    if (!sc.interface) throw ConfigError("this command needs an interface in the scene");
    return build_recovery_pair(sc.grid, *sc.interface, scene_measure(sc), sc.well.alpha,
                               sc.well.beta, sc.eps, sc.plan);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonlocal two-phase functional laboratory"};
    app.require_subcommand(1);

    CommonOpts c_energy, c_recovery, c_limit, c_sweep, c_bounds, c_relax;
    double sweep_gamma = 0;
    std::string sweep_kind = "slab";
    std::string csv_path;
    int relax_steps = 50;

    auto* cmd_energy = app.add_subcommand("energy", "evaluate the functional on the scene");
    add_common(cmd_energy, c_energy);
    auto* cmd_recovery =
        app.add_subcommand("recovery", "build the construction pair and report diagnostics");
    add_common(cmd_recovery, c_recovery);
    auto* cmd_limit = app.add_subcommand("limit", "evaluate the limit functional");
    add_common(cmd_limit, c_limit);
    auto* cmd_sweep = app.add_subcommand("sweep", "run an eps ladder and extrapolate");
    add_common(cmd_sweep, c_sweep);
    cmd_sweep->add_option("--gamma", sweep_gamma, "surfactant areal density (slab sweep)");
    cmd_sweep->add_option("--kind", sweep_kind, "slab or atom")
        ->check(CLI::IsMember({"slab", "atom"}));
    cmd_sweep->add_option("--csv", csv_path, "also write the rows as csv");
    auto* cmd_bounds = app.add_subcommand("bounds", "run the interaction bound checks");
    add_common(cmd_bounds, c_bounds);
    auto* cmd_relax = app.add_subcommand("relax", "descend the functional from the scene pair");
    add_common(cmd_relax, c_relax);
    cmd_relax->add_option("--steps", relax_steps, "descent iterations");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_energy->parsed()) {
            Scene sc = load(c_energy);
            RecoveryPair rp = build_pair(sc);
            EnergyParams p{sc.well, sc.eps, sc.plan};
            EnergyBreakdown e = eval_F_eps(rp.u, rp.rho, p, all_cells(sc.grid));
            deliver(c_energy, breakdown_json(e));
        } else if (cmd_recovery->parsed()) {
            Scene sc = load(c_recovery);
            RecoveryPair rp = build_pair(sc);
            PhaseField sharp =
                rasterize_interface(sc.grid, *sc.interface, sc.well.alpha, sc.well.beta);
            nlohmann::json j{
                {"eps", rp.eps},
                {"l1_to_sharp", l1_distance(rp.u, sharp)},
                {"two_phase_defect", two_phase_defect(rp.u, sc.well.alpha, sc.well.beta)},
                {"rho_mass", [&] {
                     double m = 0;
                     for (double v : rp.rho.rho) m += v;
                     return m * sc.grid.cell_volume();
                 }()},
                {"interface_area", sc.interface->area()}};
            deliver(c_recovery, j.dump(2) + "\n");
        } else if (cmd_limit->parsed()) {
            Scene sc = load(c_limit);
            if (!sc.interface) throw ConfigError("limit needs an interface in the scene");
            DiscreteMeasure mu = scene_measure(sc);
            double val = eval_limit(*sc.interface, mu, sc.well.alpha, sc.well.beta);
            std::vector<double> integrand =
                limit_integrand(*sc.interface, mu, sc.well.alpha, sc.well.beta);
            nlohmann::json j{{"total", val},
                             {"k", k_constant(sc.well.alpha, sc.well.beta, sc.grid.dim)},
                             {"facet_integrand", integrand}};
            deliver(c_limit, j.dump(2) + "\n");
        } else if (cmd_sweep->parsed()) {
            Scene sc = load(c_sweep);
            if (sc.ladder.empty()) throw ConfigError("sweep needs a ladder in the scene");
            SweepResult r;
            if (sweep_kind == "atom") {
                if (sc.atoms.empty()) throw ConfigError("atom sweep needs an atom");
                r = run_atom_sweep(sc.atoms[0], sc.ladder, sc.grid.dim);
            } else {
                r = run_slab_sweep(sc.grid.dim, sweep_gamma, sc.ladder, sc.route, sc);
            }
            if (!csv_path.empty()) {
                std::vector<std::vector<double>> rows;
                for (const auto& row : r.rows)
                    rows.push_back({row.eps, row.logscale, row.term1, row.term2, row.term3,
                                    row.total});
                write_csv(csv_path, {"eps", "logscale", "term1", "term2", "term3", "total"},
                          rows);
            }
            deliver(c_sweep, sweep_json(r));
        } else if (cmd_bounds->parsed()) {
            Scene sc = load(c_bounds);
            deliver(c_bounds, bounds_json(run_bounds(sc)));
        } else if (cmd_relax->parsed()) {
            Scene sc = load(c_relax);
            RecoveryPair rp = build_pair(sc);
            EnergyParams p{sc.well, sc.eps, sc.plan};
            RelaxOptions opt;
            opt.steps = relax_steps;
            RelaxTrace tr = relax(rp.u, rp.rho, p, all_cells(sc.grid), opt);
            nlohmann::json j{{"accepted", tr.accepted}, {"energy", tr.energy}};
            deliver(c_relax, j.dump(2) + "\n");
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const ResolutionError& e) {
        std::fprintf(stderr, "resolution error: %s (smallest usable eps %.6g)\n", e.what(),
                     e.min_usable_eps);
        return kExitResolution;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitAssertion;
    }
    return kExitOk;
}
