#include "doctest.h"
#include "nlphase/energy.hpp"
#include "nlphase/errors.hpp"

#include <cmath>
#include <random>

using namespace nlphase;

namespace {

Grid unit_square(int n) {
    return make_grid(2, Point{-0.5, -0.5, 0}, Point{1, 1, 0}, {n, n, 1});
}

PhaseField step_field(const Grid& g) {
    PhaseField f;
    f.grid = g;
    f.u.resize(static_cast<size_t>(g.cell_count()));
    for (int64_t i = 0; i < g.cell_count(); ++i)
        f.u[static_cast<size_t>(i)] = g.center(i)[g.dim - 1] < 0 ? 1.0 : 0.0;
    return f;
}

SurfactantField zero_rho(const Grid& g) {
    SurfactantField r;
    r.grid = g;
    r.rho.assign(static_cast<size_t>(g.cell_count()), 0.0);
    return r;
}

} // namespace

TEST_CASE("breakdown bookkeeping on a hand-checkable pair") {
    Grid g = make_grid(1, Point{-0.5, 0, 0}, Point{1, 1, 1}, {2, 1, 1});
    PhaseField u;
    u.grid = g;
    u.u = {1.0, 0.0};
    SurfactantField rho = zero_rho(g);
    EnergyParams p;
    p.eps = 0.1;
    EnergyBreakdown e = eval_F_eps(u, rho, p, all_cells(g));
    double lam = std::abs(std::log(0.1));
    // centers -0.25, 0.25: kernel 1/0.5^2 = 4, vol 0.5
    // I at each cell = 0.5 * 1 * 4 = 2; nonlocal = (2 + 2) * 0.5 = 2
    CHECK(e.term1 == 0.0);
    CHECK(e.term2 == doctest::Approx(2.0 / lam));
    CHECK(e.term3 == doctest::Approx(2.0 / lam)); // |I - 0| integrates the same
    CHECK(e.total == doctest::Approx(4.0 / lam));
    CHECK(e.cells == 2);
    CHECK_THROWS_AS(([&] {
                        EnergyParams bad;
                        bad.eps = 1.5;
                        eval_F_eps(u, rho, bad, all_cells(g));
                    }()),
                    ConfigError);
}

TEST_CASE("scaling in eps is exact") {
    Grid g = unit_square(16);
    PhaseField u = step_field(g);
    for (auto& v : u.u) v *= 0.9; // some potential energy too
    SurfactantField rho = zero_rho(g);
    CellSet region = all_cells(g);
    EnergyParams p1, p2;
    p1.eps = 1e-1;
    p2.eps = 1e-2;
    EnergyBreakdown e1 = eval_F_eps(u, rho, p1, region);
    EnergyBreakdown e2 = eval_F_eps(u, rho, p2, region);
    // the same integrals enter both evaluations, scaled by exact constants
    CHECK(e1.term1 * p1.eps == e2.term1 * p2.eps);
    CHECK(e1.term2 * std::abs(std::log(p1.eps)) == e2.term2 * std::abs(std::log(p2.eps)));
    CHECK(e1.term3 * std::abs(std::log(p1.eps)) == e2.term3 * std::abs(std::log(p2.eps)));
}

TEST_CASE("deviation term vanishes bitwise when rho copies the density field") {
    Grid g = unit_square(24);
    PhaseField u = step_field(g);
    CellSet region = all_cells(g);
    KernelPlan plan;
    std::vector<double> I = eval_density_field(u, region, region, plan);
    SurfactantField rho = zero_rho(g);
    for (size_t i = 0; i < region.idx.size(); ++i)
        rho.rho[static_cast<size_t>(region.idx[i])] = I[i];
    EnergyParams p;
    p.eps = 1e-2;
    p.plan = plan;
    EnergyBreakdown e = eval_F_eps(u, rho, p, region);
    CHECK(e.term3 == 0.0);
    CHECK(e.total == e.term1 + e.term2);
}

TEST_CASE("phase swap leaves the nonlocal term bit-identical") {
    Grid g = unit_square(20);
    PhaseField u = step_field(g);
    PhaseField swapped = u;
    for (auto& v : swapped.u) v = 1.0 - v;
    KernelPlan plan;
    CellSet region = all_cells(g);
    CHECK(eval_NL(u, region, plan) == eval_NL(swapped, region, plan));
}

TEST_CASE("restricting the region drops energy") {
    Grid g = unit_square(16);
    PhaseField u = step_field(g);
    SurfactantField rho = zero_rho(g);
    EnergyParams p;
    p.eps = 1e-2;
    EnergyBreakdown whole = eval_F_eps(u, rho, p, all_cells(g));
    EnergyBreakdown part =
        eval_F_eps(u, rho, p, box_cells(g, Point{-0.5, -0.5, 0}, Point{0.5, 0.25, 0}));
    CHECK(part.total < whole.total);
    CHECK(part.cells < whole.cells);
}

TEST_CASE("descent reduces the energy monotonically") {
    Grid g = unit_square(12);
    PhaseField u = step_field(g);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> noise(-0.2, 0.2);
    for (auto& v : u.u) v = std::clamp(v + noise(rng), 0.0, 1.0);
    SurfactantField rho = zero_rho(g);
    EnergyParams p;
    p.eps = 0.05;
    RelaxOptions opt;
    opt.steps = 8;
    RelaxTrace tr = relax(u, rho, p, all_cells(g), opt);
    REQUIRE(tr.energy.size() >= 2);
    CHECK(tr.accepted >= 1);
    for (size_t i = 1; i < tr.energy.size(); ++i) CHECK(tr.energy[i] < tr.energy[i - 1]);
    for (double v : rho.rho) CHECK(v >= 0.0); // never driven negative
}

TEST_CASE("descent with frozen u only moves the surfactant") {
    Grid g = unit_square(10);
    PhaseField u = step_field(g);
    PhaseField u0 = u;
    SurfactantField rho = zero_rho(g);
    EnergyParams p;
    p.eps = 0.05;
    RelaxOptions opt;
    opt.steps = 4;
    opt.relax_u = false;
    RelaxTrace tr = relax(u, rho, p, all_cells(g), opt);
    CHECK(tr.accepted >= 1);
    for (size_t i = 0; i < u.u.size(); ++i) CHECK(u.u[i] == u0.u[i]);
    double mass = 0;
    for (double v : rho.rho) mass += v;
    CHECK(mass > 0.0); // filling rho toward I lowers the deviation term
}
