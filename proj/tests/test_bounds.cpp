#include "doctest.h"
#include "nlphase/bounds.hpp"
#include "nlphase/errors.hpp"
#include "nlphase/recovery.hpp"

#include <cmath>

using namespace nlphase;

TEST_CASE("fitted bound constants are frozen per dimension") {
    CHECK(separated_bound_constant(2) == 1.25);
    CHECK(separated_bound_constant(3) == 2.0);
    CHECK(cone_bound_constant(2) == 2.0);
    CHECK(cone_bound_constant(3) == 3.0);
    CHECK(slice_discard_constant(2) == 1.0);
}

TEST_CASE("column vs complement stays under the bound") {
    KernelPlan plan;
    BoundReport rep = check_bound_cylinder_complement(2, 1.0, 0.125, 0.5, 1.0 / 48, plan);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.satisfied);
    CHECK(rep.measured > 0);
    CHECK(rep.ratio > 0);
    CHECK(rep.ratio < 1.0);
    CHECK(rep.bound == doctest::Approx(1.25 * (1 - std::log(0.25))));
}

TEST_CASE("cone complement contains the column complement") {
    KernelPlan plan;
    BoundReport col = check_bound_cylinder_complement(2, 1.0, 0.125, 0.5, 1.0 / 48, plan);
    BoundReport cone = check_bound_cylinder_cone(2, 1.0, 0.125, 0.5, 1.0 / 48, plan);
    CHECK(cone.measured >= col.measured); // monotonicity of G in its second set
    CHECK(cone.satisfied);
    CHECK(cone.bound == doctest::Approx(2.0 * (1 - std::log(0.25))));
}

TEST_CASE("empty slab gives zero interaction") {
    KernelPlan plan;
    BoundReport rep = check_bound_cylinder_complement(2, 1.0, 0.5, 0.5, 1.0 / 32, plan);
    CHECK(rep.measured == 0.0);
    CHECK(rep.satisfied);
}

TEST_CASE("column bound rejects out-of-range parameters") {
    KernelPlan plan;
    CHECK_THROWS_AS(check_bound_cylinder_complement(2, 1, -0.1, 0.5, 0.02, plan),
                    ConfigError);
    CHECK_THROWS_AS(check_bound_cylinder_complement(2, 1, 0.6, 0.5, 0.02, plan),
                    ConfigError);
    CHECK_THROWS_AS(check_bound_cylinder_complement(2, 1, 0, 2.7, 0.02, plan), ConfigError);
    CHECK_THROWS_AS(check_bound_cylinder_complement(2, 0, 0, 0.5, 0.02, plan), ConfigError);
    CHECK_THROWS_AS(check_bound_cylinder_cone(1, 1, 0, 0.5, 0.02, plan), ConfigError);
}

TEST_CASE("slice lower bound on the graded mesh") {
    double eps = 1e-3;
    double a = slab_halfwidth(eps);
    Mesh1D m = graded_mesh_1d(a, 160, 1.06, 2.5e-4, 0.5);
    std::vector<double> v = slab_profile_1d(m, eps, 0.0, 1.0);
    SpecialCylinderParams p;
    p.eps = eps;

    SUBCASE("small lambda passes hypotheses and the bound") {
        BoundReport rep = check_lower_bound_special_cylinder_1d(m, v, p);
        CHECK(rep.hypotheses_ok);
        CHECK(rep.satisfied);
        CHECK(rep.measured > 0);
        CHECK(rep.measured >= rep.bound);
    }
    SUBCASE("large lambda breaks the residual bracket") {
        p.lambda = 0.2; // 1 - 3 lambda - 6/|ln eps| < 0, no slack constant helps
        BoundReport rep = check_lower_bound_special_cylinder_1d(m, v, p);
        CHECK_FALSE(rep.hypotheses_ok);
        CHECK_FALSE(rep.satisfied);
    }
    SUBCASE("sharp profile passes where the graded band is too wide") {
        p.lambda = 0.04; // residual slack c eps bracket falls below the band width
        BoundReport graded = check_lower_bound_special_cylinder_1d(m, v, p);
        CHECK_FALSE(graded.hypotheses_ok);
        std::vector<double> sharp(m.size());
        for (size_t i = 0; i < m.size(); ++i) sharp[i] = m.center[i] < 0 ? 1.0 : 0.0;
        BoundReport rep = check_lower_bound_special_cylinder_1d(m, sharp, p);
        CHECK(rep.hypotheses_ok);
        CHECK(rep.satisfied);
    }
    SUBCASE("input validation") {
        std::vector<double> bad(3, 0.0);
        CHECK_THROWS_AS(check_lower_bound_special_cylinder_1d(m, bad, p), ConfigError);
        p.r = 0.8; // more than half the mesh interval
        CHECK_THROWS_AS(check_lower_bound_special_cylinder_1d(m, v, p), ConfigError);
    }
}

TEST_CASE("slice lower bound on a grid field") {
    Grid g = make_grid(2, Point{-0.5, -0.5, 0}, Point{1, 1, 0}, {64, 64, 1});
    PhaseField u;
    u.grid = g;
    u.u.resize(static_cast<size_t>(g.cell_count()));
    for (int64_t i = 0; i < g.cell_count(); ++i)
        u.u[static_cast<size_t>(i)] = g.center(i)[1] < 0 ? 1.0 : 0.0;
    KernelPlan plan;
    SpecialCylinderParams p;
    p.eps = 1e-3;

    BoundReport rep = check_lower_bound_special_cylinder(u, p, plan);
    CHECK(rep.hypotheses_ok); // two-valued: slices fully covered, residual zero
    CHECK(rep.satisfied);
    CHECK(rep.measured > 0);

    // a wide third-phase stripe exceeds the residual slack
    PhaseField mid = u;
    for (int64_t i = 0; i < g.cell_count(); ++i)
        if (std::abs(g.center(i)[1]) < 0.15) mid.u[static_cast<size_t>(i)] = 0.5;
    BoundReport bad = check_lower_bound_special_cylinder(mid, p, plan);
    CHECK_FALSE(bad.hypotheses_ok);
    CHECK_FALSE(bad.satisfied);

    p.r = 0.8;
    CHECK_THROWS_AS(check_lower_bound_special_cylinder(u, p, plan), ConfigError);
}
