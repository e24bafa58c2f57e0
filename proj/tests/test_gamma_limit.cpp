#include "doctest.h"
#include "nlphase/gamma_limit.hpp"

#include <cmath>

using namespace nlphase;

namespace {

PolyhedralInterface unit_segment() {
    PolyhedralInterface s;
    s.dim = 2;
    Facet f;
    f.normal = {0, 1, 0};
    f.offset = 0;
    f.verts = {{-0.5, 0, 0}, {0.5, 0, 0}};
    s.facets.push_back(f);
    return s;
}

} // namespace

TEST_CASE("surface tension constant") {
    CHECK(k_constant(0.0, 1.0, 2) == 4.0);
    CHECK(k_constant(0.0, 1.0, 3) == doctest::Approx(2 * 3.14159265358979323846));
    CHECK(k_constant(0.0, 1.0, 1) == 2.0);
    // quadratic in the jump, independent of its position
    CHECK(k_constant(0.0, 2.0, 2) == 16.0);
    CHECK(k_constant(1.0, 3.0, 2) == 16.0);
}

TEST_CASE("limit functional on a unit interface") {
    PolyhedralInterface s = unit_segment();
    DiscreteMeasure mu;
    mu.carrier = s;

    SUBCASE("no surfactant pays twice the tension") {
        mu.facet_density = {0.0};
        CHECK(eval_limit(s, mu, 0.0, 1.0) == doctest::Approx(8.0));
    }
    SUBCASE("matched density pays the tension once") {
        mu.facet_density = {4.0};
        CHECK(eval_limit(s, mu, 0.0, 1.0) == doctest::Approx(4.0));
        std::vector<double> integ = limit_integrand(s, mu, 0.0, 1.0);
        REQUIRE(integ.size() == 1);
        CHECK(integ[0] == doctest::Approx(4.0));
    }
    SUBCASE("excess density pays the excess") {
        mu.facet_density = {6.0};
        CHECK(eval_limit(s, mu, 0.0, 1.0) == doctest::Approx(6.0));
    }
    SUBCASE("point mass adds its weight") {
        mu.facet_density = {0.0};
        mu.atoms.push_back({{0.2, 0.3, 0}, 0.5, 0});
        CHECK(eval_limit(s, mu, 0.0, 1.0) == doctest::Approx(8.5));
    }
}

TEST_CASE("decompose splits aligned and singular parts") {
    PolyhedralInterface s = unit_segment();
    DiscreteMeasure mu;
    mu.carrier.dim = 2;

    // same facet with reversed vertex order still matches
    Facet rev;
    rev.normal = {0, 1, 0};
    rev.offset = 0;
    rev.verts = {{0.5, 0, 0}, {-0.5, 0, 0}};
    mu.carrier.facets.push_back(rev);

    // a carrier facet the interface does not have is singular
    Facet off;
    off.normal = {0, 1, 0};
    off.offset = 0.3;
    off.verts = {{0, 0.3, 0}, {0.5, 0.3, 0}};
    mu.carrier.facets.push_back(off);

    mu.facet_density = {3.0, 2.0};
    mu.atoms.push_back({{0.1, 0.4, 0}, -0.7, 0}); // mass enters absolutely

    MeasureSplit sp = decompose(mu, s);
    REQUIRE(sp.density.size() == 1);
    CHECK(sp.density[0] == 3.0);
    CHECK(sp.singular_mass == doctest::Approx(2.0 * 0.5 + 0.7));

    // total: (k + |k - 3|) * 1 + singular
    CHECK(eval_limit(s, mu, 0.0, 1.0) == doctest::Approx(4 + 1 + 1.7));
}
