#include "nlphase/gamma_limit.hpp"

#include <cmath>

#include "nlphase/errors.hpp"
#include "nlphase/kernel.hpp"

namespace nlphase {

double k_constant(double alpha, double beta, int dim) {
    double d = beta - alpha;
    return 2 * d * d * omega(dim - 1);
}

namespace {

bool same_vertex(const Point& a, const Point& b) {
    return std::abs(a[0] - b[0]) < 1e-9 && std::abs(a[1] - b[1]) < 1e-9 &&
           std::abs(a[2] - b[2]) < 1e-9;
}

// facets match when they have the same vertices, in any order
bool same_facet(const Facet& a, const Facet& b) {
    if (a.verts.size() != b.verts.size()) return false;
    for (const auto& v : a.verts) {
        bool found = false;
        for (const auto& w : b.verts)
            if (same_vertex(v, w)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

} // namespace

MeasureSplit decompose(const DiscreteMeasure& mu, const PolyhedralInterface& s) {
    MeasureSplit out;
    out.density.assign(s.facets.size(), 0.0);
    std::vector<char> used(mu.carrier.facets.size(), 0);
    for (size_t i = 0; i < s.facets.size(); ++i) {
        for (size_t j = 0; j < mu.carrier.facets.size(); ++j) {
            if (used[j] || j >= mu.facet_density.size()) continue;
            if (same_facet(s.facets[i], mu.carrier.facets[j])) {
                out.density[i] = mu.facet_density[j];
                used[j] = 1;
                break;
            }
        }
    }
    // everything not carried by a matched facet is singular; point masses are
    // always singular against the surface measure
    for (const auto& a : mu.atoms) out.singular_mass += std::abs(a.mass);
    for (size_t j = 0; j < mu.carrier.facets.size(); ++j) {
        if (used[j] || j >= mu.facet_density.size()) continue;
        out.singular_mass +=
            std::abs(mu.facet_density[j]) * mu.carrier.facets[j].area(mu.carrier.dim);
    }
    return out;
}

std::vector<double> limit_integrand(const PolyhedralInterface& s, const DiscreteMeasure& mu,
                                    double alpha, double beta) {
    double k = k_constant(alpha, beta, s.dim);
    MeasureSplit split = decompose(mu, s);
    std::vector<double> out(s.facets.size());
    for (size_t i = 0; i < s.facets.size(); ++i) out[i] = k + std::abs(k - split.density[i]);
    return out;
}

double eval_limit(const PolyhedralInterface& s, const DiscreteMeasure& mu, double alpha,
                  double beta) {
    MeasureSplit split = decompose(mu, s);
    std::vector<double> integrand = limit_integrand(s, mu, alpha, beta);
    double total = split.singular_mass;
    for (size_t i = 0; i < s.facets.size(); ++i) total += integrand[i] * s.facets[i].area(s.dim);
    return total;
}

} // namespace nlphase
