#pragma once

#include <string>
#include <vector>

#include "nlphase/geometry.hpp"

namespace nlphase {

// surface tension constant 2 (beta - alpha)^2 omega_{N-1}
double k_constant(double alpha, double beta, int dim);

// split of a discrete measure against an interface: the part carried by the
// interface (per facet density interpreted as d mu_a / d H^{N-1}) and the rest
struct MeasureSplit {
    std::vector<double> density; // aligned with interface facets
    double singular_mass = 0;    // |mu_s|, everything not carried by a facet
};

MeasureSplit decompose(const DiscreteMeasure& mu, const PolyhedralInterface& s);

// limit functional: sum over facets of area * (k + |k - density|) + singular mass
double eval_limit(const PolyhedralInterface& s, const DiscreteMeasure& mu, double alpha,
                  double beta);

// per-facet integrand values k + |k - density|, aligned with facets
std::vector<double> limit_integrand(const PolyhedralInterface& s, const DiscreteMeasure& mu,
                                    double alpha, double beta);

} // namespace nlphase
