#pragma once

#include <string>
#include <vector>

#include "nlphase/geometry.hpp"
#include "nlphase/kernel.hpp"

namespace nlphase {

struct BoundReport {
    std::string name;
    bool hypotheses_ok = false;
    double measured = 0;
    double bound = 0;
    double ratio = 0; // measured / bound
    bool satisfied = false;
    std::string detail;
};

// fitted constants, frozen from the calibration sweeps exercised in the tests
double separated_bound_constant(int dim); // C(N) for the cylinder/complement pair
double cone_bound_constant(int dim);      // C(N) for the cone-complement variant
double slice_discard_constant(int dim);   // the slice-loss constant in the lower bound

// G(A, B) <= C R^{N-1} (1 - ln(l/2)) with A the column of cross-section R
// above the gap of width d and B the complement column below it; the infinite
// complement is truncated at |x'| < 3.5 R (the kernel tail is negligible there).
// Requires 0 <= d <= l <= 8/3; h is the grid spacing.
BoundReport check_bound_cylinder_complement(int dim, double R, double d, double l, double h,
                                            const KernelPlan& plan = {});

// same right-hand side with B the complement of the pyramid spanned by the
// column base at height 0 and the apex (x' = 0, -l/2), inside the lower slab
BoundReport check_bound_cylinder_cone(int dim, double R, double d, double l, double h,
                                      const KernelPlan& plan = {});

// lower bound for G(A, B, cylinder) when B nearly fills a bottom slice of
// thickness r, A the matching top slice, and the uncovered middle volume is
// small against eps. A and B are the phase sets of u at delta = (beta-alpha)/4.
struct SpecialCylinderParams {
    double r = 0.25;     // slice thickness
    double lambda = 0.02;
    double c = 4.0;      // slack constant in the residual hypothesis
    double eps = 1e-3;
    double alpha = 0, beta = 1;
    int dim = 2; // used by the 1d route; the grid route takes dim from the field
};

// grid route: the field's grid box is the cylinder, last axis is axial
BoundReport check_lower_bound_special_cylinder(const PhaseField& u,
                                               const SpecialCylinderParams& p,
                                               const KernelPlan& plan = {});

// quasi-1d route on a graded mesh, per unit cross-section (R = 1)
BoundReport check_lower_bound_special_cylinder_1d(const Mesh1D& m,
                                                  const std::vector<double>& v,
                                                  const SpecialCylinderParams& p);

} // namespace nlphase
