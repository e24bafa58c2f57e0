#pragma once

#include <optional>

#include "nlphase/energy.hpp"
#include "nlphase/gamma_limit.hpp"
#include "nlphase/geometry.hpp"
#include "nlphase/kernel.hpp"

namespace nlphase {

// transition half-width of the graded profile at scale eps
double slab_halfwidth(double eps);

// smallest eps whose transition band (-a, a), a = eps/(2 |ln eps|), spans at
// least two cells of spacing h along the crossing axis
double min_usable_eps(double h);

// phase profile crossing x_axis = 0: beta below, affine on (-a, a), alpha above.
// Throws ResolutionError when the band is thinner than two cells.
PhaseField slab_profile(const Grid& g, int axis, double eps, double alpha, double beta);

// same profile sampled on a 1d mesh (no resolution guard, mesh is built to fit)
std::vector<double> slab_profile_1d(const Mesh1D& m, double eps, double alpha, double beta);

// surfactant matched to an interface with areal density g: rho = (g / k) * I on
// the carrier band, zero outside; I is the density field of u over the region
SurfactantField surfactant_on_interface(const PhaseField& u, const CellSet& region,
                                        const CellSet& band, double g, double k,
                                        const KernelPlan& plan);

// radial spike at x1: rho = zeta / (s_N |x - x1|^N) on eps < |x - x1| < r, where
// s_N is the measure of the unit sphere; its mass is zeta * ln(r / eps)
SurfactantField surfactant_atom(const Grid& g, const Point& x1, double zeta, double r,
                                double eps);

// exact mass of the spike between the cutoffs
double atom_mass(double zeta, double r, double eps);

// recovery pair for a polyhedral interface with a measure on top of it
struct RecoveryPair {
    PhaseField u;
    SurfactantField rho;
    CellSet band;   // cells within the transition margin of the interface
    double eps = 0;
};

RecoveryPair build_recovery_pair(const Grid& g, const PolyhedralInterface& s,
                                 const DiscreteMeasure& mu, double alpha, double beta,
                                 double eps, const KernelPlan& plan);

// comparison of a tilted-graph configuration against its flattened profile:
// nonlocal energy of u on the subgraph region vs the one-variable profile
// spanning the same range, plus the potential excess
struct MixedReport {
    double lhs = 0;       // F_eps(u) on the graph domain, no surfactant
    double rhs = 0;       // F_eps(flattened profile) + potential excess
    double margin = 0;    // (rhs - lhs) / rhs
    bool satisfied = false;
};

MixedReport check_mixed_interaction(double slope, double offset, double eps, int n1, int n2,
                                    const DoubleWell& well, const KernelPlan& plan);

// equicoercivity probe: two-phase defect and energy along an eps ladder;
// defects must shrink while energies stay bounded
struct CompactnessSample {
    double eps = 0;
    double defect = 0;
    double energy = 0;
};

std::vector<CompactnessSample> compactness_diagnostic(const Grid& g, int axis, double alpha,
                                                      double beta,
                                                      const std::vector<double>& ladder,
                                                      const DoubleWell& well,
                                                      const KernelPlan& plan);

} // namespace nlphase
