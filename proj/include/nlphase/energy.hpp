#pragma once

#include <vector>

#include "nlphase/kernel.hpp"
#include "nlphase/potential.hpp"

namespace nlphase {

struct EnergyBreakdown {
    double term1 = 0; // (1/eps) int W(u)
    double term2 = 0; // (1/|ln eps|) iint (u(y)-u(x))^2 |x-y|^{-(N+1)}
    double term3 = 0; // (1/|ln eps|) int |I(x) - rho(x)|
    double total = 0;
    double eps = 0;
    int64_t cells = 0;
};

// parameters shared by all energy evaluations
struct EnergyParams {
    DoubleWell well;
    double eps = 1e-2;
    KernelPlan plan;
};

// full functional on a region; I is computed once and shared between terms 2 and 3
EnergyBreakdown eval_F_eps(const PhaseField& u, const SurfactantField& rho,
                           const EnergyParams& p, const CellSet& region);

// nonlocal part alone, unscaled: iint_{A x A} (u(y)-u(x))^2 |x-y|^{-(N+1)}
double eval_NL(const PhaseField& u, const CellSet& region, const KernelPlan& plan);

// I(x) = int_region u(y) |x-y|^{-(N+1)} dy at every cell of "at"
std::vector<double> eval_density_field(const PhaseField& u, const CellSet& region,
                                       const CellSet& at, const KernelPlan& plan);

// subgradient descent on F_eps with backtracking line search; rho clamped at 0
struct RelaxOptions {
    int steps = 50;
    double step0 = 1e-3;
    double shrink = 0.5;
    int max_backtracks = 20;
    bool relax_u = true;
    bool relax_rho = true;
};

struct RelaxTrace {
    std::vector<double> energy; // total after each accepted step, [0] is the start
    int accepted = 0;
};

RelaxTrace relax(PhaseField& u, SurfactantField& rho, const EnergyParams& p,
                 const CellSet& region, const RelaxOptions& opt);

} // namespace nlphase
