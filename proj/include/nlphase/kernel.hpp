#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nlphase/geometry.hpp"

namespace nlphase {

enum class SumMode { pairwise, compensated };

// execution plan for the pair kernels; threads == 0 means "use OMP default"
struct KernelPlan {
    int tile = 64;
    int threads = 0;
    SumMode mode = SumMode::pairwise;
};

// deterministic pairwise-tree sum over a contiguous array, independent of threads
double pairwise_sum(const double* x, size_t n);
double compensated_sum(const double* x, size_t n);

// kernel value |x-y|^{-(N+1)} given the squared distance, N = dim
double kernel_value(int dim, double r2);

// G(A,B) = iint_{A x B} |x-y|^{-(N+1)} dy dx, midpoint quadrature,
// diagonal pairs (same cell) are skipped
double eval_G(const CellSet& A, const CellSet& B, const KernelPlan& plan);

// I(x) = int_A (u(y)-u(x))^2 |x-y|^{-(N+1)} dy for every x in "at", aligned with
// at.idx; integrating I over the region recovers the unscaled nonlocal term
std::vector<double> eval_I_field(const PhaseField& u, const CellSet& A, const CellSet& at,
                                 const KernelPlan& plan);

namespace serial {
// reference loops, no OpenMP, straight accumulation order
double eval_G(const CellSet& A, const CellSet& B, const KernelPlan& plan);
std::vector<double> eval_I_field(const PhaseField& u, const CellSet& A, const CellSet& at,
                                 const KernelPlan& plan);
} // namespace serial

// int_{R^{N-1}} (|z'|^2 + t^2)^{-(N+1)/2} dz' = omega_{N-1} / t^2
double reduced_kernel(int dim, double t);

// the same integral done numerically (composite Simpson, radial, truncated at T)
double reduced_kernel_numeric(int dim, double t, double T, int n);

// H^{N-1} measure of the unit ball in R^{N-1}: 1, 2, pi for N = 1, 2, 3
double omega(int nm1);

// 1d segments with per-node widths; used for graded-mesh line integrals
struct Mesh1D {
    std::vector<double> center;
    std::vector<double> width;
    size_t size() const { return center.size(); }
};

// uniform width 4a/n_trans on (-2a, 2a), geometric growth outward up to half-length L
Mesh1D graded_mesh_1d(double a, int n_trans, double growth, double hmax, double L);

// double integral of (v(s)-v(t))^2 / |s-t|^2 over the mesh, diagonal skipped;
// "window": only pairs with |s-t| < window contribute (<= 0 means no cutoff)
double quasi1d_nonlocal_mesh(const Mesh1D& m, const std::vector<double>& v, double window = 0);

// same integral for G between two index ranges of the mesh
double quasi1d_G_mesh(const Mesh1D& m, size_t a_begin, size_t a_end, size_t b_begin,
                      size_t b_end);

} // namespace nlphase
