#include <cmath>

#include "nlphase/errors.hpp"
#include "nlphase/kernel.hpp"

// reference loops: no OpenMP, no tiling, left-to-right accumulation.
// kept as the ground truth the parallel kernels are tested against.

namespace nlphase::serial {

double eval_G(const CellSet& A, const CellSet& B, const KernelPlan&) {
    if (!A.grid.same_as(B.grid)) throw ConfigError("eval_G: cell sets on different grids");
    const Grid& g = A.grid;
    int dim = g.dim;
    double s = 0;
    for (int64_t ia : A.idx) {
        Point pa = g.center(ia);
        for (int64_t ib : B.idx) {
            if (ia == ib) continue;
            Point pb = g.center(ib);
            double r2 = 0;
            for (int a = 0; a < dim; ++a) r2 += (pb[a] - pa[a]) * (pb[a] - pa[a]);
            s += kernel_value(dim, r2);
        }
    }
    double vol = g.cell_volume();
    return s * vol * vol;
}

std::vector<double> eval_I_field(const PhaseField& u, const CellSet& A, const CellSet& at,
                                 const KernelPlan&) {
    if (!u.grid.same_as(A.grid) || !u.grid.same_as(at.grid))
        throw ConfigError("eval_I_field: grid mismatch");
    const Grid& g = u.grid;
    int dim = g.dim;
    double vol = g.cell_volume();
    std::vector<double> out;
    out.reserve(at.idx.size());
    for (int64_t ia : at.idx) {
        Point pa = g.center(ia);
        double ua = u.u[static_cast<size_t>(ia)];
        double s = 0;
        for (int64_t ib : A.idx) {
            if (ia == ib) continue;
            Point pb = g.center(ib);
            double r2 = 0;
            for (int a = 0; a < dim; ++a) r2 += (pb[a] - pa[a]) * (pb[a] - pa[a]);
            double d = u.u[static_cast<size_t>(ib)] - ua;
            s += d * d * kernel_value(dim, r2);
        }
        out.push_back(s * vol);
    }
    return out;
}

} // namespace nlphase::serial
