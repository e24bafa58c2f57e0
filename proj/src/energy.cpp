#include "nlphase/energy.hpp"

#include <cmath>
#include <omp.h>

#include "nlphase/errors.hpp"

namespace nlphase {

namespace {

double log_scale(double eps) {
    if (!(eps > 0) || eps >= 1) throw ConfigError("eps must lie in (0, 1)");
    return std::abs(std::log(eps));
}

} // namespace

std::vector<double> eval_density_field(const PhaseField& u, const CellSet& region,
                                       const CellSet& at, const KernelPlan& plan) {
    return eval_I_field(u, region, at, plan);
}

double eval_NL(const PhaseField& u, const CellSet& region, const KernelPlan& plan) {
    std::vector<double> I = eval_I_field(u, region, region, plan);
    double vol = u.grid.cell_volume();
    return pairwise_sum(I.data(), I.size()) * vol;
}

EnergyBreakdown eval_F_eps(const PhaseField& u, const SurfactantField& rho,
                           const EnergyParams& p, const CellSet& region) {
    if (!u.grid.same_as(rho.grid)) throw ConfigError("eval_F_eps: grid mismatch");
    double lam = log_scale(p.eps);
    double vol = u.grid.cell_volume();

    EnergyBreakdown e;
    e.eps = p.eps;
    e.cells = static_cast<int64_t>(region.idx.size());
    e.term1 = potential_integral(u, p.well, region) / p.eps;

    // one density pass feeds both nonlocal terms; term3 is exactly zero when
    // rho was copied from the same pass
    std::vector<double> I = eval_I_field(u, region, region, p.plan);
    std::vector<double> dev(I.size());
    for (size_t i = 0; i < I.size(); ++i)
        dev[i] = std::abs(I[i] - rho.rho[static_cast<size_t>(region.idx[i])]);
    e.term2 = pairwise_sum(I.data(), I.size()) * vol / lam;
    e.term3 = pairwise_sum(dev.data(), dev.size()) * vol / lam;
    e.total = e.term1 + e.term2 + e.term3;
    return e;
}

namespace {

// subgradients of the three terms with respect to the cell values on "region";
// sign(0) = 0 keeps the term3 subgradient valid at the kink
void eval_grads(const PhaseField& u, const SurfactantField& rho, const EnergyParams& p,
                const CellSet& region, std::vector<double>& gu, std::vector<double>& grho) {
    const Grid& g = u.grid;
    int dim = g.dim;
    double vol = g.cell_volume();
    double lam = log_scale(p.eps);
    size_t n = region.idx.size();

    std::vector<double> I = eval_I_field(u, region, region, p.plan);
    std::vector<double> sgn(n);
    for (size_t i = 0; i < n; ++i) {
        double d = I[i] - rho.rho[static_cast<size_t>(region.idx[i])];
        sgn[i] = d > 0 ? 1.0 : (d < 0 ? -1.0 : 0.0);
    }

    gu.assign(n, 0.0);
    grho.assign(n, 0.0);
    int64_t ni = static_cast<int64_t>(n);
#pragma omp parallel for schedule(static)
    for (int64_t ii = 0; ii < ni; ++ii) {
        size_t i = static_cast<size_t>(ii);
        Point pi = g.center(region.idx[i]);
        double ui = u.u[static_cast<size_t>(region.idx[i])];
        double acc = 0;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Point pj = g.center(region.idx[j]);
            double r2 = 0;
            for (int a = 0; a < dim; ++a) r2 += (pj[a] - pi[a]) * (pj[a] - pi[a]);
            double K = kernel_value(dim, r2);
            double d = ui - u.u[static_cast<size_t>(region.idx[j])];
            acc += K * d * (4.0 + 2.0 * (sgn[i] + sgn[j]));
        }
        gu[i] = p.well.deriv(ui) * vol / p.eps + acc * vol * vol / lam;
        grho[i] = -sgn[i] * vol / lam;
    }
}

} // namespace

RelaxTrace relax(PhaseField& u, SurfactantField& rho, const EnergyParams& p,
                 const CellSet& region, const RelaxOptions& opt) {
    RelaxTrace tr;
    double e0 = eval_F_eps(u, rho, p, region).total;
    tr.energy.push_back(e0);

    std::vector<double> gu, grho;
    double step = opt.step0;
    for (int it = 0; it < opt.steps; ++it) {
        eval_grads(u, rho, p, region, gu, grho);
        bool accepted = false;
        double s = step;
        for (int bt = 0; bt <= opt.max_backtracks; ++bt) {
            PhaseField ut = u;
            SurfactantField rt = rho;
            for (size_t i = 0; i < region.idx.size(); ++i) {
                size_t c = static_cast<size_t>(region.idx[i]);
                if (opt.relax_u) ut.u[c] -= s * gu[i];
                if (opt.relax_rho) rt.rho[c] = std::max(0.0, rt.rho[c] - s * grho[i]);
            }
            double e1 = eval_F_eps(ut, rt, p, region).total;
            if (e1 < e0) {
                u = std::move(ut);
                rho = std::move(rt);
                e0 = e1;
                tr.energy.push_back(e0);
                ++tr.accepted;
                step = s * 1.5;
                accepted = true;
                break;
            }
            s *= opt.shrink;
        }
        if (!accepted) break;
    }
    return tr;
}

} // namespace nlphase
