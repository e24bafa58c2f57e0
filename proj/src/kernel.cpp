#include "nlphase/kernel.hpp"

#include <cmath>
#include <omp.h>

#include "nlphase/errors.hpp"

namespace nlphase {

double pairwise_sum(const double* x, size_t n) {
    if (n <= 8) {
        double s = 0;
        for (size_t i = 0; i < n; ++i) s += x[i];
        return s;
    }
    size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

double compensated_sum(const double* x, size_t n) {
    double s = 0, c = 0;
    for (size_t i = 0; i < n; ++i) {
        double y = x[i] - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

double kernel_value(int dim, double r2) {
    if (dim == 1) return 1.0 / r2;
    if (dim == 2) return 1.0 / (r2 * std::sqrt(r2));
    return 1.0 / (r2 * r2);
}

double omega(int nm1) {
    if (nm1 == 0) return 1.0;
    if (nm1 == 1) return 2.0;
    if (nm1 == 2) return M_PI;
    throw ConfigError("omega: only N-1 in {0,1,2}");
}

double reduced_kernel(int dim, double t) { return omega(dim - 1) / (t * t); }

double reduced_kernel_numeric(int dim, double t, double T, int n) {
    if (dim == 1) return 1.0 / (t * t); // nothing to integrate out
    if (n % 2) ++n;
    double h = T / n, s = 0;
    if (dim == 2) {
        // 2 * int_0^T (z^2 + t^2)^{-3/2} dz, composite Simpson
        auto f = [&](double z) { return std::pow(z * z + t * t, -1.5); };
        s = f(0) + f(T);
        for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
        return 2.0 * s * h / 3.0;
    }
    // 2 pi int_0^T r (r^2 + t^2)^{-2} dr
    auto f = [&](double r) {
        double q = r * r + t * t;
        return r / (q * q);
    };
    s = f(0) + f(T);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return 2.0 * M_PI * s * h / 3.0;
}

namespace {

struct Centers {
    std::vector<double> x, y, z;
    void fill(const Grid& g, const std::vector<int64_t>& idx) {
        x.resize(idx.size());
        y.resize(idx.size());
        z.resize(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) {
            Point p = g.center(idx[i]);
            x[i] = p[0];
            y[i] = p[1];
            z[i] = p[2];
        }
    }
};

template <int DIM> inline double kpow(double r2);
template <> inline double kpow<1>(double r2) { return 1.0 / r2; }
template <> inline double kpow<2>(double r2) { return 1.0 / (r2 * std::sqrt(r2)); }
template <> inline double kpow<3>(double r2) { return 1.0 / (r2 * r2); }

// one row of the pair sum: source point i against every column j != self.
// tile partials are combined with a pairwise tree so the result does not
// depend on how rows are distributed over threads.
template <int DIM, typename Weight>
double row_sum(double xi, double yi, double zi, int64_t self, const Centers& c,
               const std::vector<int64_t>& cols, const KernelPlan& plan, Weight w) {
    size_t n = cols.size();
    if (plan.mode == SumMode::compensated) {
        double s = 0, comp = 0;
        for (size_t j = 0; j < n; ++j) {
            if (cols[j] == self) continue;
            double dx = c.x[j] - xi, dy = c.y[j] - yi, dz = c.z[j] - zi;
            double r2 = dx * dx + dy * dy + dz * dz;
            double v = w(j) * kpow<DIM>(r2);
            double yy = v - comp;
            double t = s + yy;
            comp = (t - s) - yy;
            s = t;
        }
        return s;
    }
    size_t tile = plan.tile > 0 ? static_cast<size_t>(plan.tile) : 64;
    std::vector<double> parts;
    parts.reserve(n / tile + 1);
    for (size_t t0 = 0; t0 < n; t0 += tile) {
        size_t t1 = std::min(n, t0 + tile);
        double p = 0;
        for (size_t j = t0; j < t1; ++j) {
            if (cols[j] == self) continue;
            double dx = c.x[j] - xi, dy = c.y[j] - yi, dz = c.z[j] - zi;
            double r2 = dx * dx + dy * dy + dz * dz;
            p += w(j) * kpow<DIM>(r2);
        }
        parts.push_back(p);
    }
    return pairwise_sum(parts.data(), parts.size());
}

template <int DIM>
void g_rows(const CellSet& A, const CellSet& B, const KernelPlan& plan, double* out) {
    Centers ca, cb;
    ca.fill(A.grid, A.idx);
    cb.fill(B.grid, B.idx);
    int nt = plan.threads > 0 ? plan.threads : omp_get_max_threads();
    int64_t nA = static_cast<int64_t>(A.idx.size());
#pragma omp parallel for schedule(static) num_threads(nt)
    for (int64_t i = 0; i < nA; ++i) {
        size_t si = static_cast<size_t>(i);
        out[si] = row_sum<DIM>(ca.x[si], ca.y[si], ca.z[si], A.idx[si], cb, B.idx, plan,
                               [](size_t) { return 1.0; });
    }
}

template <int DIM>
void i_rows(const PhaseField& u, const CellSet& A, const CellSet& at, const KernelPlan& plan,
            double* out) {
    Centers ca, cb;
    ca.fill(at.grid, at.idx);
    cb.fill(A.grid, A.idx);
    std::vector<double> ub(A.idx.size());
    for (size_t j = 0; j < A.idx.size(); ++j) ub[j] = u.u[static_cast<size_t>(A.idx[j])];
    int nt = plan.threads > 0 ? plan.threads : omp_get_max_threads();
    int64_t n = static_cast<int64_t>(at.idx.size());
    double vol = A.grid.cell_volume();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (int64_t i = 0; i < n; ++i) {
        size_t si = static_cast<size_t>(i);
        double ui = u.u[static_cast<size_t>(at.idx[si])];
        out[si] = vol * row_sum<DIM>(ca.x[si], ca.y[si], ca.z[si], at.idx[si], cb, A.idx, plan,
                                     [&](size_t j) {
                                         double d = ub[j] - ui;
                                         return d * d;
                                     });
    }
}

double combine(const std::vector<double>& rows, const KernelPlan& plan) {
    if (plan.mode == SumMode::compensated) return compensated_sum(rows.data(), rows.size());
    return pairwise_sum(rows.data(), rows.size());
}

} // namespace

double eval_G(const CellSet& A, const CellSet& B, const KernelPlan& plan) {
    if (!A.grid.same_as(B.grid)) throw ConfigError("eval_G: cell sets on different grids");
    std::vector<double> rows(A.idx.size(), 0.0);
    int dim = A.grid.dim;
    if (dim == 1)
        g_rows<1>(A, B, plan, rows.data());
    else if (dim == 2)
        g_rows<2>(A, B, plan, rows.data());
    else
        g_rows<3>(A, B, plan, rows.data());
    double vol = A.grid.cell_volume();
    return combine(rows, plan) * vol * vol;
}

std::vector<double> eval_I_field(const PhaseField& u, const CellSet& A, const CellSet& at,
                                 const KernelPlan& plan) {
    if (!u.grid.same_as(A.grid) || !u.grid.same_as(at.grid))
        throw ConfigError("eval_I_field: grid mismatch");
    std::vector<double> out(at.idx.size(), 0.0);
    int dim = u.grid.dim;
    if (dim == 1)
        i_rows<1>(u, A, at, plan, out.data());
    else if (dim == 2)
        i_rows<2>(u, A, at, plan, out.data());
    else
        i_rows<3>(u, A, at, plan, out.data());
    return out;
}

Mesh1D graded_mesh_1d(double a, int n_trans, double growth, double hmax, double L) {
    if (!(a > 0) || !(L > 2 * a)) throw ConfigError("graded_mesh_1d: need 0 < 2a < L");
    if (n_trans < 2 || !(growth > 1) || !(hmax > 0))
        throw ConfigError("graded_mesh_1d: bad refinement knobs");
    double h0 = 4 * a / n_trans;
    std::vector<double> right_c, right_w;
    // uniform band [0, 2a)
    for (int i = 0; i < n_trans / 2; ++i) {
        right_c.push_back((i + 0.5) * h0);
        right_w.push_back(h0);
    }
    double x = 2 * a, w = h0;
    while (x < L) {
        w = std::min(w * growth, hmax);
        if (x + w > L) w = L - x;
        right_c.push_back(x + w / 2);
        right_w.push_back(w);
        x += w;
        if (w <= 0) break;
    }
    Mesh1D m;
    for (size_t i = right_c.size(); i-- > 0;) {
        m.center.push_back(-right_c[i]);
        m.width.push_back(right_w[i]);
    }
    for (size_t i = 0; i < right_c.size(); ++i) {
        m.center.push_back(right_c[i]);
        m.width.push_back(right_w[i]);
    }
    return m;
}

double quasi1d_nonlocal_mesh(const Mesh1D& m, const std::vector<double>& v, double window) {
    if (v.size() != m.size()) throw ConfigError("quasi1d_nonlocal_mesh: size mismatch");
    size_t n = m.size();
    std::vector<double> rows(n, 0.0);
    int64_t ni = static_cast<int64_t>(n);
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < ni; ++i) {
        size_t si = static_cast<size_t>(i);
        double xi = m.center[si], vi = v[si], s = 0;
        for (size_t j = 0; j < n; ++j) {
            if (j == si) continue;
            double d = m.center[j] - xi;
            if (window > 0 && std::abs(d) >= window) continue;
            double dv = v[j] - vi;
            s += dv * dv / (d * d) * m.width[j];
        }
        rows[si] = s * m.width[si];
    }
    return pairwise_sum(rows.data(), rows.size());
}

double quasi1d_G_mesh(const Mesh1D& m, size_t a_begin, size_t a_end, size_t b_begin,
                      size_t b_end) {
    std::vector<double> rows(a_end - a_begin, 0.0);
    int64_t na = static_cast<int64_t>(a_end - a_begin);
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < na; ++i) {
        size_t si = a_begin + static_cast<size_t>(i);
        double xi = m.center[si], s = 0;
        for (size_t j = b_begin; j < b_end; ++j) {
            if (j == si) continue;
            double d = m.center[j] - xi;
            s += m.width[j] / (d * d);
        }
        rows[static_cast<size_t>(i)] = s * m.width[si];
    }
    return pairwise_sum(rows.data(), rows.size());
}

} // namespace nlphase
