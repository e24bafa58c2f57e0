// benchmark: OpenMP pair kernels against the serial reference.
// prints timings and checks the results agree.
#include <cmath>
#include <cstdio>
#include <omp.h>
#include <vector>

#include "nlphase/energy.hpp"
#include "nlphase/kernel.hpp"

using namespace nlphase;

namespace {

struct Case {
    int n;
    CellSet A, B;
    PhaseField u;
};

Case make_case(int n) {
    Case c;
    c.n = n;
    Grid g = make_grid(2, Point{-0.5, -0.5, 0}, Point{1, 1, 0}, {n, n, 1});
    c.A = box_cells(g, Point{-0.5, -0.5, 0}, Point{0.5, -0.05, 0});
    c.B = box_cells(g, Point{-0.5, 0.05, 0}, Point{0.5, 0.5, 0});
    c.u.grid = g;
    c.u.u.resize(static_cast<size_t>(g.cell_count()));
    for (int64_t i = 0; i < g.cell_count(); ++i)
        c.u.u[static_cast<size_t>(i)] = g.center(i)[1] < 0 ? 1.0 : 0.0;
    return c;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes{32, 64, 96};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) {
            int n = std::atoi(argv[i]);
            if (n < 1) {
                std::fprintf(stderr, "usage: bench_kernel [grid sizes...]\n");
                return 2;
            }
            sizes.push_back(n);
        }
    }
    std::vector<int> threads{1, 2, 4, 8};

    std::printf("%-6s %-8s %-10s %-12s %-10s %s\n", "n", "threads", "kernel", "time_s",
                "speedup", "agreement");
    for (int n : sizes) {
        Case c = make_case(n);
        KernelPlan serial_plan;

        double t0 = omp_get_wtime();
        double g_ref = serial::eval_G(c.A, c.B, serial_plan);
        double t_serial_g = omp_get_wtime() - t0;
        std::printf("%-6d %-8s %-10s %-12.4f %-10s %s\n", n, "-", "G serial", t_serial_g, "-",
                    "-");

        t0 = omp_get_wtime();
        std::vector<double> i_ref = serial::eval_I_field(c.u, c.A, c.B, serial_plan);
        double t_serial_i = omp_get_wtime() - t0;
        std::printf("%-6d %-8s %-10s %-12.4f %-10s %s\n", n, "-", "I serial", t_serial_i, "-",
                    "-");

        for (int nt : threads) {
            KernelPlan plan;
            plan.threads = nt;

            t0 = omp_get_wtime();
            double g_par = eval_G(c.A, c.B, plan);
            double tg = omp_get_wtime() - t0;
            double relg = std::abs(g_par / g_ref - 1);
            std::printf("%-6d %-8d %-10s %-12.4f %-10.2f rel %.2e\n", n, nt, "G openmp", tg,
                        t_serial_g / tg, relg);

            t0 = omp_get_wtime();
            std::vector<double> i_par = eval_I_field(c.u, c.A, c.B, plan);
            double ti = omp_get_wtime() - t0;
            double reli = 0;
            for (size_t j = 0; j < i_ref.size(); ++j)
                if (i_ref[j] != 0)
                    reli = std::max(reli, std::abs(i_par[j] / i_ref[j] - 1));
            std::printf("%-6d %-8d %-10s %-12.4f %-10.2f rel %.2e\n", n, nt, "I openmp", ti,
                        t_serial_i / ti, reli);
        }
    }
    return 0;
}
