#include "nlphase/potential.hpp"

#include <algorithm>
#include <cmath>

namespace nlphase {

double DoubleWell::operator()(double u) const {
    double a = u - alpha, b = u - beta;
    if (form == WellForm::quartic) return scale * a * a * b * b;
    // truncated quadratic: distance to the nearest well, squared, capped at the
    // barrier value in the middle
    double d = std::min(std::abs(a), std::abs(b));
    double cap = (beta - alpha) / 2;
    d = std::min(d, cap);
    return scale * d * d;
}

double DoubleWell::deriv(double u) const {
    double a = u - alpha, b = u - beta;
    if (form == WellForm::quartic) return scale * 2 * a * b * (a + b);
    double cap = (beta - alpha) / 2;
    if (std::abs(a) < std::abs(b)) {
        if (std::abs(a) >= cap) return 0;
        return scale * 2 * a;
    }
    if (std::abs(b) >= cap) return 0;
    return scale * 2 * b;
}

double potential_integral(const PhaseField& f, const DoubleWell& w, const CellSet& region) {
    double s = 0;
    for (int64_t i : region.idx) s += w(f.u[static_cast<size_t>(i)]);
    return s * f.grid.cell_volume();
}

} // namespace nlphase
