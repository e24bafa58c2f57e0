#pragma once

#include "nlphase/geometry.hpp"

namespace nlphase {

enum class WellForm { quartic, truncated_quadratic };

// double-well potential, zero exactly at the two phase values
struct DoubleWell {
    WellForm form = WellForm::quartic;
    double alpha = 0.0;
    double beta = 1.0;
    double scale = 1.0;

    double operator()(double u) const;
    double deriv(double u) const; // one-sided at the truncation kinks
};

// int_A W(u) dx, plain cell-volume quadrature
double potential_integral(const PhaseField& f, const DoubleWell& w, const CellSet& region);

} // namespace nlphase
