#include "symcalc/smooth.hpp"

#include "symcalc/jets.hpp"

namespace symcalc {

namespace {

// Jet of f(t) = exp(-1/t) at t0 > 0.
Jet f_jet(double t0, std::size_t len) { return jet_exp(jet_neg_reciprocal(t0, len)); }

Jet psi_jet(double t, std::size_t len) {
    Jet ft = f_jet(t, len);
    Jet f1t = f_jet(1.0 - t, len);
    // f(1-t): composing with the affine map flips odd coefficients.
    for (std::size_t k = 1; k < len; k += 2) f1t.c[k] = -f1t.c[k];
    return ft / (ft + f1t);
}

}  // namespace

std::vector<double> psi_derivs(unsigned max_order, double t) {
    std::vector<double> out(max_order + 1, 0.0);
    if (t <= 0.0) return out;
    if (t >= 1.0) {
        out[0] = 1.0;
        return out;
    }
    Jet j = psi_jet(t, max_order + 1);
    for (unsigned k = 0; k <= max_order; ++k) out[k] = j.deriv(k);
    return out;
}

double psi(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return psi_jet(t, 1).c[0];
}

double psi_deriv(unsigned k, double t) { return psi_derivs(k, t)[k]; }

std::vector<double> chi_derivs(unsigned max_order, double r) {
    std::vector<double> out = psi_derivs(max_order, 2.0 * r - 1.0);
    double scale = 1.0;
    for (unsigned k = 1; k <= max_order; ++k) {
        scale *= 2.0;
        out[k] *= scale;
    }
    return out;
}

double chi(double r) { return psi(2.0 * r - 1.0); }

double chi_deriv(unsigned k, double r) { return chi_derivs(k, r)[k]; }

double window_axis(double t) { return psi(1.0 - t * t); }

}  // namespace symcalc
