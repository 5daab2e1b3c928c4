#ifndef SYMCALC_SMOOTH_HPP
#define SYMCALC_SMOOTH_HPP

#include <cstddef>
#include <vector>

namespace symcalc {

/* Fixed smooth transition profiles.

   psi(t) = f(t) / (f(t) + f(1-t)),  f(t) = exp(-1/t) for t > 0, else 0.
   psi == 0 for t <= 0 and == 1 for t >= 1, strictly increasing in between.

   chi(r) = psi(2r - 1): the radial cutoff, identically 0 for r <= 1/2 and
   identically 1 for r >= 1.  All derivatives vanish outside [1/2, 1].

   The x-window on the open unit box is w(x) = prod_i psi(1 - x_i^2); the
   per-axis factor psi(1 - t^2) and its t-derivatives are what the window
   bookkeeping in symbol terms refers to. */

double psi(double t);
double psi_deriv(unsigned k, double t);
// psi, psi', ..., psi^(max_order) at t in one sweep.
std::vector<double> psi_derivs(unsigned max_order, double t);

double chi(double r);
double chi_deriv(unsigned k, double r);
std::vector<double> chi_derivs(unsigned max_order, double r);

// Single-axis window factor psi(1 - t^2) (value only; derivatives are
// tracked symbolically as psi^(k) factors times polynomials).
double window_axis(double t);

// CutoffProfile bundles the chi evaluators behind the spec's named type.
struct CutoffProfile {
    unsigned max_order = 16;
    double operator()(double r) const { return chi(r); }
    double deriv(unsigned k, double r) const { return chi_deriv(k, r); }
};

}  // namespace symcalc

#endif
