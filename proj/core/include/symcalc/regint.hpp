#ifndef SYMCALC_REGINT_HPP
#define SYMCALC_REGINT_HPP

#include <complex>
#include <map>

#include "symcalc/quadrature.hpp"
#include "symcalc/symbol.hpp"

namespace symcalc {

using Cplx = std::complex<double>;

/* Cut-off (finite part) integrals.

   For a term X(x) A(xi) |xi|^s P(|xi|) with homogeneity degree a and
   p := a + n, the ball integral over |xi| <= R expands as

       quad part + sum_{p != 0} M R^p / p + M_log log R,

   with M = X(x) W(x) int_S A dS.  Dropping the divergent powers with their
   finite part -lambda^p/p (reference radius lambda) and keeping the log
   coefficient reproduces the classical finite-part formula; the in-class
   remainder is identically zero, so no N-limits appear.  The log channel
   coefficient is exactly the Wodzicki residue density. */

// Exact rational * pi^k density grouped by window-factor class, used where
// the spec demands exact (rational channel) identities.
using ExactDensity = std::map<WindowProfile, ExactValue>;

bool exact_density_equal(const ExactDensity& a, const ExactDensity& b);
Cplx exact_density_value(const ExactDensity& d, const std::vector<double>& x);

struct FinitePartResult {
    Cplx finite_part{};
    Cplx log_coefficient{};
    std::map<long, Cplx> per_degree_boundary;  // degree index i -> tail constant
    Cplx compact_part{};                       // all quadrature-computed pieces
    double quad_error = 0.0;
};

// --- densities at fixed x --------------------------------------------------

Cplx residue_density(const ClassicalSymbol& s, const std::vector<double>& x);
ExactDensity residue_density_exact(const ClassicalSymbol& s, const std::vector<Rational>& x);

FinitePartResult finite_part_density(const ClassicalSymbol& s, const std::vector<double>& x,
                                     const Integrator& integ, double lambda = 1.0);
// log channel of the finite part through the tail-selection logic (exact).
ExactDensity log_coefficient_exact(const ClassicalSymbol& s, const std::vector<Rational>& x);

// --- x-integrated functionals (require compact support) --------------------

Cplx wodzicki_residue(const ClassicalSymbol& s, const Integrator& integ,
                      double* err = nullptr);

FinitePartResult cutoff_integral_full(const ClassicalSymbol& s, const Integrator& integ,
                                      double lambda = 1.0);
Cplx cutoff_integral(const ClassicalSymbol& s, const Integrator& integ, double lambda = 1.0);

struct IbpResult {
    Cplx cutoff_of_derivative;  // -int d_{xi_i} sigma
    Cplx boundary;              // oriented cosphere evaluation of sigma_{-n+1}
    double quad_error;
};
IbpResult ibp_defect(const ClassicalSymbol& s, unsigned axis, const Integrator& integ);

Cplx translation_defect(const ClassicalSymbol& s, const std::vector<Rational>& eta, int depth,
                        const Integrator& integ);

}  // namespace symcalc

#endif
