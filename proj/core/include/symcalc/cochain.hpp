#ifndef SYMCALC_COCHAIN_HPP
#define SYMCALC_COCHAIN_HPP

#include <functional>
#include <string>
#include <vector>

#include "symcalc/forms.hpp"
#include "symcalc/star.hpp"

namespace symcalc {

using SymbolTuple = std::vector<ClassicalSymbol>;

// One multilinear evaluation: value plus an accumulated error budget
// (quadrature estimates; star truncation is exact once K clears the
// residue threshold, which the default K choices guarantee).
struct CochainEval {
    Cplx value{};
    double budget = 0.0;
};

struct Cochain {
    unsigned arity = 0;
    std::function<CochainEval(const SymbolTuple&)> fn;

    CochainEval operator()(const SymbolTuple& args) const;
};

// star-wedge chain sigma_0 * d sigma_1 ^_* ... ^_* d sigma_k
SymbolForm symbol_chain(const SymbolTuple& args, unsigned K);

// default truncation for a chain of the given arguments: large enough that
// both the residue and the order-0 channel are truncation-exact
unsigned chain_truncation(const SymbolTuple& args, unsigned n);

// --- the four cochain flavors ----------------------------------------------

Cplx residue_cochain(const SymbolTuple& args, unsigned K, const Integrator& integ,
                     double* budget = nullptr);
Cplx cosphere_cochain(const SymbolTuple& args, unsigned K, const Integrator& integ,
                      double* budget = nullptr);
Cplx cutoff_cochain(const SymbolTuple& args, unsigned K, const Integrator& integ,
                    double* budget = nullptr);
// phi_{2k}(a_0,...,a_{2k}) = res(a_0 * theta(a_1,a_2) * ... * theta(a_{2k-1},a_{2k}))
Cplx phi_cochain(const SymbolTuple& args, unsigned K, const Integrator& integ,
                 double* budget = nullptr);

Cochain make_residue_cochain(unsigned arity, unsigned K, const Integrator& integ);
Cochain make_cosphere_cochain(unsigned arity, unsigned K, const Integrator& integ);
Cochain make_cutoff_cochain(unsigned arity, unsigned K, const Integrator& integ);
Cochain make_phi_cochain(unsigned arity, unsigned K, const Integrator& integ);

// --- the Appendix operators ---------------------------------------------------

// B0 chi(a_0..a_{n-1}) = chi(1, a_0..a_{n-1}) - (-1)^n chi(a_0..a_{n-1}, 1)
Cochain operator_B0(const Cochain& chi, unsigned dim);
// B = cyclic antisymmetrisation of B0:
// B chi(a_0..a_{n-1}) = sum_i (-1)^i chi(1, a_i,..) - (-1)^n sum_i (-1)^i chi(a_i,.., 1)
Cochain operator_B(const Cochain& chi, unsigned dim);
// antisymmetrisation over all but the first variable (theta-comparison A)
Cochain operator_A_all_but_first(const Cochain& chi);

enum class SlotProduct { star, pointwise };

// Hochschild coboundary for the star product:
// b chi(a_0..a_{A}) = sum_j (-1)^j chi(.., a_j * a_{j+1}, ..) + (-1)^A chi(a_A * a_0, ..)
Cochain hochschild_b_star(const Cochain& chi, unsigned K);
// mixed variant: star on the two slot-0-adjacent merges (first and the
// cyclic wrap), pointwise in the middle; annihilates phi_{2k}
Cochain hochschild_b_mixed(const Cochain& chi, unsigned K);

// --- theta-ratio experiment ---------------------------------------------------

struct ThetaRatioReport {
    unsigned dim = 1;
    unsigned trials = 0;
    unsigned admissible = 0;
    std::vector<Cplx> ratios;
    Cplx mean{};
    double rel_spread = 0.0;
    // distance of the mean to the paper's three candidate constants
    double dist_minus_i_pow = 0.0;  // (-i)^n / n!
    double dist_minus_one_pow = 0.0;  // (-1)^n / n!
    double dist_i_pow_fact = 0.0;   // i^n n!
};

ThetaRatioReport theta_ratio_experiment(unsigned dim, unsigned trials, std::uint64_t seed,
                                        const Integrator& integ);

}  // namespace symcalc

#endif
