#ifndef SYMCALC_HOLO_HPP
#define SYMCALC_HOLO_HPP

#include <map>

#include "symcalc/forms.hpp"
#include "symcalc/regint.hpp"

namespace symcalc {

/* Holomorphic (Riesz-type) families and Laurent-germ arithmetic.

   A family sigma(z) = H(z) sum_t zpoly_t(z) X_t(x) A_t(xi) |xi|^{s_t - z} P_t(|xi|)
   has affine order alpha(z) = m - z.  Derivatives keep the class: d_xi pulls
   down (s - z) factors, so per-term coefficients are exact polynomials in z.
   Cut-off integrals become germs: each asymptotic term contributes the exact
   meromorphic tail  zpoly(z) H(z) M / (z - (a + n))  (a the term degree),
   and a compact/ball part that is entire in z, with z-derivatives computed
   by quadrature of (-log r)^k-weighted integrands. */

// Truncated Laurent expansion at a rational point z0.
class LaurentGerm {
public:
    LaurentGerm() : z0_(0), lead_(0) {}
    LaurentGerm(Rational z0, int lead, std::vector<Cplx> coeffs)
        : z0_(std::move(z0)), lead_(lead), coeffs_(std::move(coeffs)) {
        normalize();
    }
    static LaurentGerm zero(Rational z0, unsigned jet_len) {
        return LaurentGerm(std::move(z0), 0, std::vector<Cplx>(jet_len, Cplx{}));
    }
    // germ of 1/(z - q) at z0, with jet_len regular coefficients
    static LaurentGerm simple_pole_inverse(const Rational& z0, const Rational& q,
                                           unsigned jet_len);
    // polynomial sum c_j z^j recentered at z0
    static LaurentGerm from_polynomial(const std::vector<Complexq>& c, const Rational& z0,
                                       unsigned jet_len);

    const Rational& z0() const { return z0_; }
    int lead() const { return lead_; }
    int top() const { return lead_ + static_cast<int>(coeffs_.size()) - 1; }
    int pole_order() const { return lead_ < 0 ? -lead_ : 0; }
    Cplx at(int k) const;         // coefficient of (z - z0)^k
    Cplx residue() const { return at(-1); }
    Cplx finite_part() const { return at(0); }
    double max_abs() const;

    LaurentGerm& operator+=(const LaurentGerm& o);
    friend LaurentGerm operator+(LaurentGerm a, const LaurentGerm& b) { return a += b; }
    friend LaurentGerm operator*(const LaurentGerm& a, const LaurentGerm& b);
    LaurentGerm& operator*=(const Cplx& c);
    friend LaurentGerm operator*(LaurentGerm a, const Cplx& c) { return a *= c; }

private:
    Rational z0_;
    int lead_;                 // lowest stored index
    std::vector<Cplx> coeffs_;  // coefficients lead_, lead_+1, ...
    void normalize();
};

struct FamilyTerm {
    SymbolTerm base;                // radial_power means s - z
    std::vector<Complexq> zpoly;    // c0 + c1 z + ... (exact)
};

class HoloSymbolFamily {
public:
    HoloSymbolFamily() : dim_(0), base_order_(0), prefactor_{Complexq(1)} {}
    HoloSymbolFamily(unsigned dim, Rational base_order, std::vector<Complexq> H)
        : dim_(dim), base_order_(std::move(base_order)), prefactor_(std::move(H)) {}

    unsigned dim() const { return dim_; }
    // order alpha(z) = base_order - z;  alpha'(0) = -1
    const Rational& order_at_zero() const { return base_order_; }
    static int order_slope() { return -1; }
    const std::vector<Complexq>& prefactor() const { return prefactor_; }
    const std::vector<FamilyTerm>& terms() const { return terms_; }
    void set_base_order(Rational m) { base_order_ = std::move(m); }

    void add_term(FamilyTerm t);
    bool is_zero() const { return terms_.empty(); }
    bool windowed() const;

    ClassicalSymbol at_zero() const;  // sigma(0)
    HoloSymbolFamily operator-() const;
    HoloSymbolFamily& operator+=(const HoloSymbolFamily& o);

private:
    unsigned dim_;
    Rational base_order_;
    std::vector<Complexq> prefactor_;
    std::vector<FamilyTerm> terms_;
};

// Riesz lift: every radial power shifted by -z, order m - z, prefactor H
// (polynomial jet with H(0) = 1).
HoloSymbolFamily riesz_family(const ClassicalSymbol& s,
                              std::vector<Complexq> H = {Complexq(1)});

HoloSymbolFamily family_partial_xi(const HoloSymbolFamily& f, unsigned axis);
HoloSymbolFamily family_partial_x(const HoloSymbolFamily& f, unsigned axis);

// candidate pole locations z = a + n of the tail channel (moment-filtered)
std::vector<Rational> family_pole_candidates(const HoloSymbolFamily& f);

// Germ at z0 of the cut-off integral density z -> fp int sigma(z)(x, .) dxi.
LaurentGerm laurent_cutoff_integral_density(const HoloSymbolFamily& f,
                                            const std::vector<double>& x, const Rational& z0,
                                            unsigned jet_len, const Integrator& integ);
// x-integrated version (requires compact support).
LaurentGerm laurent_cutoff_integral(const HoloSymbolFamily& f, const Rational& z0,
                                    unsigned jet_len, const Integrator& integ);

// | Res_{z=0} fp-integral of the Riesz family - res(sigma) |  (alpha'(0) = -1)
double complex_residue_identity_defect(const ClassicalSymbol& s, const Integrator& integ,
                                       std::vector<Complexq> H = {Complexq(1)});

// fp_{z=0} of the germ of the Riesz family.
Cplx regularized_integral(const ClassicalSymbol& s, const Integrator& integ,
                          std::vector<Complexq> H = {Complexq(1)});

// --- families of forms -----------------------------------------------------

class HoloForm {
public:
    HoloForm() : dim_(0), degree_(0), base_order_(0) {}
    HoloForm(unsigned dim, unsigned degree, Rational base_order)
        : dim_(dim), degree_(degree), base_order_(std::move(base_order)) {}

    static HoloForm riesz_lift(const SymbolForm& w, std::vector<Complexq> H = {Complexq(1)});

    unsigned dim() const { return dim_; }
    unsigned degree() const { return degree_; }
    const Rational& base_order() const { return base_order_; }
    const std::map<FormIndex, HoloSymbolFamily>& coefficients() const { return coeffs_; }
    void add_coefficient(const FormIndex& idx, HoloSymbolFamily f);

private:
    unsigned dim_;
    unsigned degree_;
    Rational base_order_;
    std::map<FormIndex, HoloSymbolFamily> coeffs_;
};

HoloForm holo_exterior_derivative(const HoloForm& w);

// Germ of z -> fp-integral of the top coefficient (zero germ if non-top).
LaurentGerm laurent_cutoff_integral_form(const HoloForm& w, const Rational& z0,
                                         unsigned jet_len, const Integrator& integ);

double complex_residue_identity_defect_form(const SymbolForm& w, const Integrator& integ);

// Germ at 0 of z -> fp-integral of d(riesz lift of beta); zero coefficientwise
// when meromorphic Stokes holds.
LaurentGerm meromorphic_stokes_defect(const SymbolForm& beta, unsigned jet_len,
                                      const Integrator& integ);

}  // namespace symcalc

#endif
