#ifndef SYMCALC_FORMS_HPP
#define SYMCALC_FORMS_HPP

#include <map>

#include "symcalc/regint.hpp"
#include "symcalc/star.hpp"
#include "symcalc/symbol.hpp"

namespace symcalc {

/* Symbol-valued forms on T*U.

   Basis convention: dx_I ^ dxi_J with I, J ascending and every dx before
   every dxi; all signs are folded into the coefficients at construction.
   A form of order m stores at (I, J) a coefficient of order m - |J|
   (dxi carries order weight 1).

   Orientation conventions, fixed once:
     - res and the intrinsic contraction use dx ^ d_S(xi) as the positive
       volume on S*U (the mass-2 convention on S^0);
     - boundary terms produced by Stokes from the ball bundle carry the
       induced orientation, which differs from the former by (-1)^n.  A
       (2n-1)-form g dx_full ^ dxi_{J}, J missing axis j (0-based), pairs to
       (-1)^{n+j} int_U oint_S g(x, w) w_j dS dx.  */

struct FormIndex {
    std::vector<unsigned> dx;   // ascending, 0-based
    std::vector<unsigned> dxi;  // ascending, 0-based

    unsigned degree() const { return static_cast<unsigned>(dx.size() + dxi.size()); }
    friend bool operator==(const FormIndex& a, const FormIndex& b) {
        return a.dx == b.dx && a.dxi == b.dxi;
    }
    friend bool operator<(const FormIndex& a, const FormIndex& b) {
        if (a.dx != b.dx) return a.dx < b.dx;
        return a.dxi < b.dxi;
    }
};

// sign of sorting the concatenation of two disjoint ascending tuples;
// 0 if they intersect
int merge_sign(const std::vector<unsigned>& a, const std::vector<unsigned>& b);

class SymbolForm {
public:
    SymbolForm() : dim_(0), degree_(0), order_(0) {}
    SymbolForm(unsigned dim, unsigned degree, Rational order)
        : dim_(dim), degree_(degree), order_(std::move(order)) {}

    // 0-form from a symbol
    static SymbolForm from_symbol(const ClassicalSymbol& s);

    unsigned dim() const { return dim_; }
    unsigned degree() const { return degree_; }
    const Rational& order() const { return order_; }
    const std::map<FormIndex, ClassicalSymbol>& coefficients() const { return coeffs_; }
    bool is_zero() const;

    // Adds c * dx_I ^ dxi_J (indices already canonical; the coefficient's
    // declared order is forced to order - |J|).
    void add_coefficient(const FormIndex& idx, ClassicalSymbol c);
    const ClassicalSymbol* coefficient(const FormIndex& idx) const;

    SymbolForm operator-() const;
    SymbolForm& operator+=(const SymbolForm& o);
    SymbolForm& operator-=(const SymbolForm& o);
    friend SymbolForm operator+(SymbolForm a, const SymbolForm& b) { return a += b; }
    friend SymbolForm operator-(SymbolForm a, const SymbolForm& b) { return a -= b; }

    // homogeneous degree-j component (coefficientwise, shifted by |J|)
    SymbolForm component(unsigned j) const;
    // coefficientwise asymptotic channel (drops chi-derivative terms)
    SymbolForm asymptotic_part() const;

private:
    unsigned dim_;
    unsigned degree_;
    Rational order_;
    std::map<FormIndex, ClassicalSymbol> coeffs_;
};

SymbolForm exterior_derivative(const SymbolForm& w);
SymbolForm wedge_star(const SymbolForm& a, const SymbolForm& b, unsigned K);

// res of the (full, full) coefficient; zero unless degree == 2n.
Cplx residue_form(const SymbolForm& w, const Integrator& integ, double* err = nullptr);
Cplx residue_form_density(const SymbolForm& w, const std::vector<double>& x);

Cplx cutoff_integral_form(const SymbolForm& w, const Integrator& integ, double lambda = 1.0);

struct StokesResult {
    Cplx defect;    // cutoff integral of d(beta)
    Cplx boundary;  // independent cosphere evaluation of the -n+1 components
    double quad_error;
};
StokesResult stokes_boundary(const SymbolForm& beta, const Integrator& integ);

// oriented cosphere pairing of the degree-(-n+1) coefficient components;
// shared by stokes_boundary and the cosphere cochain
Cplx cosphere_pairing(const SymbolForm& w, const Integrator& integ, double* err = nullptr);

struct IntrinsicResult {
    Cplx direct;     // res of the top coefficient
    Cplx intrinsic;  // sphere contraction of the order-0 component
};
IntrinsicResult intrinsic_residue_check(const SymbolForm& w, const Integrator& integ);

}  // namespace symcalc

#endif
