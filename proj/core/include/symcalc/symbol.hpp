#ifndef SYMCALC_SYMBOL_HPP
#define SYMCALC_SYMBOL_HPP

#include <complex>
#include <map>
#include <vector>

#include "symcalc/polynomial.hpp"
#include "symcalc/scalar.hpp"

namespace symcalc {

/* Closed class of classical symbols.

   Every symbol is a finite sum of terms

       xcoeff(x) * W(x) * angular(xi) * |xi|^s * P(|xi|)

   where angular is homogeneous, s is an exact rational, P is a product of
   radial cutoff factors chi^c * prod_k (chi^(k))^{c_k}, and W is a product
   of per-axis window factors psi^(j)(1 - x_i^2).  The class is closed under
   d_x, d_xi, pointwise and star products; chi-derivative factors (the
   "compact channel", supported in 1/2 <= |xi| <= 1) appear exactly where
   differentiation hits the cutoff.

   Terms with no chi-derivative factor are the asymptotic channel: their
   homogeneity degrees deg(angular) + s sit on the lattice order - j,
   j = 0..depth, and they drive residues and integral tails.  Terms with no
   radial factor at all must have an even radial power >= 0 (genuine
   polynomials, e.g. the algebra unit). */

struct RadialProfile {
    unsigned chi = 0;                        // chi^chi
    std::map<unsigned, unsigned> derivs;     // k >= 1 -> exponent of chi^(k)

    bool is_plain() const { return chi == 0 && derivs.empty(); }
    bool is_compact() const { return !derivs.empty(); }  // band-supported
    bool vanishes_near_zero() const { return chi > 0 || !derivs.empty(); }

    RadialProfile operator*(const RadialProfile& o) const;
    // d/dr as a sum of profiles with integer multiplicities
    std::vector<std::pair<RadialProfile, unsigned>> derivative() const;
    double eval(double r) const;

    friend bool operator==(const RadialProfile& a, const RadialProfile& b) {
        return a.chi == b.chi && a.derivs == b.derivs;
    }
    friend bool operator<(const RadialProfile& a, const RadialProfile& b) {
        if (a.chi != b.chi) return a.chi < b.chi;
        return a.derivs < b.derivs;
    }
};

struct WindowProfile {
    // axes[i]: psi-derivative order -> multiplicity, factors psi^(k)(1-x_i^2)
    std::vector<std::map<unsigned, unsigned>> axes;

    static WindowProfile none(unsigned dim) { return {std::vector<std::map<unsigned, unsigned>>(dim)}; }
    static WindowProfile plain_window(unsigned dim);

    bool empty() const;
    bool covers_all_axes() const;  // compact support in the box
    WindowProfile operator*(const WindowProfile& o) const;
    double eval(const std::vector<double>& x) const;

    friend bool operator==(const WindowProfile& a, const WindowProfile& b) {
        return a.axes == b.axes;
    }
    friend bool operator<(const WindowProfile& a, const WindowProfile& b) {
        return a.axes < b.axes;
    }
};

struct SymbolTerm {
    Polynomial xcoeff;       // polynomial in x
    Polynomial angular;      // homogeneous polynomial in xi
    Rational radial_power;   // s in |xi|^s
    RadialProfile rprof;
    WindowProfile wprof;

    Rational degree() const { return Rational(angular.degree()) + radial_power; }
    bool is_asymptotic() const { return !rprof.is_compact(); }
};

// canonical storage key: single angular monomial (unit coefficient) plus the
// radial and window structure; x-polynomials accumulate under it
struct TermKey {
    Monomial angular;
    Rational radial_power;
    RadialProfile rprof;
    WindowProfile wprof;

    friend bool operator<(const TermKey& a, const TermKey& b) {
        if (a.angular != b.angular) return a.angular < b.angular;
        if (a.radial_power != b.radial_power) return a.radial_power < b.radial_power;
        if (!(a.rprof == b.rprof)) return a.rprof < b.rprof;
        return a.wprof < b.wprof;
    }
};

// HomogeneousTerm of the spec: the asymptotic data without profiles.
struct HomogeneousTerm {
    Polynomial xcoeff;
    Polynomial angular;
    Rational radial_power;
};

// Canonical form of A |xi|^s modulo |xi|^2 = sum xi_i^2: returns pieces
// (R_j, s + 2j) where no monomial of R_j has xi_1-exponent >= 2.
std::vector<std::pair<Polynomial, Rational>> reduce_angular_mod_r2(Polynomial a, Rational s);

struct TranslatedSymbol;

class ClassicalSymbol {
public:
    ClassicalSymbol() : dim_(0), order_(0) {}
    ClassicalSymbol(unsigned dim, Rational order) : dim_(dim), order_(std::move(order)) {}

    static ClassicalSymbol zero(unsigned dim) { return ClassicalSymbol(dim, Rational(0)); }
    static ClassicalSymbol unit(unsigned dim);                 // constant 1, no cutoff, no window
    static ClassicalSymbol constant(unsigned dim, Complexq c); // c, no cutoff, no window

    unsigned dim() const { return dim_; }
    const Rational& order() const { return order_; }
    void set_order(Rational m) { order_ = std::move(m); }
    // materialized canonical term list (deterministic order)
    std::vector<SymbolTerm> terms() const;
    const std::map<TermKey, Polynomial>& term_map() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // truncation depth: max j with an asymptotic term at degree order - j
    unsigned depth() const;
    bool windowed() const;        // every term compactly supported in x
    bool cutoff_applied() const;  // every asymptotic term carries a chi factor

    // Adds one term: canonicalizes the angular part modulo |xi|^2, validates
    // homogeneity and plain-term admissibility, merges structurally equal
    // terms.  Exact cancellations are structural after this normal form.
    void add_term(SymbolTerm t);

    ClassicalSymbol operator-() const;
    ClassicalSymbol& operator+=(const ClassicalSymbol& o);
    ClassicalSymbol& operator-=(const ClassicalSymbol& o);
    friend ClassicalSymbol operator+(ClassicalSymbol a, const ClassicalSymbol& b) { return a += b; }
    friend ClassicalSymbol operator-(ClassicalSymbol a, const ClassicalSymbol& b) { return a -= b; }
    ClassicalSymbol& operator*=(const Complexq& c);
    friend ClassicalSymbol operator*(ClassicalSymbol a, const Complexq& c) { return a *= c; }

    // Multiplies every term by the x-window w(x) = prod_i psi(1 - x_i^2).
    ClassicalSymbol windowed_copy() const;

    // Drops the compact (chi-derivative) channel, keeping the graded data.
    ClassicalSymbol asymptotic_part() const;

private:
    unsigned dim_;
    Rational order_;
    std::map<TermKey, Polynomial> terms_;

    void add_canonical_term(TermKey key, Polynomial xcoeff);
    void merge_order_with(const ClassicalSymbol& o);
    bool has_asymptotic() const;
};

// --- core_symbols operations ---------------------------------------------

// Sum of homogeneous terms of degree order - j (chi profiles preserved).
// Throws std::out_of_range if j exceeds the truncation depth.
ClassicalSymbol homogeneous_component(const ClassicalSymbol& s, unsigned j);
std::vector<HomogeneousTerm> homogeneous_component_terms(const ClassicalSymbol& s, unsigned j);

ClassicalSymbol partial_xi(const ClassicalSymbol& s, unsigned axis);  // axis 0-based
ClassicalSymbol partial_x(const ClassicalSymbol& s, unsigned axis);

ClassicalSymbol multiply_pointwise(const ClassicalSymbol& a, const ClassicalSymbol& b);

std::complex<double> evaluate(const ClassicalSymbol& s, const std::vector<double>& x,
                              const std::vector<double>& xi);

// Asymptotic re-expansion of s(x, xi + eta) truncated at `depth` degrees
// below the order, valid for |xi| >= 2 (1 + |eta|).  The remainder closure
// evaluates the exact difference everywhere; its order bounds the far tail.
struct TranslatedSymbol {
    ClassicalSymbol expansion;
    ClassicalSymbol original;
    std::vector<Rational> eta;
    Rational remainder_order;

    std::complex<double> remainder(const std::vector<double>& x,
                                   const std::vector<double>& xi) const;
};

TranslatedSymbol translate(const ClassicalSymbol& s, const std::vector<Rational>& eta, int depth);

}  // namespace symcalc

#endif
