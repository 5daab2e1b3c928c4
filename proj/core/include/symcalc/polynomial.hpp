#ifndef SYMCALC_POLYNOMIAL_HPP
#define SYMCALC_POLYNOMIAL_HPP

#include <complex>
#include <map>
#include <vector>

#include "symcalc/scalar.hpp"

namespace symcalc {

using Monomial = std::vector<unsigned>;  // exponent vector, fixed length = nvars

inline unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

// Multivariate polynomial with Gaussian-rational coefficients.  Terms are
// kept in a map for canonical (graded-free lexicographic) ordering; zero
// coefficients are never stored.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(unsigned nvars) : nvars_(nvars) {}

    static Polynomial constant(unsigned nvars, Complexq c);
    static Polynomial variable(unsigned nvars, unsigned i);  // x_i, 0-based
    static Polynomial monomial(unsigned nvars, Monomial m, Complexq c);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Monomial, Complexq>& terms() const { return terms_; }

    // Total degree; 0 for the zero polynomial.
    unsigned degree() const;
    bool is_homogeneous() const;  // all monomials of equal total degree

    void add_term(const Monomial& m, const Complexq& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Complexq& c);
    friend Polynomial operator*(Polynomial a, const Complexq& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
        return a.terms_ < b.terms_;
    }

    Polynomial partial(unsigned i) const;

    // Substitute x_i -> x_i + shift_i (exact binomial expansion).
    Polynomial shifted(const std::vector<Rational>& shift) const;

    Complexq eval_exact(const std::vector<Rational>& x) const;
    std::complex<double> eval(const std::vector<double>& x) const;

private:
    unsigned nvars_;
    std::map<Monomial, Complexq> terms_;
};

}  // namespace symcalc

#endif
