#ifndef SYMCALC_SCALAR_HPP
#define SYMCALC_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace symcalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an input file or string violates a schema contract.
struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an integral requires compact support the symbol lacks.
struct support_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when adaptive quadrature fails to converge.
struct quadrature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_pow(const Rational& q, long e);
Integer factorial(unsigned n);

// Parses "p" or "p/q" with optional sign; q must be positive after reduction.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

// Gaussian rational: a + b*i with exact rational a, b.  Star products
// introduce (-i)^k factors, so this is the coefficient field everywhere.
struct Complexq {
    Rational re;
    Rational im;

    Complexq() = default;
    Complexq(Rational r) : re(std::move(r)) {}
    Complexq(long r) : re(r) {}
    Complexq(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Complexq operator-() const { return {-re, -im}; }
    Complexq& operator+=(const Complexq& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complexq& operator-=(const Complexq& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complexq& operator*=(const Complexq& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complexq inverse() const {
        Rational n2 = re * re + im * im;
        if (n2 == 0) throw std::domain_error("Complexq: division by zero");
        return {re / n2, -im / n2};
    }
    friend Complexq operator+(Complexq a, const Complexq& b) { return a += b; }
    friend Complexq operator-(Complexq a, const Complexq& b) { return a -= b; }
    friend Complexq operator*(Complexq a, const Complexq& b) { return a *= b; }
    friend Complexq operator/(Complexq a, const Complexq& b) { return a *= b.inverse(); }
    friend bool operator==(const Complexq& a, const Complexq& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Complexq& a, const Complexq& b) { return !(a == b); }
    friend bool operator<(const Complexq& a, const Complexq& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    // i^k, used for star product prefactors (-i)^k = conj(i^k).
    static Complexq i_pow(unsigned k);
    static Complexq minus_i_pow(unsigned k);
};

std::string format_complexq(const Complexq& c);

}  // namespace symcalc

#endif
