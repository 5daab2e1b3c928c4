#include "symcalc/scalar.hpp"

namespace symcalc {

Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw std::domain_error("rational_pow: 0 to negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(denominator(q), numerator(q)) : q;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Integer factorial(unsigned n) {
    Integer f(1);
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw schema_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw schema_error("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const schema_error&) {
        throw;
    } catch (const std::exception&) {
        throw schema_error("malformed rational literal: " + s);
    }
}

std::string format_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Complexq Complexq::i_pow(unsigned k) {
    switch (k % 4) {
        case 0: return Complexq(1);
        case 1: return Complexq(Rational(0), Rational(1));
        case 2: return Complexq(-1);
        default: return Complexq(Rational(0), Rational(-1));
    }
}

Complexq Complexq::minus_i_pow(unsigned k) {
    Complexq c = i_pow(k);
    return (k % 2 == 1) ? Complexq(-c.re, -c.im) : c;
}

std::string format_complexq(const Complexq& c) {
    if (c.is_real()) return format_rational(c.re);
    return format_rational(c.re) + (c.im >= 0 ? "+" : "") + format_rational(c.im) + "i";
}

}  // namespace symcalc
