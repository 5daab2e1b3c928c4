#ifndef SYMCALC_JETS_HPP
#define SYMCALC_JETS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace symcalc {

// Truncated Taylor expansion at a point: coeffs[k] = f^(k)/k!.
// Enough forward-mode arithmetic to evaluate the mollifier psi and its
// derivatives in closed form.
struct Jet {
    std::vector<double> c;

    explicit Jet(std::size_t len = 1) : c(len, 0.0) {}
    static Jet constant(double v, std::size_t len) {
        Jet j(len);
        j.c[0] = v;
        return j;
    }
    std::size_t size() const { return c.size(); }
    double deriv(std::size_t k) const;  // k-th derivative value

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
};

Jet jet_exp(const Jet& a);

// Jet of t -> -1/t at t0 != 0.
Jet jet_neg_reciprocal(double t0, std::size_t len);

}  // namespace symcalc

#endif
