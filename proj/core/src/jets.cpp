#include "symcalc/jets.hpp"

#include <stdexcept>

namespace symcalc {

double Jet::deriv(std::size_t k) const {
    double f = 1.0;
    for (std::size_t j = 2; j <= k; ++j) f *= static_cast<double>(j);
    return k < c.size() ? c[k] * f : 0.0;
}

Jet& Jet::operator+=(const Jet& o) {
    for (std::size_t k = 0; k < c.size() && k < o.c.size(); ++k) c[k] += o.c[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    for (std::size_t k = 0; k < c.size() && k < o.c.size(); ++k) c[k] -= o.c[k];
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j <= k && j < a.size(); ++j)
            if (k - j < b.size()) s += a.c[j] * b.c[k - j];
        r.c[k] = s;
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b) {
    if (b.c[0] == 0.0) throw std::domain_error("jet division by zero constant term");
    Jet r(a.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
        double s = k < a.size() ? a.c[k] : 0.0;
        for (std::size_t j = 1; j <= k && j < b.size(); ++j) s -= b.c[j] * r.c[k - j];
        r.c[k] = s / b.c[0];
    }
    return r;
}

Jet jet_exp(const Jet& a) {
    Jet r(a.size());
    r.c[0] = std::exp(a.c[0]);
    for (std::size_t k = 1; k < r.size(); ++k) {
        double s = 0.0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j)
            s += static_cast<double>(j) * a.c[j] * r.c[k - j];
        r.c[k] = s / static_cast<double>(k);
    }
    return r;
}

Jet jet_neg_reciprocal(double t0, std::size_t len) {
    Jet r(len);
    // (-1/t)^(k)/k! = -(-1)^k t^{-k-1}
    double p = 1.0 / t0;
    for (std::size_t k = 0; k < len; ++k) {
        r.c[k] = (k % 2 == 0) ? -p : p;
        p /= t0;
    }
    return r;
}

}  // namespace symcalc
