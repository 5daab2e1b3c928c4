#include "symcalc/polynomial.hpp"

#include <stdexcept>

namespace symcalc {

Polynomial Polynomial::constant(unsigned nvars, Complexq c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(unsigned nvars, unsigned i) {
    if (i >= nvars) throw std::out_of_range("Polynomial::variable index");
    Monomial m(nvars, 0);
    m[i] = 1;
    Polynomial p(nvars);
    p.add_term(m, Complexq(1));
    return p;
}

Polynomial Polynomial::monomial(unsigned nvars, Monomial m, Complexq c) {
    if (m.size() != nvars) throw std::invalid_argument("monomial length mismatch");
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) != d) return false;
    return true;
}

void Polynomial::add_term(const Monomial& m, const Complexq& c) {
    if (m.size() != nvars_) throw std::invalid_argument("monomial length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial nvars mismatch");
    Polynomial r(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (unsigned i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Complexq& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::partial(unsigned i) const {
    if (i >= nvars_) throw std::out_of_range("Polynomial::partial index");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        d[i] -= 1;
        r.add_term(d, c * Complexq(Rational(m[i])));
    }
    return r;
}

Polynomial Polynomial::shifted(const std::vector<Rational>& shift) const {
    if (shift.size() != nvars_) throw std::invalid_argument("shift length mismatch");
    Polynomial r(nvars_);
    // expand each variable power by the binomial theorem
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(nvars_, c);
        for (unsigned i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            Polynomial base = Polynomial::variable(nvars_, i);
            base += Polynomial::constant(nvars_, Complexq(shift[i]));
            for (unsigned e = 0; e < m[i]; ++e) term = term * base;
        }
        r += term;
    }
    return r;
}

Complexq Polynomial::eval_exact(const std::vector<Rational>& x) const {
    if (x.size() != nvars_) throw std::invalid_argument("eval point dimension mismatch");
    Complexq acc;
    for (const auto& [m, c] : terms_) {
        Rational v(1);
        for (unsigned i = 0; i < nvars_; ++i)
            if (m[i]) v *= rational_pow(x[i], m[i]);
        Complexq t = c;
        t *= Complexq(v);
        acc += t;
    }
    return acc;
}

std::complex<double> Polynomial::eval(const std::vector<double>& x) const {
    if (x.size() != nvars_) throw std::invalid_argument("eval point dimension mismatch");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        double v = 1.0;
        for (unsigned i = 0; i < nvars_; ++i)
            for (unsigned e = 0; e < m[i]; ++e) v *= x[i];
        acc += c.to_complex() * v;
    }
    return acc;
}

}  // namespace symcalc
