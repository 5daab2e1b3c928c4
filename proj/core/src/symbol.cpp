#include "symcalc/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symcalc/smooth.hpp"

namespace symcalc {

RadialProfile RadialProfile::operator*(const RadialProfile& o) const {
    RadialProfile r = *this;
    r.chi += o.chi;
    for (const auto& [k, c] : o.derivs) r.derivs[k] += c;
    return r;
}

std::vector<std::pair<RadialProfile, unsigned>> RadialProfile::derivative() const {
    std::vector<std::pair<RadialProfile, unsigned>> out;
    if (chi > 0) {
        RadialProfile p = *this;
        p.chi -= 1;
        p.derivs[1] += 1;
        out.emplace_back(std::move(p), chi);
    }
    for (const auto& [k, c] : derivs) {
        RadialProfile p = *this;
        if (--p.derivs[k] == 0) p.derivs.erase(k);
        p.derivs[k + 1] += 1;
        out.emplace_back(std::move(p), c);
    }
    return out;
}

double RadialProfile::eval(double r) const {
    if (is_plain()) return 1.0;
    if (!derivs.empty() && (r <= 0.5 || r >= 1.0)) return 0.0;
    if (r <= 0.5) return 0.0;  // chi factor present
    unsigned max_k = derivs.empty() ? 0 : derivs.rbegin()->first;
    std::vector<double> d = chi_derivs(max_k, r);
    double v = 1.0;
    for (unsigned c = 0; c < chi; ++c) v *= d[0];
    for (const auto& [k, c] : derivs)
        for (unsigned j = 0; j < c; ++j) v *= d[k];
    return v;
}

WindowProfile WindowProfile::plain_window(unsigned dim) {
    WindowProfile w = none(dim);
    for (auto& ax : w.axes) ax[0] = 1;
    return w;
}

bool WindowProfile::empty() const {
    for (const auto& ax : axes)
        if (!ax.empty()) return false;
    return true;
}

bool WindowProfile::covers_all_axes() const {
    for (const auto& ax : axes)
        if (ax.empty()) return false;
    return true;
}

WindowProfile WindowProfile::operator*(const WindowProfile& o) const {
    if (axes.size() != o.axes.size()) throw std::invalid_argument("window profile dim mismatch");
    WindowProfile r = *this;
    for (std::size_t i = 0; i < axes.size(); ++i)
        for (const auto& [k, c] : o.axes[i]) r.axes[i][k] += c;
    return r;
}

double WindowProfile::eval(const std::vector<double>& x) const {
    double v = 1.0;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        if (axes[i].empty()) continue;
        unsigned max_k = axes[i].rbegin()->first;
        std::vector<double> d = psi_derivs(max_k, 1.0 - x[i] * x[i]);
        for (const auto& [k, c] : axes[i])
            for (unsigned j = 0; j < c; ++j) v *= d[k];
    }
    return v;
}

ClassicalSymbol ClassicalSymbol::unit(unsigned dim) { return constant(dim, Complexq(1)); }

ClassicalSymbol ClassicalSymbol::constant(unsigned dim, Complexq c) {
    ClassicalSymbol s(dim, Rational(0));
    if (c.is_zero()) return s;
    SymbolTerm t{Polynomial::constant(dim, std::move(c)), Polynomial::constant(dim, Complexq(1)),
                 Rational(0), RadialProfile{}, WindowProfile::none(dim)};
    s.add_term(std::move(t));
    return s;
}

unsigned ClassicalSymbol::depth() const {
    unsigned d = 0;
    for (const auto& [key, xc] : terms_) {
        if (key.rprof.is_compact()) continue;
        Rational j = order_ - (Rational(monomial_degree(key.angular)) + key.radial_power);
        d = std::max(d, static_cast<unsigned>(numerator(j).convert_to<long>()));
    }
    return d;
}

bool ClassicalSymbol::windowed() const {
    for (const auto& [key, xc] : terms_)
        if (!key.wprof.covers_all_axes()) return false;
    return true;
}

bool ClassicalSymbol::cutoff_applied() const {
    for (const auto& [key, xc] : terms_)
        if (!key.rprof.is_compact() && key.rprof.chi == 0) return false;
    return true;
}

/* Canonical angular form: A |xi|^s is non-unique since |xi|^2 = sum xi_i^2
   is itself a polynomial.  Reduce A modulo that relation (no monomial keeps
   a xi_1-exponent >= 2), moving quotient pieces into the radial power.
   Exact cancellations then happen structurally. */
std::vector<std::pair<Polynomial, Rational>> reduce_angular_mod_r2(Polynomial a, Rational s) {
    std::vector<std::pair<Polynomial, Rational>> out;
    unsigned n = a.nvars();
    while (!a.is_zero()) {
        Polynomial carry(n);  // quotient by xi_1^2, promoted to |xi|^{s+2}
        bool reduced = true;
        while (reduced) {
            reduced = false;
            Polynomial next(n);
            for (const auto& [m, c] : a.terms()) {
                if (m[0] >= 2) {
                    // c m = c q |xi|^2 - sum_{i>=2} c q xi_i^2,  q = m / xi_1^2
                    reduced = true;
                    Monomial q = m;
                    q[0] -= 2;
                    carry.add_term(q, c);
                    for (unsigned i = 1; i < n; ++i) {
                        Monomial e = q;
                        e[i] += 2;
                        next.add_term(e, -c);
                    }
                } else {
                    next.add_term(m, c);
                }
            }
            a = std::move(next);
        }
        if (!a.is_zero()) out.emplace_back(std::move(a), s);
        a = std::move(carry);
        s += 2;
    }
    return out;
}

std::vector<SymbolTerm> ClassicalSymbol::terms() const {
    std::vector<SymbolTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, xc] : terms_)
        out.push_back(SymbolTerm{xc, Polynomial::monomial(dim_, key.angular, Complexq(1)),
                                 key.radial_power, key.rprof, key.wprof});
    return out;
}

void ClassicalSymbol::add_term(SymbolTerm t) {
    if (t.xcoeff.is_zero() || t.angular.is_zero()) return;
    if (t.xcoeff.nvars() != dim_ || t.angular.nvars() != dim_ ||
        t.wprof.axes.size() != dim_)
        throw std::invalid_argument("symbol term dimension mismatch");
    if (!t.angular.is_homogeneous())
        throw std::invalid_argument("angular part must be homogeneous");
    for (auto& [ang, pow] : reduce_angular_mod_r2(t.angular, t.radial_power)) {
        // split into single angular monomials with unit coefficient: the
        // factorization xcoeff (x) angular is unique only in that form
        for (const auto& [mono, c] : ang.terms()) {
            add_canonical_term(TermKey{mono, pow, t.rprof, t.wprof}, t.xcoeff * c);
        }
    }
}

void ClassicalSymbol::add_canonical_term(TermKey key, Polynomial xcoeff) {
    if (key.rprof.is_plain()) {
        if (key.radial_power < 0 || !is_integer(key.radial_power) ||
            numerator(key.radial_power) % 2 != 0)
            throw std::invalid_argument(
                "term without cutoff must have even non-negative radial power");
    }
    if (!key.rprof.is_compact()) {
        Rational j = order_ - (Rational(monomial_degree(key.angular)) + key.radial_power);
        if (!is_integer(j) || j < 0)
            throw std::invalid_argument("term degree not on the order lattice");
    }
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(xcoeff));
    } else {
        it->second += xcoeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ClassicalSymbol ClassicalSymbol::operator-() const {
    ClassicalSymbol r(dim_, order_);
    for (const auto& [key, xc] : terms_) r.terms_.emplace(key, -xc);
    return r;
}

bool ClassicalSymbol::has_asymptotic() const {
    for (const auto& [key, xc] : terms_)
        if (!key.rprof.is_compact()) return true;
    return false;
}

void ClassicalSymbol::merge_order_with(const ClassicalSymbol& o) {
    if (!o.has_asymptotic()) return;
    if (!has_asymptotic()) {
        order_ = o.order_;
        return;
    }
    Rational d = order_ - o.order_;
    if (!is_integer(d))
        throw std::invalid_argument("sum of symbols with incommensurate orders");
    if (d < 0) order_ = o.order_;
}

ClassicalSymbol& ClassicalSymbol::operator+=(const ClassicalSymbol& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("symbol dimension mismatch");
    merge_order_with(o);
    for (const auto& [key, xc] : o.terms_) add_canonical_term(key, xc);
    return *this;
}

ClassicalSymbol& ClassicalSymbol::operator-=(const ClassicalSymbol& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("symbol dimension mismatch");
    merge_order_with(o);
    for (const auto& [key, xc] : o.terms_) add_canonical_term(key, -xc);
    return *this;
}

ClassicalSymbol& ClassicalSymbol::operator*=(const Complexq& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, xc] : terms_) xc *= c;
    return *this;
}

ClassicalSymbol ClassicalSymbol::asymptotic_part() const {
    ClassicalSymbol r(dim_, order_);
    for (const auto& [key, xc] : terms_)
        if (!key.rprof.is_compact()) r.terms_.emplace(key, xc);
    return r;
}

ClassicalSymbol ClassicalSymbol::windowed_copy() const {
    ClassicalSymbol r(dim_, order_);
    WindowProfile w = WindowProfile::plain_window(dim_);
    for (const auto& [key, xc] : terms_) {
        TermKey k2 = key;
        k2.wprof = k2.wprof * w;
        r.add_canonical_term(std::move(k2), xc);
    }
    return r;
}

std::vector<HomogeneousTerm> homogeneous_component_terms(const ClassicalSymbol& s, unsigned j) {
    if (j > s.depth()) throw std::out_of_range("homogeneous_component: j exceeds depth");
    Rational target = s.order() - Rational(j);
    std::vector<HomogeneousTerm> out;
    for (const auto& t : s.terms()) {
        if (!t.is_asymptotic() || t.degree() != target) continue;
        out.push_back({t.xcoeff, t.angular, t.radial_power});
    }
    return out;
}

ClassicalSymbol homogeneous_component(const ClassicalSymbol& s, unsigned j) {
    if (j > s.depth()) throw std::out_of_range("homogeneous_component: j exceeds depth");
    Rational target = s.order() - Rational(j);
    ClassicalSymbol r(s.dim(), target);
    for (const auto& t : s.terms()) {
        if (!t.is_asymptotic() || t.degree() != target) continue;
        r.add_term(t);
    }
    return r;
}

ClassicalSymbol partial_xi(const ClassicalSymbol& s, unsigned axis) {
    if (axis >= s.dim()) throw std::out_of_range("partial_xi axis");
    ClassicalSymbol r(s.dim(), s.order() - 1);
    Polynomial xi_i = Polynomial::variable(s.dim(), axis);
    for (const auto& t : s.terms()) {
        // d(A)|xi|^s
        SymbolTerm u = t;
        u.angular = t.angular.partial(axis);
        r.add_term(std::move(u));
        // s A xi_i |xi|^{s-2}
        if (t.radial_power != 0) {
            SymbolTerm v = t;
            v.angular = t.angular * xi_i;
            v.angular *= Complexq(t.radial_power);
            v.radial_power = t.radial_power - 2;
            r.add_term(std::move(v));
        }
        // profile derivative: A |xi|^{s-1} xi_i P'(r)
        for (auto& [prof, mult] : t.rprof.derivative()) {
            SymbolTerm w = t;
            w.angular = t.angular * xi_i;
            w.angular *= Complexq(Rational(mult));
            w.radial_power = t.radial_power - 1;
            w.rprof = std::move(prof);
            r.add_term(std::move(w));
        }
    }
    return r;
}

ClassicalSymbol partial_x(const ClassicalSymbol& s, unsigned axis) {
    if (axis >= s.dim()) throw std::out_of_range("partial_x axis");
    ClassicalSymbol r(s.dim(), s.order());
    Polynomial x_i = Polynomial::variable(s.dim(), axis);
    for (const auto& t : s.terms()) {
        SymbolTerm u = t;
        u.xcoeff = t.xcoeff.partial(axis);
        r.add_term(std::move(u));
        // window factors on this axis: d/dx psi^(k)(1-x^2) = psi^(k+1) * (-2x)
        for (const auto& [k, c] : t.wprof.axes[axis]) {
            SymbolTerm v = t;
            v.xcoeff = t.xcoeff * x_i;
            v.xcoeff *= Complexq(Rational(-2 * static_cast<long>(c)));
            if (--v.wprof.axes[axis][k] == 0) v.wprof.axes[axis].erase(k);
            v.wprof.axes[axis][k + 1] += 1;
            r.add_term(std::move(v));
        }
    }
    return r;
}

ClassicalSymbol multiply_pointwise(const ClassicalSymbol& a, const ClassicalSymbol& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("symbol dimension mismatch");
    ClassicalSymbol r(a.dim(), a.order() + b.order());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            SymbolTerm t{ta.xcoeff * tb.xcoeff, ta.angular * tb.angular,
                         ta.radial_power + tb.radial_power, ta.rprof * tb.rprof,
                         ta.wprof * tb.wprof};
            r.add_term(std::move(t));
        }
    }
    return r;
}

std::complex<double> evaluate(const ClassicalSymbol& s, const std::vector<double>& x,
                              const std::vector<double>& xi) {
    if (x.size() != s.dim() || xi.size() != s.dim())
        throw std::invalid_argument("evaluate: point dimension mismatch");
    double r2 = 0.0;
    for (double v : xi) r2 += v * v;
    double r = std::sqrt(r2);
    if (r == 0.0) {
        for (const auto& t : s.terms())
            if (t.radial_power < 0)
                throw std::domain_error("evaluate at xi = 0 with negative radial power");
    }
    std::complex<double> acc(0.0, 0.0);
    for (const auto& t : s.terms()) {
        double prof = t.rprof.eval(r);
        if (prof == 0.0) continue;
        double rad;
        if (t.radial_power == 0) {
            rad = 1.0;
        } else if (r == 0.0) {
            rad = 0.0;  // s > 0 here (negative powers rejected above, s != 0)
        } else {
            rad = std::pow(r, to_double(t.radial_power));
        }
        std::complex<double> v = t.xcoeff.eval(x) * t.angular.eval(xi);
        acc += v * (rad * prof * t.wprof.eval(x));
    }
    return acc;
}

namespace {

// C(s/2, k) = (s/2)(s/2-1)...(s/2-k+1)/k!
Rational binom_half(const Rational& s, unsigned k) {
    Rational half = s / 2;
    Rational num(1);
    for (unsigned j = 0; j < k; ++j) num *= (half - Rational(j));
    return num / Rational(factorial(k));
}

}  // namespace

std::complex<double> TranslatedSymbol::remainder(const std::vector<double>& x,
                                                 const std::vector<double>& xi) const {
    std::vector<double> shifted(xi);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += to_double(eta[i]);
    return evaluate(original, x, shifted) - evaluate(expansion, x, xi);
}

TranslatedSymbol translate(const ClassicalSymbol& s, const std::vector<Rational>& eta, int depth) {
    if (depth < 0) throw std::invalid_argument("translate: negative depth");
    if (eta.size() != s.dim()) throw std::invalid_argument("translate: eta dimension mismatch");
    bool zero_eta = true;
    for (const auto& e : eta) zero_eta = zero_eta && e == 0;
    TranslatedSymbol out{s, s, eta, s.order() - Rational(depth) - 1};
    if (zero_eta) return out;

    unsigned n = s.dim();
    std::vector<Rational> shift_x(n, Rational(0));
    // u = (2 xi.eta + |eta|^2) as a polynomial in xi
    Polynomial u(n);
    Rational eta2(0);
    for (unsigned i = 0; i < n; ++i) {
        u += Polynomial::variable(n, i) * Complexq(2 * eta[i]);
        eta2 += eta[i] * eta[i];
    }
    u += Polynomial::constant(n, Complexq(eta2));

    ClassicalSymbol exp_sym(n, s.order());
    for (const auto& t : s.terms()) {
        if (!t.is_asymptotic()) continue;  // band terms have no asymptotic content
        Rational a = t.degree();
        Rational cutoff = a - Rational(depth);
        // A(xi + eta), exact
        std::vector<Rational> sh(n);
        for (unsigned i = 0; i < n; ++i) sh[i] = eta[i];
        Polynomial shifted_ang = t.angular.shifted(sh);
        // |xi + eta|^s = |xi|^s sum_k C(s/2,k) u^k |xi|^{-2k}
        Polynomial upow = Polynomial::constant(n, Complexq(1));
        for (unsigned k = 0; static_cast<int>(k) <= depth; ++k) {
            if (k > 0) upow = upow * u;
            Rational ck = binom_half(t.radial_power, k);
            if (ck == 0) continue;  // binomial terminated (plain polynomial powers)
            for (const auto& [ma, ca] : shifted_ang.terms()) {
                for (const auto& [mu, cu] : upow.terms()) {
                    Monomial m(n);
                    for (unsigned i = 0; i < n; ++i) m[i] = ma[i] + mu[i];
                    Rational deg = Rational(monomial_degree(m)) + t.radial_power - Rational(2 * k);
                    if (deg < cutoff) continue;
                    Complexq c = ca * cu;
                    c *= Complexq(ck);
                    SymbolTerm nt{t.xcoeff, Polynomial::monomial(n, m, c),
                                  t.radial_power - Rational(2 * k), t.rprof, t.wprof};
                    if (nt.rprof.is_plain() && (nt.radial_power < 0 ||
                                                numerator(nt.radial_power) % 2 != 0)) {
                        // negative shifted powers need the cutoff to stay in class
                        nt.rprof.chi = 1;
                    }
                    exp_sym.add_term(std::move(nt));
                }
            }
        }
    }
    out.expansion = std::move(exp_sym);
    return out;
}

}  // namespace symcalc
