#include "symcalc/holo.hpp"

#include <algorithm>
#include <cmath>

namespace symcalc {

void LaurentGerm::normalize() {
    while (!coeffs_.empty() && lead_ < 0 && std::abs(coeffs_.front()) == 0.0) {
        coeffs_.erase(coeffs_.begin());
        ++lead_;
    }
}

Cplx LaurentGerm::at(int k) const {
    int idx = k - lead_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[idx];
}

double LaurentGerm::max_abs() const {
    double m = 0.0;
    for (const Cplx& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

LaurentGerm LaurentGerm::simple_pole_inverse(const Rational& z0, const Rational& q,
                                             unsigned jet_len) {
    if (z0 == q) {
        std::vector<Cplx> c(jet_len + 1, Cplx{});
        c[0] = Cplx(1.0, 0.0);
        return LaurentGerm(z0, -1, std::move(c));
    }
    // 1/(z - q) = sum_k (-1)^k (z - z0)^k / (z0 - q)^{k+1}
    std::vector<Cplx> c(jet_len, Cplx{});
    Rational d = z0 - q;
    Rational pw = Rational(1) / d;
    for (unsigned k = 0; k < jet_len; ++k) {
        c[k] = Cplx(to_double(pw), 0.0);
        pw = -pw / d;
    }
    return LaurentGerm(z0, 0, std::move(c));
}

LaurentGerm LaurentGerm::from_polynomial(const std::vector<Complexq>& c, const Rational& z0,
                                         unsigned jet_len) {
    // sum_j c_j (z0 + u)^j = sum_k [sum_j C(j,k) z0^{j-k} c_j] u^k, exact
    std::vector<Complexq> out(jet_len, Complexq());
    for (std::size_t j = 0; j < c.size(); ++j) {
        Rational binom(1);
        for (std::size_t k = 0; k <= j; ++k) {
            if (k < jet_len) {
                Complexq v = c[j];
                v *= Complexq(binom * rational_pow(z0, static_cast<long>(j - k)));
                out[k] += v;
            }
            if (k < j)
                binom = binom * Rational(static_cast<long>(j - k)) /
                        Rational(static_cast<long>(k + 1));
        }
    }
    std::vector<Cplx> cd(jet_len);
    for (unsigned k = 0; k < jet_len; ++k) cd[k] = out[k].to_complex();
    return LaurentGerm(z0, 0, std::move(cd));
}

LaurentGerm& LaurentGerm::operator+=(const LaurentGerm& o) {
    if (!(z0_ == o.z0_)) throw std::invalid_argument("germ addition at different points");
    int new_lead = std::min(lead_, o.lead_);
    int top = std::max(lead_ + static_cast<int>(coeffs_.size()),
                       o.lead_ + static_cast<int>(o.coeffs_.size()));
    std::vector<Cplx> c(top - new_lead, Cplx{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[lead_ - new_lead + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[o.lead_ - new_lead + i] += o.coeffs_[i];
    lead_ = new_lead;
    coeffs_ = std::move(c);
    normalize();
    return *this;
}

LaurentGerm operator*(const LaurentGerm& a, const LaurentGerm& b) {
    if (!(a.z0_ == b.z0_)) throw std::invalid_argument("germ product at different points");
    // limit the regular jet to the shorter of the two effective jets
    int jet_a = a.lead_ + static_cast<int>(a.coeffs_.size());
    int jet_b = b.lead_ + static_cast<int>(b.coeffs_.size());
    int lead = a.lead_ + b.lead_;
    int top = std::min(jet_a + b.lead_, jet_b + a.lead_);
    if (top <= lead) top = lead + 1;
    std::vector<Cplx> c(top - lead, Cplx{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            int k = a.lead_ + static_cast<int>(i) + b.lead_ + static_cast<int>(j);
            if (k - lead < static_cast<int>(c.size())) c[k - lead] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LaurentGerm(a.z0_, lead, std::move(c));
}

LaurentGerm& LaurentGerm::operator*=(const Cplx& v) {
    for (Cplx& x : coeffs_) x *= v;
    return *this;
}

// --- families ---------------------------------------------------------------

void HoloSymbolFamily::add_term(FamilyTerm t) {
    while (!t.zpoly.empty() && t.zpoly.back().is_zero()) t.zpoly.pop_back();
    if (t.zpoly.empty() || t.base.xcoeff.is_zero() || t.base.angular.is_zero()) return;
    for (auto& [ang, pow] : reduce_angular_mod_r2(t.base.angular, t.base.radial_power)) {
        for (const auto& [mono, c] : ang.terms()) {
            FamilyTerm piece{SymbolTerm{t.base.xcoeff * c,
                                        Polynomial::monomial(dim_, mono, Complexq(1)), pow,
                                        t.base.rprof, t.base.wprof},
                             t.zpoly};
            bool merged = false;
            for (auto& u : terms_) {
                if (u.base.xcoeff == piece.base.xcoeff && u.base.angular == piece.base.angular &&
                    u.base.radial_power == piece.base.radial_power &&
                    u.base.rprof == piece.base.rprof && u.base.wprof == piece.base.wprof) {
                    if (u.zpoly.size() < piece.zpoly.size()) u.zpoly.resize(piece.zpoly.size());
                    for (std::size_t k = 0; k < piece.zpoly.size(); ++k)
                        u.zpoly[k] += piece.zpoly[k];
                    while (!u.zpoly.empty() && u.zpoly.back().is_zero()) u.zpoly.pop_back();
                    if (u.zpoly.empty()) terms_.erase(terms_.begin() + (&u - terms_.data()));
                    merged = true;
                    break;
                }
            }
            if (!merged) terms_.push_back(std::move(piece));
        }
    }
}

bool HoloSymbolFamily::windowed() const {
    for (const auto& t : terms_)
        if (!t.base.wprof.covers_all_axes()) return false;
    return true;
}

ClassicalSymbol HoloSymbolFamily::at_zero() const {
    ClassicalSymbol s(dim_, base_order_);
    for (const auto& t : terms_) {
        SymbolTerm u = t.base;
        u.xcoeff *= t.zpoly[0];
        s.add_term(std::move(u));
    }
    return s;
}

HoloSymbolFamily HoloSymbolFamily::operator-() const {
    HoloSymbolFamily r(dim_, base_order_, prefactor_);
    for (const auto& t : terms_) {
        FamilyTerm u = t;
        for (auto& c : u.zpoly) c = -c;
        r.terms_.push_back(std::move(u));
    }
    return r;
}

HoloSymbolFamily& HoloSymbolFamily::operator+=(const HoloSymbolFamily& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("family dimension mismatch");
    if (!(prefactor_ == o.prefactor_))
        throw std::invalid_argument("family sum with different prefactors");
    if (!terms_.empty() && !o.terms_.empty()) {
        Rational d = base_order_ - o.base_order_;
        if (!is_integer(d)) throw std::invalid_argument("family sum with incommensurate orders");
        if (d < 0) base_order_ = o.base_order_;
    } else if (terms_.empty()) {
        base_order_ = o.base_order_;
    }
    for (const auto& t : o.terms_) add_term(t);
    return *this;
}

HoloSymbolFamily riesz_family(const ClassicalSymbol& s, std::vector<Complexq> H) {
    if (H.empty() || !(H[0] == Complexq(1)))
        throw std::invalid_argument("riesz_family: prefactor must satisfy H(0) = 1");
    HoloSymbolFamily f(s.dim(), s.order(), std::move(H));
    for (const auto& t : s.terms()) f.add_term(FamilyTerm{t, {Complexq(1)}});
    return f;
}

HoloSymbolFamily family_partial_xi(const HoloSymbolFamily& f, unsigned axis) {
    HoloSymbolFamily r(f.dim(), f.order_at_zero() - 1, f.prefactor());
    Polynomial xi_i = Polynomial::variable(f.dim(), axis);
    for (const auto& t : f.terms()) {
        // d(A) |xi|^{s-z}
        FamilyTerm u = t;
        u.base.angular = t.base.angular.partial(axis);
        r.add_term(std::move(u));
        // (s - z) A xi_i |xi|^{s-2-z}: multiply zpoly by (s - z)
        {
            FamilyTerm v = t;
            v.base.angular = t.base.angular * xi_i;
            v.base.radial_power = t.base.radial_power - 2;
            std::vector<Complexq> zp(t.zpoly.size() + 1, Complexq());
            for (std::size_t k = 0; k < t.zpoly.size(); ++k) {
                Complexq sc = t.zpoly[k];
                sc *= Complexq(t.base.radial_power);
                zp[k] += sc;
                zp[k + 1] -= t.zpoly[k];
            }
            v.zpoly = std::move(zp);
            r.add_term(std::move(v));
        }
        // profile derivatives
        for (auto& [prof, mult] : t.base.rprof.derivative()) {
            FamilyTerm w = t;
            w.base.angular = t.base.angular * xi_i;
            w.base.angular *= Complexq(Rational(mult));
            w.base.radial_power = t.base.radial_power - 1;
            w.base.rprof = std::move(prof);
            r.add_term(std::move(w));
        }
    }
    return r;
}

HoloSymbolFamily family_partial_x(const HoloSymbolFamily& f, unsigned axis) {
    HoloSymbolFamily r(f.dim(), f.order_at_zero(), f.prefactor());
    Polynomial x_i = Polynomial::variable(f.dim(), axis);
    for (const auto& t : f.terms()) {
        FamilyTerm u = t;
        u.base.xcoeff = t.base.xcoeff.partial(axis);
        r.add_term(std::move(u));
        for (const auto& [k, c] : t.base.wprof.axes[axis]) {
            FamilyTerm v = t;
            v.base.xcoeff = t.base.xcoeff * x_i;
            v.base.xcoeff *= Complexq(Rational(-2 * static_cast<long>(c)));
            if (--v.base.wprof.axes[axis][k] == 0) v.base.wprof.axes[axis].erase(k);
            v.base.wprof.axes[axis][k + 1] += 1;
            r.add_term(std::move(v));
        }
    }
    return r;
}

std::vector<Rational> family_pole_candidates(const HoloSymbolFamily& f) {
    std::vector<Rational> poles;
    unsigned n = f.dim();
    for (const auto& t : f.terms()) {
        if (!t.base.is_asymptotic()) continue;
        if (moment_of_poly(t.base.angular, n).is_zero()) continue;
        Rational q = t.base.degree() + Rational(n);
        if (std::find(poles.begin(), poles.end(), q) == poles.end()) poles.push_back(q);
    }
    std::sort(poles.begin(), poles.end());
    return poles;
}

namespace {

struct XChan {
    Cplx value{};
    double error = 0.0;
};

// germ core shared by density and integrated versions
LaurentGerm germ_core(const HoloSymbolFamily& f, const Rational& z0, unsigned jet_len,
                      const Integrator& integ,
                      const std::function<XChan(const SymbolTerm&)>& weight) {
    unsigned n = f.dim();
    LaurentGerm acc = LaurentGerm::zero(z0, jet_len);
    double z0d = to_double(z0);
    LaurentGerm hg = LaurentGerm::from_polynomial(f.prefactor(), z0, jet_len + 1);
    for (const auto& t : f.terms()) {
        ExactValue mom = moment_of_poly(t.base.angular, n);
        if (mom.is_zero()) continue;
        XChan xw = weight(t.base);
        Cplx m = mom.value() * xw.value;
        if (std::abs(m) == 0.0) continue;

        Rational a = t.base.degree();  // base homogeneity degree (z = 0)
        Rational p = a + Rational(n);
        LaurentGerm zp = LaurentGerm::from_polynomial(t.zpoly, z0, jet_len + 1);

        LaurentGerm term_germ = LaurentGerm::zero(z0, jet_len);
        if (t.base.is_asymptotic()) {
            // exact meromorphic tail: 1/(z - (a+n))
            term_germ += LaurentGerm::simple_pole_inverse(z0, p, jet_len);
        }
        // compact/ball channel: int rho(r) r^{a+n-1-z} dr, entire near z0
        {
            double lower = t.base.rprof.is_plain() ? 0.0 : 0.5;
            if (lower == 0.0 && !(Rational(z0) < p))
                throw std::invalid_argument(
                    "laurent_cutoff_integral: z0 beyond compact-channel convergence");
            double sd = to_double(t.base.radial_power);
            double expo = sd + static_cast<double>(t.base.angular.degree() + n) - 1.0 - z0d;
            std::vector<Cplx> jet(jet_len, Cplx{});
            double kfac = 1.0;
            for (unsigned k = 0; k < jet_len; ++k) {
                if (k > 0) kfac *= static_cast<double>(k);
                QuadResult q = integ.radial(
                    [&](double r) {
                        double w = std::pow(r, expo);
                        for (unsigned j = 0; j < k; ++j) w *= -std::log(r);
                        return w * t.base.rprof.eval(r);
                    },
                    lower, 1.0);
                jet[k] = Cplx(q.value / kfac, 0.0);
            }
            term_germ += LaurentGerm(z0, 0, std::move(jet));
        }
        term_germ = term_germ * zp;
        term_germ = term_germ * hg;
        term_germ *= m;
        acc += term_germ;
    }
    return acc;
}

XChan x_channel_density(const SymbolTerm& t, const std::vector<double>& x) {
    return {t.xcoeff.eval(x) * t.wprof.eval(x), 0.0};
}

XChan x_channel_integral(const SymbolTerm& t, const Integrator& integ) {
    XChan out;
    unsigned n = t.xcoeff.nvars();
    for (const auto& [mono, c] : t.xcoeff.terms()) {
        double v = 1.0, err = 0.0;
        for (unsigned i = 0; i < n; ++i) {
            QuadResult r = integ.axis_window_integral(mono[i], t.wprof.axes[i]);
            err = std::abs(v) * r.error + std::abs(r.value) * err;
            v *= r.value;
        }
        out.value += c.to_complex() * v;
        out.error += std::abs(c.to_complex()) * err;
    }
    return out;
}

}  // namespace

LaurentGerm laurent_cutoff_integral_density(const HoloSymbolFamily& f,
                                            const std::vector<double>& x, const Rational& z0,
                                            unsigned jet_len, const Integrator& integ) {
    return germ_core(f, z0, jet_len, integ,
                     [&](const SymbolTerm& t) { return x_channel_density(t, x); });
}

LaurentGerm laurent_cutoff_integral(const HoloSymbolFamily& f, const Rational& z0,
                                    unsigned jet_len, const Integrator& integ) {
    if (!f.windowed())
        throw support_error("laurent_cutoff_integral: family lacks compact support");
    return germ_core(f, z0, jet_len, integ,
                     [&](const SymbolTerm& t) { return x_channel_integral(t, integ); });
}

double complex_residue_identity_defect(const ClassicalSymbol& s, const Integrator& integ,
                                       std::vector<Complexq> H) {
    HoloSymbolFamily f = riesz_family(s, std::move(H));
    LaurentGerm g = laurent_cutoff_integral(f, Rational(0), 2, integ);
    Cplx res = wodzicki_residue(s, integ);
    return std::abs(g.residue() - res);
}

Cplx regularized_integral(const ClassicalSymbol& s, const Integrator& integ,
                          std::vector<Complexq> H) {
    HoloSymbolFamily f = riesz_family(s, std::move(H));
    return laurent_cutoff_integral(f, Rational(0), 3, integ).finite_part();
}

// --- form families ----------------------------------------------------------

HoloForm HoloForm::riesz_lift(const SymbolForm& w, std::vector<Complexq> H) {
    HoloForm r(w.dim(), w.degree(), w.order());
    for (const auto& [idx, c] : w.coefficients())
        r.add_coefficient(idx, riesz_family(c, H));
    return r;
}

void HoloForm::add_coefficient(const FormIndex& idx, HoloSymbolFamily f) {
    if (f.is_zero()) return;
    if (idx.degree() != degree_) throw std::invalid_argument("holo form index degree mismatch");
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
        coeffs_.emplace(idx, std::move(f));
    } else {
        it->second += f;
    }
}

namespace {

int insert_sign_h(unsigned l, const std::vector<unsigned>& v) {
    unsigned before = 0;
    for (unsigned y : v) {
        if (y == l) return 0;
        if (y < l) ++before;
    }
    return before % 2 == 0 ? 1 : -1;
}

std::vector<unsigned> inserted_h(unsigned l, const std::vector<unsigned>& v) {
    std::vector<unsigned> r = v;
    r.insert(std::lower_bound(r.begin(), r.end(), l), l);
    return r;
}

void scale_family(HoloSymbolFamily& f, int sign) {
    if (sign >= 0) return;
    f = -f;
}

}  // namespace

HoloForm holo_exterior_derivative(const HoloForm& w) {
    HoloForm r(w.dim(), w.degree() + 1, w.base_order());
    for (const auto& [idx, c] : w.coefficients()) {
        for (unsigned l = 0; l < w.dim(); ++l) {
            int s1 = insert_sign_h(l, idx.dx);
            if (s1 != 0) {
                HoloSymbolFamily dc = family_partial_x(c, l);
                if (!dc.is_zero()) {
                    scale_family(dc, s1);
                    r.add_coefficient(FormIndex{inserted_h(l, idx.dx), idx.dxi}, std::move(dc));
                }
            }
            int s2 = insert_sign_h(l, idx.dxi);
            if (s2 != 0) {
                HoloSymbolFamily dc = family_partial_xi(c, l);
                if (!dc.is_zero()) {
                    int sign = s2 * (idx.dx.size() % 2 == 0 ? 1 : -1);
                    scale_family(dc, sign);
                    r.add_coefficient(FormIndex{idx.dx, inserted_h(l, idx.dxi)}, std::move(dc));
                }
            }
        }
    }
    return r;
}

LaurentGerm laurent_cutoff_integral_form(const HoloForm& w, const Rational& z0,
                                         unsigned jet_len, const Integrator& integ) {
    unsigned n = w.dim();
    if (w.degree() != 2 * n) return LaurentGerm::zero(z0, jet_len);
    FormIndex full;
    for (unsigned i = 0; i < n; ++i) {
        full.dx.push_back(i);
        full.dxi.push_back(i);
    }
    auto it = w.coefficients().find(full);
    if (it == w.coefficients().end()) return LaurentGerm::zero(z0, jet_len);
    return laurent_cutoff_integral(it->second, z0, jet_len, integ);
}

double complex_residue_identity_defect_form(const SymbolForm& w, const Integrator& integ) {
    HoloForm lift = HoloForm::riesz_lift(w);
    LaurentGerm g = laurent_cutoff_integral_form(lift, Rational(0), 2, integ);
    Cplx res = residue_form(w, integ);
    return std::abs(g.residue() - res);
}

LaurentGerm meromorphic_stokes_defect(const SymbolForm& beta, unsigned jet_len,
                                      const Integrator& integ) {
    if (beta.degree() != 2 * beta.dim() - 1)
        throw std::invalid_argument("meromorphic_stokes_defect: expected a (2n-1)-form");
    for (const auto& [idx, c] : beta.coefficients())
        if (!c.windowed())
            throw support_error("meromorphic_stokes_defect: coefficient not windowed");
    HoloForm lift = HoloForm::riesz_lift(beta);
    return laurent_cutoff_integral_form(holo_exterior_derivative(lift), Rational(0), jet_len,
                                        integ);
}

}  // namespace symcalc
