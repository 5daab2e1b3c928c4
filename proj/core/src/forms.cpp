#include "symcalc/forms.hpp"

#include <algorithm>

namespace symcalc {

int merge_sign(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned inversions = 0;
    for (unsigned x : b) {
        for (unsigned y : a) {
            if (y == x) return 0;
            if (y > x) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

std::vector<unsigned> merged(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

// sign of inserting axis l in front of an ascending tuple and resorting
int insert_sign(unsigned l, const std::vector<unsigned>& v) {
    unsigned before = 0;
    for (unsigned y : v) {
        if (y == l) return 0;
        if (y < l) ++before;
    }
    return before % 2 == 0 ? 1 : -1;
}

std::vector<unsigned> inserted(unsigned l, const std::vector<unsigned>& v) {
    std::vector<unsigned> r = v;
    r.insert(std::lower_bound(r.begin(), r.end(), l), l);
    return r;
}

FormIndex full_index(unsigned n) {
    FormIndex idx;
    for (unsigned i = 0; i < n; ++i) {
        idx.dx.push_back(i);
        idx.dxi.push_back(i);
    }
    return idx;
}

}  // namespace

SymbolForm SymbolForm::from_symbol(const ClassicalSymbol& s) {
    SymbolForm w(s.dim(), 0, s.order());
    if (!s.is_zero()) w.add_coefficient(FormIndex{}, s);
    return w;
}

bool SymbolForm::is_zero() const {
    for (const auto& [idx, c] : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

void SymbolForm::add_coefficient(const FormIndex& idx, ClassicalSymbol c) {
    if (c.is_zero()) return;
    if (idx.degree() != degree_) throw std::invalid_argument("form index degree mismatch");
    if (c.dim() != dim_) throw std::invalid_argument("form coefficient dimension mismatch");
    c.set_order(order_ - Rational(idx.dxi.size()));
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
        coeffs_.emplace(idx, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

const ClassicalSymbol* SymbolForm::coefficient(const FormIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? nullptr : &it->second;
}

SymbolForm SymbolForm::operator-() const {
    SymbolForm r(dim_, degree_, order_);
    for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, -c);
    return r;
}

SymbolForm& SymbolForm::operator+=(const SymbolForm& o) {
    if (dim_ != o.dim_ || degree_ != o.degree_)
        throw std::invalid_argument("form sum shape mismatch");
    Rational d = order_ - o.order_;
    if (!coeffs_.empty() && !o.coeffs_.empty() && !is_integer(d))
        throw std::invalid_argument("form sum with incommensurate orders");
    if (coeffs_.empty() || (!o.coeffs_.empty() && d < 0)) order_ = o.order_;
    for (const auto& [idx, c] : o.coeffs_) add_coefficient(idx, c);
    return *this;
}

SymbolForm& SymbolForm::operator-=(const SymbolForm& o) {
    SymbolForm neg = -o;
    return *this += neg;
}

SymbolForm SymbolForm::component(unsigned j) const {
    SymbolForm r(dim_, degree_, order_);
    for (const auto& [idx, c] : coeffs_) {
        // coefficient degree for homogeneous form degree order - j is
        // order - |J| - j; pick that homogeneous component of c
        Rational jj = Rational(j);
        Rational target = order_ - Rational(idx.dxi.size()) - jj;
        ClassicalSymbol piece(dim_, c.order());
        for (const auto& t : c.terms()) {
            if (t.is_asymptotic() && t.degree() == target) piece.add_term(t);
        }
        piece.set_order(target);
        if (!piece.is_zero()) r.add_coefficient(idx, piece);
    }
    return r;
}

SymbolForm SymbolForm::asymptotic_part() const {
    SymbolForm r(dim_, degree_, order_);
    for (const auto& [idx, c] : coeffs_) r.add_coefficient(idx, c.asymptotic_part());
    return r;
}

SymbolForm exterior_derivative(const SymbolForm& w) {
    SymbolForm r(w.dim(), w.degree() + 1, w.order());
    for (const auto& [idx, c] : w.coefficients()) {
        for (unsigned l = 0; l < w.dim(); ++l) {
            // dx_l ^ dx_I ^ dxi_J
            int s1 = insert_sign(l, idx.dx);
            if (s1 != 0) {
                ClassicalSymbol dc = partial_x(c, l);
                if (!dc.is_zero()) {
                    if (s1 < 0) dc *= Complexq(-1);
                    r.add_coefficient(FormIndex{inserted(l, idx.dx), idx.dxi}, std::move(dc));
                }
            }
            // dxi_l ^ dx_I ^ dxi_J = (-1)^{|I|} dx_I ^ (dxi_l ^ dxi_J)
            int s2 = insert_sign(l, idx.dxi);
            if (s2 != 0) {
                ClassicalSymbol dc = partial_xi(c, l);
                if (!dc.is_zero()) {
                    int sign = s2 * (idx.dx.size() % 2 == 0 ? 1 : -1);
                    if (sign < 0) dc *= Complexq(-1);
                    r.add_coefficient(FormIndex{idx.dx, inserted(l, idx.dxi)}, std::move(dc));
                }
            }
        }
    }
    return r;
}

SymbolForm wedge_star(const SymbolForm& a, const SymbolForm& b, unsigned K) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    SymbolForm r(a.dim(), a.degree() + b.degree(), a.order() + b.order());
    for (const auto& [ia, ca] : a.coefficients()) {
        for (const auto& [ib, cb] : b.coefficients()) {
            // dx_I dxi_J dx_K dxi_L -> sign: dxi_J past dx_K, then merges
            int s = merge_sign(ia.dx, ib.dx) * merge_sign(ia.dxi, ib.dxi);
            if (s == 0) continue;
            if ((ia.dxi.size() * ib.dx.size()) % 2 == 1) s = -s;
            ClassicalSymbol prod = star(ca, cb, K);
            if (prod.is_zero()) continue;
            if (s < 0) prod *= Complexq(-1);
            r.add_coefficient(FormIndex{merged(ia.dx, ib.dx), merged(ia.dxi, ib.dxi)},
                              std::move(prod));
        }
    }
    return r;
}

Cplx residue_form(const SymbolForm& w, const Integrator& integ, double* err) {
    if (w.degree() != 2 * w.dim()) return {};
    const ClassicalSymbol* top = w.coefficient(full_index(w.dim()));
    if (!top) return {};
    return wodzicki_residue(*top, integ, err);
}

Cplx residue_form_density(const SymbolForm& w, const std::vector<double>& x) {
    if (w.degree() != 2 * w.dim()) return {};
    const ClassicalSymbol* top = w.coefficient(full_index(w.dim()));
    if (!top) return {};
    return residue_density(*top, x);
}

Cplx cutoff_integral_form(const SymbolForm& w, const Integrator& integ, double lambda) {
    if (w.degree() != 2 * w.dim()) return {};
    const ClassicalSymbol* top = w.coefficient(full_index(w.dim()));
    if (!top) return {};
    return cutoff_integral(*top, integ, lambda);
}

Cplx cosphere_pairing(const SymbolForm& w, const Integrator& integ, double* err) {
    unsigned n = w.dim();
    Cplx acc{};
    double err_acc = 0.0;
    for (const auto& [idx, c] : w.coefficients()) {
        if (idx.dx.size() != n || idx.dxi.size() != n - 1) continue;
        // missing dxi axis
        unsigned jhat = 0;
        {
            std::vector<bool> present(n, false);
            for (unsigned j : idx.dxi) present[j] = true;
            while (jhat < n && present[jhat]) ++jhat;
        }
        int sign = ((n + jhat) % 2 == 0) ? 1 : -1;
        Polynomial xi_j = Polynomial::variable(n, jhat);
        // degree -n+1 components, grouped exactly per x-class
        std::map<std::pair<Polynomial, WindowProfile>, ExactValue> classes;
        for (const auto& t : c.terms()) {
            if (!t.is_asymptotic() || t.degree() != Rational(1 - static_cast<long>(n))) continue;
            ExactValue mom = moment_of_poly(t.angular * xi_j, n);
            if (mom.is_zero()) continue;
            classes[{t.xcoeff, t.wprof}] += mom;
        }
        for (const auto& [key, mom] : classes) {
            if (mom.is_zero()) continue;
            // x-channel of the class
            Cplx xval{};
            double xerr = 0.0;
            for (const auto& [mono, cc] : key.first.terms()) {
                double v = 1.0, e = 0.0;
                for (unsigned i = 0; i < n; ++i) {
                    QuadResult q = integ.axis_window_integral(mono[i], key.second.axes[i]);
                    e = std::abs(v) * q.error + std::abs(q.value) * e;
                    v *= q.value;
                }
                xval += cc.to_complex() * v;
                xerr += std::abs(cc.to_complex()) * e;
            }
            acc += static_cast<double>(sign) * mom.value() * xval;
            err_acc += std::abs(mom.value()) * xerr;
        }
    }
    if (err) *err += err_acc;
    return acc;
}

StokesResult stokes_boundary(const SymbolForm& beta, const Integrator& integ) {
    if (beta.degree() != 2 * beta.dim() - 1)
        throw std::invalid_argument("stokes_boundary: expected a (2n-1)-form");
    for (const auto& [idx, c] : beta.coefficients())
        if (!c.windowed()) throw support_error("stokes_boundary: coefficient not windowed");
    double err = 0.0;
    Cplx defect = cutoff_integral_form(exterior_derivative(beta), integ);
    Cplx boundary = cosphere_pairing(beta, integ, &err);
    return {defect, boundary, err};
}

IntrinsicResult intrinsic_residue_check(const SymbolForm& w, const Integrator& integ) {
    unsigned n = w.dim();
    Cplx direct = residue_form(w, integ);

    // iota_X on the dxi block of the order-0 component (paper convention:
    // the dx block passes through without sign), then the d_S(xi) pairing
    // j^*(dxi_{full minus j}) = (-1)^j xi_j dS with positive measure dS.
    Cplx intrinsic{};
    if (w.degree() == 2 * n) {
        const ClassicalSymbol* top = w.coefficient(full_index(n));
        if (top) {
            for (unsigned j = 0; j < n; ++j) {
                // contraction slot j: (-1)^{pos} xi_j, pos = j in the full tuple
                int s_con = (j % 2 == 0) ? 1 : -1;
                int s_pull = s_con;  // same parity for the pullback weight
                Polynomial xi_j2 = Polynomial::variable(n, j);
                std::map<std::pair<Polynomial, WindowProfile>, ExactValue> classes;
                for (const auto& t : top->terms()) {
                    if (!t.is_asymptotic() ||
                        t.degree() != Rational(-static_cast<long>(n)))
                        continue;
                    ExactValue mom = moment_of_poly(t.angular * xi_j2 * xi_j2, n);
                    if (mom.is_zero()) continue;
                    classes[{t.xcoeff, t.wprof}] += mom;
                }
                for (const auto& [key, mom] : classes) {
                    if (mom.is_zero()) continue;
                    // x-integral of the class
                    Cplx xval{};
                    for (const auto& [mono, cc] : key.first.terms()) {
                        double v = 1.0;
                        for (unsigned i = 0; i < n; ++i)
                            v *= integ.axis_window_integral(mono[i], key.second.axes[i]).value;
                        xval += cc.to_complex() * v;
                    }
                    intrinsic += static_cast<double>(s_con * s_pull) * mom.value() * xval;
                }
            }
        }
    }
    return {direct, intrinsic};
}

}  // namespace symcalc
