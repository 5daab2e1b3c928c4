#include "symcalc/regint.hpp"

#include <cmath>
#include <functional>

namespace symcalc {

namespace {

// x-channel of a term: product over axes of 1-d window integrals against the
// monomials of xcoeff.  Exact on axes without window factors.
struct XWeight {
    Cplx value{};
    double error = 0.0;
};

XWeight x_integral(const SymbolTerm& t, const Integrator& integ) {
    XWeight out;
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

Cplx x_eval(const SymbolTerm& t, const std::vector<double>& x) {
    return t.xcoeff.eval(x) * t.wprof.eval(x);
}

void require_windowed(const ClassicalSymbol& s, const char* who) {
    if (!s.windowed())
        throw support_error(std::string(who) + ": symbol lacks compact support in x");
}

// shared finite-part core; `weight` supplies the x-channel of each term
FinitePartResult fp_core(const ClassicalSymbol& s, const Integrator& integ, double lambda,
                         const std::function<XWeight(const SymbolTerm&)>& weight) {
    FinitePartResult out;
    unsigned n = s.dim();
    for (const auto& t : s.terms()) {
        ExactValue mom = moment_of_poly(t.angular, n);
        if (mom.is_zero()) continue;
        Cplx momv = mom.value();
        XWeight xw = weight(t);
        Cplx m = momv * xw.value;
        double merr = std::abs(momv) * xw.error;

        double sd = to_double(t.radial_power);
        auto radial = [&](double r) { return t.rprof.eval(r) * std::pow(r, sd); };
        auto integrand = [&](double r) {
            return radial(r) * std::pow(r, static_cast<double>(t.angular.degree() + n) - 1.0);
        };

        if (!t.is_asymptotic()) {
            // band-supported: entirely inside the unit ball, no tail
            QuadResult q = integ.radial(integrand, 0.5, 1.0);
            out.compact_part += m * q.value;
            out.finite_part += m * q.value;
            out.quad_error += std::abs(m) * q.error + merr * std::abs(q.value);
            continue;
        }

        Rational p = t.degree() + Rational(n);
        double lower = t.rprof.is_plain() ? 0.0 : 0.5;
        double upper = std::max(lambda, 1.0) == lambda && lambda >= 1.0 ? lambda : 1.0;
        QuadResult q = integ.radial(integrand, lower, upper);
        out.compact_part += m * q.value;
        out.finite_part += m * q.value;
        out.quad_error += std::abs(m) * q.error + merr * std::abs(q.value);

        long deg_index = ((s.order() - t.degree()) == 0)
                             ? 0
                             : numerator(s.order() - t.degree()).convert_to<long>();
        if (p == 0) {
            out.log_coefficient += m;
            if (lambda < 1.0) out.finite_part += m * std::log(lambda);
        } else {
            double pd = to_double(p);
            double tail = (lambda >= 1.0) ? -std::pow(lambda, pd) / pd : -1.0 / pd;
            out.finite_part += m * tail;
            out.per_degree_boundary[deg_index] += m * tail;
        }
    }
    return out;
}

}  // namespace

bool exact_density_equal(const ExactDensity& a, const ExactDensity& b) {
    // ignore zero buckets
    auto nonzero = [](const ExactDensity& d) {
        ExactDensity r;
        for (const auto& [k, v] : d)
            if (!v.is_zero()) r.emplace(k, v);
        return r;
    };
    ExactDensity na = nonzero(a), nb = nonzero(b);
    if (na.size() != nb.size()) return false;
    for (auto ia = na.begin(), ib = nb.begin(); ia != na.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    }
    return true;
}

Cplx exact_density_value(const ExactDensity& d, const std::vector<double>& x) {
    Cplx acc{};
    for (const auto& [w, v] : d) acc += v.value() * w.eval(x);
    return acc;
}

Cplx residue_density(const ClassicalSymbol& s, const std::vector<double>& x) {
    Cplx acc{};
    unsigned n = s.dim();
    for (const auto& t : s.terms()) {
        if (!t.is_asymptotic() || t.degree() != Rational(-static_cast<long>(n))) continue;
        ExactValue mom = moment_of_poly(t.angular, n);
        if (mom.is_zero()) continue;
        acc += mom.value() * x_eval(t, x);
    }
    return acc;
}

ExactDensity residue_density_exact(const ClassicalSymbol& s, const std::vector<Rational>& x) {
    ExactDensity out;
    unsigned n = s.dim();
    for (const auto& t : s.terms()) {
        if (!t.is_asymptotic() || t.degree() != Rational(-static_cast<long>(n))) continue;
        ExactValue mom = moment_of_poly(t.angular, n);
        if (mom.is_zero()) continue;
        mom.coeff *= t.xcoeff.eval_exact(x);
        out[t.wprof] += mom;
    }
    return out;
}

ExactDensity log_coefficient_exact(const ClassicalSymbol& s, const std::vector<Rational>& x) {
    // selected through the tail logic: terms whose radial power of the tail
    // integrand vanishes, p = degree + n == 0
    ExactDensity out;
    unsigned n = s.dim();
    for (const auto& t : s.terms()) {
        if (!t.is_asymptotic()) continue;
        if (t.degree() + Rational(n) != 0) continue;
        ExactValue mom = moment_of_poly(t.angular, n);
        if (mom.is_zero()) continue;
        mom.coeff *= t.xcoeff.eval_exact(x);
        out[t.wprof] += mom;
    }
    return out;
}

FinitePartResult finite_part_density(const ClassicalSymbol& s, const std::vector<double>& x,
                                     const Integrator& integ, double lambda) {
    return fp_core(s, integ, lambda, [&](const SymbolTerm& t) {
        return XWeight{x_eval(t, x), 0.0};
    });
}

Cplx wodzicki_residue(const ClassicalSymbol& s, const Integrator& integ, double* err) {
    require_windowed(s, "wodzicki_residue");
    unsigned n = s.dim();
    // group moments exactly per x-factor class so sphere cancellations
    // (e.g. residues of derivatives) yield exact zeros
    std::map<std::pair<Polynomial, WindowProfile>, ExactValue> classes;
    for (const auto& t : s.terms()) {
        if (!t.is_asymptotic() || t.degree() != Rational(-static_cast<long>(n))) continue;
        ExactValue mom = moment_of_poly(t.angular, n);
        if (mom.is_zero()) continue;
        classes[{t.xcoeff, t.wprof}] += mom;
    }
    Cplx acc{};
    for (const auto& [key, mom] : classes) {
        if (mom.is_zero()) continue;
        SymbolTerm probe{key.first, Polynomial::constant(n, Complexq(1)), Rational(0),
                         RadialProfile{}, key.second};
        XWeight xw = x_integral(probe, integ);
        acc += mom.value() * xw.value;
        if (err) *err += std::abs(mom.value()) * xw.error;
    }
    return acc;
}

FinitePartResult cutoff_integral_full(const ClassicalSymbol& s, const Integrator& integ,
                                      double lambda) {
    require_windowed(s, "cutoff_integral");
    return fp_core(s, integ, lambda, [&](const SymbolTerm& t) { return x_integral(t, integ); });
}

Cplx cutoff_integral(const ClassicalSymbol& s, const Integrator& integ, double lambda) {
    return cutoff_integral_full(s, integ, lambda).finite_part;
}

IbpResult ibp_defect(const ClassicalSymbol& s, unsigned axis, const Integrator& integ) {
    require_windowed(s, "ibp_defect");
    if (axis >= s.dim()) throw std::out_of_range("ibp_defect axis");
    unsigned n = s.dim();
    FinitePartResult fp = cutoff_integral_full(partial_xi(s, axis), integ);

    // boundary channel: int_U oint_S sigma_{-n+1}(x, w) w_axis dS dx,
    // grouped exactly per x-class as in wodzicki_residue
    Polynomial xi_i = Polynomial::variable(n, axis);
    std::map<std::pair<Polynomial, WindowProfile>, ExactValue> classes;
    for (const auto& t : s.terms()) {
        if (!t.is_asymptotic() || t.degree() != Rational(1 - static_cast<long>(n))) continue;
        ExactValue mom = moment_of_poly(t.angular * xi_i, n);
        if (mom.is_zero()) continue;
        classes[{t.xcoeff, t.wprof}] += mom;
    }
    Cplx boundary{};
    double err = fp.quad_error;
    for (const auto& [key, mom] : classes) {
        if (mom.is_zero()) continue;
        SymbolTerm probe{key.first, Polynomial::constant(n, Complexq(1)), Rational(0),
                         RadialProfile{}, key.second};
        XWeight xw = x_integral(probe, integ);
        boundary += mom.value() * xw.value;
        err += std::abs(mom.value()) * xw.error;
    }
    return {fp.finite_part, boundary, err};
}

namespace {

// xi-integral of the translation remainder of a single radial skeleton,
// split at R0 with a 1/r substitution for the far tail
double remainder_xi_integral(const TranslatedSymbol& tr, unsigned n, double r0,
                             const Integrator& integ, bool imag_part, double& err_out) {
    SphereRule rule = sphere_rule(n);
    std::vector<double> x0(n, 0.0);
    std::vector<double> pt(n);
    auto shell = [&](double r) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.points.size(); ++i) {
            for (unsigned d = 0; d < n; ++d) pt[d] = r * rule.points[i][d];
            Cplx v = tr.remainder(x0, pt);
            acc += rule.weights[i] * (imag_part ? v.imag() : v.real());
        }
        return acc * std::pow(r, static_cast<double>(n) - 1.0);
    };
    QuadResult inner = integ.radial(shell, 0.0, r0);
    QuadResult tail = integ.radial(
        [&](double u) {
            double r = r0 / u;
            return shell(r) * r0 / (u * u);
        },
        0.0, 1.0);
    err_out += inner.error + tail.error;
    return inner.value + tail.value;
}

}  // namespace

Cplx translation_defect(const ClassicalSymbol& s, const std::vector<Rational>& eta, int depth,
                        const Integrator& integ) {
    require_windowed(s, "translation_defect");
    bool zero_eta = true;
    for (const auto& e : eta) zero_eta = zero_eta && e == 0;
    if (zero_eta) return {};

    unsigned n = s.dim();
    double abs_eta = 0.0;
    for (const auto& e : eta) abs_eta += to_double(e) * to_double(e);
    abs_eta = std::sqrt(abs_eta);
    double r0 = 2.0 * (1.0 + abs_eta);

    TranslatedSymbol full = translate(s, eta, depth);
    Cplx fp_shift = cutoff_integral(full.expansion, integ);
    Cplx fp_orig = cutoff_integral(s, integ);

    // remainder: per-term x-separability (translation does not touch x)
    Cplx rem{};
    double err = 0.0;
    for (const auto& t : s.terms()) {
        ClassicalSymbol skel(n, s.order());
        SymbolTerm st = t;
        st.xcoeff = Polynomial::constant(n, Complexq(1));
        st.wprof = WindowProfile::none(n);
        skel.add_term(std::move(st));
        TranslatedSymbol tr = translate(skel, eta, depth);
        XWeight xw = x_integral(t, integ);
        if (std::abs(xw.value) == 0.0) continue;
        double e1 = 0.0, e2 = 0.0;
        double re = remainder_xi_integral(tr, n, r0, integ, false, e1);
        double im = remainder_xi_integral(tr, n, r0, integ, true, e2);
        rem += xw.value * Cplx(re, im);
        err += std::abs(xw.value) * (e1 + e2);
    }
    return fp_shift + rem - fp_orig;
}

}  // namespace symcalc
