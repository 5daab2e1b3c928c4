#include "symcalc/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include "symcalc/smooth.hpp"

namespace symcalc {

double SphereMoment::value() const {
    return to_double(coeff) * std::pow(std::numbers::pi, static_cast<double>(pi_power));
}

std::complex<double> ExactValue::value() const {
    return coeff.to_complex() * std::pow(std::numbers::pi, static_cast<double>(pi_power));
}

ExactValue& ExactValue::operator+=(const ExactValue& o) {
    if (o.coeff.is_zero()) return *this;
    if (coeff.is_zero()) {
        *this = o;
        return *this;
    }
    if (pi_power != o.pi_power) throw std::logic_error("ExactValue: mixed pi powers");
    coeff += o.coeff;
    return *this;
}

SphereMoment monomial_moment(const Monomial& alpha, unsigned n) {
    SphereMoment m{Rational(0), n / 2};
    for (unsigned a : alpha)
        if (a % 2 != 0) return m;
    // all even: alpha_i = 2 beta_i
    Rational num(2);
    unsigned big = 0;  // B = sum beta_i
    for (unsigned a : alpha) {
        unsigned beta = a / 2;
        big += beta;
        // Gamma(beta + 1/2) = (2 beta)! / (4^beta beta!) sqrt(pi)
        num *= Rational(factorial(2 * beta), factorial(beta));
        num /= rational_pow(Rational(4), beta);
    }
    if (n % 2 == 0) {
        // Gamma(B + n/2) = (B + n/2 - 1)!
        m.coeff = num / Rational(factorial(big + n / 2 - 1));
    } else {
        // Gamma(B + n/2) = (2k)!/(4^k k!) sqrt(pi), k = B + (n-1)/2
        unsigned k = big + (n - 1) / 2;
        m.coeff = num * rational_pow(Rational(4), k) * Rational(factorial(k), factorial(2 * k));
    }
    return m;
}

ExactValue moment_of_poly(const Polynomial& angular, unsigned n) {
    ExactValue v{Complexq(), n / 2};
    for (const auto& [mono, c] : angular.terms()) {
        SphereMoment m = monomial_moment(mono, n);
        if (m.is_zero()) continue;
        Complexq t = c;
        t *= Complexq(m.coeff);
        v += ExactValue{t, m.pi_power};
    }
    return v;
}

namespace {

std::pair<std::vector<double>, std::vector<double>> compute_gauss(int order) {
    std::vector<double> x(order), w(order);
    for (int i = 0; i < order; ++i) {
        // Newton from the Chebyshev-angle initial guess
        double t = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = order * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-16) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= order; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = order * (t * p1 - p0) / (t * t - 1.0);
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return {x, w};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order) {
    static std::mutex mu;
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss(order)).first;
    return it->second;
}

namespace {

double gauss_panel(const std::function<double(double)>& f, double a, double b, int order) {
    const auto& [x, w] = gauss_legendre(order);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(mid + half * x[i]);
    return s * half;
}

struct AdaptState {
    const std::function<double(double)>& f;
    const QuadratureSpec& spec;
    int splits = 0;
    double sum = 0.0;
    double err = 0.0;

    void refine(double a, double b, double whole, double tol, int depth) {
        double m = 0.5 * (a + b);
        double left = gauss_panel(f, a, m, spec.nodes);
        double right = gauss_panel(f, m, b, spec.nodes);
        double delta = left + right - whole;
        if (std::abs(delta) <= tol || depth > 60) {
            sum += left + right;
            err += std::abs(delta);
            return;
        }
        if (++splits > spec.max_subdiv)
            throw quadrature_error("radial_quad: no convergence after max subdivisions");
        refine(a, m, left, 0.5 * tol, depth + 1);
        refine(m, b, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

QuadResult radial_quad(const std::function<double(double)>& f, double a, double b,
                       const QuadratureSpec& spec) {
    if (a == b) return {0.0, 0.0};
    double whole = gauss_panel(f, a, b, spec.nodes);
    AdaptState st{f, spec};
    double scale = std::max(1.0, std::abs(whole));
    st.refine(a, b, whole, spec.tol * scale, 0);
    return {st.sum, st.err + 1e-16 * scale};
}

QuadResult window_integrate(const std::function<double(const std::vector<double>&)>& g,
                            unsigned n, const QuadratureSpec& spec) {
    std::vector<double> x(n, 0.0);
    double err_acc = 0.0;
    // integrate innermost axes recursively; error propagated additively
    std::function<double(unsigned)> level = [&](unsigned axis) -> double {
        if (axis == n) return g(x);
        auto f = [&](double t) {
            x[axis] = t;
            return level(axis + 1);
        };
        QuadResult r = radial_quad(f, -1.0, 1.0, spec);
        if (axis + 1 == n) err_acc += r.error;
        return r.value;
    };
    double v = level(0);
    return {v, err_acc};
}

SphereRule sphere_rule(unsigned n) {
    SphereRule rule;
    if (n == 1) {
        rule.points = {{1.0}, {-1.0}};
        rule.weights = {1.0, 1.0};
    } else if (n == 2) {
        const int m = 64;  // trapezoid on the circle: spectral for smooth f
        for (int i = 0; i < m; ++i) {
            double phi = 2.0 * std::numbers::pi * i / m;
            rule.points.push_back({std::cos(phi), std::sin(phi)});
            rule.weights.push_back(2.0 * std::numbers::pi / m);
        }
    } else if (n == 3) {
        const int nt = 24, np = 48;  // Gauss in cos(theta) x trapezoid in phi
        const auto& [xs, ws] = gauss_legendre(nt);
        for (int i = 0; i < nt; ++i) {
            double c = xs[i], s = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (int j = 0; j < np; ++j) {
                double phi = 2.0 * std::numbers::pi * j / np;
                rule.points.push_back({s * std::cos(phi), s * std::sin(phi), c});
                rule.weights.push_back(ws[i] * 2.0 * std::numbers::pi / np);
            }
        }
    } else {
        throw std::invalid_argument("sphere_rule: dimension not supported");
    }
    return rule;
}

QuadResult Integrator::axis_window_integral(unsigned exponent,
                                            const std::map<unsigned, unsigned>& psi_factors) const {
    if (psi_factors.empty()) {
        // bare monomial over (-1, 1): exact
        if (exponent % 2 == 1) return {0.0, 0.0};
        return {2.0 / (exponent + 1.0), 0.0};
    }
    AxisKey key{exponent, {psi_factors.begin(), psi_factors.end()}};
    auto it = axis_cache_.find(key);
    if (it != axis_cache_.end()) return it->second;

    unsigned max_order = psi_factors.rbegin()->first;
    auto f = [&](double t) {
        double v = 1.0;
        for (unsigned e = 0; e < exponent; ++e) v *= t;
        std::vector<double> d = psi_derivs(max_order, 1.0 - t * t);
        for (const auto& [k, c] : psi_factors)
            for (unsigned j = 0; j < c; ++j) v *= d[k];
        return v;
    };
    QuadResult r = radial_quad(f, -1.0, 1.0, spec_);
    axis_cache_.emplace(std::move(key), r);
    return r;
}

}  // namespace symcalc
