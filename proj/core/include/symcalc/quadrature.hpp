#ifndef SYMCALC_QUADRATURE_HPP
#define SYMCALC_QUADRATURE_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "symcalc/polynomial.hpp"
#include "symcalc/scalar.hpp"

namespace symcalc {

struct QuadratureSpec {
    double tol = 1e-12;     // target relative tolerance
    int max_subdiv = 2000;  // max panel splits per 1-d integral
    int nodes = 15;         // Gauss nodes per panel
};

/* Exact sphere moments.

   int_{S^{n-1}} xi^alpha dS
     = 2 prod_i Gamma((alpha_i+1)/2) / Gamma((|alpha|+n)/2)   (all alpha_i even)
     = 0                                                      (otherwise)

   With all alpha_i even the Gamma ratio collapses to rational * pi^floor(n/2).
   For n = 1 the "sphere" S^0 = {+-1} carries counting measure (mass 2),
   consistent with the same formula. */
struct SphereMoment {
    Rational coeff;     // rational part
    unsigned pi_power;  // power of pi (= floor(n/2) whenever coeff != 0)

    double value() const;
    bool is_zero() const { return coeff == 0; }
};

SphereMoment monomial_moment(const Monomial& alpha, unsigned n);

// Exact rational * pi^k scalar used throughout the "exact channel".
struct ExactValue {
    Complexq coeff;
    unsigned pi_power = 0;

    std::complex<double> value() const;
    bool is_zero() const { return coeff.is_zero(); }
    ExactValue& operator+=(const ExactValue& o);
    friend bool operator==(const ExactValue& a, const ExactValue& b) {
        if (a.coeff.is_zero() && b.coeff.is_zero()) return true;
        return a.pi_power == b.pi_power && a.coeff == b.coeff;
    }
};

// Sphere integral of a homogeneous polynomial in xi (radial powers
// contribute a factor 1 on the unit sphere).
ExactValue moment_of_poly(const Polynomial& angular, unsigned n);

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order);

// Adaptive Gauss quadrature of f over [a, b].
QuadResult radial_quad(const std::function<double(double)>& f, double a, double b,
                       const QuadratureSpec& spec);

// Tensor-product adaptive quadrature of g over the unit box [-1,1]^n.
QuadResult window_integrate(const std::function<double(const std::vector<double>&)>& g,
                            unsigned n, const QuadratureSpec& spec);

// Nodes and weights of a quadrature rule on the unit sphere S^{n-1}
// (n = 1, 2, 3), exact/spectral for smooth integrands.
struct SphereRule {
    std::vector<std::vector<double>> points;
    std::vector<double> weights;
};
SphereRule sphere_rule(unsigned n);

/* 1-d integral cache for the separable channels.

   Axis-window integrals int_{-1}^{1} t^e prod_k psi^(j_k)(1-t^2) dt and the
   radial profile integrals recur constantly across suite runs; an Integrator
   owns a QuadratureSpec plus memo tables for them.  Cached values are
   deterministic, so reuse never changes results. */
class Integrator {
public:
    explicit Integrator(QuadratureSpec spec = {}) : spec_(spec) {}
    const QuadratureSpec& spec() const { return spec_; }

    QuadResult radial(const std::function<double(double)>& f, double a, double b) const {
        return radial_quad(f, a, b, spec_);
    }

    // int_{-1}^1 t^exponent * prod over (deriv order k -> count c) of
    // psi^(k)(1-t^2)^c dt.  An empty factor list integrates the bare monomial
    // (exact closed form).
    QuadResult axis_window_integral(unsigned exponent,
                                    const std::map<unsigned, unsigned>& psi_factors) const;

private:
    QuadratureSpec spec_;
    using AxisKey = std::pair<unsigned, std::vector<std::pair<unsigned, unsigned>>>;
    mutable std::map<AxisKey, QuadResult> axis_cache_;
};

}  // namespace symcalc

#endif
