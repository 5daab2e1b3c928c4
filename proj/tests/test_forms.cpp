#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "symcalc/forms.hpp"
#include "symcalc/random_gen.hpp"

using namespace symcalc;

namespace {

ClassicalSymbol radial_symbol(unsigned n, Rational order, Polynomial angular, Rational s,
                              bool window = false) {
    ClassicalSymbol sym(n, std::move(order));
    sym.add_term(SymbolTerm{Polynomial::constant(n, Complexq(1)), std::move(angular), std::move(s),
                            RadialProfile{1, {}}, WindowProfile::none(n)});
    return window ? sym.windowed_copy() : sym;
}

}  // namespace

TEST_CASE("exterior derivative of a 0-form lists all axes") {
    unsigned n = 2;
    ClassicalSymbol s = radial_symbol(n, Rational(-1), Polynomial::constant(n, Complexq(1)),
                                      Rational(-1), true);
    SymbolForm w = SymbolForm::from_symbol(s);
    SymbolForm dw = exterior_derivative(w);
    CHECK(dw.degree() == 1);
    // dx and dxi coefficients match partial_x / partial_xi
    const ClassicalSymbol* cx = dw.coefficient(FormIndex{{0}, {}});
    const ClassicalSymbol* cxi = dw.coefficient(FormIndex{{}, {1}});
    REQUIRE(cx);
    REQUIRE(cxi);
    CHECK((*cx - partial_x(s, 0)).is_zero());
    CHECK((*cxi - partial_xi(s, 1)).is_zero());
}

TEST_CASE("d(xi_1 dx_1) = -dx_1 ^ dxi_1 (canonical sign)") {
    unsigned n = 1;
    ClassicalSymbol xi(n, Rational(1));
    xi.add_term(SymbolTerm{Polynomial::constant(n, Complexq(1)), Polynomial::variable(n, 0),
                           Rational(0), RadialProfile{}, WindowProfile::none(n)});
    SymbolForm w(n, 1, Rational(1));
    w.add_coefficient(FormIndex{{0}, {}}, xi);
    SymbolForm dw = exterior_derivative(w);
    const ClassicalSymbol* c = dw.coefficient(FormIndex{{0}, {0}});
    REQUIRE(c);
    // coefficient should be -1 (constant symbol)
    CHECK((*c + ClassicalSymbol::unit(n)).is_zero());
}

TEST_CASE("d^2 = 0 exactly on term data") {
    unsigned n = 2;
    RandomGen rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        ClassicalSymbol s = random_symbol(rng, n, Rational(0), 1, 2);
        SymbolForm w = SymbolForm::from_symbol(s);
        SymbolForm ddw = exterior_derivative(exterior_derivative(w));
        CHECK(ddw.is_zero());
    }
    // also on a random 1-form
    SymbolForm w1(n, 1, Rational(0));
    w1.add_coefficient(FormIndex{{0}, {}}, random_symbol(rng, n, Rational(0), 1, 2));
    w1.add_coefficient(FormIndex{{}, {1}}, random_symbol(rng, n, Rational(-1), 1, 2));
    CHECK(exterior_derivative(exterior_derivative(w1)).is_zero());
}

TEST_CASE("component extraction commutes with d on the graded data") {
    // d(chi f_j) also creates chi'-band terms that the grading drops by
    // definition; the lemma is equality of the asymptotic channels.
    unsigned n = 1;
    RandomGen rng(3);
    ClassicalSymbol s = random_symbol(rng, n, Rational(0), 2, 2);
    SymbolForm w = SymbolForm::from_symbol(s);
    SymbolForm dw = exterior_derivative(w);
    for (unsigned j = 0; j <= 2; ++j) {
        SymbolForm lhs = dw.component(j);
        SymbolForm rhs = exterior_derivative(w.component(j)).asymptotic_part();
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("wedge with the constant 0-form 1 is the identity") {
    unsigned n = 1;
    SymbolForm one = SymbolForm::from_symbol(ClassicalSymbol::unit(n));
    SymbolForm w(n, 1, Rational(0));
    w.add_coefficient(FormIndex{{0}, {}},
                      radial_symbol(n, Rational(0), Polynomial::constant(n, Complexq(1)),
                                    Rational(0), true));
    SymbolForm lhs = wedge_star(one, w, 2);
    CHECK((lhs - w).is_zero());
    SymbolForm rhs = wedge_star(w, one, 2);
    CHECK((rhs - w).is_zero());
}

TEST_CASE("graded Leibniz rule for wedge_star holds exactly on term data") {
    unsigned n = 1;
    RandomGen rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        // random 1-form and 0-form
        SymbolForm a(n, 1, Rational(0));
        a.add_coefficient(FormIndex{{0}, {}}, random_symbol(rng, n, Rational(0), 1, 1));
        a.add_coefficient(FormIndex{{}, {0}}, random_symbol(rng, n, Rational(-1), 1, 1));
        SymbolForm b = SymbolForm::from_symbol(random_symbol(rng, n, Rational(0), 1, 1));
        unsigned K = 2;
        SymbolForm lhs = exterior_derivative(wedge_star(a, b, K));
        SymbolForm rhs = wedge_star(exterior_derivative(a), b, K);
        SymbolForm rhs2 = wedge_star(a, exterior_derivative(b), K);
        // |a| = 1: d(a ^ b) = da ^ b - a ^ db
        SymbolForm total = rhs - rhs2;
        CHECK((lhs - total).is_zero());
    }
}

TEST_CASE("residue of forms: top component only") {
    unsigned n = 1;
    Integrator integ;
    ClassicalSymbol s = radial_symbol(n, Rational(-1), Polynomial::constant(n, Complexq(1)),
                                      Rational(-1), true);
    // non-top: 1-form -> 0
    SymbolForm w1(n, 1, Rational(-1));
    w1.add_coefficient(FormIndex{{0}, {}}, s);
    CHECK(residue_form(w1, integ) == Cplx{});
    // top form sigma dx ^ dxi -> wodzicki residue
    SymbolForm top(n, 2, Rational(0));
    top.add_coefficient(FormIndex{{0}, {0}}, s);
    CHECK(residue_form(top, integ).real() ==
          doctest::Approx(wodzicki_residue(s, integ).real()).epsilon(1e-13));
}

TEST_CASE("cutoff integral of forms: orientation sign under transposition") {
    unsigned n = 1;
    Integrator integ;
    ClassicalSymbol s = radial_symbol(n, Rational(-2), Polynomial::constant(n, Complexq(1)),
                                      Rational(-2), true);
    SymbolForm direct(n, 2, Rational(-1));
    direct.add_coefficient(FormIndex{{0}, {0}}, s);
    // build sigma dxi ^ dx by wedging the two 1-forms in swapped order
    SymbolForm a(n, 1, Rational(-1));  // sigma dxi
    a.add_coefficient(FormIndex{{}, {0}}, s);
    SymbolForm b(n, 1, Rational(0));  // 1 dx  (unwindowed unit as second factor)
    b.add_coefficient(FormIndex{{0}, {}}, ClassicalSymbol::unit(n));
    SymbolForm swapped = wedge_star(a, b, 0);
    CHECK(cutoff_integral_form(swapped, integ).real() ==
          doctest::Approx(-cutoff_integral_form(direct, integ).real()).epsilon(1e-12));
}

TEST_CASE("res(d beta) = 0 for random windowed (2n-1)-forms, n=1") {
    unsigned n = 1;
    Integrator integ;
    RandomGen rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        SymbolForm beta = random_form(rng, n, 2 * n - 1, Rational(0), 2, 2);
        Cplx r = residue_form(exterior_derivative(beta), integ);
        CHECK(std::abs(r) < 1e-9);
    }
}

TEST_CASE("cut-off Stokes: non-integer order vanishes, integer order matches the boundary") {
    unsigned n = 1;
    Integrator integ;
    // non-integer order (-1/2): defect ~ 0
    SymbolForm beta(n, 1, Rational(-1, 2));
    beta.add_coefficient(FormIndex{{0}, {}},
                         radial_symbol(n, Rational(-1, 2), Polynomial::constant(n, Complexq(1)),
                                       Rational(-1, 2), true));
    StokesResult r = stokes_boundary(beta, integ);
    CHECK(std::abs(r.defect) < 1e-8);
    CHECK(std::abs(r.boundary) == 0.0);
    // no degree -n+1 component -> boundary zero
    SymbolForm beta2(n, 1, Rational(-2));
    beta2.add_coefficient(FormIndex{{0}, {}},
                          radial_symbol(n, Rational(-2), Polynomial::constant(n, Complexq(1)),
                                        Rational(-2), true));
    CHECK(std::abs(stokes_boundary(beta2, integ).boundary) == 0.0);
    // order 0 with odd angular: genuinely nonzero, channels agree
    SymbolForm beta3(n, 1, Rational(0));
    beta3.add_coefficient(FormIndex{{0}, {}},
                          radial_symbol(n, Rational(0), Polynomial::variable(n, 0), Rational(-1),
                                        true));
    StokesResult r3 = stokes_boundary(beta3, integ);
    CHECK(std::abs(r3.boundary) > 0.1);
    CHECK(r3.defect.real() == doctest::Approx(r3.boundary.real()).epsilon(1e-8));
    // the w chi dx case: both channels zero but through different mechanisms
    SymbolForm beta4(n, 1, Rational(0));
    beta4.add_coefficient(FormIndex{{0}, {}},
                          radial_symbol(n, Rational(0), Polynomial::constant(n, Complexq(1)),
                                        Rational(0), true));
    StokesResult r4 = stokes_boundary(beta4, integ);
    CHECK(std::abs(r4.defect - r4.boundary) < 1e-8);
}

TEST_CASE("intrinsic residue formulation agrees with the direct one") {
    unsigned n = 1;
    Integrator integ;
    // sigma with a genuine degree -1 component, odd and even parts
    ClassicalSymbol s(n, Rational(0));
    s.add_term(SymbolTerm{Polynomial::constant(n, Complexq(1)), Polynomial::variable(n, 0),
                          Rational(-2), RadialProfile{1, {}}, WindowProfile::none(n)});
    s.add_term(SymbolTerm{Polynomial::variable(n, 0), Polynomial::constant(n, Complexq(1)),
                          Rational(-1), RadialProfile{1, {}}, WindowProfile::none(n)});
    ClassicalSymbol w = s.windowed_copy();
    SymbolForm top(n, 2, Rational(1));
    top.add_coefficient(FormIndex{{0}, {0}}, w);
    IntrinsicResult r = intrinsic_residue_check(top, integ);
    CHECK(r.direct.real() == doctest::Approx(r.intrinsic.real()).epsilon(1e-12));
    // no order-0 component -> both vanish
    SymbolForm low(n, 2, Rational(-1));
    low.add_coefficient(FormIndex{{0}, {0}},
                        radial_symbol(n, Rational(-2), Polynomial::constant(n, Complexq(1)),
                                      Rational(-2), true));
    IntrinsicResult r2 = intrinsic_residue_check(low, integ);
    CHECK(r2.direct == Cplx{});
    CHECK(r2.intrinsic == Cplx{});
}

TEST_CASE("scaling invariance of the order-0 component (L_X = 0 criterion)") {
    unsigned n = 1;
    ClassicalSymbol s(n, Rational(0));
    s.add_term(SymbolTerm{Polynomial::constant(n, Complexq(1)), Polynomial::variable(n, 0),
                          Rational(-1), RadialProfile{1, {}}, WindowProfile::none(n)});
    ClassicalSymbol comp = homogeneous_component(s, 0);
    for (double xi : {1.0, 1.5, -2.0}) {
        double v1 = evaluate(comp, {0.2}, {xi}).real();
        double v2 = evaluate(comp, {0.2}, {2.0 * xi}).real();
        CHECK(std::abs(v1 - v2) <= 1e-12 * std::abs(v1));
    }
}

TEST_CASE("res(d beta) = 0 at n=2 as well") {
    unsigned n = 2;
    Integrator integ;
    RandomGen rng(31);
    for (int trial = 0; trial < 3; ++trial) {
        SymbolForm beta = random_form(rng, n, 2 * n - 1, Rational(0), 1, 1);
        CHECK(std::abs(residue_form(exterior_derivative(beta), integ)) < 1e-9);
    }
}
