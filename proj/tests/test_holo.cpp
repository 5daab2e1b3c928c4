#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "symcalc/holo.hpp"
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

TEST_CASE("laurent germ arithmetic") {
    // (2/(z) + 1 + 3z) * (1 + z): residue rule f_{-1} g_0 + f_0 g_{-1}
    LaurentGerm f(Rational(0), -1, {Cplx(2, 0), Cplx(1, 0), Cplx(3, 0)});
    LaurentGerm g(Rational(0), 0, {Cplx(1, 0), Cplx(1, 0), Cplx(0, 0)});
    LaurentGerm p = f * g;
    CHECK(p.residue() == f.at(-1) * g.at(0) + f.at(0) * g.at(-1));
    CHECK(p.at(-1).real() == doctest::Approx(2.0));
    CHECK(p.at(0).real() == doctest::Approx(3.0));  // 2*1 + 1*1
    CHECK(p.at(1).real() == doctest::Approx(4.0));  // 1 + 3
    // addition aligns leads
    LaurentGerm s = f + g;
    CHECK(s.at(-1).real() == doctest::Approx(2.0));
    CHECK(s.at(0).real() == doctest::Approx(2.0));
}

TEST_CASE("simple pole inverse germ at shifted points") {
    LaurentGerm at_pole = LaurentGerm::simple_pole_inverse(Rational(0), Rational(0), 3);
    CHECK(at_pole.residue().real() == doctest::Approx(1.0));
    CHECK(at_pole.at(0) == Cplx{});
    // analytic at z0 = 1, pole at q = 0: 1/(z) = 1/(1 + u) = 1 - u + u^2...
    LaurentGerm away = LaurentGerm::simple_pole_inverse(Rational(1), Rational(0), 3);
    CHECK(away.at(0).real() == doctest::Approx(1.0));
    CHECK(away.at(1).real() == doctest::Approx(-1.0));
    CHECK(away.at(2).real() == doctest::Approx(1.0));
}

TEST_CASE("riesz family basics") {
    unsigned n = 1;
    ClassicalSymbol s = radial_symbol(n, Rational(-1), Polynomial::constant(n, Complexq(1)),
                                      Rational(-1), true);
    HoloSymbolFamily f = riesz_family(s);
    CHECK(f.order_at_zero() == Rational(-1));
    CHECK(HoloSymbolFamily::order_slope() == -1);
    CHECK((f.at_zero() - s).is_zero());
    CHECK_THROWS_AS(riesz_family(s, {Complexq(2)}), std::invalid_argument);
}

TEST_CASE("density germ of chi|xi|^{-1} at z0=0: principal part 2/z") {
    unsigned n = 1;
    Integrator integ;
    ClassicalSymbol s = radial_symbol(n, Rational(-1), Polynomial::constant(n, Complexq(1)),
                                      Rational(-1));
    HoloSymbolFamily f = riesz_family(s);
    LaurentGerm g = laurent_cutoff_integral_density(f, {0.0}, Rational(0), 3, integ);
    CHECK(g.residue().real() == doctest::Approx(2.0));
    CHECK(g.pole_order() == 1);
}

TEST_CASE("convergent order: no principal part near 0") {
    unsigned n = 1;
    Integrator integ;
    ClassicalSymbol s = radial_symbol(n, Rational(-2), Polynomial::constant(n, Complexq(1)),
                                      Rational(-2), true);
    LaurentGerm g = laurent_cutoff_integral(riesz_family(s), Rational(0), 3, integ);
    CHECK(std::abs(g.residue()) < 1e-12);
    // pole candidates live at a + n = -1, away from 0
    auto poles = family_pole_candidates(riesz_family(s));
    REQUIRE(poles.size() == 1);
    CHECK(poles[0] == Rational(-1));
}

TEST_CASE("pole set = degree + n per asymptotic term with nonzero moment") {
    unsigned n = 2;
    ClassicalSymbol s(n, Rational(0));
    s.add_term(SymbolTerm{Polynomial::constant(n, Complexq(1)),
                          Polynomial::constant(n, Complexq(1)), Rational(0),
                          RadialProfile{1, {}}, WindowProfile::none(n)});
    s.add_term(SymbolTerm{Polynomial::constant(n, Complexq(1)), Polynomial::variable(n, 0),
                          Rational(-2), RadialProfile{1, {}}, WindowProfile::none(n)});
    s.add_term(SymbolTerm{Polynomial::constant(n, Complexq(1)),
                          Polynomial::constant(n, Complexq(1)), Rational(-2),
                          RadialProfile{1, {}}, WindowProfile::none(n)});
    auto poles = family_pole_candidates(riesz_family(s));
    // odd angular term has zero moment -> degree -1 candidate filtered out
    REQUIRE(poles.size() == 2);
    CHECK(poles[0] == Rational(0));
    CHECK(poles[1] == Rational(2));
}

TEST_CASE("complex residue identity: Res_{z=0} = res, exact channels") {
    unsigned n = 1;
    Integrator integ;
    ClassicalSymbol s = radial_symbol(n, Rational(-1), Polynomial::constant(n, Complexq(1)),
                                      Rational(-1), true);
    CHECK(complex_residue_identity_defect(s, integ) < 1e-9);
    // no residue component: both sides zero
    ClassicalSymbol low = radial_symbol(n, Rational(-2), Polynomial::constant(n, Complexq(1)),
                                        Rational(-2), true);
    CHECK(complex_residue_identity_defect(low, integ) < 1e-12);
    // H(z) = 1 + z leaves the residue of a simple pole unchanged
    CHECK(complex_residue_identity_defect(s, integ, {Complexq(1), Complexq(1)}) < 1e-9);
}

TEST_CASE("regularized integral: residue-free orders match the cutoff integral") {
    unsigned n = 1;
    Integrator integ;
    ClassicalSymbol ni = radial_symbol(n, Rational(-1, 2), Polynomial::constant(n, Complexq(1)),
                                       Rational(-1, 2), true);
    CHECK(std::abs(regularized_integral(ni, integ) - cutoff_integral(ni, integ)) < 1e-9);
    ClassicalSymbol conv = radial_symbol(n, Rational(-2), Polynomial::constant(n, Complexq(1)),
                                         Rational(-2), true);
    CHECK(std::abs(regularized_integral(conv, integ) - cutoff_integral(conv, integ)) < 1e-9);
}

TEST_CASE("H-jet dependence: c1 shifts fp by c1 * pole residue") {
    unsigned n = 1;
    Integrator integ;
    ClassicalSymbol s = radial_symbol(n, Rational(-1), Polynomial::constant(n, Complexq(1)),
                                      Rational(-1), true);
    Cplx base = regularized_integral(s, integ);
    Cplx shifted = regularized_integral(s, integ, {Complexq(1), Complexq(1)});
    LaurentGerm g = laurent_cutoff_integral(riesz_family(s), Rational(0), 3, integ);
    CHECK(std::abs(shifted - base - g.residue()) < 1e-10);
}

TEST_CASE("meromorphic Stokes: germ vanishes for integer-order beta with nonzero plain defect") {
    unsigned n = 1;
    Integrator integ;
    // order 0, odd angular: the plain cut-off Stokes defect is nonzero
    SymbolForm beta(n, 1, Rational(0));
    beta.add_coefficient(FormIndex{{0}, {}},
                         radial_symbol(n, Rational(0), Polynomial::variable(n, 0), Rational(-1),
                                       true));
    StokesResult plain = stokes_boundary(beta, integ);
    CHECK(std::abs(plain.defect) > 0.1);
    LaurentGerm g = meromorphic_stokes_defect(beta, 3, integ);
    CHECK(g.max_abs() < 1e-8);
    // fp_{z=0} of the germ differs from the plain defect by the boundary term
    CHECK(std::abs((g.finite_part() - plain.defect) + plain.boundary) < 1e-8);
}

TEST_CASE("meromorphic Stokes: convergent and non-integer orders") {
    unsigned n = 1;
    Integrator integ;
    SymbolForm b1(n, 1, Rational(-2));
    b1.add_coefficient(FormIndex{{0}, {}},
                       radial_symbol(n, Rational(-2), Polynomial::constant(n, Complexq(1)),
                                     Rational(-2), true));
    CHECK(meromorphic_stokes_defect(b1, 3, integ).max_abs() < 1e-8);
    SymbolForm b2(n, 1, Rational(-1, 2));
    b2.add_coefficient(FormIndex{{}, {0}},
                       radial_symbol(n, Rational(-3, 2), Polynomial::constant(n, Complexq(1)),
                                     Rational(-3, 2), true));
    CHECK(meromorphic_stokes_defect(b2, 3, integ).max_abs() < 1e-8);
}

TEST_CASE("form version of the complex residue identity") {
    unsigned n = 1;
    Integrator integ;
    RandomGen rng(5);
    for (int trial = 0; trial < 3; ++trial) {
        SymbolForm w = random_form(rng, n, 2 * n, Rational(0), 1, 1);
        CHECK(complex_residue_identity_defect_form(w, integ) < 1e-9);
    }
}
