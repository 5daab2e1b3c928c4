#include "symcalc/random_gen.hpp"

namespace symcalc {

std::uint64_t RandomGen::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t RandomGen::uniform(std::uint64_t bound) { return bound ? next() % bound : 0; }

bool RandomGen::chance(unsigned num, unsigned den) { return uniform(den) < num; }

Rational RandomGen::small_rational() {
    long num = static_cast<long>(uniform(6)) - 3;  // -3..2
    if (num >= 0) ++num;                           // skip 0 -> -3..-1, 1..3
    long den = static_cast<long>(uniform(3)) + 1;
    return Rational(num, den);
}

namespace {

Polynomial random_poly(RandomGen& rng, unsigned dim, unsigned max_degree, bool homogeneous,
                       unsigned hom_degree) {
    Polynomial p(dim);
    unsigned nterms = 1 + static_cast<unsigned>(rng.uniform(2));
    for (unsigned t = 0; t < nterms; ++t) {
        unsigned total =
            homogeneous ? hom_degree : static_cast<unsigned>(rng.uniform(max_degree + 1));
        Monomial m(dim, 0);
        for (unsigned d = 0; d < total; ++d) m[rng.uniform(dim)] += 1;
        p.add_term(m, Complexq(rng.small_rational()));
    }
    return p;
}

void enumerate_subsets(unsigned n, unsigned k, unsigned start, std::vector<unsigned>& cur,
                       std::vector<std::vector<unsigned>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (unsigned i = start; i < n; ++i) {
        cur.push_back(i);
        enumerate_subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

ClassicalSymbol random_symbol(RandomGen& rng, unsigned dim, const Rational& order, unsigned depth,
                              unsigned max_poly_degree) {
    ClassicalSymbol s(dim, order);
    for (unsigned j = 0; j <= depth; ++j) {
        if (j > 0 && !rng.chance(3, 4)) continue;
        unsigned nterms = 1 + static_cast<unsigned>(rng.uniform(2));
        for (unsigned t = 0; t < nterms; ++t) {
            unsigned ang_deg = static_cast<unsigned>(rng.uniform(max_poly_degree + 1));
            Polynomial angular = random_poly(rng, dim, max_poly_degree, true, ang_deg);
            if (angular.is_zero()) angular = Polynomial::constant(dim, Complexq(1));
            Rational s_pow = order - Rational(j) - Rational(angular.degree());
            SymbolTerm term{random_poly(rng, dim, max_poly_degree, false, 0), std::move(angular),
                            std::move(s_pow), RadialProfile{1, {}}, WindowProfile::none(dim)};
            if (term.xcoeff.is_zero()) term.xcoeff = Polynomial::constant(dim, Complexq(1));
            s.add_term(std::move(term));
        }
    }
    if (s.is_zero()) {
        s.add_term(SymbolTerm{Polynomial::constant(dim, Complexq(1)),
                              Polynomial::constant(dim, Complexq(1)), order,
                              RadialProfile{1, {}}, WindowProfile::none(dim)});
    }
    return s.windowed_copy();
}

SymbolForm random_form(RandomGen& rng, unsigned dim, unsigned degree, const Rational& order,
                       unsigned depth, unsigned max_poly_degree) {
    SymbolForm w(dim, degree, order);
    bool any = false;
    for (unsigned ni = 0; ni <= degree && ni <= dim; ++ni) {
        unsigned nj = degree - ni;
        if (nj > dim) continue;
        std::vector<std::vector<unsigned>> is, js;
        std::vector<unsigned> cur;
        enumerate_subsets(dim, ni, 0, cur, is);
        enumerate_subsets(dim, nj, 0, cur, js);
        for (const auto& I : is) {
            for (const auto& J : js) {
                if (!rng.chance(3, 4)) continue;
                ClassicalSymbol c =
                    random_symbol(rng, dim, order - Rational(nj), depth, max_poly_degree);
                w.add_coefficient(FormIndex{I, J}, std::move(c));
                any = true;
            }
        }
    }
    if (!any) {
        std::vector<unsigned> I, J;
        for (unsigned i = 0; i < dim && I.size() + J.size() < degree; ++i) I.push_back(i);
        for (unsigned i = 0; i < dim && I.size() + J.size() < degree; ++i) J.push_back(i);
        w.add_coefficient(
            FormIndex{I, J},
            random_symbol(rng, dim, order - Rational(J.size()), depth, max_poly_degree));
    }
    return w;
}

}  // namespace symcalc
