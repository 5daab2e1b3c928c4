#include "symcalc/star.hpp"

namespace symcalc {

namespace {

// enumerate multi-indices of total weight k in n variables, lexicographic
void enumerate_alphas(unsigned n, unsigned k, Monomial& cur, unsigned pos,
                      std::vector<Monomial>& out) {
    if (pos + 1 == n) {
        cur[pos] = k;
        out.push_back(cur);
        return;
    }
    for (unsigned j = 0; j <= k; ++j) {
        cur[pos] = j;
        enumerate_alphas(n, k - j, cur, pos + 1, out);
    }
}

Integer multi_factorial(const Monomial& alpha) {
    Integer f(1);
    for (unsigned a : alpha) f *= factorial(a);
    return f;
}

}  // namespace

ClassicalSymbol star(const ClassicalSymbol& a, const ClassicalSymbol& b, unsigned K) {
    if (a.dim() != b.dim()) throw std::invalid_argument("star: dimension mismatch");
    unsigned n = a.dim();
    ClassicalSymbol acc(n, a.order() + b.order());

    // iterated derivatives, reused across multi-indices of growing weight
    std::map<Monomial, ClassicalSymbol> dxi_a, dx_b;
    Monomial zero(n, 0);
    dxi_a.emplace(zero, a);
    dx_b.emplace(zero, b);

    for (unsigned k = 0; k <= K; ++k) {
        std::vector<Monomial> alphas;
        Monomial cur(n, 0);
        enumerate_alphas(n, k, cur, 0, alphas);
        for (const Monomial& alpha : alphas) {
            if (k > 0) {
                // derive from a predecessor alpha - e_i
                unsigned i = 0;
                while (alpha[i] == 0) ++i;
                Monomial prev = alpha;
                prev[i] -= 1;
                if (!dxi_a.count(alpha)) dxi_a.emplace(alpha, partial_xi(dxi_a.at(prev), i));
                if (!dx_b.count(alpha)) dx_b.emplace(alpha, partial_x(dx_b.at(prev), i));
            }
            ClassicalSymbol prod = multiply_pointwise(dxi_a.at(alpha), dx_b.at(alpha));
            Complexq c = Complexq::minus_i_pow(k);
            c *= Complexq(Rational(1, multi_factorial(alpha)));
            prod *= c;
            if (!prod.is_zero()) {
                prod.set_order(a.order() + b.order());  // declared order of the sum
                acc += prod;
            }
        }
    }
    return acc;
}

ClassicalSymbol commutator_star(const ClassicalSymbol& a, const ClassicalSymbol& b, unsigned K) {
    return star(a, b, K) - star(b, a, K);
}

ClassicalSymbol theta(const ClassicalSymbol& a, const ClassicalSymbol& b, unsigned K) {
    return star(a, b, K) - multiply_pointwise(a, b);
}

unsigned residue_truncation_depth(const Rational& m, const Rational& mp, unsigned n) {
    return residue_truncation_depth_total(m + mp, n);
}

unsigned residue_truncation_depth_total(const Rational& total_order, unsigned n) {
    // smallest K >= 0 with total - K - 1 < -n, i.e. K > (total + n) - 1
    Rational bound = total_order + Rational(n);
    if (bound <= 0) return 0;
    Integer fl = numerator(bound) / denominator(bound);  // floor for positive rationals
    return fl.convert_to<unsigned>();  // = bound when integer, floor(bound) otherwise
}

}  // namespace symcalc
