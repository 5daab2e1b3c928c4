#include "symcalc/cochain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symcalc/random_gen.hpp"

namespace symcalc {

CochainEval Cochain::operator()(const SymbolTuple& args) const {
    if (args.size() != arity) throw std::invalid_argument("cochain arity mismatch");
    return fn(args);
}

SymbolForm symbol_chain(const SymbolTuple& args, unsigned K) {
    if (args.empty()) throw std::invalid_argument("symbol_chain: empty tuple");
    SymbolForm acc = SymbolForm::from_symbol(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i)
        acc = wedge_star(acc, exterior_derivative(SymbolForm::from_symbol(args[i])), K);
    return acc;
}

unsigned chain_truncation(const SymbolTuple& args, unsigned n) {
    Rational total(0);
    for (const auto& s : args) total += s.order();
    unsigned k_res = residue_truncation_depth_total(total, n);
    // order-0 channel is exact once the discarded order drops below 0
    unsigned k_zero = 0;
    if (total >= 0) {
        Integer fl = numerator(total) / denominator(total);
        k_zero = fl.convert_to<unsigned>() + 1;
    }
    return std::max(k_res, k_zero);
}

Cplx residue_cochain(const SymbolTuple& args, unsigned K, const Integrator& integ,
                     double* budget) {
    SymbolForm chain = symbol_chain(args, K);
    double err = 0.0;
    Cplx v = residue_form(chain, integ, &err);
    if (budget) *budget += err;
    return v;
}

Cplx cosphere_cochain(const SymbolTuple& args, unsigned K, const Integrator& integ,
                      double* budget) {
    SymbolForm chain = symbol_chain(args, K);
    double err = 0.0;
    Cplx v = cosphere_pairing(chain, integ, &err);
    if (budget) *budget += err;
    return v;
}

Cplx cutoff_cochain(const SymbolTuple& args, unsigned K, const Integrator& integ,
                    double* budget) {
    SymbolForm chain = symbol_chain(args, K);
    SymbolForm zero_part = chain.component(0);
    if (zero_part.degree() != 2 * zero_part.dim()) return {};
    const auto& coeffs = zero_part.coefficients();
    if (coeffs.empty()) return {};
    FormIndex full;
    for (unsigned i = 0; i < zero_part.dim(); ++i) {
        full.dx.push_back(i);
        full.dxi.push_back(i);
    }
    auto it = coeffs.find(full);
    if (it == coeffs.end()) return {};
    FinitePartResult fp = cutoff_integral_full(it->second, integ);
    if (budget) *budget += fp.quad_error;
    return fp.finite_part;
}

Cplx phi_cochain(const SymbolTuple& args, unsigned K, const Integrator& integ, double* budget) {
    if (args.size() % 2 == 0) throw std::invalid_argument("phi cochain needs odd tuple size");
    ClassicalSymbol acc = args[0];
    for (std::size_t i = 1; i + 1 < args.size(); i += 2)
        acc = star(acc, theta(args[i], args[i + 1], K), K);
    double err = 0.0;
    Cplx v = wodzicki_residue(acc, integ, &err);
    if (budget) *budget += err;
    return v;
}

namespace {

Cochain flavored(unsigned arity,
                 std::function<Cplx(const SymbolTuple&, double*)> eval) {
    Cochain c;
    c.arity = arity;
    c.fn = [eval = std::move(eval)](const SymbolTuple& args) {
        CochainEval out;
        out.value = eval(args, &out.budget);
        return out;
    };
    return c;
}

}  // namespace

Cochain make_residue_cochain(unsigned arity, unsigned K, const Integrator& integ) {
    return flavored(arity, [K, &integ](const SymbolTuple& a, double* b) {
        return residue_cochain(a, K, integ, b);
    });
}

Cochain make_cosphere_cochain(unsigned arity, unsigned K, const Integrator& integ) {
    return flavored(arity, [K, &integ](const SymbolTuple& a, double* b) {
        return cosphere_cochain(a, K, integ, b);
    });
}

Cochain make_cutoff_cochain(unsigned arity, unsigned K, const Integrator& integ) {
    return flavored(arity, [K, &integ](const SymbolTuple& a, double* b) {
        return cutoff_cochain(a, K, integ, b);
    });
}

Cochain make_phi_cochain(unsigned arity, unsigned K, const Integrator& integ) {
    return flavored(arity, [K, &integ](const SymbolTuple& a, double* b) {
        return phi_cochain(a, K, integ, b);
    });
}

Cochain operator_B0(const Cochain& chi, unsigned dim) {
    if (chi.arity < 2) throw std::invalid_argument("operator_B0: arity too small");
    Cochain out;
    out.arity = chi.arity - 1;
    unsigned n = out.arity;  // chi in C^n
    out.fn = [chi, dim, n](const SymbolTuple& args) {
        SymbolTuple front{ClassicalSymbol::unit(dim)};
        front.insert(front.end(), args.begin(), args.end());
        CochainEval lead = chi(front);
        SymbolTuple back(args);
        back.push_back(ClassicalSymbol::unit(dim));
        CochainEval trail = chi(back);
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        return CochainEval{lead.value - sign * trail.value, lead.budget + trail.budget};
    };
    return out;
}

Cochain operator_B(const Cochain& chi, unsigned dim) {
    if (chi.arity < 2) throw std::invalid_argument("operator_B: arity too small");
    Cochain out;
    out.arity = chi.arity - 1;
    unsigned n = out.arity;
    out.fn = [chi, dim, n](const SymbolTuple& args) {
        CochainEval acc;
        for (unsigned i = 0; i < n; ++i) {
            SymbolTuple cyc;
            cyc.reserve(n);
            for (unsigned j = 0; j < n; ++j) cyc.push_back(args[(i + j) % n]);
            double si = (i % 2 == 0) ? 1.0 : -1.0;
            SymbolTuple front{ClassicalSymbol::unit(dim)};
            front.insert(front.end(), cyc.begin(), cyc.end());
            CochainEval lead = chi(front);
            SymbolTuple back(cyc);
            back.push_back(ClassicalSymbol::unit(dim));
            CochainEval trail = chi(back);
            double sn = (n % 2 == 0) ? 1.0 : -1.0;
            acc.value += si * (lead.value - sn * trail.value);
            acc.budget += lead.budget + trail.budget;
        }
        return acc;
    };
    return out;
}

Cochain operator_A_all_but_first(const Cochain& chi) {
    Cochain out;
    out.arity = chi.arity;
    out.fn = [chi](const SymbolTuple& args) {
        unsigned m = static_cast<unsigned>(args.size()) - 1;
        std::vector<unsigned> perm(m);
        std::iota(perm.begin(), perm.end(), 0u);
        CochainEval acc;
        // iterate permutations in lexicographic order with tracked parity
        auto parity_of = [](std::vector<unsigned> p) {
            unsigned inv = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j)
                    if (p[i] > p[j]) ++inv;
            return inv % 2;
        };
        do {
            SymbolTuple t{args[0]};
            for (unsigned i = 0; i < m; ++i) t.push_back(args[1 + perm[i]]);
            CochainEval e = chi(t);
            double sign = parity_of(perm) == 0 ? 1.0 : -1.0;
            acc.value += sign * e.value;
            acc.budget += e.budget;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return acc;
    };
    return out;
}

namespace {

Cochain hochschild_generic(const Cochain& chi, unsigned K, bool mixed) {
    Cochain out;
    out.arity = chi.arity + 1;
    out.fn = [chi, K, mixed](const SymbolTuple& args) {
        unsigned top = static_cast<unsigned>(args.size()) - 1;  // merges 0..top-1 plus wrap
        CochainEval acc;
        for (unsigned j = 0; j < top; ++j) {
            SymbolTuple t;
            t.reserve(args.size() - 1);
            for (unsigned i = 0; i < j; ++i) t.push_back(args[i]);
            bool use_star = !mixed || j == 0;
            t.push_back(use_star ? star(args[j], args[j + 1], K)
                                 : multiply_pointwise(args[j], args[j + 1]));
            for (unsigned i = j + 2; i <= top; ++i) t.push_back(args[i]);
            CochainEval e = chi(t);
            double sign = (j % 2 == 0) ? 1.0 : -1.0;
            acc.value += sign * e.value;
            acc.budget += e.budget;
        }
        // cyclic wrap a_top * a_0, always star
        SymbolTuple t{star(args[top], args[0], K)};
        for (unsigned i = 1; i < top; ++i) t.push_back(args[i]);
        CochainEval e = chi(t);
        double sign = (top % 2 == 0) ? 1.0 : -1.0;
        acc.value += sign * e.value;
        acc.budget += e.budget;
        return acc;
    };
    return out;
}

}  // namespace

Cochain hochschild_b_star(const Cochain& chi, unsigned K) {
    return hochschild_generic(chi, K, false);
}

Cochain hochschild_b_mixed(const Cochain& chi, unsigned K) {
    return hochschild_generic(chi, K, true);
}

ThetaRatioReport theta_ratio_experiment(unsigned dim, unsigned trials, std::uint64_t seed,
                                        const Integrator& integ) {
    if (dim != 1 && dim != 2)
        throw std::invalid_argument("theta_ratio_experiment: dim must be 1 or 2");
    ThetaRatioReport rep;
    rep.dim = dim;
    rep.trials = trials;
    RandomGen rng(seed);
    unsigned arity = 2 * dim + 1;
    unsigned K = chain_truncation(SymbolTuple(arity, ClassicalSymbol::zero(dim)), dim);
    K = std::max(K, residue_truncation_depth_total(Rational(0), dim));

    Cochain phi = flavored(arity, [K, &integ](const SymbolTuple& a, double* b) {
        // res(a_0 theta(a_1,a_2) * ... ) without the leading star of chi^res
        ClassicalSymbol acc = a[0];
        for (std::size_t i = 1; i + 1 < a.size(); i += 2)
            acc = star(acc, theta(a[i], a[i + 1], K), K);
        return wodzicki_residue(acc, integ, b);
    });
    Cochain denom = operator_A_all_but_first(phi);

    for (unsigned t = 0; t < trials; ++t) {
        SymbolTuple args;
        for (unsigned i = 0; i < arity; ++i)
            args.push_back(random_symbol(rng, dim, Rational(0), dim, 2));
        Cplx num = residue_cochain(args, K, integ);
        CochainEval den = denom(args);
        double scale = std::max(std::abs(num), std::abs(den.value));
        if (std::abs(den.value) < 1e-6 * std::max(1.0, scale)) continue;  // degenerate tuple
        rep.ratios.push_back(num / den.value);
        ++rep.admissible;
    }
    if (!rep.ratios.empty()) {
        Cplx sum{};
        for (const Cplx& r : rep.ratios) sum += r;
        rep.mean = sum / static_cast<double>(rep.ratios.size());
        double spread = 0.0;
        for (const Cplx& r : rep.ratios) spread = std::max(spread, std::abs(r - rep.mean));
        rep.rel_spread = spread / std::max(1e-300, std::abs(rep.mean));
    }
    // candidate constants from the paper's three displays
    Cplx i_unit(0.0, 1.0);
    double fact = 1.0;
    for (unsigned k = 2; k <= dim; ++k) fact *= k;
    Cplx c1 = std::pow(-i_unit, static_cast<double>(dim)) / fact;
    Cplx c2 = std::pow(Cplx(-1.0, 0.0), static_cast<double>(dim)) / fact;
    Cplx c3 = std::pow(i_unit, static_cast<double>(dim)) * fact;
    rep.dist_minus_i_pow = std::abs(rep.mean - c1);
    rep.dist_minus_one_pow = std::abs(rep.mean - c2);
    rep.dist_i_pow_fact = std::abs(rep.mean - c3);
    return rep;
}

}  // namespace symcalc
