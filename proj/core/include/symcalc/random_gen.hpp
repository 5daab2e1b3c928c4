#ifndef SYMCALC_RANDOM_GEN_HPP
#define SYMCALC_RANDOM_GEN_HPP

#include <cstdint>

#include "symcalc/forms.hpp"
#include "symcalc/symbol.hpp"

namespace symcalc {

// Seeded deterministic generator (splitmix64).  Not std::mt19937 +
// distributions: those are implementation-defined, and reports must be
// byte-identical across toolchains.
class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    std::uint64_t uniform(std::uint64_t bound);  // in [0, bound)
    bool chance(unsigned num, unsigned den);     // true with probability num/den
    Rational small_rational();                   // nonzero, numerator in [-3,3], denom in {1,2,3}

private:
    std::uint64_t state_;
};

// Seeded random classical symbol: windowed, chi on every term, terms on the
// degree lattice order - j for j = 0..depth (j = 0 always present).
ClassicalSymbol random_symbol(RandomGen& rng, unsigned dim, const Rational& order, unsigned depth,
                              unsigned max_poly_degree);

// Seeded random symbol-valued form of the given degree: every (I, J) slot
// filled with probability 3/4 (at least one), coefficient order m - |J|.
SymbolForm random_form(RandomGen& rng, unsigned dim, unsigned degree, const Rational& order,
                       unsigned depth, unsigned max_poly_degree);

}  // namespace symcalc

#endif
