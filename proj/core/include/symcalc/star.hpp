#ifndef SYMCALC_STAR_HPP
#define SYMCALC_STAR_HPP

#include "symcalc/symbol.hpp"

namespace symcalc {

// Truncation bookkeeping for the left (star) product
//   (a * b)_K = sum_{|alpha| <= K} (-i)^{|alpha|}/alpha! d_xi^alpha a . d_x^alpha b.
struct StarTruncation {
    unsigned K = 0;
    Rational certified_remainder_order;  // m + m' - K - 1
};

ClassicalSymbol star(const ClassicalSymbol& a, const ClassicalSymbol& b, unsigned K);

// star(a,b,K) - star(b,a,K)
ClassicalSymbol commutator_star(const ClassicalSymbol& a, const ClassicalSymbol& b, unsigned K);

// theta(a,b) = a*b - a.b, the star-vs-pointwise deviation
ClassicalSymbol theta(const ClassicalSymbol& a, const ClassicalSymbol& b, unsigned K);

// Smallest K >= 0 with m + m' - K - 1 < -n, so the discarded star tail has
// no degree -n part and residues are truncation-exact.
unsigned residue_truncation_depth(const Rational& m, const Rational& mp, unsigned n);
// Same for a chain with given total order.
unsigned residue_truncation_depth_total(const Rational& total_order, unsigned n);

}  // namespace symcalc

#endif
