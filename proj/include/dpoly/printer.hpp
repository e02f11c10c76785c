#ifndef DPOLY_PRINTER_HPP
#define DPOLY_PRINTER_HPP

#include <string>

#include "dpoly/monomial.hpp"
#include "dpoly/polynomial.hpp"

namespace dpoly {

// Canonical renderings. parse(print(f)) == f for every polynomial; the term
// order is total degree descending, then lexicographically ascending factor
// sequences, with factors of a monomial in ascending variable order.

std::string print(const DerivativeVariable& v, const RingContext& ctx);
std::string print(const Monomial& m, const RingContext& ctx);
std::string print(const DiffPolynomial& f);

}  // namespace dpoly

#endif
