#ifndef DPOLY_KOLCHIN_HPP
#define DPOLY_KOLCHIN_HPP

#include <cstddef>

#include "dpoly/polynomial.hpp"

namespace dpoly {

/// The symbolic core of the classical non-completeness example on the
/// projective line: f1 = z*(d_i y)^2 + y^4 - 1 together with its derivative
/// cofactor f2 = 2*z*d_i^2(y) + d_i(z)*d_i(y) + 4*y^3, the homogenization of
/// f1 in y, and its value at the point at infinity.
struct KolchinWitness {
    std::size_t derivation;        // 1-based index used throughout
    DiffPolynomial f1;             // in F{y, z}
    DiffPolynomial f2;
    DiffPolynomial homogenized;    // homogenization of f1 w.r.t. y, fresh y1
    std::uint32_t degree;
    DiffPolynomial infinity_value; // value at (y, y1) = (1, 0), symbolic in z
};

/// True iff d_i(f1) equals d_i(y) * f2 exactly.
bool kolchin_identity_holds(const DiffPolynomial& f1, const DiffPolynomial& f2, std::size_t i);

/// Constructs the witness over m derivations and verifies both invariants
/// (the derivative identity and the non-vanishing at infinity), throwing
/// std::logic_error if either breaks.
KolchinWitness build_kolchin_witness(std::size_t i, std::size_t m);

}  // namespace dpoly

#endif
