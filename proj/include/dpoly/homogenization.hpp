#ifndef DPOLY_HOMOGENIZATION_HPP
#define DPOLY_HOMOGENIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "dpoly/fraction.hpp"
#include "dpoly/polynomial.hpp"

namespace dpoly {

/// Definitional homogeneity test: substitutes t*v for every v in `vars` with
/// t a fresh differential indeterminate and compares against t^d * f exactly.
/// A structural degree count is used only as a fast pre-filter. When `fresh`
/// is given it must not collide with a ring variable; otherwise a free name
/// is picked automatically.
bool is_delta_homogeneous(const DiffPolynomial& f, const std::vector<std::string>& vars,
                          std::uint32_t degree,
                          const std::optional<std::string>& fresh = std::nullopt);

struct Homogenization {
    DiffPolynomial result;   // lives in the ring extended by the fresh variable
    std::uint32_t degree;
};

/// Substitutes v -> v/y0 for v in `vars`, clears the minimal power of y0, and
/// returns the numerator together with that power. The result is homogeneous
/// of the returned degree in vars + {y0} and dehomogenizes back to f; both
/// facts are checked before returning.
Homogenization homogenize(const DiffPolynomial& f, const std::vector<std::string>& vars,
                          const std::string& y0);

/// Sets y0 and all of its derivatives to 1 resp. 0 and drops y0 from the ring.
DiffPolynomial dehomogenize(const DiffPolynomial& F, const std::string& y0);

/// Value of F at the projective point (v, y0) = (1, 0): a polynomial in the
/// leftover variables (constants stay symbolic). F must be homogeneous in
/// {v, y0}.
DiffPolynomial value_at_infinity(const DiffPolynomial& F, const std::string& v,
                                 const std::string& y0);

/// True iff value_at_infinity(F, v, y0) is not identically zero.
bool excludes_infinity(const DiffPolynomial& F, const std::string& v, const std::string& y0);

}  // namespace dpoly

#endif
