#ifndef DPOLY_MONOMIAL_HPP
#define DPOLY_MONOMIAL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dpoly/context.hpp"

namespace dpoly {

/// Power product of derivative variables. Factors are kept sorted by variable
/// with strictly positive exponents; the empty product is 1.
class Monomial {
public:
    using Factor = std::pair<DerivativeVariable, std::uint32_t>;

    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial variable(DerivativeVariable v, std::uint32_t e = 1);

    bool is_one() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    std::uint32_t total_degree() const;
    std::uint32_t exponent_of(const DerivativeVariable& v) const;

    /// Sum of exponents of every factor whose base is `base`.
    std::uint32_t degree_in_base(std::uint32_t base) const;

    /// Largest operator order among factors with the given base (0 if absent).
    std::uint32_t max_order_in_base(std::uint32_t base) const;

    bool contains_base(std::uint32_t base) const;

    /// True if every factor is an identity-operator variable (no proper derivatives).
    bool is_derivative_free() const;

    Monomial times(const DerivativeVariable& v, std::uint32_t e = 1) const;
    Monomial times(const Monomial& o) const;

    /// Removes v^e; throws if the exponent of v is smaller than e.
    Monomial divided_by(const DerivativeVariable& v, std::uint32_t e) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Plain lexicographic comparison of the factor sequences.
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        return a.factors_ <=> b.factors_;
    }

private:
    std::vector<Factor> factors_;
};

/// Canonical term order: graded, and within a degree the lexicographically
/// smaller factor sequence ranks higher so that reverse iteration prints
/// degree-descending, lex-ascending.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return b < a;
    }
};

}  // namespace dpoly

#endif
