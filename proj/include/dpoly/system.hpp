#ifndef DPOLY_SYSTEM_HPP
#define DPOLY_SYSTEM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dpoly/polynomial.hpp"
#include "dpoly/rational.hpp"

namespace dpoly {

/// First-order system  d_i(y) = P_i(y), one ordinary (derivative-free)
/// polynomial per derivation. P_i is stored as a dense coefficient vector
/// indexed by power, with no trailing zeros.
class FirstOrderSystem {
public:
    FirstOrderSystem(std::string variable, std::vector<std::vector<Rational>> rhs);

    /// Parses "d1(y)=y^2;d2(y)=2*y^2". The indices must be exactly 1..m in
    /// some order and every equation must use the same variable.
    static FirstOrderSystem parse(std::string_view text);

    std::size_t derivation_count() const { return rhs_.size(); }
    const std::string& variable() const { return var_; }

    /// deg P_i for 1-based i; -1 for the zero polynomial.
    int degree(std::size_t i) const;
    bool is_linear(std::size_t i) const { return degree(i) <= 1; }
    bool all_linear() const;
    /// Smallest 1-based index with deg P_i >= 2, or 0 when none exists.
    std::size_t first_nonlinear() const;

    Rational leading_coefficient(std::size_t i) const;
    const std::vector<Rational>& coefficients(std::size_t i) const { return rhs_.at(i - 1); }

    /// The ring F{y} with this system's derivation count.
    ContextPtr ring() const;

    DiffPolynomial rhs_polynomial(std::size_t i, const ContextPtr& ctx) const;
    /// d_i(y) - P_i(y).
    DiffPolynomial equation(std::size_t i, const ContextPtr& ctx) const;

    /// Canonical text "d1(y) = y^2" for equation i.
    std::string equation_string(std::size_t i) const;

    friend bool operator==(const FirstOrderSystem&, const FirstOrderSystem&) = default;

private:
    std::string var_;
    std::vector<std::vector<Rational>> rhs_;
};

struct IntegrabilityPair {
    std::size_t i;                // 1-based
    std::size_t j;                // 1-based, i < j
    DiffPolynomial commutator;    // P_j' * P_i - P_i' * P_j in F{y}
    bool compatible;
};

struct IntegrabilityReport {
    std::vector<IntegrabilityPair> pairs;
    bool compatible;
};

/// Pairwise commutation check: the mixed derivatives of y agree iff
/// P_j' P_i = P_i' P_j for every pair.
IntegrabilityReport check_integrability(const FirstOrderSystem& sys);

}  // namespace dpoly

#endif
