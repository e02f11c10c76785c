#ifndef DPOLY_POLYNOMIAL_HPP
#define DPOLY_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dpoly/context.hpp"
#include "dpoly/monomial.hpp"
#include "dpoly/rational.hpp"

namespace dpoly {

/// Sparse differential polynomial over the rationals: a canonical term map
/// from monomials in derivative variables to non-zero coefficients. Values
/// are immutable after construction; all operations are pure.
class DiffPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit DiffPolynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static DiffPolynomial zero(ContextPtr ctx) { return DiffPolynomial(std::move(ctx)); }
    static DiffPolynomial constant(ContextPtr ctx, const Rational& c);
    static DiffPolynomial variable(ContextPtr ctx, std::size_t index);
    static DiffPolynomial variable(ContextPtr ctx, const std::string& name);
    static DiffPolynomial derivative_variable(ContextPtr ctx, const DerivativeVariable& v);
    static DiffPolynomial from_term(ContextPtr ctx, const Monomial& m, const Rational& c);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    /// The coefficient of the empty monomial (0 if absent).
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    /// Max monomial total degree; 0 for the zero polynomial by convention.
    std::uint32_t total_degree() const;

    /// Max over terms of the summed exponents of derivative variables with
    /// the given base.
    std::uint32_t degree_in(std::size_t base) const;
    std::uint32_t degree_in(const std::string& name) const;

    /// Base indices occurring anywhere in the polynomial (through derivatives).
    std::set<std::uint32_t> bases_used() const;
    bool uses_base(std::size_t base) const;

    DiffPolynomial operator-() const;
    DiffPolynomial scaled(const Rational& c) const;
    DiffPolynomial pow(std::uint32_t e) const;

    friend DiffPolynomial operator+(const DiffPolynomial& f, const DiffPolynomial& g);
    friend DiffPolynomial operator-(const DiffPolynomial& f, const DiffPolynomial& g);
    friend DiffPolynomial operator*(const DiffPolynomial& f, const DiffPolynomial& g);

    friend bool operator==(const DiffPolynomial& f, const DiffPolynomial& g);
    friend bool operator!=(const DiffPolynomial& f, const DiffPolynomial& g) { return !(f == g); }

    /// Applies derivation i (0-based): linear, Leibniz on products, kills
    /// constants, bumps operators on derivative variables.
    DiffPolynomial apply_derivation(std::size_t i) const;

    /// Iterated application per exponent of the operator.
    DiffPolynomial apply_operator(const DerivationOperator& op) const;

    /// Differential-ring substitution. Every assignment value must live in
    /// `target`; base variables not mapped must exist in `target` by name.
    /// A derivative variable op(v) with v mapped to g becomes op applied to g.
    DiffPolynomial substitute(const std::map<std::string, DiffPolynomial>& assignment,
                              const ContextPtr& target) const;

    /// Convenience: substitution whose target is this polynomial's own context.
    DiffPolynomial substitute(const std::map<std::string, DiffPolynomial>& assignment) const;

    /// Evaluates at a constant point: proper derivatives vanish, plain
    /// variables take the assigned value. Every base occurring in the
    /// polynomial must be assigned.
    Rational evaluate_at_constants(const std::map<std::string, Rational>& point) const;

    /// Rebuilds the polynomial over `target`, matching variables by name.
    DiffPolynomial lifted(const ContextPtr& target) const;

    /// Smallest exponent of the plain variable `base` over all terms
    /// (0 if some term lacks it); equals k > 0 iff base^k divides.
    std::uint32_t min_plain_exponent(std::uint32_t base) const;
    DiffPolynomial divided_by_plain_power(std::uint32_t base, std::uint32_t k) const;

    /// The sum of the terms of maximal total degree.
    DiffPolynomial leading_homogeneous_part() const;

    class Builder;

private:
    void add_in_place(const Monomial& m, const Rational& c);

    ContextPtr ctx_;
    TermMap terms_;
};

/// Accumulates terms, then freezes into a canonical polynomial.
class DiffPolynomial::Builder {
public:
    explicit Builder(ContextPtr ctx) : poly_(std::move(ctx)) {}
    void add(const Monomial& m, const Rational& c) { poly_.add_in_place(m, c); }
    void add(const DiffPolynomial& f);
    void add_scaled(const DiffPolynomial& f, const Rational& c);
    DiffPolynomial build() { return std::move(poly_); }

private:
    DiffPolynomial poly_;
};

}  // namespace dpoly

#endif
