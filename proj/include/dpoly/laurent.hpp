#ifndef DPOLY_LAURENT_HPP
#define DPOLY_LAURENT_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dpoly/polynomial.hpp"

namespace dpoly {

/// Finite sum  sum_j c_j * x^j  with integer (possibly negative) exponents
/// and coefficients in a differential polynomial ring. Canonical: no zero
/// coefficients stored.
class LaurentSeries {
public:
    explicit LaurentSeries(ContextPtr coefficient_ctx) : ctx_(std::move(coefficient_ctx)) {}

    const ContextPtr& context() const { return ctx_; }
    const std::map<int, DiffPolynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Throws on the zero series.
    int max_degree() const;
    int min_degree() const;

    DiffPolynomial coefficient(int j) const;

    void add_term(int j, const DiffPolynomial& c);
    void set_term(int j, const DiffPolynomial& c);
    void erase_term(int j) { terms_.erase(j); }

    LaurentSeries scaled(const Rational& c) const;
    /// Multiplies every term by x^k.
    LaurentSeries shifted(int k) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

    /// Rebuilds the series with every coefficient lifted to `target`.
    LaurentSeries lifted(const ContextPtr& target) const;

private:
    ContextPtr ctx_;
    std::map<int, DiffPolynomial> terms_;
};

/// The statement  1 = sum_j c_j x^j  over a free differential coefficient
/// ring whose generators stand for unspecified ideal elements.
class LaurentRelation {
public:
    explicit LaurentRelation(LaurentSeries rhs) : rhs_(std::move(rhs)) {}

    const LaurentSeries& rhs() const { return rhs_; }
    const ContextPtr& context() const { return rhs_.context(); }

    int max_degree() const { return rhs_.max_degree(); }
    int min_degree() const { return rhs_.min_degree(); }

    friend bool operator==(const LaurentRelation& a, const LaurentRelation& b) {
        return a.rhs_ == b.rhs_;
    }

private:
    LaurentSeries rhs_;
};

/// True iff every monomial of f contains a derivative variable, i.e. f lies
/// in the ideal generated by the ring variables and their derivatives.
bool in_generator_ideal(const DiffPolynomial& f);

/// True for every coefficient of the series.
bool coefficients_in_generator_ideal(const LaurentSeries& s);

// Canonical text forms. Exponent-descending; a multi-term coefficient is
// parenthesized; x^0 is dropped, x^1 prints as "x", negative exponents as
// "x^-1".
std::string print_series(const LaurentSeries& s);
std::string print_relation(const LaurentRelation& r);   // "1 = ..."
std::string print_identity(const LaurentSeries& s);     // "0 = ..."

/// Parses "1 = <series>". Coefficients use the polynomial grammar over
/// `generator_ctx`; `x` is the distinguished Laurent variable and may carry a
/// signed integer exponent.
LaurentRelation parse_relation(std::string_view text, const ContextPtr& generator_ctx);

/// Identifiers of a relation string, excluding `x`, sorted and deduplicated.
std::vector<std::string> scan_relation_generators(std::string_view text);

}  // namespace dpoly

#endif
