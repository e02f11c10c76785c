#ifndef DPOLY_FRACTION_HPP
#define DPOLY_FRACTION_HPP

#include "dpoly/polynomial.hpp"

namespace dpoly {

/// Quotient of two differential polynomials with a non-zero denominator.
/// Arithmetic never reduces; `reduced_by_plain_power` cancels a shared power
/// of one plain variable when the denominator is a pure power of it, which is
/// all the homogenizer needs. Correctness never depends on reduced form.
class DiffFraction {
public:
    DiffFraction(DiffPolynomial num, DiffPolynomial den);

    static DiffFraction whole(DiffPolynomial p);

    const DiffPolynomial& numerator() const { return num_; }
    const DiffPolynomial& denominator() const { return den_; }
    const ContextPtr& context() const { return num_.context(); }

    bool is_zero() const { return num_.is_zero(); }

    DiffFraction operator-() const;
    friend DiffFraction operator+(const DiffFraction& a, const DiffFraction& b);
    friend DiffFraction operator-(const DiffFraction& a, const DiffFraction& b);
    friend DiffFraction operator*(const DiffFraction& a, const DiffFraction& b);

    DiffFraction pow(std::uint32_t e) const;

    /// Quotient rule: (n/d)' = (n'd - nd') / d^2.
    DiffFraction apply_derivation(std::size_t i) const;
    DiffFraction apply_operator(const DerivationOperator& op) const;

    /// Cross-multiplication equality: n1*d2 == n2*d1.
    bool equivalent(const DiffFraction& o) const;

    /// If the denominator is c * v^k for the plain variable `base`, cancels
    /// the largest power of v shared with the numerator. Otherwise returns
    /// *this unchanged.
    DiffFraction reduced_by_plain_power(std::uint32_t base) const;

private:
    DiffPolynomial num_;
    DiffPolynomial den_;
};

}  // namespace dpoly

#endif
