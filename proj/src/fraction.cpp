#include "dpoly/fraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpoly {

DiffFraction::DiffFraction(DiffPolynomial num, DiffPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_context(num_.context(), den_.context(), "fraction");
    if (den_.is_zero()) throw std::invalid_argument("fraction: zero denominator");
}

DiffFraction DiffFraction::whole(DiffPolynomial p) {
    auto one = DiffPolynomial::constant(p.context(), Rational(1));
    return DiffFraction(std::move(p), std::move(one));
}

DiffFraction DiffFraction::operator-() const { return DiffFraction(-num_, den_); }

DiffFraction operator+(const DiffFraction& a, const DiffFraction& b) {
    return DiffFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

DiffFraction operator-(const DiffFraction& a, const DiffFraction& b) {
    return DiffFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

DiffFraction operator*(const DiffFraction& a, const DiffFraction& b) {
    return DiffFraction(a.num_ * b.num_, a.den_ * b.den_);
}

DiffFraction DiffFraction::pow(std::uint32_t e) const {
    return DiffFraction(num_.pow(e), den_.pow(e));
}

DiffFraction DiffFraction::apply_derivation(std::size_t i) const {
    return DiffFraction(num_.apply_derivation(i) * den_ - num_ * den_.apply_derivation(i),
                        den_ * den_);
}

DiffFraction DiffFraction::apply_operator(const DerivationOperator& op) const {
    DiffFraction out = *this;
    for (std::size_t i = 0; i < op.arity(); ++i) {
        for (std::uint32_t k = 0; k < op.exponent(i); ++k) out = out.apply_derivation(i);
    }
    return out;
}

bool DiffFraction::equivalent(const DiffFraction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

DiffFraction DiffFraction::reduced_by_plain_power(std::uint32_t base) const {
    if (den_.term_count() != 1) return *this;
    const auto& [mono, coeff] = *den_.terms().begin();
    const auto k = mono.degree_in_base(base);
    if (mono.total_degree() != k || mono.max_order_in_base(base) != 0) return *this;
    // Denominator is coeff * v^k; cancel what the numerator shares.
    const auto shared = std::min(k, num_.min_plain_exponent(base));
    if (shared == 0) return *this;
    return DiffFraction(num_.divided_by_plain_power(base, shared),
                        den_.divided_by_plain_power(base, shared));
}

}  // namespace dpoly
