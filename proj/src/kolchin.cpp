#include "dpoly/kolchin.hpp"

#include <stdexcept>

#include "dpoly/homogenization.hpp"

namespace dpoly {

bool kolchin_identity_holds(const DiffPolynomial& f1, const DiffPolynomial& f2, std::size_t i) {
    const DiffPolynomial dy =
        DiffPolynomial::variable(f1.context(), "y").apply_derivation(i - 1);
    return f1.apply_derivation(i - 1) == dy * f2;
}

KolchinWitness build_kolchin_witness(std::size_t i, std::size_t m) {
    if (i < 1 || i > m) throw std::invalid_argument("kolchin: derivation index out of range");

    const ContextPtr ctx = make_context(m, {"y", "z"});
    const DiffPolynomial y = DiffPolynomial::variable(ctx, "y");
    const DiffPolynomial z = DiffPolynomial::variable(ctx, "z");
    const DiffPolynomial one = DiffPolynomial::constant(ctx, Rational(1));
    const DiffPolynomial dy = y.apply_derivation(i - 1);

    // f1 = z*(d_i y)^2 + y^4 - 1,  f2 = 2*z*d_i^2(y) + d_i(z)*d_i(y) + 4*y^3.
    const DiffPolynomial f1 = z * dy.pow(2) + y.pow(4) - one;
    const DiffPolynomial f2 = DiffPolynomial::constant(ctx, Rational(2)) * z * dy.apply_derivation(i - 1) +
                              z.apply_derivation(i - 1) * dy +
                              DiffPolynomial::constant(ctx, Rational(4)) * y.pow(3);

    if (!kolchin_identity_holds(f1, f2, i)) {
        throw std::logic_error("kolchin: d_i(f1) != d_i(y) * f2; the ring operations are broken");
    }

    const auto h = homogenize(f1, {"y"}, "y1");
    DiffPolynomial at_infinity = value_at_infinity(h.result, "y", "y1");
    if (at_infinity.is_zero()) {
        throw std::logic_error("kolchin: homogenization vanished at the point at infinity");
    }

    return KolchinWitness{i, f1, f2, h.result, h.degree, std::move(at_infinity)};
}

}  // namespace dpoly
