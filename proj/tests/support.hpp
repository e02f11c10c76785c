#ifndef DPOLY_TESTS_SUPPORT_HPP
#define DPOLY_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "dpoly/laurent.hpp"
#include "dpoly/parser.hpp"
#include "dpoly/polynomial.hpp"

namespace dpoly::testing {

inline DiffPolynomial P(const ContextPtr& ctx, const std::string& text) {
    return parse_polynomial(text, ctx);
}

struct RandomPolyConfig {
    std::uint32_t max_terms = 5;
    std::uint32_t max_factors = 3;
    std::uint32_t max_monomial_degree = 3;
    std::uint32_t max_operator_order = 2;
    long coefficient_bound = 9;       // coefficients in [-bound, bound] \ {0}
    bool derivative_free = false;
};

/// Random canonical polynomial over the full variable set of ctx.
inline DiffPolynomial random_polynomial(std::mt19937& rng, const ContextPtr& ctx,
                                        const RandomPolyConfig& cfg = {}) {
    std::uniform_int_distribution<std::uint32_t> term_count(1, cfg.max_terms);
    std::uniform_int_distribution<long> coeff(-cfg.coefficient_bound, cfg.coefficient_bound);
    std::uniform_int_distribution<std::uint32_t> base(
        0, static_cast<std::uint32_t>(ctx->variable_count() - 1));

    DiffPolynomial::Builder out(ctx);
    const auto n = term_count(rng);
    for (std::uint32_t t = 0; t < n; ++t) {
        long c = coeff(rng);
        if (c == 0) c = 1;
        Monomial mono;
        std::uniform_int_distribution<std::uint32_t> factor_count(0, cfg.max_factors);
        const auto factors = factor_count(rng);
        std::uint32_t budget = cfg.max_monomial_degree;
        for (std::uint32_t f = 0; f < factors && budget > 0; ++f) {
            DerivationOperator op(ctx->derivation_count());
            if (!cfg.derivative_free) {
                std::uint32_t order_budget = cfg.max_operator_order;
                for (std::size_t d = 0; d < ctx->derivation_count() && order_budget > 0; ++d) {
                    std::uniform_int_distribution<std::uint32_t> e(0, order_budget);
                    const auto k = e(rng);
                    for (std::uint32_t b = 0; b < k; ++b) op = op.bumped(d);
                    order_budget -= k;
                }
            }
            std::uniform_int_distribution<std::uint32_t> exp(1, budget);
            const auto e = exp(rng);
            mono = mono.times(DerivativeVariable{base(rng), op}, e);
            budget -= e;
        }
        out.add(mono, Rational(c));
    }
    return out.build();
}

/// Random seed relation over generators m0..m(k-1): degrees within
/// [min_degree, max_degree], coefficients built from generators and their
/// first derivatives (never a bare constant), non-zero top coefficient.
inline LaurentRelation random_seed(std::mt19937& rng, std::size_t derivations,
                                   std::uint32_t generators, int max_degree, int min_degree) {
    std::vector<std::string> names;
    for (std::uint32_t g = 0; g < generators; ++g) names.push_back("m" + std::to_string(g));
    const ContextPtr ctx = make_context(derivations, names);

    std::uniform_int_distribution<std::uint32_t> gen(0, generators - 1);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> order(0, 1);
    std::uniform_int_distribution<std::size_t> deriv(0, derivations - 1);
    std::uniform_int_distribution<int> term_n(1, 2);

    const auto random_coefficient = [&]() {
        DiffPolynomial::Builder b(ctx);
        const int n = term_n(rng);
        for (int t = 0; t < n; ++t) {
            long c = coeff(rng);
            if (c == 0) c = 1;
            DerivationOperator op(derivations);
            if (order(rng) == 1) op = op.bumped(deriv(rng));
            b.add(Monomial::variable(DerivativeVariable{gen(rng), op}), Rational(c));
        }
        return b.build();
    };

    std::uniform_int_distribution<int> top(1, max_degree);
    const int s = top(rng);
    LaurentSeries rhs(ctx);
    for (int j = min_degree; j <= s; ++j) {
        std::uniform_int_distribution<int> keep(0, 2);
        if (j != s && keep(rng) == 0) continue;
        rhs.add_term(j, random_coefficient());
    }
    if (rhs.is_zero() || rhs.max_degree() != s) {
        rhs.set_term(s, DiffPolynomial::variable(ctx, "m0"));
    }
    return LaurentRelation(std::move(rhs));
}

}  // namespace dpoly::testing

#endif
