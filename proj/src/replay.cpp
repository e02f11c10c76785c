#include "dpoly/certifier.hpp"

#include <stdexcept>

namespace dpoly {

// Independent soundness checker. Everything is recomputed from the recorded
// data with ring operations; nothing here calls the engine that produced the
// certificate.

namespace {

std::vector<Rational> vec_derivative(const std::vector<Rational>& p) {
    std::vector<Rational> out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * Rational(static_cast<long>(k)));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

std::vector<Rational> vec_multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

DiffPolynomial vec_to_polynomial(const std::vector<Rational>& coeffs, const ContextPtr& ctx,
                                 const std::string& var) {
    const DerivativeVariable y{static_cast<std::uint32_t>(*ctx->find(var)),
                               DerivationOperator::identity(ctx->derivation_count())};
    DiffPolynomial::Builder out(ctx);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out.add(Monomial::variable(y, static_cast<std::uint32_t>(k)), coeffs[k]);
    }
    return out.build();
}

bool integrability_replays(const Certificate& cert, bool& compatible) {
    const FirstOrderSystem& sys = cert.system;
    const std::size_t m = sys.derivation_count();
    const ContextPtr ctx = sys.ring();

    compatible = true;
    std::size_t expected_pairs = 0;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
            ++expected_pairs;
            auto lhs = vec_multiply(vec_derivative(sys.coefficients(j)), sys.coefficients(i));
            const auto rhs = vec_multiply(vec_derivative(sys.coefficients(i)), sys.coefficients(j));
            if (lhs.size() < rhs.size()) lhs.resize(rhs.size(), Rational(0));
            for (std::size_t k = 0; k < rhs.size(); ++k) lhs[k] -= rhs[k];
            while (!lhs.empty() && lhs.back().is_zero()) lhs.pop_back();
            const bool ok = lhs.empty();
            compatible = compatible && ok;

            bool found = false;
            for (const auto& pair : cert.integrability.pairs) {
                if (pair.i != i || pair.j != j) continue;
                found = true;
                if (pair.compatible != ok) return false;
                if (pair.commutator != vec_to_polynomial(lhs, ctx, sys.variable())) return false;
            }
            if (!found) return false;
        }
    }
    return cert.integrability.pairs.size() == expected_pairs &&
           cert.integrability.compatible == compatible;
}

bool infinity_check_replays(const Certificate& cert, const InfinityCheck& check,
                            const std::string& fresh, bool& excludes) {
    const FirstOrderSystem& sys = cert.system;
    const auto& h = check.homogenized;
    const ContextPtr& hctx = h.context();
    if (hctx->derivation_count() != sys.derivation_count()) return false;
    if (!hctx->has(sys.variable()) || !hctx->has(fresh)) return false;

    // The recorded polynomial is the homogenization iff it is homogeneous of
    // the recorded degree, the fresh variable does not divide it, and setting
    // the fresh variable to one restores the affine equation.
    if (!is_delta_homogeneous(h, {sys.variable(), fresh}, check.degree)) return false;
    if (check.degree > 0 && h.min_plain_exponent(static_cast<std::uint32_t>(*hctx->find(fresh))) > 0) {
        return false;
    }
    std::map<std::string, DiffPolynomial> to_one;
    to_one.emplace(fresh, DiffPolynomial::constant(hctx, Rational(1)));
    const DiffPolynomial affine = h.substitute(to_one).lifted(sys.ring());
    if (affine != sys.equation(check.derivation, sys.ring())) return false;

    std::map<std::string, Rational> point{{sys.variable(), Rational(1)}, {fresh, Rational(0)}};
    const Rational value = h.evaluate_at_constants(point);
    if (value != check.value) return false;
    if (check.excludes != !value.is_zero()) return false;
    excludes = check.excludes;
    return true;
}

bool monic_witness_replays(const Certificate& cert, const MonicWitness& w) {
    const FirstOrderSystem& sys = cert.system;
    const std::size_t i = w.derivation;
    if (i < 1 || i > sys.derivation_count() || sys.degree(i) < 2) return false;
    if (w.leading_coefficient != sys.leading_coefficient(i)) return false;
    if (w.scaling.scale.is_zero()) return false;

    const ContextPtr ring = sys.ring();
    const DiffPolynomial equation = sys.equation(i, ring);
    if (w.scaling.scaled != equation.scaled(w.scaling.scale)) return false;

    // y^n with unit coefficient on top, everything else of lower total degree.
    const DiffPolynomial& scaled = w.scaling.scaled;
    if (scaled.total_degree() != w.scaling.power) return false;
    const DiffPolynomial top = scaled.leading_homogeneous_part();
    if (top.term_count() != 1) return false;
    const auto& [mono, coeff] = *top.terms().begin();
    if (!coeff.is_one() || mono.factors().size() != 1) return false;
    const auto& [v, e] = mono.factors().front();
    return v.is_plain() && v.base == *ring->find(sys.variable()) && e == w.scaling.power;
}

/// Leibniz expansion of 0 = d_i(1 - sum c_j x^j) with d_i(x) = P_i(x),
/// re-derived from the coefficient vector of P_i.
LaurentSeries rederive_identity(const LaurentRelation& rel, std::size_t i,
                                const FirstOrderSystem& sys) {
    const auto& p = sys.coefficients(i);
    LaurentSeries out(rel.context());
    for (const auto& [j, c] : rel.rhs().terms()) {
        out.add_term(j, c.apply_derivation(i - 1));
        if (j == 0) continue;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k].is_zero()) continue;
            out.add_term(j - 1 + static_cast<int>(k), c.scaled(Rational(j) * p[k]));
        }
    }
    return out;
}

bool step_replays(const Certificate& cert, const ReductionStep& step,
                  const LaurentRelation& expected_input) {
    const FirstOrderSystem& sys = cert.system;
    const std::size_t i = step.derivation;
    if (i < 1 || i > sys.derivation_count()) return false;
    const int d = sys.degree(i);
    if (d < 2) return false;
    const Rational a = sys.leading_coefficient(i);

    if (!(step.input == expected_input)) return false;
    if (step.input.rhs().is_zero()) return false;
    const int s = step.input.max_degree();
    if (s < 1) return false;

    // Renaming bookkeeping: at most one fresh generator, defined as the old
    // top coefficient, substituted at the top position.
    if (step.introduced.empty()) {
        if (!(step.normalized == step.input)) return false;
    } else if (step.introduced.size() == 1) {
        const auto& [name, definition] = step.introduced.front();
        const ContextPtr& ext = step.normalized.context();
        if (!ext->has(name) || step.input.context()->has(name)) return false;
        if (ext->variable_count() != step.input.context()->variable_count() + 1) return false;
        for (const auto& var : step.input.context()->variables()) {
            if (!ext->has(var)) return false;
        }
        if (definition != step.input.rhs().coefficient(s).lifted(ext)) return false;
        LaurentSeries renamed = step.input.rhs().lifted(ext);
        renamed.set_term(s, DiffPolynomial::variable(ext, name));
        if (!(step.normalized == LaurentRelation(std::move(renamed)))) return false;
    } else {
        return false;
    }
    if (step.normalized.max_degree() != s) return false;
    if (!coefficients_in_generator_ideal(step.normalized.rhs())) return false;

    // The differentiated identity, re-derived from scratch.
    const LaurentSeries identity = rederive_identity(step.normalized, i, sys);
    if (!(identity == step.differentiated)) return false;

    const int top_exp = s + d - 1;
    const Rational sa = Rational(s) * a;
    const DiffPolynomial top = step.normalized.rhs().coefficient(s);
    if (identity.is_zero() || identity.max_degree() != top_exp) return false;
    if (identity.coefficient(top_exp) != top.scaled(sa)) return false;
    if (step.solved_exponent != s) return false;

    LaurentSeries rest = identity;
    rest.erase_term(top_exp);
    if (!(rest.scaled(-sa.inverse()).shifted(-(d - 1)) == step.solved_rhs)) return false;

    LaurentSeries expected_output = step.normalized.rhs();
    expected_output.erase_term(s);
    expected_output = expected_output + step.solved_rhs;
    if (!(step.output == LaurentRelation(std::move(expected_output)))) return false;

    // Strict descent and ideal closure.
    if (!step.output.rhs().is_zero() && step.output.max_degree() >= s) return false;
    return coefficients_in_generator_ideal(step.output.rhs());
}

bool reduction_replays(const Certificate& cert, const ReductionTrace& trace, bool& complete) {
    if (!coefficients_in_generator_ideal(trace.seed.rhs())) return false;

    LaurentRelation current = trace.seed;
    for (const auto& step : trace.steps) {
        if (!step_replays(cert, step, current)) return false;
        current = step.output;
    }
    if (!(trace.final_relation == current)) return false;
    complete = current.rhs().is_zero() || current.max_degree() <= 0;
    return true;
}

bool verdict_replays(const Certificate& cert) {
    bool compatible = false;
    if (!integrability_replays(cert, compatible)) return false;
    if (!compatible) return cert.verdict == Verdict::Incompatible;
    if (cert.verdict == Verdict::Incompatible) return false;

    const FirstOrderSystem& sys = cert.system;
    if (sys.all_linear()) return cert.verdict == Verdict::ReducesToConstants;
    if (cert.verdict == Verdict::ReducesToConstants) return false;

    // One infinity check per derivation, in order, each re-verified.
    if (cert.infinity_checks.size() != sys.derivation_count()) return false;
    std::string fresh;
    {
        // The homogenized polynomials live in F{y, y1}; read the fresh name
        // off the first record and require consistency.
        const auto& vars = cert.infinity_checks.front().homogenized.context()->variables();
        if (vars.size() != 2 || vars.front() != sys.variable()) return false;
        fresh = vars.back();
    }
    bool all_exclude = true;
    for (std::size_t i = 1; i <= sys.derivation_count(); ++i) {
        const auto& check = cert.infinity_checks[i - 1];
        if (check.derivation != i) return false;
        bool excludes = false;
        if (!infinity_check_replays(cert, check, fresh, excludes)) return false;
        all_exclude = all_exclude && excludes;
    }
    if (!all_exclude) return cert.verdict == Verdict::InfinityNotExcluded;
    if (cert.verdict == Verdict::InfinityNotExcluded) return false;

    // Monic witnesses for exactly the components of degree >= 2.
    std::size_t expected = 0;
    for (std::size_t i = 1; i <= sys.derivation_count(); ++i) {
        if (sys.degree(i) >= 2) ++expected;
    }
    if (cert.monic_witnesses.size() != expected) {
        return cert.verdict == Verdict::NotMonic;
    }
    std::size_t seen = 0;
    for (std::size_t i = 1; i <= sys.derivation_count(); ++i) {
        if (sys.degree(i) < 2) continue;
        if (!monic_witness_replays(cert, cert.monic_witnesses[seen++])) return false;
    }
    if (cert.verdict == Verdict::NotMonic) return false;

    if (!cert.reduction) return false;
    bool complete = false;
    if (!reduction_replays(cert, *cert.reduction, complete)) return false;
    if (!complete) return cert.verdict == Verdict::ReductionFailed;
    return cert.verdict == Verdict::Certified;
}

}  // namespace

bool replay_certificate(const Certificate& cert) {
    try {
        return verdict_replays(cert);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace dpoly
