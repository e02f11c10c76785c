#include "dpoly/certifier.hpp"

#include <stdexcept>

#include "dpoly/parser.hpp"
#include "dpoly/printer.hpp"

namespace dpoly {

std::optional<MonicScaling> monic_scaling(const DiffPolynomial& f) {
    if (f.is_constant()) throw std::invalid_argument("monic: constant polynomial");
    const std::uint32_t n = f.total_degree();
    const DiffPolynomial top = f.leading_homogeneous_part();
    if (top.term_count() != 1) return std::nullopt;
    const auto& [mono, coeff] = *top.terms().begin();
    // The whole top degree must sit in one pure power of one plain variable.
    if (mono.factors().size() != 1) return std::nullopt;
    const auto& [v, e] = mono.factors().front();
    if (!v.is_plain() || e != n) return std::nullopt;
    const Rational scale = coeff.inverse();
    return MonicScaling{scale, n, f.scaled(scale)};
}

bool is_monic(const DiffPolynomial& f) { return monic_scaling(f).has_value(); }

LaurentSeries differentiate_relation(const LaurentRelation& rel, std::size_t i,
                                     const FirstOrderSystem& sys) {
    if (i < 1 || i > sys.derivation_count()) {
        throw std::invalid_argument("differentiate: derivation index out of range");
    }
    const auto& p = sys.coefficients(i);
    LaurentSeries out(rel.context());
    for (const auto& [j, c] : rel.rhs().terms()) {
        out.add_term(j, c.apply_derivation(i - 1));
        if (j == 0) continue;
        // j * c * x^(j-1) * P_i(x), with P_i expanded into powers of x.
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k].is_zero()) continue;
            out.add_term(j - 1 + static_cast<int>(k), c.scaled(Rational(j) * p[k]));
        }
    }
    return out;
}

namespace {

/// The top coefficient must be a bare generator: one term, coefficient one,
/// a single plain variable to the first power.
bool top_is_single_generator(const LaurentRelation& rel) {
    const DiffPolynomial top = rel.rhs().coefficient(rel.max_degree());
    if (top.term_count() != 1) return false;
    const auto& [mono, coeff] = *top.terms().begin();
    if (!coeff.is_one() || mono.factors().size() != 1) return false;
    const auto& [v, e] = mono.factors().front();
    return v.is_plain() && e == 1;
}

}  // namespace

namespace {

std::string fresh_generator_name(const RingContext& ctx) {
    for (std::size_t k = 1;; ++k) {
        std::string candidate = "w" + std::to_string(k);
        if (!ctx.has(candidate)) return candidate;
    }
}

}  // namespace

ReductionStep reduce_leading_term(const LaurentRelation& rel, std::size_t i,
                                  const FirstOrderSystem& sys) {
    const int s = rel.max_degree();
    if (s < 1) throw std::invalid_argument("reduce: relation already has max degree <= 0");
    const int d = sys.degree(i);
    if (d < 2) {
        throw std::invalid_argument("reduce: deg P_" + std::to_string(i) +
                                    " < 2, the step does not lower the degree");
    }
    const Rational a = sys.leading_coefficient(i);

    // Name a compound top coefficient so the solved term is a bare generator.
    std::vector<std::pair<std::string, DiffPolynomial>> introduced;
    LaurentRelation normalized = rel;
    if (!top_is_single_generator(normalized)) {
        const DiffPolynomial top = rel.rhs().coefficient(s);
        const std::string fresh = fresh_generator_name(*rel.context());
        const ContextPtr ext = extended_context(rel.context(), fresh);
        LaurentSeries lifted = rel.rhs().lifted(ext);
        lifted.set_term(s, DiffPolynomial::variable(ext, fresh));
        normalized = LaurentRelation(std::move(lifted));
        introduced.emplace_back(fresh, top.lifted(ext));
    }

    const DiffPolynomial generator = normalized.rhs().coefficient(s);
    const LaurentSeries identity = differentiate_relation(normalized, i, sys);

    // The unique top term of the identity is s*a*g at exponent s + d - 1.
    const int top_exp = s + d - 1;
    const Rational sa = Rational(s) * a;
    if (identity.max_degree() != top_exp ||
        identity.coefficient(top_exp) != generator.scaled(sa)) {
        throw std::logic_error("reduce: leading term of the differentiated identity is not isolated");
    }

    // g*x^s = -(1/(s a)) * (identity - top) * x^{-(d-1)}.
    LaurentSeries rest = identity;
    rest.erase_term(top_exp);
    LaurentSeries solved = rest.scaled(-sa.inverse()).shifted(-(d - 1));

    LaurentSeries out = normalized.rhs();
    out.erase_term(s);
    out = out + solved;
    LaurentRelation output(std::move(out));

    if (!output.rhs().is_zero() && output.max_degree() >= s) {
        throw std::logic_error("reduce: output degree did not decrease");
    }
    return ReductionStep{i,
                         rel,
                         std::move(introduced),
                         std::move(normalized),
                         identity,
                         print(generator),
                         s,
                         std::move(solved),
                         std::move(output)};
}

ReductionTrace run_reduction(const LaurentRelation& seed, const FirstOrderSystem& sys) {
    const std::size_t i = sys.first_nonlinear();
    if (i == 0) {
        throw std::invalid_argument("reduce: every P_i is linear, nothing reduces the degree");
    }
    ReductionTrace trace{seed, {}, seed};
    LaurentRelation current = seed;
    const int bound = current.rhs().is_zero() ? 0 : std::max(current.max_degree(), 0);
    for (int k = 0; k < bound && !current.rhs().is_zero() && current.max_degree() >= 1; ++k) {
        ReductionStep step = reduce_leading_term(current, i, sys);
        current = step.output;
        trace.steps.push_back(std::move(step));
    }
    if (!current.rhs().is_zero() && current.max_degree() >= 1) {
        throw std::logic_error("reduce: degree bound exhausted without reaching degree <= 0");
    }
    trace.final_relation = current;
    return trace;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "CERTIFIED";
        case Verdict::Incompatible: return "INCOMPATIBLE";
        case Verdict::ReducesToConstants: return "REDUCES_TO_CONSTANTS";
        case Verdict::InfinityNotExcluded: return "INFINITY_NOT_EXCLUDED";
        case Verdict::NotMonic: return "NOT_MONIC";
        case Verdict::ReductionFailed: return "REDUCTION_FAILED";
    }
    return "UNKNOWN";
}

LaurentRelation parse_seed(std::string_view text, std::size_t derivation_count) {
    const auto generators = scan_relation_generators(text);
    if (generators.empty()) {
        throw ParseError("seed relation names no generators", 0);
    }
    const ContextPtr ctx = make_context(derivation_count, generators);
    LaurentRelation rel = parse_relation(text, ctx);
    if (!coefficients_in_generator_ideal(rel.rhs())) {
        throw ParseError("seed coefficients must lie in the ideal generated by the m_j", 0);
    }
    return rel;
}

Certificate certify_complete(const FirstOrderSystem& sys, const LaurentRelation& seed) {
    Certificate cert{sys, Verdict::Certified, check_integrability(sys), {}, {}, {}, std::nullopt};

    if (!cert.integrability.compatible) {
        cert.verdict = Verdict::Incompatible;
        return cert;
    }
    if (sys.all_linear()) {
        // A linear d_i(y) = P_i(y) pins y, up to translation, to the
        // constants of d_i; completeness there needs no degree reduction.
        cert.verdict = Verdict::ReducesToConstants;
        return cert;
    }

    const ContextPtr ring = sys.ring();
    const std::string fresh = fresh_variable_name(*ring, sys.variable() + "1");
    bool all_exclude = true;
    for (std::size_t i = 1; i <= sys.derivation_count(); ++i) {
        const auto h = homogenize(sys.equation(i, ring), {sys.variable()}, fresh);
        std::map<std::string, Rational> point{{sys.variable(), Rational(1)}, {fresh, Rational(0)}};
        const Rational value = h.result.evaluate_at_constants(point);
        cert.infinity_checks.push_back({i, h.result, h.degree, value, !value.is_zero()});
        all_exclude = all_exclude && !value.is_zero();
    }
    if (!all_exclude) {
        cert.verdict = Verdict::InfinityNotExcluded;
        return cert;
    }

    bool all_monic = true;
    for (std::size_t i = 1; i <= sys.derivation_count(); ++i) {
        if (sys.degree(i) < 2) continue;
        const auto scaling = monic_scaling(sys.equation(i, ring));
        if (!scaling) {
            all_monic = false;
            continue;
        }
        cert.monic_witnesses.push_back({i, sys.leading_coefficient(i), *scaling});
    }
    cert.axioms.push_back(
        {"monic-unit-inverse",
         "a monic element over a maximal differential subring has its inverse outside "
         "the maximal ideal"});
    if (!all_monic) {
        cert.verdict = Verdict::NotMonic;
        return cert;
    }

    ReductionTrace trace = run_reduction(seed, sys);
    const bool reduced = trace.final_relation.rhs().is_zero() || trace.final_relation.max_degree() <= 0;
    cert.reduction = std::move(trace);
    if (!reduced) {
        cert.verdict = Verdict::ReductionFailed;
        return cert;
    }

    cert.verdict = Verdict::Certified;
    return cert;
}

Certificate certify_complete(const FirstOrderSystem& sys) {
    return certify_complete(sys, parse_seed(kSeedDefault, sys.derivation_count()));
}

}  // namespace dpoly
