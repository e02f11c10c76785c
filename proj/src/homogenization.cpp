#include "dpoly/homogenization.hpp"

#include <map>
#include <stdexcept>

#include "dpoly/printer.hpp"

namespace dpoly {

namespace {

/// Common degree of f's monomials counted over the given bases; nullopt when
/// the terms disagree (then f cannot be homogeneous in those variables).
std::optional<std::uint32_t> uniform_degree(const DiffPolynomial& f,
                                            const std::vector<std::uint32_t>& bases) {
    std::optional<std::uint32_t> degree;
    for (const auto& [m, c] : f.terms()) {
        std::uint32_t d = 0;
        for (const auto base : bases) d += m.degree_in_base(base);
        if (!degree) {
            degree = d;
        } else if (*degree != d) {
            return std::nullopt;
        }
    }
    return degree;
}

std::vector<std::uint32_t> base_indices(const RingContext& ctx, const std::vector<std::string>& vars) {
    std::vector<std::uint32_t> out;
    out.reserve(vars.size());
    for (const auto& name : vars) {
        const auto idx = ctx.find(name);
        if (!idx) throw std::invalid_argument("homogeneity: unknown variable '" + name + "'");
        out.push_back(static_cast<std::uint32_t>(*idx));
    }
    return out;
}

}  // namespace

bool is_delta_homogeneous(const DiffPolynomial& f, const std::vector<std::string>& vars,
                          std::uint32_t degree, const std::optional<std::string>& fresh) {
    if (vars.empty()) throw std::invalid_argument("homogeneity: empty variable set");
    const ContextPtr& ctx = f.context();
    const auto bases = base_indices(*ctx, vars);

    if (f.is_zero()) return true;

    // Structural pre-filter: scaling by a constant already forces every term
    // to carry the same degree in the scaled variables.
    const auto uniform = uniform_degree(f, bases);
    if (!uniform || *uniform != degree) return false;

    std::string tname;
    if (fresh) {
        if (ctx->has(*fresh)) {
            throw std::invalid_argument("homogeneity: fresh variable '" + *fresh +
                                        "' collides with a ring variable");
        }
        tname = *fresh;
    } else {
        tname = fresh_variable_name(*ctx, "t");
    }

    const ContextPtr ext = extended_context(ctx, tname);
    const DiffPolynomial t = DiffPolynomial::variable(ext, tname);

    std::map<std::string, DiffPolynomial> scale;
    for (const auto& name : vars) {
        scale.emplace(name, t * DiffPolynomial::variable(ext, name));
    }
    const DiffPolynomial scaled = f.substitute(scale, ext);
    return scaled == t.pow(degree) * f.lifted(ext);
}

Homogenization homogenize(const DiffPolynomial& f, const std::vector<std::string>& vars,
                          const std::string& y0) {
    if (f.is_zero()) throw std::invalid_argument("homogenize: zero polynomial");
    const ContextPtr& ctx = f.context();
    base_indices(*ctx, vars);  // validate
    if (ctx->has(y0)) {
        throw std::invalid_argument("homogenize: variable '" + y0 + "' already present");
    }

    const ContextPtr ext = extended_context(ctx, y0);
    const auto y0_base = static_cast<std::uint32_t>(*ext->find(y0));
    const DiffPolynomial y0_poly = DiffPolynomial::variable(ext, y0);

    // v -> v/y0 for the affine variables; everything else passes through.
    // All arithmetic keeps denominators equal to powers of y0.
    std::map<DerivativeVariable, DiffFraction> images;
    const auto image_of = [&](const DerivativeVariable& v) -> const DiffFraction& {
        auto it = images.find(v);
        if (it != images.end()) return it->second;
        const std::string& name = ctx->variable_name(v.base);
        const auto target_base = static_cast<std::uint32_t>(*ext->find(name));
        const bool mapped =
            std::find(vars.begin(), vars.end(), name) != vars.end();
        DiffFraction img = mapped
            ? DiffFraction(DiffPolynomial::variable(ext, name), y0_poly)
            : DiffFraction::whole(DiffPolynomial::derivative_variable(
                  ext, DerivativeVariable{target_base, v.op}));
        if (mapped) {
            for (std::size_t i = 0; i < v.op.arity(); ++i) {
                for (std::uint32_t k = 0; k < v.op.exponent(i); ++k) {
                    img = img.apply_derivation(i).reduced_by_plain_power(y0_base);
                }
            }
        }
        return images.emplace(v, std::move(img)).first->second;
    };

    DiffFraction total = DiffFraction::whole(DiffPolynomial::zero(ext));
    for (const auto& [m, c] : f.terms()) {
        DiffFraction prod = DiffFraction::whole(DiffPolynomial::constant(ext, c));
        for (const auto& [v, e] : m.factors()) {
            prod = (prod * image_of(v).pow(e)).reduced_by_plain_power(y0_base);
        }
        total = (total + prod).reduced_by_plain_power(y0_base);
    }

    // The denominator must now be a bare power of y0.
    const auto& den = total.denominator();
    if (den.term_count() != 1 || !den.terms().begin()->second.is_one() ||
        den.terms().begin()->first.total_degree() !=
            den.terms().begin()->first.degree_in_base(y0_base) ||
        den.terms().begin()->first.max_order_in_base(y0_base) != 0) {
        throw std::logic_error("homogenize: denominator is not a power of the fresh variable");
    }
    const std::uint32_t degree = den.terms().begin()->first.total_degree();
    DiffPolynomial result = total.numerator();

    auto scaled_vars = vars;
    scaled_vars.push_back(y0);
    if (!is_delta_homogeneous(result, scaled_vars, degree)) {
        throw std::logic_error("homogenize: result failed the homogeneity check");
    }
    if (dehomogenize(result, y0) != f) {
        throw std::logic_error("homogenize: dehomogenization does not restore the input");
    }
    return {std::move(result), degree};
}

DiffPolynomial dehomogenize(const DiffPolynomial& F, const std::string& y0) {
    const ContextPtr& ctx = F.context();
    if (!ctx->has(y0)) throw std::invalid_argument("dehomogenize: unknown variable '" + y0 + "'");
    std::map<std::string, DiffPolynomial> assignment;
    assignment.emplace(y0, DiffPolynomial::constant(ctx, Rational(1)));
    return F.substitute(assignment).lifted(restricted_context(ctx, y0));
}

DiffPolynomial value_at_infinity(const DiffPolynomial& F, const std::string& v,
                                 const std::string& y0) {
    const ContextPtr& ctx = F.context();
    const auto bases = base_indices(*ctx, {v, y0});
    const auto uniform = uniform_degree(F, bases);
    if (!F.is_zero() && (!uniform || !is_delta_homogeneous(F, {v, y0}, *uniform))) {
        throw std::invalid_argument("value_at_infinity: polynomial is not homogeneous in {" + v +
                                    ", " + y0 + "}");
    }
    std::map<std::string, DiffPolynomial> assignment;
    assignment.emplace(v, DiffPolynomial::constant(ctx, Rational(1)));
    assignment.emplace(y0, DiffPolynomial::zero(ctx));
    return F.substitute(assignment);
}

bool excludes_infinity(const DiffPolynomial& F, const std::string& v, const std::string& y0) {
    return !value_at_infinity(F, v, y0).is_zero();
}

}  // namespace dpoly
