#include "dpoly/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpoly {

DiffPolynomial DiffPolynomial::constant(ContextPtr ctx, const Rational& c) {
    DiffPolynomial f(std::move(ctx));
    f.add_in_place(Monomial::one(), c);
    return f;
}

DiffPolynomial DiffPolynomial::variable(ContextPtr ctx, std::size_t index) {
    if (index >= ctx->variable_count()) throw std::invalid_argument("polynomial: variable index out of range");
    const DerivativeVariable v{static_cast<std::uint32_t>(index),
                               DerivationOperator::identity(ctx->derivation_count())};
    return derivative_variable(std::move(ctx), v);
}

DiffPolynomial DiffPolynomial::variable(ContextPtr ctx, const std::string& name) {
    const auto idx = ctx->find(name);
    if (!idx) throw std::invalid_argument("polynomial: unknown variable '" + name + "'");
    return variable(std::move(ctx), *idx);
}

DiffPolynomial DiffPolynomial::derivative_variable(ContextPtr ctx, const DerivativeVariable& v) {
    if (v.base >= ctx->variable_count() || v.op.arity() != ctx->derivation_count()) {
        throw std::invalid_argument("polynomial: derivative variable outside ring");
    }
    DiffPolynomial f(std::move(ctx));
    f.add_in_place(Monomial::variable(v), Rational(1));
    return f;
}

DiffPolynomial DiffPolynomial::from_term(ContextPtr ctx, const Monomial& m, const Rational& c) {
    DiffPolynomial f(std::move(ctx));
    f.add_in_place(m, c);
    return f;
}

bool DiffPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational DiffPolynomial::constant_term() const {
    const auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational DiffPolynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t DiffPolynomial::total_degree() const {
    if (terms_.empty()) return 0;
    // Map order is graded, so the last term carries the maximal degree.
    return terms_.rbegin()->first.total_degree();
}

std::uint32_t DiffPolynomial::degree_in(std::size_t base) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in_base(static_cast<std::uint32_t>(base)));
    return d;
}

std::uint32_t DiffPolynomial::degree_in(const std::string& name) const {
    const auto idx = ctx_->find(name);
    if (!idx) throw std::invalid_argument("polynomial: unknown variable '" + name + "'");
    return degree_in(*idx);
}

std::set<std::uint32_t> DiffPolynomial::bases_used() const {
    std::set<std::uint32_t> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.factors()) out.insert(v.base);
    }
    return out;
}

bool DiffPolynomial::uses_base(std::size_t base) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) {
        return t.first.contains_base(static_cast<std::uint32_t>(base));
    });
}

void DiffPolynomial::add_in_place(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPolynomial DiffPolynomial::operator-() const { return scaled(Rational(-1)); }

DiffPolynomial DiffPolynomial::scaled(const Rational& c) const {
    DiffPolynomial out(ctx_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

DiffPolynomial DiffPolynomial::pow(std::uint32_t e) const {
    DiffPolynomial out = constant(ctx_, Rational(1));
    for (std::uint32_t k = 0; k < e; ++k) out = out * *this;
    return out;
}

DiffPolynomial operator+(const DiffPolynomial& f, const DiffPolynomial& g) {
    require_same_context(f.ctx_, g.ctx_, "add");
    DiffPolynomial out = f;
    for (const auto& [m, c] : g.terms_) out.add_in_place(m, c);
    return out;
}

DiffPolynomial operator-(const DiffPolynomial& f, const DiffPolynomial& g) {
    require_same_context(f.ctx_, g.ctx_, "sub");
    DiffPolynomial out = f;
    for (const auto& [m, c] : g.terms_) out.add_in_place(m, -c);
    return out;
}

DiffPolynomial operator*(const DiffPolynomial& f, const DiffPolynomial& g) {
    require_same_context(f.ctx_, g.ctx_, "mul");
    DiffPolynomial out(f.ctx_);
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) {
            out.add_in_place(mf.times(mg), cf * cg);
        }
    }
    return out;
}

bool operator==(const DiffPolynomial& f, const DiffPolynomial& g) {
    return *f.ctx_ == *g.ctx_ && f.terms_ == g.terms_;
}

DiffPolynomial DiffPolynomial::apply_derivation(std::size_t i) const {
    if (i >= ctx_->derivation_count()) {
        throw std::invalid_argument("polynomial: derivation index out of range");
    }
    DiffPolynomial out(ctx_);
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.factors()) {
            // d_i(v^e * rest) contributes e * v^(e-1) * d_i(v) * rest.
            const DerivativeVariable dv{v.base, v.op.bumped(i)};
            out.add_in_place(m.divided_by(v, 1).times(dv), c * Rational(static_cast<long>(e)));
        }
    }
    return out;
}

DiffPolynomial DiffPolynomial::apply_operator(const DerivationOperator& op) const {
    if (op.arity() != ctx_->derivation_count()) {
        throw std::invalid_argument("polynomial: operator arity mismatch");
    }
    DiffPolynomial out = *this;
    for (std::size_t i = 0; i < op.arity(); ++i) {
        for (std::uint32_t k = 0; k < op.exponent(i); ++k) out = out.apply_derivation(i);
    }
    return out;
}

DiffPolynomial DiffPolynomial::substitute(const std::map<std::string, DiffPolynomial>& assignment,
                                          const ContextPtr& target) const {
    if (target->derivation_count() != ctx_->derivation_count()) {
        throw std::invalid_argument("substitute: derivation count mismatch");
    }
    for (const auto& [name, value] : assignment) {
        require_same_context(value.context(), target, "substitute");
    }

    // Image of each derivative variable, computed on demand.
    std::map<DerivativeVariable, DiffPolynomial> images;
    const auto image_of = [&](const DerivativeVariable& v) -> const DiffPolynomial& {
        auto it = images.find(v);
        if (it != images.end()) return it->second;
        const std::string& name = ctx_->variable_name(v.base);
        DiffPolynomial img(target);
        if (const auto a = assignment.find(name); a != assignment.end()) {
            img = a->second.apply_operator(v.op);
        } else {
            const auto idx = target->find(name);
            if (!idx) {
                throw std::invalid_argument("substitute: variable '" + name + "' missing from target ring");
            }
            img = DiffPolynomial::derivative_variable(
                target, DerivativeVariable{static_cast<std::uint32_t>(*idx), v.op});
        }
        return images.emplace(v, std::move(img)).first->second;
    };

    Builder out(target);
    for (const auto& [m, c] : terms_) {
        DiffPolynomial prod = DiffPolynomial::constant(target, c);
        for (const auto& [v, e] : m.factors()) {
            prod = prod * image_of(v).pow(e);
        }
        out.add(prod);
    }
    return out.build();
}

DiffPolynomial DiffPolynomial::substitute(const std::map<std::string, DiffPolynomial>& assignment) const {
    return substitute(assignment, ctx_);
}

Rational DiffPolynomial::evaluate_at_constants(const std::map<std::string, Rational>& point) const {
    std::map<std::uint32_t, Rational> by_base;
    for (const auto base : bases_used()) {
        const std::string& name = ctx_->variable_name(base);
        const auto it = point.find(name);
        if (it == point.end()) {
            throw std::invalid_argument("evaluate: variable '" + name + "' unassigned");
        }
        by_base.emplace(base, it->second);
    }

    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        bool vanished = false;
        for (const auto& [v, e] : m.factors()) {
            if (!v.is_plain()) {  // proper derivative of a constant point
                vanished = true;
                break;
            }
            value *= by_base.at(v.base).pow(e);
        }
        if (!vanished) total += value;
    }
    return total;
}

DiffPolynomial DiffPolynomial::lifted(const ContextPtr& target) const {
    if (target->derivation_count() != ctx_->derivation_count()) {
        throw std::invalid_argument("lift: derivation count mismatch");
    }
    // Base index remap by name, for the variables that actually occur.
    std::map<std::uint32_t, std::uint32_t> remap;
    const auto mapped = [&](std::uint32_t base) {
        const auto it = remap.find(base);
        if (it != remap.end()) return it->second;
        const auto idx = target->find(ctx_->variable_name(base));
        if (!idx) {
            throw std::invalid_argument("lift: variable '" + ctx_->variable_name(base) +
                                        "' missing from target ring");
        }
        return remap.emplace(base, static_cast<std::uint32_t>(*idx)).first->second;
    };
    DiffPolynomial out(target);
    for (const auto& [m, c] : terms_) {
        Monomial img = Monomial::one();
        for (const auto& [v, e] : m.factors()) {
            img = img.times(DerivativeVariable{mapped(v.base), v.op}, e);
        }
        out.add_in_place(img, c);
    }
    return out;
}

std::uint32_t DiffPolynomial::min_plain_exponent(std::uint32_t base) const {
    if (terms_.empty()) return 0;
    const DerivativeVariable plain{base, DerivationOperator::identity(ctx_->derivation_count())};
    std::uint32_t k = UINT32_MAX;
    for (const auto& [m, c] : terms_) k = std::min(k, m.exponent_of(plain));
    return k;
}

DiffPolynomial DiffPolynomial::divided_by_plain_power(std::uint32_t base, std::uint32_t k) const {
    if (k == 0) return *this;
    const DerivativeVariable plain{base, DerivationOperator::identity(ctx_->derivation_count())};
    DiffPolynomial out(ctx_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.divided_by(plain, k), c);
    return out;
}

DiffPolynomial DiffPolynomial::leading_homogeneous_part() const {
    DiffPolynomial out(ctx_);
    const auto top = total_degree();
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() == top) out.terms_.emplace(m, c);
    }
    return out;
}

void DiffPolynomial::Builder::add(const DiffPolynomial& f) {
    require_same_context(poly_.context(), f.context(), "builder");
    for (const auto& [m, c] : f.terms()) poly_.add_in_place(m, c);
}

void DiffPolynomial::Builder::add_scaled(const DiffPolynomial& f, const Rational& c) {
    require_same_context(poly_.context(), f.context(), "builder");
    if (c.is_zero()) return;
    for (const auto& [m, k] : f.terms()) poly_.add_in_place(m, k * c);
}

}  // namespace dpoly
