#ifndef DPOLY_CONTEXT_HPP
#define DPOLY_CONTEXT_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dpoly {

/// A monomial in the derivations: d1^e1 * ... * dm^em acting as an operator.
/// The all-zero operator is the identity. Because the exponent vector is a
/// multi-index, commutativity of the derivations is built into the value.
class DerivationOperator {
public:
    explicit DerivationOperator(std::size_t m) : exps_(m, 0) {}

    static DerivationOperator identity(std::size_t m) { return DerivationOperator(m); }

    std::size_t arity() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_.at(i); }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint32_t order() const {
        std::uint32_t s = 0;
        for (auto e : exps_) s += e;
        return s;
    }
    bool is_identity() const { return order() == 0; }

    /// Returns this operator with one more application of derivation i (0-based).
    DerivationOperator bumped(std::size_t i) const {
        DerivationOperator r = *this;
        r.exps_.at(i) += 1;
        return r;
    }

    friend auto operator<=>(const DerivationOperator&, const DerivationOperator&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// One indeterminate of the differential polynomial ring: an operator applied
/// to a base variable. Ordered by (base, operator exponents lexicographically).
struct DerivativeVariable {
    std::uint32_t base;
    DerivationOperator op;

    bool is_plain() const { return op.is_identity(); }

    friend auto operator<=>(const DerivativeVariable&, const DerivativeVariable&) = default;
};

/// Ambient ring data: number of commuting derivations and the ordered list of
/// base variable names. Shared immutably by every value built over it.
class RingContext {
public:
    RingContext(std::size_t m, std::vector<std::string> variables);

    std::size_t derivation_count() const { return m_; }
    std::size_t variable_count() const { return vars_.size(); }
    const std::string& variable_name(std::size_t i) const { return vars_.at(i); }
    const std::vector<std::string>& variables() const { return vars_; }

    std::optional<std::size_t> find(const std::string& name) const;
    bool has(const std::string& name) const { return find(name).has_value(); }

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    std::size_t m_;
    std::vector<std::string> vars_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

ContextPtr make_context(std::size_t m, std::vector<std::string> variables);

/// New context with one variable appended. Throws if the name is taken.
ContextPtr extended_context(const ContextPtr& ctx, const std::string& fresh);

/// New context with one variable removed.
ContextPtr restricted_context(const ContextPtr& ctx, const std::string& var);

/// Picks a variable name not present in ctx: `stem`, then `stem_1`, `stem_2`, ...
std::string fresh_variable_name(const RingContext& ctx, const std::string& stem);

void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* what);

}  // namespace dpoly

#endif
