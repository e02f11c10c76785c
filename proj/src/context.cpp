#include "dpoly/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpoly {

RingContext::RingContext(std::size_t m, std::vector<std::string> variables)
    : m_(m), vars_(std::move(variables)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) throw std::invalid_argument("ring: empty variable name");
        for (std::size_t j = i + 1; j < vars_.size(); ++j) {
            if (vars_[i] == vars_[j]) {
                throw std::invalid_argument("ring: duplicate variable '" + vars_[i] + "'");
            }
        }
    }
}

std::optional<std::size_t> RingContext::find(const std::string& name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

ContextPtr make_context(std::size_t m, std::vector<std::string> variables) {
    return std::make_shared<const RingContext>(m, std::move(variables));
}

ContextPtr extended_context(const ContextPtr& ctx, const std::string& fresh) {
    if (ctx->has(fresh)) {
        throw std::invalid_argument("ring: variable '" + fresh + "' already present");
    }
    auto vars = ctx->variables();
    vars.push_back(fresh);
    return make_context(ctx->derivation_count(), std::move(vars));
}

ContextPtr restricted_context(const ContextPtr& ctx, const std::string& var) {
    if (!ctx->has(var)) {
        throw std::invalid_argument("ring: no variable '" + var + "' to remove");
    }
    std::vector<std::string> vars;
    for (const auto& v : ctx->variables()) {
        if (v != var) vars.push_back(v);
    }
    return make_context(ctx->derivation_count(), std::move(vars));
}

std::string fresh_variable_name(const RingContext& ctx, const std::string& stem) {
    if (!ctx.has(stem)) return stem;
    for (std::size_t k = 1;; ++k) {
        std::string candidate = stem + "_" + std::to_string(k);
        if (!ctx.has(candidate)) return candidate;
    }
}

void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* what) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) {
        throw std::invalid_argument(std::string(what) + ": ring context mismatch");
    }
}

}  // namespace dpoly
