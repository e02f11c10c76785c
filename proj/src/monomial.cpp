#include "dpoly/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpoly {

Monomial Monomial::variable(DerivativeVariable v, std::uint32_t e) {
    Monomial m;
    if (e > 0) m.factors_.emplace_back(std::move(v), e);
    return m;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

std::uint32_t Monomial::exponent_of(const DerivativeVariable& v) const {
    for (const auto& [w, e] : factors_) {
        if (w == v) return e;
    }
    return 0;
}

std::uint32_t Monomial::degree_in_base(std::uint32_t base) const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : factors_) {
        if (v.base == base) d += e;
    }
    return d;
}

std::uint32_t Monomial::max_order_in_base(std::uint32_t base) const {
    std::uint32_t o = 0;
    for (const auto& [v, e] : factors_) {
        if (v.base == base) o = std::max(o, v.op.order());
    }
    return o;
}

bool Monomial::contains_base(std::uint32_t base) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return f.first.base == base; });
}

bool Monomial::is_derivative_free() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.first.is_plain(); });
}

Monomial Monomial::times(const DerivativeVariable& v, std::uint32_t e) const {
    if (e == 0) return *this;
    Monomial out = *this;
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), v,
                               [](const Factor& f, const DerivativeVariable& w) { return f.first < w; });
    if (it != out.factors_.end() && it->first == v) {
        it->second += e;
    } else {
        out.factors_.insert(it, {v, e});
    }
    return out;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out = *this;
    for (const auto& [v, e] : o.factors_) out = out.times(v, e);
    return out;
}

Monomial Monomial::divided_by(const DerivativeVariable& v, std::uint32_t e) const {
    if (e == 0) return *this;
    Monomial out = *this;
    auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                           [&](const Factor& f) { return f.first == v; });
    if (it == out.factors_.end() || it->second < e) {
        throw std::invalid_argument("monomial: inexact division");
    }
    it->second -= e;
    if (it->second == 0) out.factors_.erase(it);
    return out;
}

}  // namespace dpoly
