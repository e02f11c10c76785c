#include "dpoly/system.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "dpoly/parser.hpp"
#include "dpoly/printer.hpp"

namespace dpoly {

namespace {

void strip_trailing_zeros(std::vector<Rational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

std::vector<Rational> derivative(const std::vector<Rational>& p) {
    std::vector<Rational> out;
    for (std::size_t k = 1; k < p.size(); ++k) {
        out.push_back(p[k] * Rational(static_cast<long>(k)));
    }
    strip_trailing_zeros(out);
    return out;
}

std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    strip_trailing_zeros(out);
    return out;
}

std::vector<Rational> subtract(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    strip_trailing_zeros(a);
    return a;
}

DiffPolynomial to_polynomial(const std::vector<Rational>& coeffs, const ContextPtr& ctx,
                             std::size_t base) {
    DiffPolynomial::Builder out(ctx);
    const DerivativeVariable y{static_cast<std::uint32_t>(base),
                               DerivationOperator::identity(ctx->derivation_count())};
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out.add(Monomial::variable(y, static_cast<std::uint32_t>(k)), coeffs[k]);
    }
    return out.build();
}

}  // namespace

FirstOrderSystem::FirstOrderSystem(std::string variable, std::vector<std::vector<Rational>> rhs)
    : var_(std::move(variable)), rhs_(std::move(rhs)) {
    if (rhs_.empty()) throw std::invalid_argument("system: at least one equation required");
    if (var_.empty()) throw std::invalid_argument("system: empty variable name");
    for (auto& p : rhs_) strip_trailing_zeros(p);
}

FirstOrderSystem FirstOrderSystem::parse(std::string_view text) {
    const std::string full(text);

    struct RawEquation {
        std::size_t index;       // 1-based derivation index
        std::string variable;
        std::string rhs;
        std::size_t rhs_offset;
    };
    std::vector<RawEquation> raw;

    std::size_t start = 0;
    while (start <= full.size()) {
        std::size_t end = full.find(';', start);
        if (end == std::string::npos) end = full.size();
        const std::string part = full.substr(start, end - start);

        std::size_t pos = start;
        const auto skip_ws = [&]() {
            while (pos < end && std::isspace(static_cast<unsigned char>(full[pos]))) ++pos;
        };
        skip_ws();
        if (pos == end) {
            if (end == full.size()) break;
            throw ParseError("empty equation", pos);
        }

        if (full[pos] != 'd') throw ParseError("expected d<k>(var) = P", pos);
        ++pos;
        std::size_t index = 0;
        const std::size_t digits_at = pos;
        while (pos < end && std::isdigit(static_cast<unsigned char>(full[pos]))) {
            index = index * 10 + static_cast<std::size_t>(full[pos] - '0');
            ++pos;
        }
        if (pos == digits_at) throw ParseError("expected derivation index after 'd'", pos);
        skip_ws();
        if (pos == end || full[pos] != '(') throw ParseError("expected '('", pos);
        ++pos;
        skip_ws();
        std::string var;
        while (pos < end && (std::isalnum(static_cast<unsigned char>(full[pos])) || full[pos] == '_')) {
            var.push_back(full[pos++]);
        }
        if (var.empty()) throw ParseError("expected variable name", pos);
        skip_ws();
        if (pos == end || full[pos] != ')') throw ParseError("expected ')'", pos);
        ++pos;
        skip_ws();
        if (pos == end || full[pos] != '=') throw ParseError("expected '='", pos);
        ++pos;

        raw.push_back({index, var, full.substr(pos, end - pos), pos});
        start = end + 1;
        if (end == full.size()) break;
    }

    if (raw.empty()) throw ParseError("empty system", 0);
    const std::size_t m = raw.size();
    const std::string& var = raw.front().variable;
    std::vector<bool> seen(m, false);
    for (const auto& eq : raw) {
        if (eq.variable != var) {
            throw ParseError("all equations must constrain the same variable", 0);
        }
        if (eq.index < 1 || eq.index > m || seen[eq.index - 1]) {
            throw ParseError("derivation indices must be exactly 1.." + std::to_string(m), 0);
        }
        seen[eq.index - 1] = true;
    }

    const ContextPtr ctx = make_context(m, {var});
    std::vector<std::vector<Rational>> rhs(m);
    for (const auto& eq : raw) {
        DiffPolynomial p(ctx);
        try {
            p = parse_polynomial(eq.rhs, ctx);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), eq.rhs_offset + e.offset());
        }
        std::vector<Rational> coeffs;
        for (const auto& [mono, c] : p.terms()) {
            if (!mono.is_derivative_free()) {
                throw ParseError("right side must be an ordinary polynomial in " + var,
                                 eq.rhs_offset);
            }
            const auto k = mono.total_degree();
            if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
            coeffs[k] = c;
        }
        rhs[eq.index - 1] = std::move(coeffs);
    }
    return FirstOrderSystem(var, std::move(rhs));
}

int FirstOrderSystem::degree(std::size_t i) const {
    const auto& p = rhs_.at(i - 1);
    return static_cast<int>(p.size()) - 1;
}

bool FirstOrderSystem::all_linear() const {
    for (std::size_t i = 1; i <= rhs_.size(); ++i) {
        if (degree(i) >= 2) return false;
    }
    return true;
}

std::size_t FirstOrderSystem::first_nonlinear() const {
    for (std::size_t i = 1; i <= rhs_.size(); ++i) {
        if (degree(i) >= 2) return i;
    }
    return 0;
}

Rational FirstOrderSystem::leading_coefficient(std::size_t i) const {
    const auto& p = rhs_.at(i - 1);
    return p.empty() ? Rational(0) : p.back();
}

ContextPtr FirstOrderSystem::ring() const { return make_context(rhs_.size(), {var_}); }

DiffPolynomial FirstOrderSystem::rhs_polynomial(std::size_t i, const ContextPtr& ctx) const {
    const auto base = ctx->find(var_);
    if (!base) throw std::invalid_argument("system: ring lacks variable '" + var_ + "'");
    return to_polynomial(rhs_.at(i - 1), ctx, *base);
}

DiffPolynomial FirstOrderSystem::equation(std::size_t i, const ContextPtr& ctx) const {
    if (i < 1 || i > rhs_.size()) throw std::invalid_argument("system: derivation index out of range");
    return DiffPolynomial::variable(ctx, var_).apply_derivation(i - 1) - rhs_polynomial(i, ctx);
}

std::string FirstOrderSystem::equation_string(std::size_t i) const {
    return "d" + std::to_string(i) + "(" + var_ + ") = " + print(rhs_polynomial(i, ring()));
}

IntegrabilityReport check_integrability(const FirstOrderSystem& sys) {
    const ContextPtr ctx = sys.ring();
    const auto base = *ctx->find(sys.variable());

    IntegrabilityReport report;
    report.compatible = true;
    for (std::size_t i = 1; i <= sys.derivation_count(); ++i) {
        for (std::size_t j = i + 1; j <= sys.derivation_count(); ++j) {
            // Mixed derivatives of y agree iff P_j' P_i - P_i' P_j vanishes.
            const auto commutator = subtract(multiply(derivative(sys.coefficients(j)), sys.coefficients(i)),
                                             multiply(derivative(sys.coefficients(i)), sys.coefficients(j)));
            const bool ok = commutator.empty();
            report.pairs.push_back({i, j, to_polynomial(commutator, ctx, base), ok});
            report.compatible = report.compatible && ok;
        }
    }
    return report;
}

}  // namespace dpoly
