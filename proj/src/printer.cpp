#include "dpoly/printer.hpp"

#include <sstream>

namespace dpoly {

std::string print(const DerivativeVariable& v, const RingContext& ctx) {
    std::string out = ctx.variable_name(v.base);
    // Wrap from the highest derivation index inward so the rendering reads
    // d1^a(d2^b(y)) with ascending indices outermost.
    for (std::size_t k = v.op.arity(); k-- > 0;) {
        const auto e = v.op.exponent(k);
        if (e == 0) continue;
        std::string head = "d" + std::to_string(k + 1);
        if (e > 1) head += "^" + std::to_string(e);
        out = head + "(" + out + ")";
    }
    return out;
}

std::string print(const Monomial& m, const RingContext& ctx) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += print(v, ctx);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string print(const DiffPolynomial& f) {
    if (f.is_zero()) return "0";
    const RingContext& ctx = *f.context();
    std::ostringstream out;
    bool first = true;
    // Reverse map order: total degree descending, lex-ascending within.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational mag = c.abs();
        if (m.is_one()) {
            out << mag.to_string();
        } else if (mag.is_one()) {
            out << print(m, ctx);
        } else {
            out << mag.to_string() << "*" << print(m, ctx);
        }
    }
    return out.str();
}

}  // namespace dpoly
