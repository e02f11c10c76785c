#include "dpoly/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <stdexcept>

#include "dpoly/parser.hpp"
#include "dpoly/printer.hpp"

namespace dpoly {

int LaurentSeries::max_degree() const {
    if (terms_.empty()) throw std::logic_error("laurent: max degree of the zero series");
    return terms_.rbegin()->first;
}

int LaurentSeries::min_degree() const {
    if (terms_.empty()) throw std::logic_error("laurent: min degree of the zero series");
    return terms_.begin()->first;
}

DiffPolynomial LaurentSeries::coefficient(int j) const {
    const auto it = terms_.find(j);
    return it == terms_.end() ? DiffPolynomial::zero(ctx_) : it->second;
}

void LaurentSeries::add_term(int j, const DiffPolynomial& c) {
    require_same_context(ctx_, c.context(), "laurent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(j, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentSeries::set_term(int j, const DiffPolynomial& c) {
    require_same_context(ctx_, c.context(), "laurent");
    if (c.is_zero()) {
        terms_.erase(j);
    } else {
        terms_.insert_or_assign(j, c);
    }
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    LaurentSeries out(ctx_);
    if (c.is_zero()) return out;
    for (const auto& [j, p] : terms_) out.terms_.emplace(j, p.scaled(c));
    return out;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries out(ctx_);
    for (const auto& [j, p] : terms_) out.terms_.emplace(j + k, p);
    return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_context(a.ctx_, b.ctx_, "laurent");
    LaurentSeries out = a;
    for (const auto& [j, p] : b.terms_) out.add_term(j, p);
    return out;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + b.scaled(Rational(-1));
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
}

LaurentSeries LaurentSeries::lifted(const ContextPtr& target) const {
    LaurentSeries out(target);
    for (const auto& [j, p] : terms_) out.terms_.emplace(j, p.lifted(target));
    return out;
}

bool in_generator_ideal(const DiffPolynomial& f) {
    // Every variable of the coefficient ring is a generator, so membership
    // in the ideal generated by their derivatives just means: no constant term.
    return f.constant_term().is_zero();
}

bool coefficients_in_generator_ideal(const LaurentSeries& s) {
    return std::all_of(s.terms().begin(), s.terms().end(),
                       [](const auto& t) { return in_generator_ideal(t.second); });
}

namespace {

std::string print_term(int j, const DiffPolynomial& c, bool& negative) {
    std::string mag;
    if (c.term_count() == 1) {
        std::string s = print(c);
        negative = !s.empty() && s[0] == '-';
        mag = negative ? s.substr(1) : s;
    } else {
        negative = false;
        mag = "(" + print(c) + ")";
    }
    if (j == 0) return mag;
    const std::string xpart = j == 1 ? "x" : "x^" + std::to_string(j);
    if (mag == "1") return xpart;
    return mag + "*" + xpart;
}

}  // namespace

std::string print_series(const LaurentSeries& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        bool negative = false;
        const std::string piece = print_term(it->first, it->second, negative);
        if (out.empty()) {
            out = negative ? "-" + piece : piece;
        } else {
            out += negative ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

std::string print_relation(const LaurentRelation& r) { return "1 = " + print_series(r.rhs()); }

std::string print_identity(const LaurentSeries& s) { return "0 = " + print_series(s); }

namespace {

/// Substring that remembers where it sits in the original input.
struct Piece {
    std::string text;
    std::size_t offset;

    Piece trim() const {
        std::size_t a = 0, b = text.size();
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        return {text.substr(a, b - a), offset + a};
    }

    Piece tail(std::size_t from) const { return {text.substr(from), offset + from}; }
    Piece slice(std::size_t from, std::size_t len) const {
        return {text.substr(from, len), offset + from};
    }
};

/// Splits at top-level occurrences of any character in `seps`. A '+'/'-'
/// directly after '^' belongs to an exponent; a leading sign belongs to its
/// term. '*' separators are dropped, signs are kept with the next piece.
std::vector<Piece> split_top_level(const Piece& p, const char* seps) {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = 0;
    char prev = '\0';
    bool content = false;
    for (std::size_t i = 0; i < p.text.size(); ++i) {
        const char ch = p.text[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && std::strchr(seps, ch) != nullptr && prev != '^' && content) {
            out.push_back(p.slice(start, i - start));
            start = i;
            if (ch == '*') ++start;
            content = false;
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            prev = ch;
            content = true;
        }
    }
    out.push_back(p.tail(start));
    return out;
}

}  // namespace

LaurentRelation parse_relation(std::string_view text, const ContextPtr& generator_ctx) {
    const std::string full(text);
    const auto eq = full.find('=');
    if (eq == std::string::npos) throw ParseError("expected '=' in relation", 0);
    const Piece lhs = Piece{full.substr(0, eq), 0}.trim();
    if (lhs.text != "1") throw ParseError("relation must have the form '1 = ...'", lhs.offset);

    LaurentSeries rhs(generator_ctx);
    const Piece body = Piece{full.substr(eq + 1), eq + 1};

    for (const Piece& raw_term : split_top_level(body, "+-")) {
        Piece term = raw_term.trim();
        if (term.text.empty()) throw ParseError("empty term in relation", term.offset);
        Rational sign(1);
        if (term.text[0] == '+' || term.text[0] == '-') {
            if (term.text[0] == '-') sign = Rational(-1);
            term = term.tail(1).trim();
        }
        if (term.text.empty()) throw ParseError("dangling sign in relation", raw_term.offset);

        int exponent = 0;
        DiffPolynomial coeff = DiffPolynomial::constant(generator_ctx, Rational(1));
        for (const Piece& raw_factor : split_top_level(term, "*")) {
            const Piece factor = raw_factor.trim();
            if (factor.text == "x") {
                exponent += 1;
                continue;
            }
            if (factor.text.rfind("x^", 0) == 0) {
                const std::string exp = Piece{factor.text.substr(2), 0}.trim().text;
                std::size_t used = 0;
                try {
                    const int j = std::stoi(exp, &used);
                    if (used == exp.size()) {
                        exponent += j;
                        continue;
                    }
                } catch (const std::exception&) {
                    throw ParseError("bad exponent on x", factor.offset + 2);
                }
                throw ParseError("bad exponent on x", factor.offset + 2);
            }
            try {
                coeff = coeff * parse_polynomial(factor.text, generator_ctx);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), factor.offset + e.offset());
            }
        }
        rhs.add_term(exponent, coeff.scaled(sign));
    }
    return LaurentRelation(std::move(rhs));
}

std::vector<std::string> scan_relation_generators(std::string_view text) {
    const std::string full(text);
    const auto eq = full.find('=');
    const std::string body = eq == std::string::npos ? full : full.substr(eq + 1);
    auto names = scan_identifiers(body);
    names.erase(std::remove(names.begin(), names.end(), "x"), names.end());
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

}  // namespace dpoly
