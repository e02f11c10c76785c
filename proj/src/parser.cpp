#include "dpoly/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace dpoly {

namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        std::size_t pos = 0;
        while (pos < src_.size()) {
            const char c = src_[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
                continue;
            }
            const std::size_t start = pos;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string text;
                while (pos < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos]))) {
                    text.push_back(src_[pos++]);
                }
                // 'p/q' is one literal when digits follow the slash directly.
                if (pos < src_.size() && src_[pos] == '/' && pos + 1 < src_.size() &&
                    std::isdigit(static_cast<unsigned char>(src_[pos + 1]))) {
                    text.push_back(src_[pos++]);
                    while (pos < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos]))) {
                        text.push_back(src_[pos++]);
                    }
                }
                out.push_back({TokKind::Number, std::move(text), start});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string text;
                while (pos < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos])) || src_[pos] == '_')) {
                    text.push_back(src_[pos++]);
                }
                out.push_back({TokKind::Ident, std::move(text), start});
                continue;
            }
            TokKind kind;
            switch (c) {
                case '+': kind = TokKind::Plus; break;
                case '-': kind = TokKind::Minus; break;
                case '*': kind = TokKind::Star; break;
                case '^': kind = TokKind::Caret; break;
                case '(': kind = TokKind::LParen; break;
                case ')': kind = TokKind::RParen; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", pos);
            }
            out.push_back({kind, std::string(1, c), pos});
            ++pos;
        }
        out.push_back({TokKind::End, "", src_.size()});
        return out;
    }

private:
    std::string_view src_;
};

/// True for identifiers of the shape d<digits>.
std::optional<std::size_t> derivation_head_index(const std::string& ident) {
    if (ident.size() < 2 || ident[0] != 'd') return std::nullopt;
    std::size_t value = 0;
    for (std::size_t i = 1; i < ident.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(ident[i]))) return std::nullopt;
        value = value * 10 + static_cast<std::size_t>(ident[i] - '0');
    }
    return value;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, ContextPtr ctx)
        : toks_(std::move(tokens)), ctx_(std::move(ctx)) {}

    DiffPolynomial parse() {
        DiffPolynomial f = expr();
        expect(TokKind::End, "trailing input");
        return f;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(TokKind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(TokKind k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().offset);
    }

    DiffPolynomial expr() {
        bool negate = false;
        if (accept(TokKind::Minus)) {
            negate = true;
        } else {
            accept(TokKind::Plus);
        }
        DiffPolynomial sum = term();
        if (negate) sum = -sum;
        while (true) {
            if (accept(TokKind::Plus)) {
                sum = sum + term();
            } else if (accept(TokKind::Minus)) {
                sum = sum - term();
            } else {
                return sum;
            }
        }
    }

    DiffPolynomial term() {
        DiffPolynomial prod = factor();
        while (accept(TokKind::Star)) prod = prod * factor();
        return prod;
    }

    DiffPolynomial factor() {
        DiffPolynomial b = base();
        if (accept(TokKind::Caret)) b = b.pow(exponent());
        return b;
    }

    std::uint32_t exponent() {
        const Token& t = peek();
        if (t.kind != TokKind::Number || t.text.find('/') != std::string::npos) {
            throw ParseError("expected non-negative integer exponent", t.offset);
        }
        advance();
        unsigned long value = 0;
        try {
            value = std::stoul(t.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", t.offset);
        }
        if (value > 0xffffu) throw ParseError("exponent out of range", t.offset);
        return static_cast<std::uint32_t>(value);
    }

    DiffPolynomial base() {
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::Number: {
                advance();
                return DiffPolynomial::constant(ctx_, Rational::from_string(t.text));
            }
            case TokKind::LParen: {
                advance();
                DiffPolynomial inner = expr();
                expect(TokKind::RParen, "')'");
                return inner;
            }
            case TokKind::Ident: {
                if (const auto head = derivation_head_index(t.text)) {
                    if (is_derivation_application()) return derivation(*head, t.offset);
                }
                advance();
                if (!ctx_->has(t.text)) {
                    throw ParseError("unknown variable '" + t.text + "'", t.offset);
                }
                return DiffPolynomial::variable(ctx_, t.text);
            }
            default:
                throw ParseError("expected a value", t.offset);
        }
    }

    /// At an Ident of shape d<k>: derivation application iff '(' follows,
    /// or '^' uint '(' follows.
    bool is_derivation_application() const {
        if (peek(1).kind == TokKind::LParen) return true;
        return peek(1).kind == TokKind::Caret && peek(2).kind == TokKind::Number &&
               peek(3).kind == TokKind::LParen;
    }

    DiffPolynomial derivation(std::size_t index1, std::size_t offset) {
        advance();  // the d<k> head
        std::uint32_t times = 1;
        if (accept(TokKind::Caret)) times = exponent();
        expect(TokKind::LParen, "'('");
        DiffPolynomial inner = expr();
        expect(TokKind::RParen, "')'");
        if (index1 < 1 || index1 > ctx_->derivation_count()) {
            throw ParseError("derivation index " + std::to_string(index1) + " out of range (m = " +
                                 std::to_string(ctx_->derivation_count()) + ")",
                             offset);
        }
        for (std::uint32_t k = 0; k < times; ++k) inner = inner.apply_derivation(index1 - 1);
        return inner;
    }

    std::vector<Token> toks_;
    ContextPtr ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

DiffPolynomial parse_polynomial(std::string_view text, const ContextPtr& ctx) {
    return Parser(Lexer(text).run(), ctx).parse();
}

std::vector<std::string> scan_identifiers(std::string_view text) {
    const auto toks = Lexer(text).run();
    std::vector<std::string> out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].kind != TokKind::Ident) continue;
        if (derivation_head_index(toks[i].text)) {
            const bool applied =
                (i + 1 < toks.size() && toks[i + 1].kind == TokKind::LParen) ||
                (i + 3 < toks.size() && toks[i + 1].kind == TokKind::Caret &&
                 toks[i + 2].kind == TokKind::Number && toks[i + 3].kind == TokKind::LParen);
            if (applied) continue;
        }
        if (std::find(out.begin(), out.end(), toks[i].text) == out.end()) {
            out.push_back(toks[i].text);
        }
    }
    return out;
}

}  // namespace dpoly
