#ifndef DPOLY_PARSER_HPP
#define DPOLY_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpoly/polynomial.hpp"

namespace dpoly {

/// Syntax or lowering failure. `offset` is the byte offset of the first
/// offending token in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Grammar (whitespace-insensitive):
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | ident | 'd' uint ('^' uint)? '(' expr ')' | '(' expr ')'
// Rationals are unsigned 'p' or 'p/q' literals; signs are operators. An
// identifier of the shape d<uint> is a derivation application only when the
// parenthesized form follows, otherwise it is an ordinary identifier.
DiffPolynomial parse_polynomial(std::string_view text, const ContextPtr& ctx);

/// Identifiers appearing in `text` in order of first appearance, excluding
/// derivation heads. Used to auto-declare ring variables in the CLI.
std::vector<std::string> scan_identifiers(std::string_view text);

}  // namespace dpoly

#endif
