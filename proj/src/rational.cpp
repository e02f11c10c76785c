#include "dpoly/rational.hpp"

#include <cctype>

namespace dpoly {

Rational Rational::from_string(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto take_digits = [&]() -> std::string {
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out.push_back(text[pos++]);
        }
        return out;
    };
    const std::string num = take_digits();
    if (num.empty()) throw std::invalid_argument("rational: expected digits in '" + text + "'");
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = take_digits();
        if (den.empty()) throw std::invalid_argument("rational: expected denominator in '" + text + "'");
    }
    if (pos != text.size()) throw std::invalid_argument("rational: trailing input in '" + text + "'");

    mpq_class v(num + "/" + den);
    if (v.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    v.canonicalize();
    if (negative) v = -v;
    return Rational(std::move(v));
}

Rational Rational::pow(unsigned e) const {
    Rational out(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

}  // namespace dpoly
