#include "malt/scalar.hpp"

namespace malt {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

Int parse_int(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) {
        throw FormatError("invalid rational literal '" + std::string(whole) + "'");
    }
    Int value = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') {
            throw FormatError("invalid rational literal '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? Int(-value) : value;
}

} // namespace

Scalar Scalar::parse(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    std::string_view s = text.substr(b, e - b);
    if (s.empty()) {
        throw FormatError("empty rational literal");
    }
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Scalar(parse_int(s, s), Int(1));
    }
    Int num = parse_int(s.substr(0, slash), s);
    Int den = parse_int(s.substr(slash + 1), s);
    if (den == 0) {
        throw FormatError("zero denominator in rational literal '" + std::string(s) + "'");
    }
    return Scalar(num, den);
}

std::string Scalar::str() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

} // namespace malt
