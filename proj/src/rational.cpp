#include "coxkit/rational.hpp"

#include <cctype>

namespace coxkit {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_big(const std::string& s) {
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!looks_like_integer(text))
            throw std::invalid_argument("not a rational: '" + text + "'");
        return Rational(parse_big(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den))
        throw std::invalid_argument("not a rational: '" + text + "'");
    const BigInt d = parse_big(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(parse_big(num), d);
}

}  // namespace coxkit
