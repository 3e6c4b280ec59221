#include "knets/rational.hpp"

#include <cctype>

#include "knets/error.hpp"

namespace knets {

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational rational_from_string(std::string_view s) {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(s) + "'");
    Int p(std::string(num));
    Int q(std::string(den));
    if (q == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(s) + "'");
    return Rational(p, q);
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Int n = numerator(r), d = denominator(r);
    Int rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
}

} // namespace knets
