#include "triconf/rational.hpp"

#include <charconv>

#include "triconf/errors.hpp"

namespace triconf {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    std::int64_t v = 0;
    if (s.empty())
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!s.empty() && (s.front() == '+' || s.front() == '-'))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    std::int64_t num = 0, den = 1;
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        num = parse_int(s, text);
    } else {
        num = parse_int(s.substr(0, slash), text);
        den = parse_int(s.substr(slash + 1), text);
        if (den <= 0)
            throw ParseError("rational '" + std::string(text) + "' needs a positive denominator");
    }
    Rational r(num, den);
    return neg ? -r : r;
}

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace triconf
