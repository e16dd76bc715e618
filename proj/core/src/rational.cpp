#include "passoc/rational.hpp"

#include "passoc/errors.hpp"

#include <cctype>

namespace passoc {

std::string to_string(const Rational& q)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'");

    auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
    Integer n{std::string(strip_plus(num))};
    Integer d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

Integer ipow(const Integer& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

Rational rpow(const Rational& base, unsigned exponent)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return Rational(ipow(numerator(base), exponent), ipow(denominator(base), exponent));
}

} // namespace passoc
