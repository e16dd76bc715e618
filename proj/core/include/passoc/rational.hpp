#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace passoc {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Reduced "numerator/denominator"; integers are written without "/1".
std::string to_string(const Rational& q);

// Accepts "a", "-a", "a/b". Throws ParseError on anything else or b == 0.
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);

} // namespace passoc
