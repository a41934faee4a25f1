#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rpq {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "7", "-3/4", "+2". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// r^e for any integer e; throws DivisionByZero for 0^(negative).
Rational pow(const Rational& r, int e);

}  // namespace rpq
