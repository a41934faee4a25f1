#include "rpq/rational.hpp"

#include "rpq/errors.hpp"

#include <cctype>

namespace rpq {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

static bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw DivisionByZero("zero denominator in literal '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

double to_double(const Rational& r) { return r.get_d(); }

Rational pow(const Rational& r, int e) {
    if (e < 0) {
        if (r == 0) throw DivisionByZero("zero to a negative power");
        Rational inv = 1 / r;
        return pow(inv, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

}  // namespace rpq
