#pragma once

#include "rpq/bilaurent.hpp"

#include <string>
#include <string_view>

namespace rpq {

/// Element of the rational function field Q(x, y), stored canonically:
/// num/den coprime, den an integer primitive polynomial free of monomial
/// factors with positive graded-leading coefficient. Equality is structural.
class EpsScalar {
public:
    EpsScalar() : den_(1) {}
    EpsScalar(long c) : num_(c), den_(1) {}  // NOLINT
    EpsScalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    EpsScalar(const BiLaurent& p) : num_(p), den_(1) {}  // NOLINT

    /// Reduces to canonical form; throws DivisionByZero for a zero denominator.
    static EpsScalar fraction(const BiLaurent& num, const BiLaurent& den);
    static EpsScalar monomial(Monomial m, const Rational& c = 1) { return BiLaurent::monomial(m, c); }

    const BiLaurent& num() const { return num_; }
    const BiLaurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_ == BiLaurent(1); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_rational() const { return den_.is_constant() && num_.is_constant(); }

    EpsScalar operator-() const;
    EpsScalar& operator+=(const EpsScalar& o);
    EpsScalar& operator-=(const EpsScalar& o);
    EpsScalar& operator*=(const EpsScalar& o);
    EpsScalar& operator/=(const EpsScalar& o);
    friend EpsScalar operator+(EpsScalar l, const EpsScalar& r) { return l += r; }
    friend EpsScalar operator-(EpsScalar l, const EpsScalar& r) { return l -= r; }
    friend EpsScalar operator*(EpsScalar l, const EpsScalar& r) { return l *= r; }
    friend EpsScalar operator/(EpsScalar l, const EpsScalar& r) { return l /= r; }

    EpsScalar inverse() const;
    EpsScalar pow(int e) const;

    /// Monomial substitution of the two ring symbols.
    EpsScalar substitute(Monomial image_x, Monomial image_y) const;

    /// Throws PoleError when the denominator vanishes at the point.
    double eval(double x, double y) const;
    Rational eval(const Rational& x, const Rational& y) const;

    std::string to_string(const SymbolNames& names = {}) const;
    /// Accepts sums, products, quotients, integer powers and parentheses
    /// over rational literals and the two symbol names.
    static EpsScalar parse(std::string_view text, const SymbolNames& names = {});

    bool operator==(const EpsScalar&) const = default;
    std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
    EpsScalar(BiLaurent num, BiLaurent den, int) : num_(std::move(num)), den_(std::move(den)) {}

    BiLaurent num_;
    BiLaurent den_;
};

/// Independent equality test a/b == c/d  <=>  a*d == c*b; used as an oracle.
bool cross_equal(const EpsScalar& l, const EpsScalar& r);

}  // namespace rpq
