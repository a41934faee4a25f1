#pragma once

#include "rpq/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rpq {

/// Exponent pair of x^a y^b; either exponent may be negative.
struct Monomial {
    int a = 0;
    int b = 0;

    auto operator<=>(const Monomial&) const = default;
    Monomial operator+(Monomial o) const { return {a + o.a, b + o.b}; }
    Monomial operator-(Monomial o) const { return {a - o.a, b - o.b}; }
    Monomial operator*(int k) const { return {a * k, b * k}; }
    int total() const { return a + b; }
};

/// Graded-lex order: total degree first, then the x exponent.
bool graded_greater(Monomial lhs, Monomial rhs);

/// Printable names of the two ring generators.
struct SymbolNames {
    std::string x = "e1";
    std::string y = "e2";
};

/// Laurent polynomial in two commuting symbols with rational coefficients.
/// Terms are kept strictly decreasing in graded-lex order with no zeros,
/// so structural equality is mathematical equality.
class BiLaurent {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        bool operator==(const Term&) const = default;
    };

    BiLaurent() = default;
    BiLaurent(const Rational& c);  // NOLINT: constants convert implicitly
    BiLaurent(long c) : BiLaurent(Rational(c)) {}

    static BiLaurent monomial(Monomial m, const Rational& c = 1);
    static BiLaurent from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant term, zero if absent.
    Rational constant() const;

    const Term& leading() const { return terms_.front(); }
    Monomial min_exponents() const;
    Monomial max_exponents() const;

    BiLaurent operator-() const;
    BiLaurent& operator+=(const BiLaurent& o);
    BiLaurent& operator-=(const BiLaurent& o);
    BiLaurent& operator*=(const BiLaurent& o);
    friend BiLaurent operator+(BiLaurent l, const BiLaurent& r) { return l += r; }
    friend BiLaurent operator-(BiLaurent l, const BiLaurent& r) { return l -= r; }
    friend BiLaurent operator*(const BiLaurent& l, const BiLaurent& r);

    BiLaurent scaled(const Rational& c) const;
    BiLaurent shifted(Monomial m) const;

    /// Quotient if `d` divides exactly in the Laurent ring.
    std::optional<BiLaurent> divide_exact(const BiLaurent& d) const;

    /// Apply x -> x^ix.a y^ix.b, y -> x^iy.a y^iy.b.
    BiLaurent substitute(Monomial image_x, Monomial image_y) const;

    double eval(double x, double y) const;
    Rational eval(const Rational& x, const Rational& y) const;

    std::string to_string(const SymbolNames& names = {}) const;

    bool operator==(const BiLaurent&) const = default;
    std::size_t hash() const;

private:
    std::vector<Term> terms_;
};

}  // namespace rpq
