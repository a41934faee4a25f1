#include "rpq/eps_scalar.hpp"

#include "rpq/errors.hpp"
#include "rpq/poly_gcd.hpp"

#include <cctype>

namespace rpq {

namespace {

BiLaurent exact(const BiLaurent& a, const BiLaurent& b) {
    auto q = a.divide_exact(b);
    if (!q) throw MathError("internal: inexact division during reduction");
    return *std::move(q);
}

bool is_unit_den(const BiLaurent& d) { return d == BiLaurent(1); }

}  // namespace

EpsScalar EpsScalar::fraction(const BiLaurent& num, const BiLaurent& den) {
    if (den.is_zero()) throw DivisionByZero("EpsScalar with zero denominator");
    if (num.is_zero()) return {};
    BiLaurent unit;
    BiLaurent d = primitive_associate(den, &unit);
    BiLaurent n = exact(num, unit);
    if (is_unit_den(d)) return EpsScalar(std::move(n), std::move(d), 0);
    BiLaurent g = poly_gcd(n, d);
    if (!is_unit_den(g)) {
        n = exact(n, g);
        d = exact(d, g);
    }
    return EpsScalar(std::move(n), std::move(d), 0);
}

EpsScalar EpsScalar::operator-() const { return EpsScalar(-num_, den_, 0); }

EpsScalar& EpsScalar::operator+=(const EpsScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    bool b1 = is_unit_den(den_), d1 = is_unit_den(o.den_);
    if (b1 && d1) {
        num_ += o.num_;
        return *this;
    }
    if (b1) return *this = EpsScalar(num_ * o.den_ + o.num_, o.den_, 0);
    if (d1) {
        num_ += o.num_ * den_;
        return *this;
    }
    if (den_ == o.den_) return *this = fraction(num_ + o.num_, den_);
    BiLaurent g = poly_gcd(den_, o.den_);
    if (is_unit_den(g)) return *this = EpsScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_, 0);
    BiLaurent bq = exact(den_, g), dq = exact(o.den_, g);
    BiLaurent t = num_ * dq + o.num_ * bq;
    if (t.is_zero()) return *this = EpsScalar();
    BiLaurent g2 = poly_gcd(t, g);
    return *this = EpsScalar(exact(t, g2), bq * dq * exact(g, g2), 0);
}

EpsScalar& EpsScalar::operator-=(const EpsScalar& o) { return *this += -o; }

EpsScalar& EpsScalar::operator*=(const EpsScalar& o) {
    if (is_zero() || o.is_zero()) return *this = EpsScalar();
    bool b1 = is_unit_den(den_), d1 = is_unit_den(o.den_);
    if (b1 && d1) {
        num_ *= o.num_;
        return *this;
    }
    BiLaurent a = num_, b = den_, c = o.num_, d = o.den_;
    if (!d1) {
        BiLaurent g = poly_gcd(a, d);
        if (!is_unit_den(g)) {
            a = exact(a, g);
            d = exact(d, g);
        }
    }
    if (!b1) {
        BiLaurent g = poly_gcd(c, b);
        if (!is_unit_den(g)) {
            c = exact(c, g);
            b = exact(b, g);
        }
    }
    return *this = EpsScalar(a * c, b * d, 0);
}

EpsScalar EpsScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero EpsScalar");
    BiLaurent unit;
    BiLaurent d = primitive_associate(num_, &unit);
    return EpsScalar(exact(den_, unit), std::move(d), 0);
}

EpsScalar& EpsScalar::operator/=(const EpsScalar& o) { return *this *= o.inverse(); }

EpsScalar EpsScalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    EpsScalar result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

EpsScalar EpsScalar::substitute(Monomial image_x, Monomial image_y) const {
    return fraction(num_.substitute(image_x, image_y), den_.substitute(image_x, image_y));
}

double EpsScalar::eval(double x, double y) const {
    double d = den_.eval(x, y);
    if (d == 0.0) throw PoleError("denominator vanishes at evaluation point");
    return num_.eval(x, y) / d;
}

Rational EpsScalar::eval(const Rational& x, const Rational& y) const {
    Rational d = den_.eval(x, y);
    if (d == 0) throw PoleError("denominator vanishes at evaluation point");
    return num_.eval(x, y) / d;
}

std::string EpsScalar::to_string(const SymbolNames& names) const {
    if (is_unit_den(den_)) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

bool cross_equal(const EpsScalar& l, const EpsScalar& r) { return l.num() * r.den() == r.num() * l.den(); }

namespace {

class Parser {
public:
    Parser(std::string_view s, const SymbolNames& names) : s_(s), names_(names) {}

    EpsScalar run() {
        EpsScalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    EpsScalar expr() {
        EpsScalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    EpsScalar term() {
        EpsScalar v = unary();
        for (;;) {
            if (eat('*'))
                v *= unary();
            else if (eat('/'))
                v /= unary();
            else
                return v;
        }
    }

    EpsScalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        EpsScalar base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            if (!neg) eat('+');
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    EpsScalar atom() {
        skip();
        if (eat('(')) {
            EpsScalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Rational(Integer(std::string(s_.substr(start, pos_ - start))));
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string_view ident = s_.substr(start, pos_ - start);
        if (ident.empty()) fail("expected number, symbol or '('");
        if (ident == names_.x) return EpsScalar::monomial({1, 0});
        if (ident == names_.y) return EpsScalar::monomial({0, 1});
        pos_ = start;
        fail("unknown symbol '" + std::string(ident) + "'");
    }

    std::string_view s_;
    const SymbolNames& names_;
    std::size_t pos_ = 0;
};

}  // namespace

EpsScalar EpsScalar::parse(std::string_view text, const SymbolNames& names) { return Parser(text, names).run(); }

}  // namespace rpq
