#include "rpq/bilaurent.hpp"

#include "rpq/errors.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>

namespace rpq {

bool graded_greater(Monomial lhs, Monomial rhs) {
    if (lhs.total() != rhs.total()) return lhs.total() > rhs.total();
    return lhs.a > rhs.a;
}

namespace {

bool term_order(const BiLaurent::Term& l, const BiLaurent::Term& r) { return graded_greater(l.mono, r.mono); }

// Sort, combine like monomials and drop zeros.
std::vector<BiLaurent::Term> normalize(std::vector<BiLaurent::Term> raw) {
    for (auto& t : raw) t.coeff.canonicalize();
    std::sort(raw.begin(), raw.end(), term_order);
    std::vector<BiLaurent::Term> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return out;
}

// Merge two sorted term lists as l + sign*r.
std::vector<BiLaurent::Term> merge(const std::vector<BiLaurent::Term>& l, const std::vector<BiLaurent::Term>& r,
                                   bool subtract) {
    std::vector<BiLaurent::Term> out;
    out.reserve(l.size() + r.size());
    std::size_t i = 0, j = 0;
    while (i < l.size() || j < r.size()) {
        if (j == r.size() || (i < l.size() && graded_greater(l[i].mono, r[j].mono))) {
            out.push_back(l[i++]);
        } else if (i == l.size() || graded_greater(r[j].mono, l[i].mono)) {
            out.push_back({r[j].mono, subtract ? Rational(-r[j].coeff) : r[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(l[i].coeff - r[j].coeff) : Rational(l[i].coeff + r[j].coeff);
            if (c != 0) out.push_back({l[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

BiLaurent::BiLaurent(const Rational& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
    if (!terms_.empty()) terms_[0].coeff.canonicalize();
}

BiLaurent BiLaurent::monomial(Monomial m, const Rational& c) {
    BiLaurent r;
    if (c != 0) r.terms_.push_back({m, c});
    if (!r.terms_.empty()) r.terms_[0].coeff.canonicalize();
    return r;
}

BiLaurent BiLaurent::from_terms(std::vector<Term> terms) {
    BiLaurent r;
    r.terms_ = normalize(std::move(terms));
    return r;
}

bool BiLaurent::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{}); }

Rational BiLaurent::constant() const {
    for (const auto& t : terms_)
        if (t.mono == Monomial{}) return t.coeff;
    return 0;
}

Monomial BiLaurent::min_exponents() const {
    if (terms_.empty()) return {};
    Monomial m{INT_MAX, INT_MAX};
    for (const auto& t : terms_) {
        m.a = std::min(m.a, t.mono.a);
        m.b = std::min(m.b, t.mono.b);
    }
    return m;
}

Monomial BiLaurent::max_exponents() const {
    if (terms_.empty()) return {};
    Monomial m{INT_MIN, INT_MIN};
    for (const auto& t : terms_) {
        m.a = std::max(m.a, t.mono.a);
        m.b = std::max(m.b, t.mono.b);
    }
    return m;
}

BiLaurent BiLaurent::operator-() const {
    BiLaurent r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
    if (o.is_zero()) return *this;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
    if (o.is_zero()) return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

BiLaurent operator*(const BiLaurent& l, const BiLaurent& r) {
    if (l.is_zero() || r.is_zero()) return {};
    if (r.size() == 1) return l.shifted(r.terms_[0].mono).scaled(r.terms_[0].coeff);
    if (l.size() == 1) return r.shifted(l.terms_[0].mono).scaled(l.terms_[0].coeff);
    std::vector<BiLaurent::Term> raw;
    raw.reserve(l.size() * r.size());
    for (const auto& a : l.terms_)
        for (const auto& b : r.terms_) raw.push_back({a.mono + b.mono, a.coeff * b.coeff});
    return BiLaurent::from_terms(std::move(raw));
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& o) { return *this = *this * o; }

BiLaurent BiLaurent::scaled(const Rational& c) const {
    if (c == 0) return {};
    BiLaurent r = *this;
    if (c != 1)
        for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

BiLaurent BiLaurent::shifted(Monomial m) const {
    BiLaurent r = *this;
    if (m != Monomial{})
        for (auto& t : r.terms_) t.mono = t.mono + m;
    return r;  // a common shift preserves graded-lex order
}

std::optional<BiLaurent> BiLaurent::divide_exact(const BiLaurent& d) const {
    if (d.is_zero()) throw DivisionByZero("BiLaurent division by zero");
    if (is_zero()) return BiLaurent{};
    if (d.is_monomial()) return shifted(Monomial{} - d.leading().mono).scaled(1 / d.leading().coeff);
    // Monomials are units: reduce to polynomial division of the shifted parts.
    Monomial nmin = min_exponents(), dmin = d.min_exponents();
    BiLaurent rem = shifted(Monomial{} - nmin);
    BiLaurent div = d.shifted(Monomial{} - dmin);
    const Term& lt = div.leading();
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        Monomial q = rem.leading().mono - lt.mono;
        if (q.a < 0 || q.b < 0) return std::nullopt;
        Rational c = rem.leading().coeff / lt.coeff;
        rem -= div.shifted(q).scaled(c);
        quot.push_back({q, c});
    }
    return BiLaurent::from_terms(std::move(quot)).shifted(nmin - dmin);
}

BiLaurent BiLaurent::substitute(Monomial image_x, Monomial image_y) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) raw.push_back({image_x * t.mono.a + image_y * t.mono.b, t.coeff});
    return from_terms(std::move(raw));
}

double BiLaurent::eval(double x, double y) const {
    double s = 0;
    for (const auto& t : terms_) s += t.coeff.get_d() * std::pow(x, t.mono.a) * std::pow(y, t.mono.b);
    return s;
}

Rational BiLaurent::eval(const Rational& x, const Rational& y) const {
    Rational s = 0;
    for (const auto& t : terms_) s += t.coeff * pow(x, t.mono.a) * pow(y, t.mono.b);
    return s;
}

static std::string render_term(const BiLaurent::Term& t, const SymbolNames& names) {
    if (t.mono == Monomial{}) return t.coeff.get_str();
    std::string s;
    if (t.coeff == -1)
        s = "-";
    else if (t.coeff != 1)
        s = t.coeff.get_str() + "*";
    auto factor = [](const std::string& sym, int e) { return e == 1 ? sym : sym + "^" + std::to_string(e); };
    if (t.mono.a != 0) s += factor(names.x, t.mono.a);
    if (t.mono.b != 0) s += (t.mono.a != 0 ? "*" : "") + factor(names.y, t.mono.b);
    return s;
}

std::string BiLaurent::to_string(const SymbolNames& names) const {
    if (terms_.empty()) return "0";
    std::string s = render_term(terms_[0], names);
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        if (t.coeff < 0)
            s += " - " + render_term({t.mono, -t.coeff}, names);
        else
            s += " + " + render_term(t, names);
    }
    return s;
}

std::size_t BiLaurent::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& t : terms_) {
        mix(std::hash<int>{}(t.mono.a));
        mix(std::hash<int>{}(t.mono.b));
        mix(std::hash<std::string>{}(t.coeff.get_str()));
    }
    return h;
}

}  // namespace rpq
