#include "rpq/graded_op.hpp"

#include <vector>

namespace rpq {

DegreeCoeff::DegreeCoeff(const EpsScalar& constant) {
    if (!constant.is_zero()) terms_.emplace(DegreeKey{}, constant);
}

DegreeCoeff DegreeCoeff::term(DegreeKey key, const EpsScalar& c) {
    DegreeCoeff r;
    r.add(key, c);
    return r;
}

void DegreeCoeff::add(const DegreeKey& k, const EpsScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

DegreeCoeff DegreeCoeff::operator-() const {
    DegreeCoeff r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

DegreeCoeff& DegreeCoeff::operator+=(const DegreeCoeff& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

DegreeCoeff& DegreeCoeff::operator-=(const DegreeCoeff& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

DegreeCoeff operator*(const DegreeCoeff& l, const DegreeCoeff& r) {
    DegreeCoeff out;
    for (const auto& [kl, cl] : l.terms_)
        for (const auto& [kr, cr] : r.terms_) out.add({kl.a + kr.a, kl.b + kr.b, kl.npow + kr.npow}, cl * cr);
    return out;
}

DegreeCoeff DegreeCoeff::shift_substitute(int s) const {
    if (s == 0) return *this;
    DegreeCoeff out;
    for (const auto& [k, c] : terms_) {
        EpsScalar base = c * EpsScalar::monomial({k.a * s, k.b * s});
        // (N + s)^j = sum_i C(j,i) s^(j-i) N^i
        Integer binom = 1;
        for (int i = k.npow; i >= 0; --i) {
            Integer spow;
            mpz_pow_ui(spow.get_mpz_t(), Integer(s).get_mpz_t(), static_cast<unsigned long>(k.npow - i));
            out.add({k.a, k.b, i}, base * EpsScalar(Rational(binom * spow)));
            binom = binom * i / (k.npow - i + 1);
        }
    }
    return out;
}

EpsScalar DegreeCoeff::evaluate(int degree) const {
    EpsScalar s;
    for (const auto& [k, c] : terms_) {
        Integer npow;
        mpz_pow_ui(npow.get_mpz_t(), Integer(degree).get_mpz_t(), static_cast<unsigned long>(k.npow));
        s += c * EpsScalar::monomial({k.a * degree, k.b * degree}, Rational(npow));
    }
    return s;
}

std::string DegreeCoeff::to_string(const SymbolNames& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::vector<std::string> factors;
        auto exp_factor = [&factors](const std::string& sym, int e) {
            if (e == 0) return;
            if (e == 1)
                factors.push_back(sym + "^N");
            else
                factors.push_back(sym + (e == -1 ? "^(-N)" : "^(" + std::to_string(e) + "N)"));
        };
        exp_factor(names.x, k.a);
        exp_factor(names.y, k.b);
        if (k.npow == 1) factors.push_back("N");
        if (k.npow > 1) factors.push_back("N^" + std::to_string(k.npow));
        std::string piece;
        if (factors.empty())
            piece = "(" + c.to_string(names) + ")";
        else {
            if (!c.is_one()) piece = "(" + c.to_string(names) + ")*";
            for (std::size_t i = 0; i < factors.size(); ++i) piece += (i ? "*" : "") + factors[i];
        }
        out += (out.empty() ? "" : " + ") + piece;
    }
    return out;
}

DegreeCoeff eps_degree(const Deformation& d, int which, int sign, int offset) {
    if (d.classical) return DegreeCoeff(1);
    Monomial m = d.eps_mono(which) * sign;
    return DegreeCoeff::term({m.a, m.b, 0}, d.eps(which, offset));
}

DegreeCoeff degree_number(const Deformation& d, int offset, int alpha) {
    if (d.classical) return DegreeCoeff::term({0, 0, 1}, 1) + DegreeCoeff(offset);
    EpsScalar den = d.eps(1, alpha) - d.eps(2, alpha);
    Monomial m1 = d.eps1 * alpha, m2 = d.eps2 * alpha;
    return DegreeCoeff::term({m1.a, m1.b, 0}, d.eps(1, alpha * offset) / den) -
           DegreeCoeff::term({m2.a, m2.b, 0}, d.eps(2, alpha * offset) / den);
}

LaurentPoly LaurentPoly::monomial(int exponent, const EpsScalar& c) {
    LaurentPoly p;
    p.add(exponent, c);
    return p;
}

EpsScalar LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? EpsScalar() : it->second;
}

LaurentPoly& LaurentPoly::add(int exponent, const EpsScalar& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

LaurentPoly LaurentPoly::scaled(const EpsScalar& c) const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_) r.add(e, v * c);
    return r;
}

std::string LaurentPoly::to_string(const SymbolNames& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out += (out.empty() ? "" : " + ") + ("(" + it->second.to_string(names) + ")*z^" + std::to_string(it->first));
    return out;
}

GradedOp GradedOp::part(int shift, const DegreeCoeff& c) {
    GradedOp op;
    op.add(shift, c);
    return op;
}

void GradedOp::add(int shift, const DegreeCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = parts_.emplace(shift, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) parts_.erase(it);
}

DegreeCoeff GradedOp::coeff(int shift) const {
    auto it = parts_.find(shift);
    return it == parts_.end() ? DegreeCoeff() : it->second;
}

GradedOp GradedOp::operator-() const {
    GradedOp r;
    for (const auto& [s, c] : parts_) r.parts_.emplace(s, -c);
    return r;
}

GradedOp& GradedOp::operator+=(const GradedOp& o) {
    for (const auto& [s, c] : o.parts_) add(s, c);
    return *this;
}

GradedOp& GradedOp::operator-=(const GradedOp& o) {
    for (const auto& [s, c] : o.parts_) add(s, -c);
    return *this;
}

GradedOp GradedOp::scaled(const EpsScalar& c) const {
    GradedOp r;
    for (const auto& [s, f] : parts_) r.add(s, f * DegreeCoeff(c));
    return r;
}

std::map<int, EpsScalar> GradedOp::at_degree(int degree) const {
    std::map<int, EpsScalar> out;
    for (const auto& [s, f] : parts_) {
        EpsScalar v = f.evaluate(degree);
        if (!v.is_zero()) out.emplace(s, v);
    }
    return out;
}

std::string GradedOp::to_string(const SymbolNames& names) const {
    if (parts_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : parts_) out += "z^{" + std::to_string(s) + "} :: " + c.to_string(names) + "\n";
    return out;
}

GradedOp compose(const GradedOp& lhs, const GradedOp& rhs) {
    GradedOp out;
    for (const auto& [s1, c1] : lhs.parts())
        for (const auto& [s2, c2] : rhs.parts()) out += GradedOp::part(s1 + s2, c1.shift_substitute(s2) * c2);
    return out;
}

LaurentPoly apply(const GradedOp& op, const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [k, v] : p.terms())
        for (const auto& [s, c] : op.parts()) out.add(k + s, c.evaluate(k) * v);
    return out;
}

GradedOp deformed_bracket(const EpsScalar& u, const EpsScalar& v, const GradedOp& x, const GradedOp& y) {
    return compose(x, y).scaled(u) - compose(y, x).scaled(v);
}

}  // namespace rpq
