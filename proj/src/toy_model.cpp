#include "rpq/toy_model.hpp"

#include "rpq/errors.hpp"

#include <algorithm>
#include <cmath>

namespace rpq::toy {

namespace {

Integer int_factorial(int n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer int_binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

EpsScalar gap(const Deformation& d, int alpha) { return d.eps(1, alpha) - d.eps(2, alpha); }

int integer_shift(const ToyParams& p, int m) {
    if (p.gamma.get_den() != 1) throw MathError("the exact toy-model path needs an integer gamma");
    return m + 1 + static_cast<int>(p.gamma.get_num().get_si());
}

std::string rational_coeff(const Rational& c, bool bare) {
    if (bare && c == 1) return "";
    return c.get_str() + (bare ? " " : "");
}

}  // namespace

TPoly TPoly::constant(int width, const EpsScalar& c) {
    TPoly p(width);
    p.add(Exponents(static_cast<std::size_t>(width + 1), 0), c);
    return p;
}

TPoly TPoly::var(int width, int j, const EpsScalar& c) {
    if (j < 0 || j > width) throw MathError("time index outside the truncation width");
    TPoly p(width);
    Exponents e(static_cast<std::size_t>(width + 1), 0);
    e[static_cast<std::size_t>(j)] = 1;
    p.add(e, c);
    return p;
}

EpsScalar TPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? EpsScalar() : it->second;
}

void TPoly::add(const Exponents& e, const EpsScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TPoly TPoly::operator-() const {
    TPoly r(width_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    width_ = std::max(width_, o.width_);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    width_ = std::max(width_, o.width_);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

TPoly operator*(const TPoly& l, const TPoly& r) {
    if (l.width_ != r.width_) throw MathError("TPoly width mismatch");
    TPoly out(l.width_);
    for (const auto& [el, cl] : l.terms_)
        for (const auto& [er, cr] : r.terms_) {
            TPoly::Exponents e = el;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += er[i];
            out.add(e, cl * cr);
        }
    return out;
}

TPoly TPoly::scaled(const EpsScalar& c) const {
    TPoly r(width_);
    for (const auto& [e, v] : terms_) r.add(e, v * c);
    return r;
}

TPoly TPoly::pow(int k) const {
    if (k < 0) throw MathError("negative power of a TPoly");
    TPoly r = constant(width_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

TPoly TPoly::derivative(int j) const {
    TPoly r(width_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<std::size_t>(j)];
        if (k == 0) continue;
        Exponents f = e;
        --f[static_cast<std::size_t>(j)];
        r.add(f, c * EpsScalar(k));
    }
    return r;
}

TPoly TPoly::rescaled(const std::vector<EpsScalar>& factors) const {
    TPoly r(width_);
    for (const auto& [e, c] : terms_) {
        EpsScalar v = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) v *= factors[i].pow(e[i]);
        r.add(e, v);
    }
    return r;
}

int TPoly::homogeneous_weight() const {
    int w = -2;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<int>(i) * e[i];
        if (w == -2)
            w = s;
        else if (w != s)
            return -1;
    }
    return w == -2 ? 0 : w;
}

std::string TPoly::to_string(const SymbolNames& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            vars += (vars.empty() ? "" : " ") + ("t" + std::to_string(i));
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        bool negative = false;
        std::string coef;
        if (c.is_rational()) {
            Rational r = c.eval(Rational(1), Rational(1));
            negative = r < 0;
            Rational mag = abs(r);
            coef = vars.empty() ? mag.get_str() : rational_coeff(mag, true);
        } else {
            coef = "(" + c.to_string(names) + ")" + (vars.empty() ? "" : " ");
        }
        std::string piece = coef + vars;
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

TPoly bell(int n, int width) {
    if (n < 0) throw MathError("Bell index must be nonnegative");
    if (n > width) throw MathError("Bell polynomial needs t_1..t_n inside the width");
    std::vector<TPoly> b{TPoly::constant(width, 1)};
    for (int k = 0; k < n; ++k) {
        TPoly next(width);
        for (int j = 0; j <= k; ++j)
            next += (b[static_cast<std::size_t>(k - j)] * TPoly::var(width, j + 1))
                        .scaled(EpsScalar(Rational(int_binomial(k, j))));
        b.push_back(next);
    }
    return b.back();
}

std::vector<TPoly> bell_series_oracle(int n, int width) {
    XSeries s(n, width);
    for (int k = 1; k <= n; ++k) s.add(k, TPoly::var(width, k, EpsScalar(Rational(1, int_factorial(k)))));
    XSeries e(n, width), power(n, width);
    e.add(0, TPoly::constant(width, 1));
    power.add(0, TPoly::constant(width, 1));
    for (int j = 1; j <= n; ++j) {
        power = power * s;
        e += power.scaled(EpsScalar(Rational(1, int_factorial(j))));
    }
    std::vector<TPoly> out;
    for (int k = 0; k <= n; ++k)
        out.push_back(e.coeffs[static_cast<std::size_t>(k)].scaled(EpsScalar(Rational(int_factorial(k)))));
    return out;
}

TPoly alpha_times(const TPoly& p, const Deformation& d, int alpha) {
    std::vector<EpsScalar> f;
    for (int k = 0; k <= p.width(); ++k) f.push_back(d.eps(1, alpha * k) - d.eps(2, alpha * k));
    return p.rescaled(f);
}

XSeries::XSeries(int order_, int width_) : order(order_), width(width_) {
    coeffs.assign(static_cast<std::size_t>(std::max(order_, 0) + 1), TPoly(width_));
}

void XSeries::add(int power, const TPoly& c) {
    if (c.is_zero()) return;
    if (power > order) {
        truncated = true;
        return;
    }
    if (power < 0) throw MathError("negative power in an x-series");
    coeffs[static_cast<std::size_t>(power)] += c;
}

bool XSeries::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const TPoly& p) { return p.is_zero(); });
}

XSeries XSeries::scaled(const EpsScalar& c) const {
    XSeries r(order, width);
    r.truncated = truncated;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i].scaled(c);
    return r;
}

XSeries& XSeries::operator+=(const XSeries& o) {
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) add(static_cast<int>(i), o.coeffs[i]);
    truncated = truncated || o.truncated;
    return *this;
}

XSeries& XSeries::operator-=(const XSeries& o) {
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) add(static_cast<int>(i), -o.coeffs[i]);
    truncated = truncated || o.truncated;
    return *this;
}

XSeries operator*(const XSeries& l, const XSeries& r) {
    XSeries out(std::min(l.order, r.order), l.width);
    out.truncated = l.truncated || r.truncated;
    for (std::size_t i = 0; i < l.coeffs.size(); ++i) {
        if (l.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
            if (r.coeffs[j].is_zero()) continue;
            out.add(static_cast<int>(i + j), l.coeffs[i] * r.coeffs[j]);
        }
    }
    return out;
}

std::string XSeries::to_string(const SymbolNames& names) const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) out += "x^" + std::to_string(i) + ": " + coeffs[i].to_string(names) + "\n";
    if (out.empty()) out = "0\n";
    if (truncated) out += "inconclusive beyond order " + std::to_string(order) + "\n";
    return out;
}

TPoly TOperator::apply(const TPoly& p) const {
    TPoly out(width);
    for (const auto& [j, c] : coeffs) out += c * p.derivative(j);
    return out;
}

TOperator constraint_op(int m, const ToyParams& params, const Deformation& d) {
    if (m < 0) throw MathError("constraint index must be nonnegative");
    if (m > params.order) throw MathError("constraint index beyond the truncation order");
    int shift = integer_shift(params, m);
    int a = params.alpha, w = params.order;
    TOperator op{w, {}};
    EpsScalar first = alpha_number(d, shift, a) * EpsScalar(Rational(int_factorial(m))) * d.eps(1, -a * m);
    if (!first.is_zero()) op.coeffs[m] = TPoly::constant(w, first);
    EpsScalar pref = params.h * d.eps(2, a * shift) / gap(d, a);
    for (int k = 1; k + m <= w; ++k) {
        Rational ratio(int_factorial(k + m), int_factorial(k));
        ratio.canonicalize();
        TPoly c = alpha_times(bell(k, w), d, a).scaled(pref * EpsScalar(ratio));
        if (c.is_zero()) continue;
        auto it = op.coeffs.find(k + m);
        if (it == op.coeffs.end())
            op.coeffs.emplace(k + m, c);
        else
            it->second += c;
    }
    return op;
}

XSeries substitution_map(const TOperator& op, int order) {
    XSeries s(order, op.width);
    for (const auto& [j, c] : op.coeffs) s.add(j, c.scaled(EpsScalar(Rational(1, int_factorial(j)))));
    return s;
}

XSeries constraint_series_oracle(int m, const ToyParams& params, const Deformation& d) {
    int shift = integer_shift(params, m);
    int a = params.alpha, w = params.order;
    XSeries s(w, w);
    for (int which : {1, 2}) {
        std::vector<EpsScalar> u;
        for (int k = 0; k <= w; ++k) u.push_back(d.eps(which, a * k) - EpsScalar(1));
        EpsScalar outer = d.eps(which, a * shift) / gap(d, a) * EpsScalar(which == 1 ? 1 : -1);
        for (int n = 0; m + n <= w; ++n)
            s.add(m + n, bell(n, w).rescaled(u).scaled(outer * EpsScalar(Rational(1, int_factorial(n)))));
    }
    return s;
}

double number_numeric(double e1, double e2, double x, int alpha) {
    if (e1 == e2) return x;
    return (std::pow(e1, alpha * x) - std::pow(e2, alpha * x)) / (std::pow(e1, alpha) - std::pow(e2, alpha));
}

EquivalenceReport product_equivalence(int m, int n, int alpha, int beta, const ToyParams& params,
                                      const Deformation& d) {
    if (m + n > params.order) throw MathError("m + n beyond the truncation order");
    auto with_alpha = [&params](int a) {
        ToyParams p = params;
        p.alpha = a;
        return p;
    };
    int w = params.order;
    auto xrep = [&](int mode, int a) { return substitution_map(constraint_op(mode, with_alpha(a), d), w); };
    EquivalenceReport r;
    r.m = m;
    r.n = n;
    r.alpha = alpha;
    r.beta = beta;
    r.lhs = xrep(m, alpha) * xrep(n, beta);
    EpsScalar scale = d.eps(1, alpha * m + beta * n);
    EpsScalar c1 = gap(d, alpha + beta) * d.eps(1, -m * beta) / (scale * gap(d, alpha) * gap(d, beta));
    EpsScalar c2 = -(d.eps(2, (n + 1) * beta) / (scale * gap(d, beta)));
    EpsScalar c3 = -(d.eps(1, -m * beta) * d.eps(2, (m + n + 1) * alpha) / (scale * gap(d, alpha)));
    r.rhs = xrep(m + n, alpha + beta).scaled(c1) + xrep(m + n, alpha).scaled(c2) + xrep(m + n, beta).scaled(c3);
    r.residual = r.lhs - r.rhs;
    r.truncated = r.lhs.truncated;
    r.zero = r.residual.is_zero();
    return r;
}

double max_abs_at(const XSeries& s, const Rational& e1, const Rational& e2) {
    double best = 0;
    for (const auto& c : s.coeffs)
        for (const auto& [e, v] : c.terms()) best = std::max(best, std::fabs(to_double(v.eval(e1, e2))));
    return best;
}

}  // namespace rpq::toy
