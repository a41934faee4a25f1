#pragma once

#include "rpq/deformation.hpp"

#include <map>
#include <string>
#include <vector>

namespace rpq::toy {

/// Polynomial in the times t_0..t_width with EpsScalar coefficients.
class TPoly {
public:
    using Exponents = std::vector<int>;

    explicit TPoly(int width = 0) : width_(width) {}
    static TPoly constant(int width, const EpsScalar& c);
    static TPoly var(int width, int j, const EpsScalar& c = 1);

    int width() const { return width_; }
    const std::map<Exponents, EpsScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    EpsScalar coeff(const Exponents& e) const;
    void add(const Exponents& e, const EpsScalar& c);

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly l, const TPoly& r) { return l += r; }
    friend TPoly operator-(TPoly l, const TPoly& r) { return l -= r; }
    friend TPoly operator*(const TPoly& l, const TPoly& r);
    TPoly scaled(const EpsScalar& c) const;
    TPoly pow(int k) const;

    /// d/dt_j.
    TPoly derivative(int j) const;
    /// t_j -> factors[j] t_j.
    TPoly rescaled(const std::vector<EpsScalar>& factors) const;
    /// Sum of j * e_j over a term; -1 when the terms have different weights.
    int homogeneous_weight() const;

    /// "t1^3 + 3 t1 t2 + t3"; non-rational coefficients are parenthesized.
    std::string to_string(const SymbolNames& names = {}) const;
    bool operator==(const TPoly& o) const { return terms_ == o.terms_; }

private:
    int width_;
    std::map<Exponents, EpsScalar> terms_;
};

/// Complete Bell polynomial with exp(sum_{s>=1} t_s x^s/s!) = sum B_n x^n/n!,
/// by B_(n+1) = sum_j C(n,j) B_(n-j) t_(j+1).
TPoly bell(int n, int width);
/// B_0..B_n from the truncated exponential sum_j S^j/j! of S = sum t_s x^s/s!.
std::vector<TPoly> bell_series_oracle(int n, int width);
/// t_k -> (e1^(alpha k) - e2^(alpha k)) t_k.
TPoly alpha_times(const TPoly& p, const Deformation& d, int alpha);

/// Power series in x with TPoly coefficients, truncated at `order`.
struct XSeries {
    int order = 0;
    int width = 0;
    std::vector<TPoly> coeffs;  // index = power of x
    /// Set when some product term was dropped by the truncation.
    bool truncated = false;

    XSeries(int order_, int width_);
    void add(int power, const TPoly& c);
    bool is_zero() const;
    XSeries scaled(const EpsScalar& c) const;
    XSeries& operator+=(const XSeries& o);
    XSeries& operator-=(const XSeries& o);
    friend XSeries operator+(XSeries l, const XSeries& r) { return l += r; }
    friend XSeries operator-(XSeries l, const XSeries& r) { return l -= r; }
    friend XSeries operator*(const XSeries& l, const XSeries& r);
    std::string to_string(const SymbolNames& names = {}) const;
};

struct ToyParams {
    Rational gamma = 0;
    int alpha = 1;
    int order = 6;  // truncation order in x, also the number of times t_1..t_order
    EpsScalar h = 1;
};

/// sum_j c_j(t) d/dt_j.
struct TOperator {
    int width = 0;
    std::map<int, TPoly> coeffs;
    TPoly apply(const TPoly& p) const;
};

/// [m+1+g]_alpha m! e1^(-alpha m) d/dt_m
///   + h e2^(alpha (m+1+g)) / (e1^alpha - e2^alpha) sum_k (k+m)!/k! B_k(t^alpha) d/dt_(k+m), k+m <= order.
/// The exact path needs an integer gamma.
TOperator constraint_op(int m, const ToyParams& params, const Deformation& d);
/// j! d/dt_j -> x^j.
XSeries substitution_map(const TOperator& op, int order);
/// x^-gamma exp(-S) D_alpha (x^(m+1+gamma) exp(S)) expanded in x, the series the
/// constraint operator has to reproduce.
XSeries constraint_series_oracle(int m, const ToyParams& params, const Deformation& d);

/// [x]_alpha in the epsilon form for real x.
double number_numeric(double e1, double e2, double x, int alpha);

struct EquivalenceReport {
    int m = 0, n = 0, alpha = 1, beta = 1;
    XSeries lhs{0, 0};
    XSeries rhs{0, 0};
    XSeries residual{0, 0};
    bool zero = false;
    bool truncated = false;
};

/// Product of the two x-representations against the displayed combination of
/// T^(alpha+beta), T^alpha and T^beta at mode m+n; params.alpha is ignored.
EquivalenceReport product_equivalence(int m, int n, int alpha, int beta, const ToyParams& params,
                                      const Deformation& d);

/// Largest |coefficient| of a series with e1, e2 set to the given values.
double max_abs_at(const XSeries& s, const Rational& e1, const Rational& e2);

}  // namespace rpq::toy
