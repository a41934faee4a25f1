#pragma once

#include "rpq/deformation.hpp"

#include <compare>
#include <map>
#include <string>

namespace rpq {

/// Key of one degree-dependent factor N^npow * (x^a y^b)^N, where N is the
/// degree an operator acts on and x, y are the ring symbols.
struct DegreeKey {
    int a = 0;
    int b = 0;
    int npow = 0;
    auto operator<=>(const DegreeKey&) const = default;
};

/// Closed-form coefficient f(N) = sum c_key * N^npow * (x^a y^b)^N.
/// Distinct keys are linearly independent functions of N, so structural
/// equality is equality for every degree.
class DegreeCoeff {
public:
    DegreeCoeff() = default;
    DegreeCoeff(const EpsScalar& constant);  // NOLINT
    DegreeCoeff(long constant) : DegreeCoeff(EpsScalar(constant)) {}  // NOLINT

    static DegreeCoeff term(DegreeKey key, const EpsScalar& c);

    const std::map<DegreeKey, EpsScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    DegreeCoeff operator-() const;
    DegreeCoeff& operator+=(const DegreeCoeff& o);
    DegreeCoeff& operator-=(const DegreeCoeff& o);
    friend DegreeCoeff operator+(DegreeCoeff l, const DegreeCoeff& r) { return l += r; }
    friend DegreeCoeff operator-(DegreeCoeff l, const DegreeCoeff& r) { return l -= r; }
    friend DegreeCoeff operator*(const DegreeCoeff& l, const DegreeCoeff& r);

    /// f(N) -> f(N + s).
    DegreeCoeff shift_substitute(int s) const;
    EpsScalar evaluate(int degree) const;

    std::string to_string(const SymbolNames& names = {}) const;
    bool operator==(const DegreeCoeff&) const = default;

private:
    void add(const DegreeKey& k, const EpsScalar& c);
    std::map<DegreeKey, EpsScalar> terms_;
};

/// eps_which^(sign*N + offset).
DegreeCoeff eps_degree(const Deformation& d, int which, int sign, int offset);
/// [N + offset]_alpha with the scaled pair (e1^alpha, e2^alpha).
DegreeCoeff degree_number(const Deformation& d, int offset, int alpha = 1);

/// Finite Laurent polynomial in z.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(int exponent, const EpsScalar& c = 1);

    const std::map<int, EpsScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    EpsScalar coeff(int exponent) const;

    LaurentPoly& add(int exponent, const EpsScalar& c);
    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
    LaurentPoly scaled(const EpsScalar& c) const;

    std::string to_string(const SymbolNames& names = {}) const;
    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<int, EpsScalar> terms_;
};

/// Finite sum of parts z^k -> f_s(k) z^(k+s).
class GradedOp {
public:
    GradedOp() = default;
    static GradedOp identity() { return part(0, DegreeCoeff(1)); }
    static GradedOp part(int shift, const DegreeCoeff& c);
    /// Shift-0 operator multiplying z^k by f(k).
    static GradedOp diagonal(const DegreeCoeff& c) { return part(0, c); }

    const std::map<int, DegreeCoeff>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }
    DegreeCoeff coeff(int shift) const;

    GradedOp operator-() const;
    GradedOp& operator+=(const GradedOp& o);
    GradedOp& operator-=(const GradedOp& o);
    friend GradedOp operator+(GradedOp l, const GradedOp& r) { return l += r; }
    friend GradedOp operator-(GradedOp l, const GradedOp& r) { return l -= r; }
    GradedOp scaled(const EpsScalar& c) const;

    /// Scalar coefficients of each part evaluated at a fixed source degree.
    std::map<int, EpsScalar> at_degree(int degree) const;

    /// Lines "z^{shift} :: <coefficient>", ordered by shift.
    std::string to_string(const SymbolNames& names = {}) const;
    bool operator==(const GradedOp&) const = default;

private:
    void add(int shift, const DegreeCoeff& c);
    std::map<int, DegreeCoeff> parts_;
};

/// lhs after rhs.
GradedOp compose(const GradedOp& lhs, const GradedOp& rhs);
inline GradedOp operator*(const GradedOp& lhs, const GradedOp& rhs) { return compose(lhs, rhs); }
LaurentPoly apply(const GradedOp& op, const LaurentPoly& p);
/// u*XY - v*YX.
GradedOp deformed_bracket(const EpsScalar& u, const EpsScalar& v, const GradedOp& x, const GradedOp& y);
inline GradedOp commutator(const GradedOp& x, const GradedOp& y) { return deformed_bracket(1, 1, x, y); }
inline bool op_equal(const GradedOp& l, const GradedOp& r) { return l == r; }

}  // namespace rpq
