#pragma once

#include "rpq/graded_op.hpp"

#include <map>
#include <string>

namespace rpq::witt {

enum class GeneratorKind {
    E,      // z^k -> [k] z^(k+n)
    L,      // z^k -> e1^-(k+n) [k] z^(k+n)
    CalL,   // z^k -> e2^-(k+n) [k] z^(k+n)
    DiagD,  // shift 0, e1^(-N+n) [N-n]
};

GradedOp generator(const Deformation& d, GeneratorKind kind, int n);
inline GradedOp e_gen(const Deformation& d, int n) { return generator(d, GeneratorKind::E, n); }
inline GradedOp l_gen(const Deformation& d, int n) { return generator(d, GeneratorKind::L, n); }
inline GradedOp cal_l_gen(const Deformation& d, int n) { return generator(d, GeneratorKind::CalL, n); }
inline GradedOp diag_d(const Deformation& d, int n) { return generator(d, GeneratorKind::DiagD, n); }

/// C(p,q) (e1 e2)^(-2n) [n-1][n][n+1] / (e1^n + e2^n); zero at n = 0.
EpsScalar central_term(const Deformation& d, int n);

/// Formal element sum c_n L_n + c C of the centrally extended algebra.
struct VirasoroVec {
    std::map<int, EpsScalar> modes;
    EpsScalar central;

    static VirasoroVec mode(int n, const EpsScalar& c = 1);
    static VirasoroVec central_only(const EpsScalar& c = 1);
    bool is_zero() const { return modes.empty() && central.is_zero(); }
    VirasoroVec& operator+=(const VirasoroVec& o);
    VirasoroVec scaled(const EpsScalar& c) const;
    bool operator==(const VirasoroVec&) const = default;
    std::string to_string(const SymbolNames& names = {}) const;
};

/// [L_n, L_m]_{e1^(m-n), e2^(m-n)} = [m-n] L_(n+m) + delta_(n+m,0) C(n).
VirasoroVec virasoro_bracket(const Deformation& d, int n, int m);
/// Bilinear extension of virasoro_bracket; central components bracket to zero.
VirasoroVec virasoro_bracket(const Deformation& d, const VirasoroVec& x, const VirasoroVec& y);

/// R^i_{lj} = e1^(-2N+i+j) [N-i][N-j] l_(i+j+l); `index` overrides i+j+l.
GradedOp r_closed(const Deformation& d, int i, int l, int j);
GradedOp r_closed_at(const Deformation& d, int i, int j, int index);
/// tau^j_{il} = e1^(-2N+i+j) [N-i-j] (e1^i [N-i] - e1^j [N-j]) l_(i+j+l).
GradedOp tau_closed(const Deformation& d, int j, int i, int l);
GradedOp tau_closed_at(const Deformation& d, int j, int i, int index);
/// The multiplier of l_index in r_closed / tau_closed.
DegreeCoeff r_multiplier(const Deformation& d, int i, int j);
DegreeCoeff tau_multiplier(const Deformation& d, int j, int i);

/// a[b,c] + b[c,a] + c[a,b] for arbitrary operators.
GradedOp nambu3(const GradedOp& a, const GradedOp& b, const GradedOp& c);

/// l_n(l_m l_k) - (l_n l_m) l_k by composition.
GradedOp associator(const Deformation& d, int n, int m, int k);
/// Nambu bracket of l_n, l_m, l_k by composition.
GradedOp nambu3(const Deformation& d, int n, int m, int k);
/// [l_n, l_m l_k] - l_m [l_n,l_k] - [l_n,l_m] l_k by composition.
GradedOp leibniz_defect(const Deformation& d, int n, int m, int k);

/// How the product of two generators is read.
enum class Reading {
    Composition,   // operator composition
    Natural,       // (f l_a).(g l_b) = f g D_a l_(a+b), closed forms at their literal index
    NaturalTotal,  // as Natural, closed forms placed at the total index of the triple
};
std::string reading_name(Reading r);

/// Direct side (built from products) and closed side (built from R and tau).
struct SidePair {
    GradedOp lhs;
    GradedOp rhs;
    bool holds() const { return lhs == rhs; }
    GradedOp residual() const { return lhs - rhs; }
};

SidePair associator_identity(const Deformation& d, int n, int m, int k, Reading r = Reading::Composition);
/// Cyclic sum over (n,m,k) minus cyclic sum over (n,k,m) of associators vs tau sum.
SidePair associator_cyclic_identity(const Deformation& d, int n, int m, int k, Reading r = Reading::Composition);
SidePair leibniz_identity(const Deformation& d, int n, int m, int k, Reading r = Reading::Composition);
/// (l_n,l_m,l_k) - (l_m,l_n,l_k) vs tau^n_{mk}.
SidePair left_symmetry_identity(const Deformation& d, int n, int m, int k, Reading r = Reading::Composition);
SidePair nambu_identity(const Deformation& d, int n, int m, int k, Reading r = Reading::Composition);
/// [[l_n,l_m,l_k l_s]] - [[l_n,l_m,l_k]] l_s - l_k [[l_n,l_m,l_s]] vs D_(n+m+k) tau^m_{nk}.
SidePair double_bracket_identity(const Deformation& d, int n, int m, int k, int s,
                                 Reading r = Reading::Composition);
/// Items 1..4 of the left/right multiplication operator identities.
SidePair multiplication_operator_identity(const Deformation& d, int item, int n, int m, int k,
                                          Reading r = Reading::Composition);

/// Cyclic sum with weights (e1 e2)^(-l) (e1^i + e2^i) of nested deformed
/// brackets using x_{ab} = e1^(b-a), y_{ab} = e2^(b-a).
GradedOp jacobi_residual(const Deformation& d, int n, int m, int k);

/// Multipliers f_a(N) on l_a under the product (f l_a).(g l_b) = f g D_a l_(a+b),
/// where the multipliers are treated as commuting scalars.
class NaturalElem {
public:
    NaturalElem() = default;
    static NaturalElem gen(int a, const DegreeCoeff& f = DegreeCoeff(1));
    const std::map<int, DegreeCoeff>& terms() const { return terms_; }
    NaturalElem& operator+=(const NaturalElem& o);
    NaturalElem& operator-=(const NaturalElem& o);
    friend NaturalElem operator+(NaturalElem l, const NaturalElem& r) { return l += r; }
    friend NaturalElem operator-(NaturalElem l, const NaturalElem& r) { return l -= r; }
    NaturalElem times(const Deformation& d, const NaturalElem& o) const;
    GradedOp realize(const Deformation& d) const;
    bool operator==(const NaturalElem&) const = default;

private:
    void add(int a, const DegreeCoeff& f);
    std::map<int, DegreeCoeff> terms_;
};

}  // namespace rpq::witt
