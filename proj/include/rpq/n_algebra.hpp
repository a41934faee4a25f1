#pragma once

#include "rpq/graded_op.hpp"

#include <vector>

namespace rpq::nalg {

/// -h D_alpha z^(m+1): z^k -> -h [k+m+1]_alpha z^(k+m).
struct TOp {
    int alpha = 1;
    int m = 0;
    GradedOp op;
};

TOp t_op(const Deformation& d, int alpha, int m);

/// Right-hand side of the product T^alpha_m T^beta_n, built from T^(alpha+beta), T^alpha, T^beta.
GradedOp t_product_closed(const Deformation& d, int alpha, int beta, int m, int n);
/// Right-hand side of [T^alpha_m, T^beta_n] as displayed for general alpha, beta.
/// `sign_corrected` flips the sign of e1^(-m beta) in the T^beta coefficient,
/// which is what the difference of the two product expansions gives.
GradedOp t_commutator_closed(const Deformation& d, int alpha, int beta, int m, int n, bool sign_corrected = false);
/// The equal-alpha display in terms of [2]_alpha T^(2alpha) and T^alpha.
GradedOp t_commutator_equal_closed(const Deformation& d, int alpha, int m, int n);

/// Sum over permutations of sign * ordered composition.
GradedOp n_bracket_oracle(const std::vector<TOp>& ops);

EpsScalar h_factor(const Deformation& d, int alpha, const std::vector<int>& modes);
/// `m_sign` multiplies the whole factor; +1 is the displayed form.
EpsScalar m_factor(const Deformation& d, int alpha, const std::vector<int>& modes, int m_sign = 1);
/// Displayed two-term combination of T^(n alpha) and T^((n-1) alpha) at the summed mode.
GradedOp n_bracket_closed(const Deformation& d, int alpha, const std::vector<int>& modes, int m_sign = 1);

/// z^0 -> op z^0, the reading in which T_m is the multiplier -[m+1] z^m.
LaurentPoly on_vacuum(const GradedOp& op);

/// Direct operator computation against a closed form, as operators and on the vacuum.
struct TwoPath {
    GradedOp direct;
    GradedOp closed;
    bool match = false;
    bool vacuum_match = false;
    GradedOp residual() const { return direct - closed; }
};

TwoPath compare(const GradedOp& direct, const GradedOp& closed);
TwoPath product_check(const Deformation& d, int alpha, int beta, int m, int n);
TwoPath commutator_check(const Deformation& d, int alpha, int beta, int m, int n, bool sign_corrected = false);

struct NBracketReport {
    int alpha = 1;
    std::vector<int> modes;
    int m_sign = 1;
    GradedOp oracle;
    GradedOp closed_form;
    bool match = false;
    bool vacuum_match = false;
    GradedOp residual;
};

NBracketReport n_bracket_report(const Deformation& d, int alpha, const std::vector<int>& modes, int m_sign = 1);

}  // namespace rpq::nalg
