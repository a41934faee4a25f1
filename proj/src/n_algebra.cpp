#include "rpq/n_algebra.hpp"

#include "rpq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rpq::nalg {

namespace {

EpsScalar gap(const Deformation& d, int alpha) { return d.eps(1, alpha) - d.eps(2, alpha); }

GradedOp T(const Deformation& d, int alpha, int m) { return t_op(d, alpha, m).op; }

void check_modes(const std::vector<int>& modes) {
    if (modes.size() < 2) throw MathError("n-bracket needs at least two slots");
    std::set<int> seen(modes.begin(), modes.end());
    if (seen.size() != modes.size()) throw MathError("n-bracket closed form needs distinct modes");
}

int permutation_sign(const std::vector<std::size_t>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    return inversions % 2 ? -1 : 1;
}

// (e1^a - e2^a)^C(n,2) prod_{j<k} ([m_k]_a - [m_j]_a) + sign * prod_{j<k} (e_w^(a m_k) - e_w^(a m_j))
EpsScalar vandermonde_pair(const Deformation& d, int alpha, const std::vector<int>& modes, int which,
                           int sign) {
    std::size_t n = modes.size();
    EpsScalar numbers(1), powers(1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            numbers *= alpha_number(d, modes[k], alpha) - alpha_number(d, modes[j], alpha);
            powers *= d.eps(which, alpha * modes[k]) - d.eps(which, alpha * modes[j]);
        }
    int pairs = static_cast<int>(n * (n - 1) / 2);
    return gap(d, alpha).pow(pairs) * numbers + powers * EpsScalar(sign);
}

int mode_sum(const std::vector<int>& modes) { return std::accumulate(modes.begin(), modes.end(), 0); }

}  // namespace

TOp t_op(const Deformation& d, int alpha, int m) {
    if (alpha < 1) throw MathError("T-operator requires alpha >= 1");
    return {alpha, m, GradedOp::part(m, -degree_number(d, m + 1, alpha) * DegreeCoeff(d.h_factor))};
}

GradedOp t_product_closed(const Deformation& d, int alpha, int beta, int m, int n) {
    EpsScalar ga = gap(d, alpha), gb = gap(d, beta);
    EpsScalar c1 = -(gap(d, alpha + beta) * d.eps(1, -m * beta)) / (ga * gb);
    EpsScalar c2 = d.eps(2, (n + 1) * beta) / gb;
    EpsScalar c3 = d.eps(1, -m * beta) * d.eps(2, (m + n + 1) * alpha) / ga;
    return T(d, alpha + beta, m + n).scaled(c1) + T(d, alpha, m + n).scaled(c2) + T(d, beta, m + n).scaled(c3);
}

GradedOp t_commutator_closed(const Deformation& d, int alpha, int beta, int m, int n, bool sign_corrected) {
    EpsScalar ga = gap(d, alpha), gb = gap(d, beta);
    EpsScalar c1 = gap(d, alpha + beta) * (d.eps(1, -n * alpha) - d.eps(1, -m * beta)) / (ga * gb);
    EpsScalar c2 = -(d.eps(2, (m + n + 1) * beta) * (d.eps(1, -n * alpha) - d.eps(2, -m * beta))) / gb;
    EpsScalar c3 = d.eps(2, (m + n + 1) * alpha) * (d.eps(1, -m * beta) * EpsScalar(sign_corrected ? 1 : -1) - d.eps(2, -n * alpha)) / ga;
    return T(d, alpha + beta, m + n).scaled(c1) + T(d, alpha, m + n).scaled(c2) + T(d, beta, m + n).scaled(c3);
}

GradedOp t_commutator_equal_closed(const Deformation& d, int alpha, int m, int n) {
    EpsScalar ga = gap(d, alpha);
    EpsScalar diff1 = d.eps(1, -n * alpha) - d.eps(1, -m * alpha);
    EpsScalar diff2 = d.eps(2, -n * alpha) - d.eps(2, -m * alpha);
    EpsScalar c1 = diff1 / ga * alpha_number(d, 2, alpha);
    EpsScalar c2 = -(d.eps(2, (m + n + 1) * alpha) / ga * (diff1 + diff2));
    return T(d, 2 * alpha, m + n).scaled(c1) + T(d, alpha, m + n).scaled(c2);
}

GradedOp n_bracket_oracle(const std::vector<TOp>& ops) {
    if (ops.size() < 2 || ops.size() > 6) throw MathError("n-bracket oracle supports 2 <= n <= 6");
    std::vector<std::size_t> perm(ops.size());
    std::iota(perm.begin(), perm.end(), 0);
    GradedOp sum;
    do {
        GradedOp chain = ops[perm[0]].op;
        for (std::size_t i = 1; i < perm.size(); ++i) chain = chain * ops[perm[i]].op;
        if (permutation_sign(perm) > 0)
            sum += chain;
        else
            sum -= chain;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

EpsScalar h_factor(const Deformation& d, int alpha, const std::vector<int>& modes) {
    check_modes(modes);
    int n = static_cast<int>(modes.size());
    return d.eps(1, -alpha * (n - 1) * mode_sum(modes)) * vandermonde_pair(d, alpha, modes, 2, 1);
}

EpsScalar m_factor(const Deformation& d, int alpha, const std::vector<int>& modes, int m_sign) {
    check_modes(modes);
    int n = static_cast<int>(modes.size());
    int sign = (n - 1) % 2 ? -1 : 1;
    return d.eps(2, -alpha * (n - 1) * mode_sum(modes)) * vandermonde_pair(d, alpha, modes, 1, sign) *
           EpsScalar(m_sign);
}

GradedOp n_bracket_closed(const Deformation& d, int alpha, const std::vector<int>& modes, int m_sign) {
    check_modes(modes);
    int n = static_cast<int>(modes.size());
    int s = mode_sum(modes);
    EpsScalar h = h_factor(d, alpha, modes);
    EpsScalar hm = h + m_factor(d, alpha, modes, m_sign);
    EpsScalar pref = EpsScalar(n % 2 ? 1 : -1) / gap(d, alpha).pow(n - 1);
    EpsScalar c1 = pref * h * alpha_number(d, n, alpha);
    EpsScalar c2 = -(pref * alpha_number(d, n - 1, alpha) * d.eps(2, alpha * (s + 1)) * hm);
    return T(d, n * alpha, s).scaled(c1) + T(d, (n - 1) * alpha, s).scaled(c2);
}

LaurentPoly on_vacuum(const GradedOp& op) { return apply(op, LaurentPoly::monomial(0)); }

TwoPath compare(const GradedOp& direct, const GradedOp& closed) {
    TwoPath t{direct, closed};
    t.match = direct == closed;
    t.vacuum_match = on_vacuum(direct) == on_vacuum(closed);
    return t;
}

TwoPath product_check(const Deformation& d, int alpha, int beta, int m, int n) {
    return compare(T(d, alpha, m) * T(d, beta, n), t_product_closed(d, alpha, beta, m, n));
}

TwoPath commutator_check(const Deformation& d, int alpha, int beta, int m, int n, bool sign_corrected) {
    GradedOp a = T(d, alpha, m), b = T(d, beta, n);
    return compare(a * b - b * a, t_commutator_closed(d, alpha, beta, m, n, sign_corrected));
}

NBracketReport n_bracket_report(const Deformation& d, int alpha, const std::vector<int>& modes, int m_sign) {
    NBracketReport r;
    r.alpha = alpha;
    r.modes = modes;
    r.m_sign = m_sign;
    std::vector<TOp> ops;
    for (int m : modes) ops.push_back(t_op(d, alpha, m));
    r.oracle = n_bracket_oracle(ops);
    r.closed_form = n_bracket_closed(d, alpha, modes, m_sign);
    r.residual = r.oracle - r.closed_form;
    r.match = r.residual.is_zero();
    r.vacuum_match = on_vacuum(r.oracle) == on_vacuum(r.closed_form);
    return r;
}

}  // namespace rpq::nalg
