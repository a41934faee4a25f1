#include "rpq/witt.hpp"

#include "rpq/errors.hpp"

namespace rpq::witt {

GradedOp generator(const Deformation& d, GeneratorKind kind, int n) {
    switch (kind) {
        case GeneratorKind::E: return GradedOp::part(n, degree_number(d, 0));
        case GeneratorKind::L: return GradedOp::part(n, eps_degree(d, 1, -1, -n) * degree_number(d, 0));
        case GeneratorKind::CalL: return GradedOp::part(n, eps_degree(d, 2, -1, -n) * degree_number(d, 0));
        case GeneratorKind::DiagD: return GradedOp::diagonal(eps_degree(d, 1, -1, n) * degree_number(d, -n));
    }
    throw MathError("unknown generator kind");
}

EpsScalar central_term(const Deformation& d, int n) {
    if (n == 0) return 0;
    EpsScalar e1e2 = d.eps(1, 1) * d.eps(2, 1);
    return d.central * e1e2.pow(-2 * n) * rpq_number(d, n - 1) * rpq_number(d, n) * rpq_number(d, n + 1) /
           number_ratio(d, n);
}

VirasoroVec VirasoroVec::mode(int n, const EpsScalar& c) {
    VirasoroVec v;
    if (!c.is_zero()) v.modes.emplace(n, c);
    return v;
}

VirasoroVec VirasoroVec::central_only(const EpsScalar& c) {
    VirasoroVec v;
    v.central = c;
    return v;
}

VirasoroVec& VirasoroVec::operator+=(const VirasoroVec& o) {
    for (const auto& [n, c] : o.modes) {
        auto [it, inserted] = modes.emplace(n, c);
        if (inserted) continue;
        it->second += c;
        if (it->second.is_zero()) modes.erase(it);
    }
    central += o.central;
    return *this;
}

VirasoroVec VirasoroVec::scaled(const EpsScalar& c) const {
    VirasoroVec v;
    if (c.is_zero()) return v;
    for (const auto& [n, x] : modes) v.modes.emplace(n, x * c);
    v.central = central * c;
    return v;
}

std::string VirasoroVec::to_string(const SymbolNames& names) const {
    std::string out;
    for (const auto& [n, c] : modes)
        out += (out.empty() ? "" : " + ") + ("(" + c.to_string(names) + ")*L_" + std::to_string(n));
    if (!central.is_zero()) out += (out.empty() ? "" : " + ") + ("(" + central.to_string(names) + ")*C");
    return out.empty() ? "0" : out;
}

VirasoroVec virasoro_bracket(const Deformation& d, int n, int m) {
    VirasoroVec v = VirasoroVec::mode(n + m, rpq_number(d, m - n));
    if (n + m == 0) v.central = central_term(d, n);
    return v;
}

VirasoroVec virasoro_bracket(const Deformation& d, const VirasoroVec& x, const VirasoroVec& y) {
    VirasoroVec out;
    for (const auto& [n, a] : x.modes)
        for (const auto& [m, b] : y.modes) out += virasoro_bracket(d, n, m).scaled(a * b);
    return out;
}

DegreeCoeff r_multiplier(const Deformation& d, int i, int j) {
    return eps_degree(d, 1, -2, i + j) * degree_number(d, -i) * degree_number(d, -j);
}

DegreeCoeff tau_multiplier(const Deformation& d, int j, int i) {
    DegreeCoeff diff = degree_number(d, -i) * DegreeCoeff(d.eps(1, i)) - degree_number(d, -j) * DegreeCoeff(d.eps(1, j));
    return eps_degree(d, 1, -2, i + j) * degree_number(d, -i - j) * diff;
}

GradedOp r_closed_at(const Deformation& d, int i, int j, int index) {
    return compose(GradedOp::diagonal(r_multiplier(d, i, j)), l_gen(d, index));
}

GradedOp r_closed(const Deformation& d, int i, int l, int j) { return r_closed_at(d, i, j, i + j + l); }

GradedOp tau_closed_at(const Deformation& d, int j, int i, int index) {
    return compose(GradedOp::diagonal(tau_multiplier(d, j, i)), l_gen(d, index));
}

GradedOp tau_closed(const Deformation& d, int j, int i, int l) { return tau_closed_at(d, j, i, i + j + l); }

GradedOp nambu3(const GradedOp& a, const GradedOp& b, const GradedOp& c) {
    return a * commutator(b, c) + b * commutator(c, a) + c * commutator(a, b);
}

// ---- natural product ----

NaturalElem NaturalElem::gen(int a, const DegreeCoeff& f) {
    NaturalElem e;
    e.add(a, f);
    return e;
}

void NaturalElem::add(int a, const DegreeCoeff& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.emplace(a, f);
    if (inserted) return;
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

NaturalElem& NaturalElem::operator+=(const NaturalElem& o) {
    for (const auto& [a, f] : o.terms_) add(a, f);
    return *this;
}

NaturalElem& NaturalElem::operator-=(const NaturalElem& o) {
    for (const auto& [a, f] : o.terms_) add(a, -f);
    return *this;
}

NaturalElem NaturalElem::times(const Deformation& d, const NaturalElem& o) const {
    NaturalElem out;
    for (const auto& [a, f] : terms_) {
        DegreeCoeff da = eps_degree(d, 1, -1, a) * degree_number(d, -a);
        for (const auto& [b, g] : o.terms_) out.add(a + b, f * g * da);
    }
    return out;
}

GradedOp NaturalElem::realize(const Deformation& d) const {
    GradedOp out;
    for (const auto& [a, f] : terms_) out += compose(GradedOp::diagonal(f), l_gen(d, a));
    return out;
}

std::string reading_name(Reading r) {
    switch (r) {
        case Reading::Composition: return "composition";
        case Reading::Natural: return "natural";
        case Reading::NaturalTotal: return "natural-total-index";
    }
    return "?";
}

namespace {

struct CompositionAlg {
    using T = GradedOp;
    const Deformation& d;
    T gen(int a) const { return l_gen(d, a); }
    T mul(const T& x, const T& y) const { return compose(x, y); }
    T r(int i, int l, int j, int) const { return r_closed(d, i, l, j); }
    T tau(int j, int i, int l, int) const { return tau_closed(d, j, i, l); }
    T weight(const DegreeCoeff& f, const T& x) const { return compose(GradedOp::diagonal(f), x); }
    GradedOp realize(const T& x) const { return x; }
};

struct NaturalAlg {
    using T = NaturalElem;
    const Deformation& d;
    bool total_index;
    T gen(int a) const { return NaturalElem::gen(a); }
    T mul(const T& x, const T& y) const { return x.times(d, y); }
    T r(int i, int l, int j, int total) const {
        return NaturalElem::gen(total_index ? total : i + j + l, r_multiplier(d, i, j));
    }
    T tau(int j, int i, int l, int total) const {
        return NaturalElem::gen(total_index ? total : i + j + l, tau_multiplier(d, j, i));
    }
    T weight(const DegreeCoeff& f, const T& x) const {
        T out;
        for (const auto& [a, g] : x.terms()) out += NaturalElem::gen(a, f * g);
        return out;
    }
    GradedOp realize(const T& x) const { return x.realize(d); }
};

template <class Alg>
struct Identities {
    using T = typename Alg::T;
    Alg alg;

    T g(int a) const { return alg.gen(a); }
    T mul(const T& x, const T& y) const { return alg.mul(x, y); }
    T br(const T& x, const T& y) const { return mul(x, y) - mul(y, x); }
    T assoc(int n, int m, int k) const { return mul(g(n), mul(g(m), g(k))) - mul(mul(g(n), g(m)), g(k)); }
    T nambu(const T& a, const T& b, const T& c) const { return mul(a, br(b, c)) + mul(b, br(c, a)) + mul(c, br(a, b)); }
    SidePair pair(const T& l, const T& r) const { return {alg.realize(l), alg.realize(r)}; }

    SidePair associator(int n, int m, int k) const {
        int t = n + m + k;
        return pair(assoc(n, m, k), alg.r(n, k, m, t) - alg.r(n, k, m + n, t));
    }
    SidePair cyclic(int n, int m, int k) const {
        int t = n + m + k;
        T lhs = assoc(n, m, k) + assoc(m, k, n) + assoc(k, n, m) - (assoc(n, k, m) + assoc(k, m, n) + assoc(m, n, k));
        return pair(lhs, alg.tau(n, m, k, t) + alg.tau(k, n, m, t) + alg.tau(m, k, n, t));
    }
    SidePair leibniz(int n, int m, int k) const {
        int t = n + m + k;
        T lhs = br(g(n), mul(g(m), g(k))) - mul(g(m), br(g(n), g(k))) - mul(br(g(n), g(m)), g(k));
        T rhs = alg.r(m, k, m + n, t) - alg.r(n, k, m + n, t) + alg.r(m, n, k, t) - alg.r(m, n, m + k, t);
        return pair(lhs, rhs);
    }
    SidePair left_symmetry(int n, int m, int k) const {
        return pair(assoc(n, m, k) - assoc(m, n, k), alg.tau(n, m, k, n + m + k));
    }
    SidePair nambu3(int n, int m, int k) const {
        int t = n + m + k;
        return pair(nambu(g(n), g(m), g(k)), alg.r(n, k, m, t) + alg.r(m, n, k, t) + alg.r(k, m, n, t));
    }
    SidePair double_bracket(int n, int m, int k, int s) const {
        T lhs = nambu(g(n), g(m), mul(g(k), g(s))) - mul(nambu(g(n), g(m), g(k)), g(s)) -
                mul(g(k), nambu(g(n), g(m), g(s)));
        int a = n + m + k;
        DegreeCoeff dd = eps_degree(alg.d, 1, -1, a) * degree_number(alg.d, -a);
        return pair(lhs, alg.weight(dd, alg.tau(m, n, k, a + s)));
    }
    SidePair multiplication(int item, int n, int m, int k) const {
        int t = n + m + k;
        switch (item) {
            case 1:
                return pair(mul(g(n), mul(g(m), g(k))) - mul(g(m), mul(g(n), g(k))),
                            mul(br(g(n), g(m)), g(k)) + alg.tau(n, m, k, t));
            case 2:
                return pair(mul(g(n), mul(g(k), g(m))) - mul(mul(g(n), g(k)), g(m)),
                            mul(g(n), br(g(k), g(m))) + alg.r(m, k, n, t) - alg.r(n, m, n + k, t));
            case 3:
                return pair(mul(mul(g(m), g(k)), g(n)) - mul(g(m), mul(g(k), g(n))),
                            mul(g(m), br(g(n), g(k))) - alg.r(m, k, n, t) + alg.r(m, k, m + n, t));
            case 4:
                return pair(mul(mul(g(k), g(m)), g(n)) + mul(g(k), mul(g(n), g(m))),
                            mul(g(k), mul(g(m), g(n)) + mul(g(n), g(m))) - alg.r(m, n, k, t) +
                                alg.r(k, n, m + k, t));
        }
        throw MathError("multiplication operator identity item must be 1..4");
    }
};

template <class F>
SidePair dispatch(const Deformation& d, Reading r, F&& f) {
    if (r == Reading::Composition) return f(Identities<CompositionAlg>{{d}});
    return f(Identities<NaturalAlg>{{d, r == Reading::NaturalTotal}});
}

}  // namespace

GradedOp associator(const Deformation& d, int n, int m, int k) {
    return Identities<CompositionAlg>{{d}}.assoc(n, m, k);
}

GradedOp nambu3(const Deformation& d, int n, int m, int k) { return nambu3(l_gen(d, n), l_gen(d, m), l_gen(d, k)); }

GradedOp leibniz_defect(const Deformation& d, int n, int m, int k) {
    return dispatch(d, Reading::Composition, [&](const auto& id) { return id.leibniz(n, m, k); }).lhs;
}

SidePair associator_identity(const Deformation& d, int n, int m, int k, Reading r) {
    return dispatch(d, r, [&](const auto& id) { return id.associator(n, m, k); });
}

SidePair associator_cyclic_identity(const Deformation& d, int n, int m, int k, Reading r) {
    return dispatch(d, r, [&](const auto& id) { return id.cyclic(n, m, k); });
}

SidePair leibniz_identity(const Deformation& d, int n, int m, int k, Reading r) {
    return dispatch(d, r, [&](const auto& id) { return id.leibniz(n, m, k); });
}

SidePair left_symmetry_identity(const Deformation& d, int n, int m, int k, Reading r) {
    return dispatch(d, r, [&](const auto& id) { return id.left_symmetry(n, m, k); });
}

SidePair nambu_identity(const Deformation& d, int n, int m, int k, Reading r) {
    return dispatch(d, r, [&](const auto& id) { return id.nambu3(n, m, k); });
}

SidePair double_bracket_identity(const Deformation& d, int n, int m, int k, int s, Reading r) {
    return dispatch(d, r, [&](const auto& id) { return id.double_bracket(n, m, k, s); });
}

SidePair multiplication_operator_identity(const Deformation& d, int item, int n, int m, int k, Reading r) {
    return dispatch(d, r, [&](const auto& id) { return id.multiplication(item, n, m, k); });
}

GradedOp jacobi_residual(const Deformation& d, int n, int m, int k) {
    auto x = [&d](int a, int b) { return d.eps(1, b - a); };
    auto y = [&d](int a, int b) { return d.eps(2, b - a); };
    EpsScalar e1e2 = d.eps(1, 1) * d.eps(2, 1);
    const int cyc[3][3] = {{n, m, k}, {m, k, n}, {k, n, m}};
    GradedOp out;
    for (const auto& t : cyc) {
        int i = t[0], j = t[1], l = t[2];
        GradedOp inner = deformed_bracket(x(j, l), y(j, l), l_gen(d, j), l_gen(d, l));
        GradedOp outer = deformed_bracket(x(i, j + l), y(i, j + l), l_gen(d, i), inner);
        out += outer.scaled(e1e2.pow(-l) * number_ratio(d, i));
    }
    return out;
}

}  // namespace rpq::witt
