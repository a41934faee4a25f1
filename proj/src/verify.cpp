#include "rpq/verify.hpp"

#include "rpq/errors.hpp"
#include "rpq/kdv_lattice.hpp"
#include "rpq/n_algebra.hpp"
#include "rpq/toy_model.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rpq::verify {

using witt::Reading;

namespace {

std::string index_text(const std::vector<int>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
}

struct Builder {
    const Deformation& d;
    Report r;

    void check(const std::string& id, const std::vector<int>& idx, bool pass, const std::function<std::string()>& residual) {
        r.lines.push_back({id, d.name(), idx, pass, pass ? "" : residual()});
    }
    void check_op(const std::string& id, const std::vector<int>& idx, const GradedOp& lhs, const GradedOp& rhs) {
        bool pass = lhs == rhs;
        check(id, idx, pass, [&] { return (lhs - rhs).to_string(d.symbols); });
    }
    void ledger(const std::string& id, const std::string& reading, const std::vector<int>& idx, bool holds,
                const std::function<std::string()>& residual) {
        r.ledger.push_back({id, d.name(), reading, idx, holds, holds ? "" : residual()});
    }
    void ledger_op(const std::string& id, const std::string& reading, const std::vector<int>& idx,
                   const GradedOp& residual) {
        ledger(id, reading, idx, residual.is_zero(), [&] { return residual.to_string(d.symbols); });
    }
};

// One task per preset; results concatenated in preset order.
Report per_preset(const Options& opt, const std::function<void(Builder&)>& body) {
    std::vector<Report> parts(opt.presets.size());
    parallel_for(opt.presets.size(), opt.jobs, [&](std::size_t i) {
        Deformation d = Deformation::from_preset(opt.presets[i]);
        Builder b{d, {}};
        body(b);
        parts[i] = std::move(b.r);
    });
    Report out;
    for (auto& p : parts) out.append(std::move(p));
    return out;
}

std::string numbers_closed_form(Preset p, int n) {
    std::string N = std::to_string(n);
    switch (p) {
        case Preset::Heine: return "(1 - q^" + N + ")/(1 - q)";
        case Preset::Quesne: return "(1 - q^-" + N + ")/(q - 1)";
        case Preset::JagannathanSrinivasa: return "(p^" + N + " - q^" + N + ")/(p - q)";
        case Preset::ChakrabartyJagannathan: return "(p^-" + N + " - q^" + N + ")/(p^-1 - q)";
        case Preset::HounkonnouNgompe: return "(p^" + N + " - q^-" + N + ")/(q - p^-1)";
        case Preset::SymmetricQ: return "(q^" + N + " - q^-" + N + ")/(q - q^-1)";
        case Preset::Generic: return "(e1^" + N + " - e2^" + N + ")/(e1 - e2)";
    }
    return "";
}

std::string reading_label(Reading r) { return witt::reading_name(r); }

// The constraint operator as printed for one preset, in that preset's own pair.
toy::TOperator printed_operator(int m, int alpha, int gamma, int order, const EpsScalar& a, const EpsScalar& b,
                                const EpsScalar& number, const EpsScalar& first) {
    int shift = m + 1 + gamma;
    toy::TOperator op{order, {}};
    Integer mf = 1;
    for (int i = 2; i <= m; ++i) mf *= i;
    EpsScalar c0 = number * first * EpsScalar(Rational(mf));
    if (!c0.is_zero()) op.coeffs[m] = toy::TPoly::constant(order, c0);
    EpsScalar pref = b.pow(alpha * shift) / (a.pow(alpha) - b.pow(alpha));
    std::vector<EpsScalar> scale;
    for (int k = 0; k <= order; ++k) scale.push_back(a.pow(alpha * k) - b.pow(alpha * k));
    for (int k = 1; k + m <= order; ++k) {
        Integer num = 1;
        for (int i = k + 1; i <= k + m; ++i) num *= i;
        toy::TPoly c = toy::bell(k, order).rescaled(scale).scaled(pref * EpsScalar(Rational(num)));
        if (!c.is_zero()) op.coeffs[k + m] += c;
    }
    return op;
}

bool same_operator(const toy::TOperator& x, const toy::TOperator& y) {
    auto strip = [](const toy::TOperator& o) {
        std::map<int, toy::TPoly> r;
        for (const auto& [j, c] : o.coeffs)
            if (!c.is_zero()) r.emplace(j, c);
        return r;
    };
    return strip(x) == strip(y);
}

EpsScalar number_in(const EpsScalar& a, const EpsScalar& b, int n, int alpha) {
    return (a.pow(alpha * n) - b.pow(alpha * n)) / (a.pow(alpha) - b.pow(alpha));
}

}  // namespace

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const Line& l) { return !l.pass; }));
}

void Report::append(Report other) {
    lines.insert(lines.end(), std::make_move_iterator(other.lines.begin()), std::make_move_iterator(other.lines.end()));
    ledger.insert(ledger.end(), std::make_move_iterator(other.ledger.begin()), std::make_move_iterator(other.ledger.end()));
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"numbers", "witt", "properties", "jacobi", "nalgebra", "toy", "kdv"};
    return names;
}

Report run_suite(const std::string& name, const Options& opt) {
    if (name == "numbers") return numbers_suite(opt);
    if (name == "witt") return witt_suite(opt);
    if (name == "properties") return properties_suite(opt);
    if (name == "jacobi") return jacobi_suite(opt);
    if (name == "nalgebra") return nalgebra_suite(opt);
    if (name == "toy") return toy_suite(opt);
    if (name == "kdv") return kdv_suite(opt);
    if (name == "all") {
        Report r;
        for (const auto& s : suite_names()) r.append(run_suite(s, opt));
        return r;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

Report numbers_suite(const Options& opt) {
    return per_preset(opt, [](Builder& b) {
        for (int n = 1; n <= 12; ++n) {
            EpsScalar got = rpq_number(b.d, n, NumberForm::Preset);
            EpsScalar want = b.d.parse(numbers_closed_form(b.d.preset, n));
            b.check("number", {n}, got == want && cross_equal(got, want),
                    [&] { return b.d.render(got) + " vs " + b.d.render(want); });
        }
    });
}

Report witt_suite(const Options& opt) {
    int r = opt.range;
    return per_preset(opt, [r](Builder& b) {
        const Deformation& d = b.d;
        using witt::cal_l_gen;
        using witt::e_gen;
        using witt::l_gen;
        for (int n = -r; n <= r; ++n)
            for (int m = -r; m <= r; ++m) {
                GradedOp ln = l_gen(d, n), lm = l_gen(d, m), target = l_gen(d, n + m);
                EpsScalar num = rpq_number(d, m - n);
                b.check_op("deformed-bracket", {n, m}, deformed_bracket(d.eps(1, m - n), d.eps(2, m - n), ln, lm), target.scaled(num));
                GradedOp weight = GradedOp::diagonal(eps_degree(d, 1, -1, n) * eps_degree(d, 2, 1, -m));
                b.check_op("commutator-form", {n, m}, commutator(ln, lm), (weight * target).scaled(num));
                b.check_op("antisymmetry", {n, m}, commutator(ln, lm), -commutator(lm, ln));
                GradedOp lemma = GradedOp::diagonal(eps_degree(d, 1, 1, -m)) * e_gen(d, n + m);
                b.check_op("e-lemma", {n, m}, deformed_bracket(1, d.eps(2, m - n), e_gen(d, n), e_gen(d, m)),
                           lemma.scaled(num));
                GradedOp twist = GradedOp::diagonal(eps_degree(d, 1, 1, -m) * eps_degree(d, 2, -1, n));
                b.check_op("realized-commutator", {n, m}, commutator(cal_l_gen(d, n), cal_l_gen(d, m)),
                           (twist * cal_l_gen(d, n + m)).scaled(num));
            }
        GradedOp l0 = l_gen(d, 0), l1 = l_gen(d, 1), lm1 = l_gen(d, -1);
        b.check_op("su11-a", {}, deformed_bracket(d.eps(1, 1), d.eps(2, 1), l0, l1), l1);
        b.check_op("su11-b", {}, deformed_bracket(d.eps(1, 1), d.eps(2, 1), lm1, l0), lm1);
        GradedOp w = GradedOp::diagonal(eps_degree(d, 1, -1, -1) * eps_degree(d, 2, 1, -1));
        b.check_op("su11-c", {}, commutator(lm1, l1), (w * l0).scaled(rpq_number(d, 2)));
    });
}

Report properties_suite(const Options& opt) {
    Reading rd = opt.reading;
    std::vector<Report> parts(opt.presets.size() * 5);
    parallel_for(parts.size(), opt.jobs, [&](std::size_t task) {
        Deformation d = Deformation::from_preset(opt.presets[task / 5]);
        int n = static_cast<int>(task % 5) - 2;
        Builder b{d, {}};
        std::string label = reading_label(rd);
        for (int m = -2; m <= 2; ++m)
            for (int k = -2; k <= 2; ++k) {
                std::vector<int> idx{n, m, k};
                if (n == 0) b.check("associator-l0", idx, witt::associator(d, 0, m, k).is_zero(), [&] {
                    return witt::associator(d, 0, m, k).to_string(d.symbols);
                });
                b.ledger_op("associator", label, idx, witt::associator_identity(d, n, m, k, rd).residual());
                b.ledger_op("associator-cyclic", label, idx, witt::associator_cyclic_identity(d, n, m, k, rd).residual());
                b.ledger_op("leibniz", label, idx, witt::leibniz_identity(d, n, m, k, rd).residual());
                b.ledger_op("left-symmetry", label, idx, witt::left_symmetry_identity(d, n, m, k, rd).residual());
                b.ledger_op("nambu", label, idx, witt::nambu_identity(d, n, m, k, rd).residual());
                for (int item = 1; item <= 4; ++item)
                    b.ledger_op("multiplication-" + std::to_string(item), label, idx,
                                witt::multiplication_operator_identity(d, item, n, m, k, rd).residual());
                for (int s = -2; s <= 2; ++s)
                    b.ledger_op("double-bracket", label, {n, m, k, s},
                                witt::double_bracket_identity(d, n, m, k, s, rd).residual());
            }
        parts[task] = std::move(b.r);
    });
    Report out;
    for (auto& p : parts) out.append(std::move(p));
    return out;
}

Report jacobi_suite(const Options& opt) {
    Report out = per_preset(opt, [](Builder& b) {
        for (int n = -2; n <= 2; ++n)
            for (int m = -2; m <= 2; ++m)
                for (int k = -2; k <= 2; ++k)
                    b.ledger_op("jacobi", "x=e1^(l-j),y=e2^(l-j)", {n, m, k}, witt::jacobi_residual(b.d, n, m, k));
    });
    Deformation c = Deformation::classical_limit();
    Builder b{c, {}};
    for (int n = -2; n <= 2; ++n)
        for (int m = -2; m <= 2; ++m)
            for (int k = -2; k <= 2; ++k) {
                GradedOp res = witt::jacobi_residual(c, n, m, k);
                b.check("jacobi-classical", {n, m, k}, res.is_zero(), [&] { return res.to_string(); });
            }
    out.append(std::move(b.r));
    return out;
}

Report nalgebra_suite(const Options& opt) {
    using namespace nalg;
    std::vector<Report> parts(opt.presets.size());
    parallel_for(opt.presets.size(), opt.jobs, [&](std::size_t pi) {
        Deformation d = Deformation::from_preset(opt.presets[pi]);
        Builder b{d, {}};
        std::mt19937 rng(opt.seed + static_cast<unsigned>(pi));
        std::uniform_int_distribution<int> mode(-3, 3), ex(-2, 2), co(1, 4);
        for (int n = 2; n <= 4; ++n) {
            std::vector<TOp> ops;
            std::vector<int> idx;
            for (int i = 0; i < n; ++i) {
                ops.push_back(t_op(d, 1 + i % 2, mode(rng)));
                idx.push_back(ops.back().m);
            }
            GradedOp base = n_bracket_oracle(ops);
            bool anti = true;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    auto sw = ops;
                    std::swap(sw[static_cast<std::size_t>(i)], sw[static_cast<std::size_t>(j)]);
                    anti = anti && n_bracket_oracle(sw) == -base;
                }
            b.check("oracle-antisymmetry", idx, anti, [] { return std::string("swap changed more than the sign"); });
            EpsScalar s = EpsScalar::monomial({ex(rng), ex(rng)}, Rational(co(rng)));
            auto scaled = ops;
            scaled.back().op = scaled.back().op.scaled(s);
            auto other = ops;
            other.back() = t_op(d, 1, mode(rng) + 7);
            auto summed = ops;
            summed.back().op = ops.back().op + other.back().op;
            bool lin = n_bracket_oracle(scaled) == base.scaled(s) &&
                       n_bracket_oracle(summed) == base + n_bracket_oracle(other);
            b.check("oracle-multilinearity", idx, lin, [] { return std::string("last slot not linear"); });
        }
        for (int a = 1; a <= 3; ++a)
            for (int be = 1; be <= 3; ++be)
                for (int m = -4; m <= 4; ++m)
                    for (int n = -4; n <= 4; ++n) {
                        std::vector<int> idx{a, be, m, n};
                        TwoPath pr = product_check(d, a, be, m, n);
                        b.check("product-vacuum", idx, pr.vacuum_match, [&] {
                            return on_vacuum(pr.residual()).to_string(d.symbols);
                        });
                        b.ledger_op("product", "operator", idx, pr.residual());
                        TwoPath fixed = commutator_check(d, a, be, m, n, true);
                        b.check("commutator-corrected-vacuum", idx, fixed.vacuum_match, [&] {
                            return on_vacuum(fixed.residual()).to_string(d.symbols);
                        });
                        TwoPath lit = commutator_check(d, a, be, m, n, false);
                        b.ledger_op("commutator", "operator", idx, lit.residual());
                        b.ledger("commutator", "vacuum", idx, lit.vacuum_match, [&] {
                            return on_vacuum(lit.residual()).to_string(d.symbols);
                        });
                    }
        for (int alpha = 1; alpha <= 2; ++alpha)
            for (int m = -3; m <= 3; ++m)
                for (int n = -3; n <= 3; ++n) {
                    if (m == n) continue;
                    NBracketReport flipped = n_bracket_report(d, alpha, {m, n}, -1);
                    b.check("n-bracket-2-flipped-vacuum", {alpha, m, n}, flipped.vacuum_match,
                            [&] { return flipped.residual.to_string(d.symbols); });
                    NBracketReport literal = n_bracket_report(d, alpha, {m, n}, 1);
                    b.ledger_op("n-bracket-2", "operator", {alpha, m, n}, literal.residual);
                    b.ledger("n-bracket-2", "vacuum", {alpha, m, n}, literal.vacuum_match,
                             [&] { return on_vacuum(literal.residual).to_string(d.symbols); });
                }
        const std::vector<int> pool{-2, -1, 0, 1, 2, 3};
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                for (std::size_t k = j + 1; k < pool.size(); ++k) {
                    std::vector<int> modes{pool[i], pool[j], pool[k]};
                    NBracketReport rep = n_bracket_report(d, 1, modes);
                    b.ledger_op("n-bracket-3", "operator", modes, rep.residual);
                    b.ledger("n-bracket-3", "vacuum", modes, rep.vacuum_match,
                             [&] { return on_vacuum(rep.residual).to_string(d.symbols); });
                }
        parts[pi] = std::move(b.r);
    });
    Report out;
    for (auto& p : parts) out.append(std::move(p));
    return out;
}

Report toy_suite(const Options& opt) {
    Report out;
    {
        Deformation none = Deformation::from_preset(Preset::Generic);
        Builder b{none, {}};
        auto oracle = toy::bell_series_oracle(8, 8);
        std::vector<EpsScalar> only_t1(9, EpsScalar(0));
        only_t1[1] = 1;
        for (int n = 0; n <= 8; ++n) {
            toy::TPoly bn = toy::bell(n, 8);
            const toy::TPoly& on = oracle[static_cast<std::size_t>(n)];
            b.check("bell-oracle", {n}, bn == on, [&] { return bn.to_string() + " vs " + on.to_string(); });
            b.check("bell-homogeneity", {n}, bn.homogeneous_weight() == n,
                    [&] { return std::to_string(bn.homogeneous_weight()); });
            toy::TPoly collapsed = bn.rescaled(only_t1);
            toy::TPoly power = toy::TPoly::var(8, 1).pow(n);
            b.check("bell-t1-collapse", {n}, collapsed == power, [&] { return collapsed.to_string(); });
        }
        std::string b3 = toy::bell(3, 3).to_string();
        b.check("bell-B3", {3}, b3 == "t1^3 + 3 t1 t2 + t3", [&] { return b3; });
        for (auto& l : b.r.lines) l.preset = "-";
        out.append(std::move(b.r));
    }
    out.append(per_preset(opt, [](Builder& b) {
        const Deformation& d = b.d;
        for (int m = 0; m <= 4; ++m) {
            toy::ToyParams p;
            p.order = 6;
            p.gamma = Rational(-1 - m);
            b.check("first-term-vanishing", {m}, toy::constraint_op(m, p, d).coeffs.count(m) == 0,
                    [] { return std::string("d/dt_m term present"); });
        }
        const bool has_pair = d.preset != Preset::Generic;
        EpsScalar Q = has_pair ? d.parse("q") : EpsScalar(1);
        EpsScalar P = has_pair && d.preset != Preset::SymmetricQ ? d.parse("p") : EpsScalar(1);
        for (int m = 0; m <= 3; ++m)
            for (int alpha = 1; alpha <= 2; ++alpha)
                for (int gamma : {0, 1, -2}) {
                    toy::ToyParams p;
                    p.order = 8;
                    p.alpha = alpha;
                    p.gamma = gamma;
                    int shift = m + 1 + gamma;
                    std::vector<int> idx{m, alpha, gamma};
                    toy::TOperator ours = toy::constraint_op(m, p, d);
                    auto fail = [] { return std::string("coefficients differ"); };
                    switch (d.preset) {
                        case Preset::SymmetricQ:
                            b.check("printed-operator", idx,
                                    same_operator(ours, printed_operator(m, alpha, gamma, 8, Q, Q.inverse(),
                                                                         number_in(Q, Q.inverse(), shift, alpha),
                                                                         Q.pow(-alpha * m))),
                                    fail);
                            break;
                        case Preset::JagannathanSrinivasa:
                            b.check("printed-operator", idx,
                                    same_operator(ours, printed_operator(m, alpha, gamma, 8, P, Q,
                                                                         number_in(P, Q, shift, alpha), P.pow(-alpha * m))),
                                    fail);
                            break;
                        case Preset::ChakrabartyJagannathan:
                            b.check("printed-operator", idx,
                                    same_operator(ours, printed_operator(m, alpha, gamma, 8, P.inverse(), Q,
                                                                         number_in(P.inverse(), Q, shift, alpha),
                                                                         P.pow(alpha * m))),
                                    fail);
                            break;
                        case Preset::HounkonnouNgompe: {
                            EpsScalar extra = (Q / P).pow(alpha) * P.pow(-alpha * m);
                            EpsScalar eps_num = number_in(P, Q.inverse(), shift, alpha);
                            b.ledger("printed-operator", "epsilon-number", idx,
                                     same_operator(ours, printed_operator(m, alpha, gamma, 8, P, Q.inverse(), eps_num, extra)),
                                     [] { return std::string("off by (q/p)^alpha on the d/dt_m term"); });
                            b.ledger("printed-operator", "preset-number", idx,
                                     same_operator(ours, printed_operator(m, alpha, gamma, 8, P, Q.inverse(),
                                                                          eps_num * (P / Q).pow(alpha), extra)),
                                     fail);
                            break;
                        }
                        default:
                            break;
                    }
                }
        for (int m = 0; m <= 2; ++m) {
            toy::ToyParams p;
            p.order = 4;
            toy::XSeries diff = toy::substitution_map(toy::constraint_op(m, p, d), 4) - toy::constraint_series_oracle(m, p, d);
            b.ledger("x-representation", "series-oracle", {m}, diff.is_zero(), [&] { return diff.to_string(d.symbols); });
        }
        for (auto [m, n] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}})
            for (int alpha = 1; alpha <= 2; ++alpha)
                for (int beta = 1; beta <= 2; ++beta) {
                    toy::ToyParams p;
                    p.order = 4;
                    toy::EquivalenceReport rep = toy::product_equivalence(m, n, alpha, beta, p, d);
                    b.ledger("product-equivalence", "order-4", {m, n, alpha, beta}, rep.zero,
                             [&] { return rep.residual.to_string(d.symbols); });
                }
    }));
    {
        Deformation g = Deformation::from_preset(Preset::Generic);
        Builder b{g, {}};
        toy::ToyParams p;
        p.order = 4;
        toy::EquivalenceReport rep = toy::product_equivalence(0, 0, 1, 1, p, g);
        double v = toy::max_abs_at(rep.residual, Rational(10001, 10000), Rational(9999, 10000));
        b.ledger("product-equivalence-classical-limit", "e=1+-1e-4", {0, 0, 1, 1}, v < 1e-8, [v] {
            std::ostringstream s;
            s.precision(17);
            s << "max |coefficient| = " << v;
            return s.str();
        });
        out.append(std::move(b.r));
    }
    return out;
}

Report kdv_suite(const Options&) {
    Deformation none = Deformation::from_preset(Preset::Generic);
    Builder b{none, {}};
    auto num = [](double x) {
        std::ostringstream s;
        s.precision(10);
        s << x;
        return s.str();
    };
    kdv::KdVParams p;
    p.tau = 0.05;
    p.grid_points = 256;
    kdv::KdVState flat{std::vector<double>(256, 1.5), 0.0};
    auto r = kdv::rhs(flat, p);
    bool fixed = std::all_of(r.begin(), r.end(), [](double x) { return x == 0.0; });
    b.check("kdv-fixed-point", {}, fixed, [] { return std::string("nonzero rhs on a constant field"); });

    p.dt = 0.01;
    p.steps = 1000;
    p.snapshot_every = 1000;
    p.nonlinear = false;
    for (int mode : {1, 4}) {
        auto tr = kdv::run(kdv::initial_state(kdv::Shape::Cosine, p, 1.0, mode), p);
        double exact = kdv::dispersion_frequency(p, mode) * tr.snapshots.back().t;
        double phase = kdv::mode_phase(tr.snapshots.back().v, p, mode);
        double rel = std::fabs(std::remainder(phase - exact, 2 * std::numbers::pi)) / std::fabs(exact);
        b.check("kdv-dispersion-phase", {mode}, rel < 1e-6, [&] { return "relative phase error " + num(rel); });
    }

    kdv::KdVParams q;
    q.tau = 0.1;
    q.grid_points = 64;
    q.dt = 0.02;
    auto ref = kdv::rk4_refinement(kdv::initial_state(kdv::Shape::Cosine, q, 0.5, 1), q, 2.0);
    b.check("kdv-rk4-refinement", {}, ref.ratio >= 12 && ref.ratio <= 20, [&] { return "ratio " + num(ref.ratio); });
    auto tc = kdv::tau_consistency(1.0, 1.0);
    b.check("kdv-tau-slope", {}, tc.slope >= 1.8 && tc.slope <= 2.2, [&] { return "slope " + num(tc.slope); });
    for (auto& l : b.r.lines) l.preset = "-";
    return b.r;
}

std::string render_lines(const Report& r) {
    std::string out;
    for (const auto& l : r.lines) {
        out += (l.pass ? "PASS " : "FAIL ") + l.identity + " " + l.preset + " " + index_text(l.index);
        if (!l.pass) {
            std::string res = l.residual;
            std::replace(res.begin(), res.end(), '\n', ' ');
            out += ": " + res;
        }
        out += "\n";
    }
    return out;
}

std::string ledger_json(const Report& r) {
    std::vector<const LedgerEntry*> sorted;
    for (const auto& e : r.ledger) sorted.push_back(&e);
    std::stable_sort(sorted.begin(), sorted.end(), [](const LedgerEntry* a, const LedgerEntry* b) {
        return std::tie(a->identity, a->preset, a->reading, a->index) <
               std::tie(b->identity, b->preset, b->reading, b->index);
    });
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    std::size_t holding = 0;
    for (const auto* e : sorted) {
        holding += e->holds;
        entries.push_back({{"identity", e->identity},
                           {"preset", e->preset},
                           {"reading", e->reading},
                           {"index", e->index},
                           {"holds", e->holds},
                           {"residual", e->residual}});
    }
    nlohmann::ordered_json j;
    j["entries"] = sorted.size();
    j["holding"] = holding;
    j["ledger"] = std::move(entries);
    return j.dump(2) + "\n";
}

}  // namespace rpq::verify
