#include "rpq/deformation.hpp"
#include "rpq/errors.hpp"
#include "rpq/kdv_lattice.hpp"
#include "rpq/n_algebra.hpp"
#include "rpq/toy_model.hpp"
#include "rpq/verify.hpp"
#include "rpq/witt.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace rpq;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Global {
    std::string format = "text";
    std::string out;
    unsigned seed = 1;
    int jobs = 1;
};

Preset preset_or_throw(const std::string& name) {
    auto p = parse_preset(name);
    if (!p) throw UsageError("unknown preset: " + name);
    return *p;
}

std::vector<Preset> preset_list(const std::vector<std::string>& names) {
    if (names.empty() || (names.size() == 1 && names[0] == "all")) return all_presets();
    std::vector<Preset> v;
    for (const auto& n : names) v.push_back(preset_or_throw(n));
    return v;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string lines_of(const GradedOp& op, const SymbolNames& names) {
    return op.is_zero() ? std::string("0\n") : op.to_string(names) + "\n";
}

json op_json(const GradedOp& op, const SymbolNames& names) {
    json parts = json::object();
    for (const auto& [shift, c] : op.parts()) parts[std::to_string(shift)] = c.to_string(names);
    return parts;
}

std::string numbers_cmd(const Global& g, const std::vector<Preset>& presets, int lo, int hi) {
    std::ostringstream s;
    json all = json::array();
    if (g.format == "csv") s << "preset,n,number,factorial,central\n";
    for (Preset p : presets) {
        Deformation d = Deformation::from_preset(p);
        if (g.format == "text") s << d.name() << "\n";
        for (int n = lo; n <= hi; ++n) {
            std::string num = d.render(rpq_number(d, n, NumberForm::Preset));
            std::string fac = n >= 0 ? d.render(factorial(d, n, NumberForm::Preset)) : "";
            std::string cen = d.render(witt::central_term(d, n));
            if (g.format == "csv")
                s << d.name() << "," << n << "," << csv_field(num) << "," << csv_field(fac) << "," << csv_field(cen) << "\n";
            else if (g.format == "json")
                all.push_back({{"preset", d.name()}, {"n", n}, {"number", num}, {"factorial", fac}, {"central", cen}});
            else
                s << "  [" << n << "] = " << num << (fac.empty() ? "" : "    [" + std::to_string(n) + "]! = " + fac) << "\n";
        }
    }
    if (g.format == "json") s << all.dump(2) << "\n";
    return s.str();
}

std::string central_cmd(const Global& g, const std::vector<Preset>& presets, int lo, int hi) {
    std::ostringstream s;
    json all = json::array();
    if (g.format == "csv") s << "preset,n,central\n";
    for (Preset p : presets) {
        Deformation d = Deformation::from_preset(p);
        for (int n = lo; n <= hi; ++n) {
            std::string c = d.render(witt::central_term(d, n));
            if (g.format == "csv")
                s << d.name() << "," << n << "," << csv_field(c) << "\n";
            else if (g.format == "json")
                all.push_back({{"preset", d.name()}, {"n", n}, {"central", c}});
            else
                s << d.name() << " C(" << n << ") = " << c << "\n";
        }
    }
    if (g.format == "json") s << all.dump(2) << "\n";
    return s.str();
}

std::string presets_cmd(const Global& g) {
    std::ostringstream s;
    json all = json::array();
    if (g.format == "csv") s << "preset,e1,e2,lambda\n";
    for (Preset p : all_presets()) {
        Deformation d = Deformation::from_preset(p);
        std::string e1 = d.render(d.eps(1, 1)), e2 = d.render(d.eps(2, 1)), lam = d.render(d.lambda);
        if (g.format == "csv")
            s << d.name() << "," << csv_field(e1) << "," << csv_field(e2) << "," << csv_field(lam) << "\n";
        else if (g.format == "json")
            all.push_back({{"preset", d.name()}, {"e1", e1}, {"e2", e2}, {"lambda", lam}});
        else
            s << d.name() << ": e1 = " << e1 << ", e2 = " << e2 << ", lambda = " << lam << "\n";
    }
    if (g.format == "json") s << all.dump(2) << "\n";
    return s.str();
}

std::string bracket_cmd(const Global& g, Preset p, int alpha, const std::vector<int>& modes, int m_sign) {
    if (modes.size() < 2 || modes.size() > 6) throw UsageError("the n-bracket takes 2 to 6 modes");
    if (alpha < 1) throw UsageError("alpha must be a positive integer");
    Deformation d = Deformation::from_preset(p);
    nalg::NBracketReport r = nalg::n_bracket_report(d, alpha, modes, m_sign);
    const char* verdict = r.match ? "match" : (r.vacuum_match ? "match on vacuum only" : "mismatch");
    if (g.format == "json") {
        json j{{"preset", d.name()},
               {"n", modes.size()},
               {"alpha", alpha},
               {"modes", modes},
               {"m_sign", m_sign},
               {"oracle", op_json(r.oracle, d.symbols)},
               {"closed_form", op_json(r.closed_form, d.symbols)},
               {"residual", op_json(r.residual, d.symbols)},
               {"match", r.match},
               {"vacuum_match", r.vacuum_match}};
        return j.dump(2) + "\n";
    }
    if (g.format == "csv") throw UsageError("bracket supports text and json output");
    std::ostringstream s;
    s << "oracle:\n" << lines_of(r.oracle, d.symbols) << "closed form:\n" << lines_of(r.closed_form, d.symbols)
      << "residual:\n" << lines_of(r.residual, d.symbols) << "verdict: " << verdict << "\n";
    return s.str();
}

std::string bell_cmd(const Global& g, int n) {
    if (n < 0 || n > 12) throw UsageError("bell needs 0 <= n <= 12");
    std::ostringstream s;
    json all = json::array();
    if (g.format == "csv") s << "n,bell\n";
    for (int k = 0; k <= n; ++k) {
        std::string b = toy::bell(k, n).to_string();
        if (g.format == "csv")
            s << k << "," << csv_field(b) << "\n";
        else if (g.format == "json")
            all.push_back({{"n", k}, {"bell", b}});
        else
            s << "B" << k << " = " << b << "\n";
    }
    if (g.format == "json") s << all.dump(2) << "\n";
    return s.str();
}

std::string toy_verify_cmd(const Global& g, const std::vector<Preset>& presets, int order, int max_mode, int max_alpha) {
    if (order < 1 || order > 10) throw UsageError("toy order must lie in [1, 10]");
    json all = json::array();
    std::ostringstream text;
    for (Preset p : presets) {
        Deformation d = Deformation::from_preset(p);
        toy::ToyParams params;
        params.order = order;
        for (int m = 0; m <= max_mode; ++m)
            for (int n = 0; n <= max_mode; ++n)
                for (int a = 1; a <= max_alpha; ++a)
                    for (int b = 1; b <= max_alpha; ++b) {
                        toy::EquivalenceReport r = toy::product_equivalence(m, n, a, b, params, d);
                        json coeffs = json::object();
                        for (std::size_t k = 0; k < r.residual.coeffs.size(); ++k)
                            if (!r.residual.coeffs[k].is_zero())
                                coeffs[std::to_string(k)] = r.residual.coeffs[k].to_string(d.symbols);
                        all.push_back({{"preset", d.name()},
                                       {"m", m},
                                       {"n", n},
                                       {"alpha", a},
                                       {"beta", b},
                                       {"order", order},
                                       {"truncated", r.truncated},
                                       {"zero", r.zero},
                                       {"residual", coeffs}});
                        text << d.name() << " (" << m << "," << n << "," << a << "," << b << "): "
                             << (r.zero ? "zero residual" : "nonzero residual")
                             << (r.truncated ? ", inconclusive beyond order " + std::to_string(order) : "") << "\n";
                    }
    }
    if (g.format == "text") return text.str();
    if (g.format == "csv") throw UsageError("toy verify supports text and json output");
    return all.dump(2) + "\n";
}

struct KdVArgs {
    std::string preset = "symmetricq";
    double p = 1.0, q = 1.0;
    std::string init = "soliton";
    std::string init_file;
    double amplitude = 1.0, width = 1.0;
    int mode = 1;
    bool linear = false;
    kdv::KdVParams params;
};

std::vector<double> read_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::vector<double> v;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t used = 0;
        try {
            v.push_back(std::stod(line.substr(line.find_last_of(',') == std::string::npos ? 0 : line.find_last_of(',') + 1), &used));
        } catch (const std::exception&) {
            if (v.empty()) continue;  // header row
            throw UsageError("bad number in " + path + ": " + line);
        }
    }
    return v;
}

void kdv_cmd(const Global& g, KdVArgs a, std::ostream& out) {
    if (g.format != "csv" && g.format != "text") throw UsageError("kdv run writes csv");
    Deformation d = Deformation::from_preset(preset_or_throw(a.preset));
    a.params.theta = kdv::theta_for(d, a.p, a.q);
    a.params.nonlinear = !a.linear;
    try {
        a.params.validate();
    } catch (const MathError& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    kdv::KdVState init;
    if (a.init == "soliton")
        init = kdv::initial_state(kdv::Shape::Soliton, a.params, a.amplitude, a.mode, a.width);
    else if (a.init == "cosine")
        init = kdv::initial_state(kdv::Shape::Cosine, a.params, a.amplitude, a.mode, a.width);
    else {
        if (a.init_file.empty()) throw UsageError("--init file needs --init-file");
        init.v = read_field(a.init_file);
        if (init.v.size() != static_cast<std::size_t>(a.params.grid_points))
            throw UsageError("initial field has " + std::to_string(init.v.size()) + " values, expected " +
                             std::to_string(a.params.grid_points));
    }
    auto shortest = [](double x) {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, res.ptr);
    };
    kdv::write_csv(out, kdv::run(init, a.params), a.params,
                   {{"preset", d.name()}, {"p", shortest(a.p)}, {"q", shortest(a.q)}, {"init", a.init}});
}

void emit(const Global& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + g.out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact (p,q)-deformed Witt/Virasoro engine and deformed KdV lattice"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", g.out, "Write output to this file");
    app.add_option("--seed", g.seed, "Seed for randomized property sampling");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 256));

    std::vector<std::string> preset_names;
    int lo = 1, hi = 10;

    auto* numbers = app.add_subcommand("numbers", "Table of [n], [n]! and C(n) per preset");
    numbers->add_option("--preset", preset_names, "Presets (default all)");
    numbers->add_option("--min", lo, "First n")->check(CLI::Range(-12, 12));
    numbers->add_option("--max", hi, "Last n")->check(CLI::Range(-12, 12));

    auto* central = app.add_subcommand("central", "Central term C(n) per preset");
    central->add_option("--preset", preset_names, "Presets (default all)");
    central->add_option("--min", lo, "First n")->check(CLI::Range(-12, 12));
    central->add_option("--max", hi, "Last n")->check(CLI::Range(-12, 12));

    auto* presets = app.add_subcommand("presets", "List presets and their (e1, e2) pairs");

    std::string suite = "all", ledger_path;
    int range = 4;
    std::string reading = "composition";
    auto* verify = app.add_subcommand("verify", "Run identity suites; exit 0 iff every asserted identity holds");
    verify->add_option("--suite", suite, "Suite name or 'all'");
    verify->add_option("--range", range, "Index range for the Witt suite")->check(CLI::Range(0, 12));
    verify->add_option("--preset", preset_names, "Presets (default all)");
    verify->add_option("--ledger", ledger_path, "Write the JSON discrepancy ledger here");
    verify->add_option("--reading", reading, "Product reading for the property identities")
        ->check(CLI::IsMember({"composition", "natural", "natural-total"}));

    std::string bpreset = "generic";
    int alpha = 1, m_sign = 1;
    std::vector<int> modes;
    auto* bracket = app.add_subcommand("bracket", "n-bracket of T operators: oracle against closed form");
    bracket->add_option("--preset", bpreset, "Preset");
    bracket->add_option("--alpha", alpha, "Derivative order alpha");
    bracket->add_option("--modes", modes, "Modes m_1 .. m_n")->required();
    bracket->add_option("--m-sign", m_sign, "Sign applied to the M factor")->check(CLI::IsMember({-1, 1}));

    int bell_n = 4;
    auto* bell = app.add_subcommand("bell", "Complete Bell polynomials B_0 .. B_n");
    bell->add_option("--n", bell_n, "Highest index")->required();

    auto* toy = app.add_subcommand("toy", "Toy-model constraint checks");
    toy->require_subcommand(1);
    int order = 4, max_mode = 1, max_alpha = 2;
    auto* toy_verify = toy->add_subcommand("verify", "Product equivalence residuals as JSON");
    toy_verify->add_option("--preset", preset_names, "Presets (default all)");
    toy_verify->add_option("--order", order, "Truncation order in x");
    toy_verify->add_option("--max-mode", max_mode, "Modes m, n in [0, max]")->check(CLI::Range(0, 3));
    toy_verify->add_option("--max-alpha", max_alpha, "alpha, beta in [1, max]")->check(CLI::Range(1, 3));

    KdVArgs k;
    auto* kdv = app.add_subcommand("kdv", "Deformed KdV lattice");
    kdv->require_subcommand(1);
    auto* kdv_run = kdv->add_subcommand("run", "Integrate and write t,x,v CSV");
    kdv_run->add_option("--preset", k.preset, "Preset giving Theta at (p, q)");
    kdv_run->add_option("--p", k.p, "Numeric p");
    kdv_run->add_option("--q", k.q, "Numeric q");
    kdv_run->add_option("--tau", k.params.tau, "Deformation step tau");
    kdv_run->add_option("--s", k.params.shift, "Grid points per 2 tau");
    kdv_run->add_option("--nx", k.params.grid_points, "Grid points");
    kdv_run->add_option("--dt", k.params.dt, "Time step");
    kdv_run->add_option("--steps", k.params.steps, "Number of steps");
    kdv_run->add_option("--snapshot-every", k.params.snapshot_every, "Steps between snapshots");
    kdv_run->add_option("--central-c", k.params.central_c, "Central charge C");
    kdv_run->add_option("--courant", k.params.courant, "Courant factor; <= 0 disables the guard");
    kdv_run->add_option("--init", k.init, "Initial field")->check(CLI::IsMember({"soliton", "cosine", "file"}));
    kdv_run->add_option("--init-file", k.init_file, "Field values, one per line (last CSV column)");
    kdv_run->add_option("--amplitude", k.amplitude, "Initial amplitude");
    kdv_run->add_option("--mode", k.mode, "Cosine mode number");
    kdv_run->add_option("--width", k.width, "Soliton width");
    kdv_run->add_flag("--linear", k.linear, "Drop the nonlinear term");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (numbers->parsed()) {
            if (lo > hi) throw UsageError("--min exceeds --max");
            emit(g, numbers_cmd(g, preset_list(preset_names), lo, hi));
        } else if (central->parsed()) {
            if (lo > hi) throw UsageError("--min exceeds --max");
            emit(g, central_cmd(g, preset_list(preset_names), lo, hi));
        } else if (presets->parsed()) {
            emit(g, presets_cmd(g));
        } else if (verify->parsed()) {
            verify::Options opt;
            opt.range = range;
            opt.jobs = g.jobs;
            opt.seed = g.seed;
            opt.presets = preset_list(preset_names);
            opt.reading = reading == "natural" ? witt::Reading::Natural
                          : reading == "natural-total" ? witt::Reading::NaturalTotal
                                                       : witt::Reading::Composition;
            verify::Report r;
            try {
                r = verify::run_suite(suite, opt);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            std::string ledger = verify::ledger_json(r);
            if (g.format == "json") {
                json j{{"asserted", r.lines.size()}, {"failures", r.failures()}, {"ledger", json::parse(ledger)}};
                emit(g, j.dump(2) + "\n");
            } else {
                std::ostringstream s;
                s << verify::render_lines(r);
                s << "asserted " << r.lines.size() << ", failed " << r.failures() << ", ledger entries "
                  << r.ledger.size() << "\n";
                emit(g, s.str());
            }
            if (!ledger_path.empty()) {
                std::ofstream f(ledger_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot write " + ledger_path);
                f << ledger;
            }
            return r.ok() ? 0 : 1;
        } else if (bracket->parsed()) {
            emit(g, bracket_cmd(g, preset_or_throw(bpreset), alpha, modes, m_sign));
        } else if (bell->parsed()) {
            emit(g, bell_cmd(g, bell_n));
        } else if (toy_verify->parsed()) {
            emit(g, toy_verify_cmd(g, preset_list(preset_names), order, max_mode, max_alpha));
        } else if (kdv_run->parsed()) {
            if (g.out.empty()) {
                kdv_cmd(g, k, std::cout);
            } else {
                std::ofstream f(g.out, std::ios::binary);
                if (!f) throw std::runtime_error("cannot write " + g.out);
                kdv_cmd(g, k, f);
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
