#pragma once

#include "rpq/deformation.hpp"
#include "rpq/witt.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rpq::verify {

/// One asserted identity at one index tuple for one preset.
struct Line {
    std::string identity;
    std::string preset;
    std::vector<int> index;
    bool pass = false;
    std::string residual;  // rendered only on failure
};

/// A displayed closed form adjudicated against direct computation. Never
/// affects the exit status.
struct LedgerEntry {
    std::string identity;
    std::string preset;
    std::string reading;
    std::vector<int> index;
    bool holds = false;
    std::string residual;
};

struct Report {
    std::vector<Line> lines;
    std::vector<LedgerEntry> ledger;
    bool ok() const;
    std::size_t failures() const;
    void append(Report other);
};

struct Options {
    int range = 4;
    int jobs = 1;
    unsigned seed = 1;
    std::vector<Preset> presets = all_presets();
    witt::Reading reading = witt::Reading::Composition;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite; "all" runs every suite.
Report run_suite(const std::string& name, const Options& opt);

Report numbers_suite(const Options& opt);
/// Deformed bracket, its plain-commutator form, su(1,1), antisymmetry, the e_n lemma and the
/// realized-generator commutator on [-range, range]^2.
Report witt_suite(const Options& opt);
/// Associator, its cyclic difference, left symmetry, Nambu, the double bracket and the four
/// multiplication-operator identities on [-2,2]^3, all ledger-only; plus the asserted
/// vanishing of the composition associator with l_0 first.
Report properties_suite(const Options& opt);
Report jacobi_suite(const Options& opt);
Report nalgebra_suite(const Options& opt);
Report toy_suite(const Options& opt);
Report kdv_suite(const Options& opt);

/// "PASS <identity> <preset> (i,j,..)" or "FAIL <identity> <preset> (i,j,..): <residual>".
std::string render_lines(const Report& r);
/// Ledger entries sorted by (identity, preset, reading, index), as indented JSON.
std::string ledger_json(const Report& r);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads; results keep index order.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace rpq::verify
