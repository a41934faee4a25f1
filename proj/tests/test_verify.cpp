#include "doctest.h"
#include "rpq/verify.hpp"

#include <json.hpp>

#include <atomic>
#include <stdexcept>

using namespace rpq;
using namespace rpq::verify;

TEST_CASE("parallel_for visits every index once") {
    for (int jobs : {1, 3, 8}) {
        std::vector<std::atomic<int>> hits(37);
        parallel_for(hits.size(), jobs, [&](std::size_t i) { ++hits[i]; });
        for (auto& h : hits) CHECK(h.load() == 1);
    }
    CHECK_THROWS_AS(parallel_for(5, 2, [](std::size_t i) {
                        if (i == 3) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
}

TEST_CASE("suite output does not depend on the thread count") {
    Options one;
    one.range = 2;
    one.presets = {Preset::Heine, Preset::HounkonnouNgompe, Preset::Generic};
    Options many = one;
    many.jobs = 4;
    Report a = witt_suite(one), b = witt_suite(many);
    CHECK(render_lines(a) == render_lines(b));
    CHECK(a.ok());
    Report ja = jacobi_suite(one), jb = jacobi_suite(many);
    CHECK(ledger_json(ja) == ledger_json(jb));
}

TEST_CASE("rendering and ledger layout") {
    Report r;
    r.lines.push_back({"demo", "Heine", {1, -2}, true, ""});
    r.lines.push_back({"demo", "Heine", {0}, false, "z^{1} :: 2\nz^{2} :: 3"});
    CHECK(render_lines(r) == "PASS demo Heine (1,-2)\nFAIL demo Heine (0): z^{1} :: 2 z^{2} :: 3\n");
    CHECK(r.failures() == 1);
    CHECK_FALSE(r.ok());

    r.ledger.push_back({"b", "Heine", "x", {2}, false, "r"});
    r.ledger.push_back({"a", "Quesne", "x", {1}, true, ""});
    r.ledger.push_back({"a", "Heine", "x", {3}, true, ""});
    auto j = nlohmann::json::parse(ledger_json(r));
    CHECK(j["entries"] == 3);
    CHECK(j["holding"] == 2);
    CHECK(j["ledger"][0]["preset"] == "Heine");
    CHECK(j["ledger"][1]["preset"] == "Quesne");
    CHECK(j["ledger"][2]["identity"] == "b");
}

TEST_CASE("suite dispatch") {
    Options opt;
    opt.presets = {Preset::JagannathanSrinivasa};
    CHECK_THROWS_AS(run_suite("nosuch", opt), std::invalid_argument);
    Report n = run_suite("numbers", opt);
    CHECK(n.lines.size() == 12);
    CHECK(n.ok());
    CHECK(suite_names().size() == 7);
}

TEST_CASE("ledger-only claims never turn into assertions") {
    Options opt;
    opt.presets = {Preset::SymmetricQ};
    Report r = nalgebra_suite(opt);
    CHECK(r.ok());
    bool literal_fails = false;
    for (const auto& e : r.ledger) {
        if (e.identity == "n-bracket-2" && e.reading == "operator" && !e.holds) literal_fails = true;
        CHECK(e.preset == "SymmetricQ");
    }
    CHECK(literal_fails);
    for (const auto& l : r.lines) CHECK(l.identity != "n-bracket-3");
}
