#include "doctest.h"
#include "rpq/deformation.hpp"
#include "rpq/errors.hpp"

#include <cmath>

using namespace rpq;

namespace {

// Independent route: build the quotient through field division.
EpsScalar number_by_division(const Deformation& d, int n, int alpha = 1) {
    EpsScalar e1 = d.eps(1, alpha), e2 = d.eps(2, alpha);
    return (e1.pow(n) - e2.pow(n)) / (e1 - e2);
}

}  // namespace

TEST_CASE("deformed number examples") {
    for (Preset p : all_presets()) {
        auto d = Deformation::from_preset(p);
        CHECK(rpq_number(d, 0).is_zero());
        CHECK(rpq_number(d, 1).is_one());
    }
    auto js = Deformation::from_preset(Preset::JagannathanSrinivasa);
    CHECK(js.render(rpq_number(js, 3)) == "p^2 + p*q + q^2");
}

TEST_CASE("geometric-sum numbers agree with the field quotient") {
    for (Preset p : all_presets()) {
        auto d = Deformation::from_preset(p);
        for (int n = -10; n <= 10; ++n) {
            CHECK(rpq_number(d, n) == number_by_division(d, n));
            for (int a = 1; a <= 3; ++a) CHECK(alpha_number(d, n, a) == number_by_division(d, n, a));
        }
    }
}

TEST_CASE("negative-index reflection") {
    for (Preset p : all_presets()) {
        auto d = Deformation::from_preset(p);
        EpsScalar e1e2 = d.eps(1, 1) * d.eps(2, 1);
        for (int n = -10; n <= 10; ++n) CHECK(rpq_number(d, -n) == -(e1e2.pow(-n)) * rpq_number(d, n));
    }
}

TEST_CASE("number ratio continues [2i]/[i]") {
    auto g = Deformation::from_preset(Preset::Generic);
    CHECK(number_ratio(g, 0) == EpsScalar(2));
    CHECK(number_ratio(g, 1) == g.parse("e1 + e2"));
    CHECK(number_ratio(g, 2) == g.parse("(e1^4 - e2^4)/(e1^2 - e2^2)"));
    for (Preset p : all_presets()) {
        auto d = Deformation::from_preset(p);
        for (int i = -8; i <= 8; ++i) {
            if (i == 0) continue;
            CHECK(number_ratio(d, i) * rpq_number(d, i) == rpq_number(d, 2 * i));
        }
    }
}

TEST_CASE("preset-facing numbers reproduce each named deformation") {
    auto num = [](Preset p, int n) {
        auto d = Deformation::from_preset(p);
        return rpq_number(d, n, NumberForm::Preset);
    };
    auto pq = [](const char* s) { return EpsScalar::parse(s, {"p", "q"}); };
    for (int n = 1; n <= 12; ++n) {
        std::string N = std::to_string(n);
        CHECK(num(Preset::Heine, n) == pq(("(1 - q^" + N + ")/(1 - q)").c_str()));
        CHECK(num(Preset::Quesne, n) == pq(("(1 - q^-" + N + ")/(q - 1)").c_str()));
        CHECK(num(Preset::JagannathanSrinivasa, n) == pq(("(p^" + N + " - q^" + N + ")/(p - q)").c_str()));
        CHECK(num(Preset::ChakrabartyJagannathan, n) == pq(("(p^-" + N + " - q^" + N + ")/(p^-1 - q)").c_str()));
        CHECK(num(Preset::HounkonnouNgompe, n) == pq(("(p^" + N + " - q^-" + N + ")/(q - p^-1)").c_str()));
        CHECK(num(Preset::SymmetricQ, n) == pq(("(q^" + N + " - q^-" + N + ")/(q - q^-1)").c_str()));
    }
}

TEST_CASE("factorials and binomials") {
    auto js = Deformation::from_preset(Preset::JagannathanSrinivasa);
    CHECK(factorial(js, 0).is_one());
    CHECK(factorial(js, 3) == js.parse("(p + q)*(p^2 + p*q + q^2)"));
    for (Preset p : all_presets()) {
        auto d = Deformation::from_preset(p);
        CHECK(binomial(d, 5, 2) == binomial(d, 5, 3));
        CHECK(binomial(d, 5, 2, NumberForm::Preset) == binomial(d, 5, 3, NumberForm::Preset));
        // Pascal-type rule in eps-form: [m,n] = e1^n [m-1,n] + e2^(m-n) [m-1,n-1]
        for (int m = 1; m <= 6; ++m)
            for (int n = 1; n < m; ++n)
                CHECK(binomial(d, m, n) ==
                      d.eps(1, n) * binomial(d, m - 1, n) + d.eps(2, m - n) * binomial(d, m - 1, n - 1));
    }
    CHECK_THROWS_AS(factorial(js, -1), MathError);
    CHECK_THROWS_AS(binomial(js, 2, 3), MathError);
    CHECK_THROWS_AS(alpha_number(js, 2, 0), MathError);
}

TEST_CASE("alpha-number examples") {
    auto g = Deformation::from_preset(Preset::Generic);
    CHECK(alpha_number(g, 1, 3).is_one());
    CHECK(alpha_number(g, 2, 2) == g.parse("e1^2 + e2^2"));
    CHECK(alpha_number(g, 3, 1) == rpq_number(g, 3));
}

TEST_CASE("numbers tend to integers in the undeformed limit") {
    auto g = Deformation::from_preset(Preset::Generic);
    const double delta = 1e-4;
    for (int n = -6; n <= 6; ++n) {
        double v = rpq_number(g, n).eval(1 + delta, 1 - delta);
        if (n == 0)
            CHECK(v == 0.0);
        else
            CHECK(std::abs(v - n) / std::abs(n) < 1e-6);
    }
    auto c = Deformation::classical_limit();
    CHECK(rpq_number(c, 7) == EpsScalar(7));
    CHECK(factorial(c, 4) == EpsScalar(24));
}

TEST_CASE("numeric R functor") {
    for (Preset p : named_presets()) {
        auto d = Deformation::from_preset(p);
        const double pv = 0.9, qv = 0.6;
        auto r = RNumberFunctor::from_deformation(d, pv, qv);
        CHECK(r(0) == 0.0);
        for (int n = 1; n <= 8; ++n) {
            CHECK(r(n) > 0.0);
            CHECK(r(n) == doctest::Approx(rpq_number(d, n, NumberForm::Preset).eval(pv, qv)).epsilon(1e-12));
        }
    }
    RNumberFunctor custom([](double u, double v) { return (u - v) / (0.9 - 0.6); }, 0.9, 0.6);
    CHECK(custom(2) == doctest::Approx(1.5));
}

TEST_CASE("preset lookup") {
    CHECK(parse_preset("JS") == Preset::JagannathanSrinivasa);
    CHECK(parse_preset("hounkonnou-ngompe") == Preset::HounkonnouNgompe);
    CHECK(parse_preset("Arik-Coon") == Preset::Heine);
    CHECK(parse_preset("SymQ") == Preset::SymmetricQ);
    CHECK_FALSE(parse_preset("nope").has_value());
    auto s = Deformation::from_preset(Preset::SymmetricQ);
    CHECK((s.eps(1, 1) * s.eps(2, 1)).is_one());
}
