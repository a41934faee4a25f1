#include "rpq/deformation.hpp"

#include "rpq/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace rpq {

Deformation Deformation::from_preset(Preset p) {
    Deformation d;
    d.preset = p;
    if (p == Preset::Generic) return d;
    d.symbols = {"p", "q"};
    switch (p) {
        case Preset::Heine:
            d.eps1 = {0, 0};
            d.eps2 = {0, 1};
            break;
        case Preset::Quesne:
            // (1 - q^-n)/(q - 1) = q^-1 * (1 - q^-n)/(1 - q^-1)
            d.eps1 = {0, 0};
            d.eps2 = {0, -1};
            d.lambda = EpsScalar::monomial({0, -1});
            break;
        case Preset::JagannathanSrinivasa:
            d.eps1 = {1, 0};
            d.eps2 = {0, 1};
            break;
        case Preset::ChakrabartyJagannathan:
            d.eps1 = {-1, 0};
            d.eps2 = {0, 1};
            break;
        case Preset::HounkonnouNgompe:
            d.eps1 = {1, 0};
            d.eps2 = {0, -1};
            d.lambda = EpsScalar::monomial({1, -1});
            break;
        case Preset::SymmetricQ:
            d.eps1 = {0, 1};
            d.eps2 = {0, -1};
            break;
        case Preset::Generic:
            break;
    }
    return d;
}

Deformation Deformation::classical_limit() {
    Deformation d;
    d.classical = true;
    return d;
}

std::string Deformation::name() const { return classical ? "Classical" : preset_name(preset); }

EpsScalar Deformation::eps(int which, int power) const {
    if (classical) return 1;
    return EpsScalar::monomial(eps_mono(which) * power);
}

const std::vector<Preset>& named_presets() {
    static const std::vector<Preset> v{Preset::Heine, Preset::Quesne, Preset::JagannathanSrinivasa,
                                       Preset::ChakrabartyJagannathan, Preset::HounkonnouNgompe};
    return v;
}

const std::vector<Preset>& all_presets() {
    static const std::vector<Preset> v{Preset::Heine,
                                       Preset::Quesne,
                                       Preset::JagannathanSrinivasa,
                                       Preset::ChakrabartyJagannathan,
                                       Preset::HounkonnouNgompe,
                                       Preset::SymmetricQ,
                                       Preset::Generic};
    return v;
}

std::string preset_name(Preset p) {
    switch (p) {
        case Preset::Heine: return "Heine";
        case Preset::Quesne: return "Quesne";
        case Preset::JagannathanSrinivasa: return "JagannathanSrinivasa";
        case Preset::ChakrabartyJagannathan: return "ChakrabartyJagannathan";
        case Preset::HounkonnouNgompe: return "HounkonnouNgompe";
        case Preset::SymmetricQ: return "SymmetricQ";
        case Preset::Generic: return "Generic";
    }
    return "?";
}

std::optional<Preset> parse_preset(std::string_view text) {
    std::string key;
    for (char c : text)
        if (c != '-' && c != '_' && c != ' ') key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    struct Alias {
        const char* name;
        Preset p;
    };
    static const Alias aliases[] = {
        {"heine", Preset::Heine},
        {"ac", Preset::Heine},
        {"arikcoon", Preset::Heine},
        {"quesne", Preset::Quesne},
        {"js", Preset::JagannathanSrinivasa},
        {"jagannathansrinivasa", Preset::JagannathanSrinivasa},
        {"cj", Preset::ChakrabartyJagannathan},
        {"chakrabartyjagannathan", Preset::ChakrabartyJagannathan},
        {"hn", Preset::HounkonnouNgompe},
        {"hounkonnoungompe", Preset::HounkonnouNgompe},
        {"symq", Preset::SymmetricQ},
        {"symmetricq", Preset::SymmetricQ},
        {"generic", Preset::Generic},
    };
    for (const auto& a : aliases)
        if (key == a.name) return a.p;
    return std::nullopt;
}

namespace {

// sum_{i<n} e1^(s(n-1-i)) e2^(s i), n >= 1, with s the exponent scale.
BiLaurent geometric_sum(const Deformation& d, int n, int s) {
    std::vector<BiLaurent::Term> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) terms.push_back({d.eps1 * (s * (n - 1 - i)) + d.eps2 * (s * i), 1});
    return BiLaurent::from_terms(std::move(terms));
}

// Uses [-n] = -(e1 e2)^(-n) [n] to stay in the Laurent ring.
EpsScalar scaled_number(const Deformation& d, int n, int s) {
    if (d.classical) return EpsScalar(n);
    if (n == 0) return EpsScalar(0);
    if (n > 0) return EpsScalar(geometric_sum(d, n, s));
    return EpsScalar(-geometric_sum(d, -n, s).shifted((d.eps1 + d.eps2) * (s * n)));
}

}  // namespace

EpsScalar rpq_number(const Deformation& d, int n, NumberForm form) {
    EpsScalar v = scaled_number(d, n, 1);
    return form == NumberForm::Preset && !d.classical ? d.lambda * v : v;
}

EpsScalar alpha_number(const Deformation& d, int n, int alpha) {
    if (alpha < 1) throw MathError("alpha_number requires alpha >= 1");
    return scaled_number(d, n, alpha);
}

EpsScalar number_ratio(const Deformation& d, int i) {
    if (d.classical) return 2;
    return d.eps(1, i) + d.eps(2, i);
}

EpsScalar factorial(const Deformation& d, int n, NumberForm form) {
    if (n < 0) throw MathError("factorial of a negative integer");
    EpsScalar r(1);
    for (int k = 1; k <= n; ++k) r *= rpq_number(d, k, form);
    return r;
}

EpsScalar binomial(const Deformation& d, int m, int n, NumberForm form) {
    if (n < 0 || n > m) throw MathError("binomial requires m >= n >= 0");
    return factorial(d, m, form) / (factorial(d, n, form) * factorial(d, m - n, form));
}

RNumberFunctor RNumberFunctor::from_deformation(const Deformation& d, double p, double q) {
    if (d.classical) return RNumberFunctor([](double u, double) { return std::log(u); }, std::exp(1.0), 1.0);
    double e1 = d.eps(1, 1).eval(p, q), e2 = d.eps(2, 1).eval(p, q);
    double lam = d.lambda.eval(p, q);
    Monomial m1 = d.eps1, m2 = d.eps2;
    auto r = [=](double u, double v) {
        double a = std::pow(u, m1.a) * std::pow(v, m1.b), b = std::pow(u, m2.a) * std::pow(v, m2.b);
        return lam * (a - b) / (e1 - e2);
    };
    return RNumberFunctor(r, p, q);
}

double RNumberFunctor::operator()(int n) const {
    if (n == 0) return 0.0;
    return r_(std::pow(p_, n), std::pow(q_, n));
}

}  // namespace rpq
