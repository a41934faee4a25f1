#pragma once

#include "rpq/eps_scalar.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rpq {

enum class Preset {
    Heine,  // Arik-Coon reading eps1 = 1, eps2 = q
    Quesne,
    JagannathanSrinivasa,
    ChakrabartyJagannathan,
    HounkonnouNgompe,
    SymmetricQ,
    Generic,
};

/// Which normalization a deformed number is reported in.
enum class NumberForm {
    Epsilon,  // (e1^n - e2^n)/(e1 - e2), used by all operator algebra
    Preset,   // lambda * epsilon form, matches the named deformation's own numbers
};

/// A pair (eps1, eps2) expressed as monomials in two ring symbols, plus
/// the preset-facing scale and the free functions of the central extension
/// and of the toy model.
struct Deformation {
    Preset preset = Preset::Generic;
    SymbolNames symbols;
    Monomial eps1{1, 0};
    Monomial eps2{0, 1};
    EpsScalar lambda{1};
    EpsScalar central{1};  // C(p,q)
    EpsScalar h_factor{1};
    /// Numbers collapse to integers and every eps power to 1.
    bool classical = false;

    static Deformation from_preset(Preset p);
    static Deformation classical_limit();

    std::string name() const;
    /// eps_which^power, which in {1, 2}.
    EpsScalar eps(int which, int power) const;
    Monomial eps_mono(int which) const { return which == 1 ? eps1 : eps2; }
    /// Parses an expression in this deformation's symbol names.
    EpsScalar parse(std::string_view text) const { return EpsScalar::parse(text, symbols); }
    std::string render(const EpsScalar& s) const { return s.to_string(symbols); }
};

/// The five named deformations (Generic and SymmetricQ excluded).
const std::vector<Preset>& named_presets();
const std::vector<Preset>& all_presets();
std::string preset_name(Preset p);
/// Case-insensitive; accepts full names and short aliases (js, cj, hn, ...).
std::optional<Preset> parse_preset(std::string_view text);

/// [n] = (e1^n - e2^n)/(e1 - e2) for any integer n.
EpsScalar rpq_number(const Deformation& d, int n, NumberForm form = NumberForm::Epsilon);
/// [n]_alpha = (e1^(alpha n) - e2^(alpha n))/(e1^alpha - e2^alpha), alpha >= 1.
EpsScalar alpha_number(const Deformation& d, int n, int alpha);
/// Continuation of [2i]/[i]: e1^i + e2^i.
EpsScalar number_ratio(const Deformation& d, int i);
/// Throws MathError for n < 0.
EpsScalar factorial(const Deformation& d, int n, NumberForm form = NumberForm::Epsilon);
/// Throws MathError unless m >= n >= 0.
EpsScalar binomial(const Deformation& d, int m, int n, NumberForm form = NumberForm::Epsilon);

/// [n] = R(p^n, q^n) for a numerically supplied meromorphic R.
class RNumberFunctor {
public:
    using Function = std::function<double(double, double)>;
    RNumberFunctor(Function r, double p, double q) : r_(std::move(r)), p_(p), q_(q) {}
    /// The R of a named deformation, in its preset-facing normalization.
    static RNumberFunctor from_deformation(const Deformation& d, double p, double q);
    double operator()(int n) const;

private:
    Function r_;
    double p_, q_;
};

}  // namespace rpq
