#pragma once

#include "rpq/bilaurent.hpp"

namespace rpq {

/// Unit-normal associate of a Laurent polynomial: monomial factors removed,
/// integer coefficients with content 1, positive graded-leading coefficient.
/// Returns the rational/monomial unit u with p == u * result via `unit`.
BiLaurent primitive_associate(const BiLaurent& p, BiLaurent* unit = nullptr);

/// Greatest common divisor in Q[x^±1, y^±1], returned unit-normal
/// (see primitive_associate). gcd(0, 0) == 0.
BiLaurent poly_gcd(const BiLaurent& a, const BiLaurent& b);
/// Same result by primitive remainder sequences only, without the
/// evaluation heuristic that poly_gcd tries first.
BiLaurent poly_gcd_prs(const BiLaurent& a, const BiLaurent& b);

}  // namespace rpq
