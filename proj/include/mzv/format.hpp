#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "mzv/automaton.hpp"
#include "mzv/composition.hpp"
#include "mzv/series.hpp"

namespace mzv {

/// Coefficient literal in powers of w = zeta_m: "3/2", "1+w", "-2*w^2".
/// `root_order` 0 means the coefficient's own order.
std::string coeff_text(const CycloNum& c, int root_order = 0);
/// Parses a coefficient literal; "i" is accepted when root_order is 4.
CycloNum parse_coeff(std::string_view text, int root_order);

/// Least common multiple of the coefficient orders.
int root_order_of(const NCPoly& p);

/// "4*x^2y^2 + 2*xyxy"; coefficients outside Q are parenthesized.
std::string poly_text(const NCPoly& p, int root_order = 0);
NCPoly parse_poly(std::string_view text, int root_order);
std::string poly_latex(const NCPoly& p, int root_order = 0);
/// Text of a polynomial abbreviated to at most `max_terms` terms.
std::string poly_summary(const NCPoly& p, std::size_t max_terms = 8);

std::string composition_latex(const Composition& c);

nlohmann::ordered_json automaton_json(const Automaton& m);
Automaton automaton_from_json(const nlohmann::ordered_json& j);

/// One row per line, entries separated by " | ".
std::string matrix_text(const Matrix& a);

}  // namespace mzv
