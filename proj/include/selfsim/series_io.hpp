#pragma once

// Text and JSON forms of series.
//
// Literal syntax: a signed sum of terms  c | c*x | c*x^n | x^n | c x^n,
// e.g. "2 - x", "1 + x", "3*x^2", "-1".  The canonical JSON form of a
// PowerSeries is {"m": int, "K": int, "D": int, "coeffs": [[digit,...],...]}.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "selfsim/adic.hpp"
#include "selfsim/quotient.hpp"

namespace selfsim::adic {

/// Integer coefficients by degree; trailing zeros trimmed (at least one entry).
std::vector<BigInt> parse_series_literal(std::string_view text);

std::string format_integer_series(const std::vector<BigInt>& coeffs);
/// Formats balanced lifts, so integer literals print as typed.
std::string format_series(const PowerSeries& s);
std::string format_quotient(const QuotientElement& e);

nlohmann::json to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);
nlohmann::json to_json(const QuotientElement& e);

}  // namespace selfsim::adic
