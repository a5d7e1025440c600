#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lieavg/assoc.hpp"
#include "lieavg/series.hpp"

namespace lieavg {

// Canonical text form, terms in (degree, lex) order:
//   "1/2·[1] + 1/2·[2] - 1/48·[112] - 1/48·[122]"
// The zero series prints as "0". Round-trips bit-exactly through
// lie_series_from_string given the same (n, max_degree).
std::string to_string(const LieSeries& a);
std::string to_string(const LieSeriesD& a);
LieSeries lie_series_from_string(std::string_view text, int n, int max_degree);

// JSON form: {"n":2,"degree":3,"terms":[{"word":"1","num":"1","den":"2"},...]}
// with rationals in lowest terms, the sign carried on "num".
nlohmann::json to_json(const LieSeries& a);
LieSeries lie_series_from_json(const nlohmann::json& j);

// Debug rendering of associative series; the empty word prints as "1".
std::string to_string(const AssocSeries& p);

}  // namespace lieavg
