#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stircalc/exact_rational.hpp"
#include "stircalc/report.hpp"
#include "stircalc/series.hpp"
#include "stircalc/triangle.hpp"

namespace stircalc {

// Entries exceed 64-bit range quickly, so JSON renders every value as a
// decimal string. ordered_json keeps field order deterministic.
using json = nlohmann::ordered_json;

std::string triangle_to_csv(const Triangle& t);   // one comma-separated row per line
std::string triangle_to_plain(const Triangle& t); // space-separated rows
json triangle_to_json(const Triangle& t);         // array of arrays of strings

json series_to_json(const TruncatedSeries& s); // {"order": N, "coeffs": ["p/q", ...]}

json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);

// Comma-separated "p/q" tokens; ParseError names the offending token and
// its character offset.
std::vector<ExactRational> parse_rational_list(std::string_view text);
std::string render_rational_list(const std::vector<ExactRational>& values);

} // namespace stircalc
