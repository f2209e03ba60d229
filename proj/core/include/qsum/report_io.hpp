#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsum/certify.hpp"
#include "qsum/explore.hpp"
#include "qsum/reduction.hpp"
#include "qsum/spectra.hpp"

namespace qsum {

using Json = nlohmann::ordered_json;

/// Significant digits of every floating-point value we print.
inline constexpr int kOutputDigits = 12;

/// x rounded to kOutputDigits significant digits. Non-finite values pass through.
double quantize(double x);

/// "%.12g" text of x; empty for non-finite values.
std::string format_number(double x);

Json to_json(const LemmaReport& r);
Json to_json(const ExtremalRecord& r);
Json to_json(const ConjectureRow& r);
Json to_json(const EnumerationStats& s);
Json to_json(const QuotientMatrix& q);

/// Graph invariants as printed by `compute`; the spectrum is included on request.
Json graph_summary_json(const Graph& g, double solver_tol, bool with_spectrum);

/**
 * CSV with a header row taken from the first object's keys. Nested objects
 * are flattened to `key=value;...`, arrays to `a;b;...`, margin objects to
 * `name=slack`. Numbers use format_number, so a CSV cell and the matching
 * JSON value denote the same double.
 */
void write_csv(std::ostream& out, const Json& rows);

/// Whitespace-aligned columns over the same cells as write_csv.
void write_text(std::ostream& out, const Json& rows);

/// JSON array with one element per line, or a single-line object.
void write_json(std::ostream& out, const Json& value);

}  // namespace qsum
