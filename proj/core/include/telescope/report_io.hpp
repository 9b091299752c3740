#pragma once

#include <span>
#include <string>

#include "telescope/euler.hpp"

namespace telescope {

/// One JSON object with fields name, eq, n_min, n_max, status,
/// first_failure {n, lhs, rhs} (null on pass) and elapsed_ms. Fractions are
/// written as {numerator, denominator_factors} in canonical polynomial text.
std::string report_to_json(const VerificationReport& r, int indent = -1);
/// JSON array of reports, in the given order.
std::string reports_to_json(std::span<const VerificationReport> rs, int indent = 2);

/// `name,eq,status,n_max,elapsed_ms`
std::string report_csv_header();
std::string report_to_csv(const VerificationReport& r);

/// One human-readable line, plus the failing sides when there is a failure.
std::string report_to_text(const VerificationReport& r);

}  // namespace telescope
