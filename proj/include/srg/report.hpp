#pragma once

#include <string>

#include <json.hpp>

#include "srg/feasibility.hpp"
#include "srg/krein.hpp"
#include "srg/oracle/jordan_oracle.hpp"

namespace srg::report {

using Json = nlohmann::ordered_json;

/// {params, discriminant, spectrum, conditions, overall, first_failure}
Json verdict_json(const FeasibilityVerdict& verdict);
std::string verdict_table(const FeasibilityVerdict& verdict);

Json krein_json(const SrgParams& params, const ProductSpec& spec, const KreinTriple& value);
std::string krein_text(const SrgParams& params, const ProductSpec& spec, const KreinTriple& value);

Json abs_power_json(const SrgParams& params, const AbsPowerCoords& coords);

Json suite_json(const oracle::SuiteReport& report);
std::string suite_text(const oracle::SuiteReport& report);

/// "n,p,a,c,d,r_float,s_float,verdict,first_failure"
std::string csv_header();
std::string csv_row(const FeasibilityVerdict& verdict);
Json scan_row_json(const FeasibilityVerdict& verdict);

std::string overall_label(const FeasibilityVerdict& verdict);
/// Shortest round-trip decimal form.
std::string format_double(double value);

}  // namespace srg::report
