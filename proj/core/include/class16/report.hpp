#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "class16/contfrac.hpp"
#include "class16/verifier.hpp"

namespace class16::cli {

using ordered_json = nlohmann::ordered_json;

// Integers become JSON numbers while they are 53-bit safe, decimal strings
// beyond that; parsing + re-serializing is then byte-identical.
ordered_json encode_int(const Int& v);
Int decode_int(const ordered_json& j);

// Canonical report object: p, m, h_plus, h_minus_oracle, h_minus_zagier,
// pell{d,c,digits}, classes[{rep{a,b},chi,n,t}], checks{...}, timing_ms
// (optional), version.  d and c are always decimal strings.
ordered_json report_to_json(const verifier::PrimeReport& r, bool include_timing);

std::string report_to_text(const verifier::PrimeReport& r);

// One deterministic line per prime for sweep output (no timing).
std::string sweep_line(const verifier::PrimeReport& r);

// Comma-separated names of failed checks, empty when all pass.
std::string failed_checks(const verifier::CheckResults& c);

std::string csv_header();
std::string csv_row(const verifier::PrimeReport& r);

// "[9; (9,18)]" / "[4; 3,2 (5,7)]" (preperiod, when present, before the
// parenthesized period).
std::string format_negcf(const contfrac::NegCF& cf);

}  // namespace class16::cli
