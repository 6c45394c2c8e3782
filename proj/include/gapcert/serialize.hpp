#pragma once

#include <json.hpp>

#include "gapcert/census.hpp"
#include "gapcert/rootgap.hpp"

namespace gapcert {

using Json = nlohmann::ordered_json;

/// "m*2^e" when q is dyadic, otherwise "p/q" (or "p" for integers).
std::string bound_str(const mpq_class& q);
mpq_class parse_bound(const std::string& text);

/// {polynomial, left: {lo, hi}, right: {lo, hi}, gap_upper, gap_lower,
///  claimed_bound, meets_claim}; dyadics as "m*2^e".
Json to_json(const GapCertificate& cert);
GapCertificate certificate_from_json(const Json& j);

/// Counts as base-10 strings, rationals as "p/q".
Json to_json(const CensusReport& report);

}  // namespace gapcert
