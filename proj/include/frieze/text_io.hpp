#pragma once

#include <string>

#include "json.hpp"

#include "frieze/census.hpp"
#include "frieze/eta.hpp"
#include "frieze/frieze_pattern.hpp"
#include "frieze/orders.hpp"

namespace frieze {

using Json = nlohmann::json;

// -- parsing ---------------------------------------------------------------

Rat parse_rat(const std::string& s);

/// Sum of terms over {rationals, "w", "wbar", "sqrt(d)"} with optional
/// rational coefficients, e.g. "-2/47+5/47*sqrt(-13)", "1-1*w", "wbar", "3".
QuadRat parse_quadrat(const std::string& s, FieldTag tag);

/// As parse_quadrat, then requires integrality.
QuadInt parse_quadint(const std::string& s, FieldTag tag);

/// Comma-separated entries.
QuiddityCycle parse_cycle(const std::string& s, FieldTag tag);

// -- JSON ------------------------------------------------------------------

Json json_of(const QuadInt& z);
Json json_of(const QuadRat& z);
QuadInt quadint_from_json(const Json& j, FieldTag tag);
QuadRat quadrat_from_json(const Json& j, FieldTag tag);

Json json_of_cycle(const QuiddityCycle& cycle);
QuiddityCycle cycle_from_json(const Json& j);

/// {ring, d, height, quiddity, basis, class}
Json json_of_frieze(const FriezePattern& f, const Classification& cls);
/// Rebuilds the frieze from its quiddity; verifies the recorded class.
std::pair<FriezePattern, Classification> frieze_from_json(const Json& j);

Json json_of_census(const CensusResult& census);
Json json_of_trace(const ReductionTrace& trace);
Json json_of_certificate(const UnitCertificate& cert);
Json json_of_unit_result(const UnitSearchResult& result);

// -- CSV -------------------------------------------------------------------

/// Header "d,height,quiddity,class"; quiddity entries space-joined.
std::string census_csv(const CensusResult& census);

}  // namespace frieze
