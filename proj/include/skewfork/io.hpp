#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "skewfork/construct.hpp"
#include "skewfork/twoparam.hpp"

namespace skewfork {

// Descriptor parsing; throws ConfigInvalid with a dotted field path on any
// structural problem.
CoeffPtr coefficient_from_json(const nlohmann::json& j, const Driver& d,
                               const std::string& path);
Driver driver_from_json(const nlohmann::json& j);
Family family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExponentReport& r);
nlohmann::json to_json(const MinimalSetCensus& c);
nlohmann::json to_json(const DiagramReport& r);
nlohmann::json to_json(const CriteriaVerdict& v);
nlohmann::json to_json(const LawReport& r);
nlohmann::json to_json(const BandRealization& r);
nlohmann::json to_json(const ProjectionResult& r);
nlohmann::json to_json(const AttractorSlice& s);

// Fixed columns: parameter, fiber_offset, alpha, beta, kappa, exponent_lower,
// exponent_zero, exponent_upper; missing values stay empty.
void write_diagram_csv(std::ostream& os, const DiagramReport& r);

}  // namespace skewfork
