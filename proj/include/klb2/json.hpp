#pragma once

#include "klb2/families.hpp"
#include "klb2/hecke.hpp"
#include "klb2/verify.hpp"

#include <json.hpp>

namespace klb2 {

// Insertion-ordered so exponents and terms keep their canonical order.
using Json = nlohmann::ordered_json;

// {"<exp>": coeff}, exponents ascending; coefficients outside int64 become
// decimal strings
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
Json to_json(const Element& w);
// terms sorted by (length, word)
Json to_json(const HeckeElem& X);
HeckeElem hecke_from_json(const Json& j);
Json to_json(const FamilyTag& tag);
Json to_json(const VerifyRecord& r);
Json to_json(const VerifyReport& r);

}  // namespace klb2
