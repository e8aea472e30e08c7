#pragma once

#include <json.hpp>

#include "hodge/rational.hpp"

namespace hodge {

// ordered_json keeps the documented field order in emitted records
using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while exactly representable in a
// double-backed reader (|v| <= 2^53) and as decimal strings beyond that, so
// round-trips are exact for every value. Parsing accepts both forms.
Json json_int(const Integer& v);
Integer int_from_json(const Json& j);

} // namespace hodge
