#include "hodge/json_util.hpp"

namespace hodge {

namespace {

const Integer json_exact_limit = Integer(1) << 53;

} // namespace

Json json_int(const Integer& v) {
    if (v >= -json_exact_limit && v <= json_exact_limit) {
        return v.convert_to<long long>();
    }
    return v.str();
}

Integer int_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Integer(j.get<long long>());
    }
    if (j.is_number_unsigned()) {
        return Integer(j.get<unsigned long long>());
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw ValidationError("not an integer: '" + j.get<std::string>() + "'");
        }
    }
    throw ValidationError("expected an integer, got " + std::string(j.type_name()));
}

} // namespace hodge
