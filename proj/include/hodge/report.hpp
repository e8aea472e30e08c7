#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/json_util.hpp"
#include "hodge/rational.hpp"

namespace hodge {

// How a value was obtained; carried on every emitted record.
enum class Provenance { closed_form, graph_pairing, localization, eigen_sum };

const char* to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

// One computed value together with the datum it belongs to. The exact
// fraction is authoritative; the decimal rendering in JSON and CSV output is
// derived at emission time and ignored on parse.
struct OutputRecord {
    Integer d;
    std::vector<Integer> m;
    bool connected = true;
    std::optional<Integer> e; // absent when the quantity has no character
    std::string quantity;     // "lambda1", "lambda1e", "sum_lambda1e", "psi_integral", ...
    Rational value;
    Provenance provenance = Provenance::closed_form;

    bool operator==(const OutputRecord&) const = default;
};

Json to_json(const OutputRecord& record);
OutputRecord record_from_json(const Json& j);

// columns: d, m (semicolon-joined), e (empty when absent), quantity,
// numerator, denominator, decimal (15 significant digits), connected
std::string csv_header();
std::string to_csv_row(const OutputRecord& record);

} // namespace hodge
