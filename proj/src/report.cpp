#include "hodge/report.hpp"

namespace hodge {

const char* to_string(Provenance p) {
    switch (p) {
    case Provenance::closed_form:
        return "closed-form";
    case Provenance::graph_pairing:
        return "graph-pairing";
    case Provenance::localization:
        return "localization";
    case Provenance::eigen_sum:
        return "eigen-sum";
    }
    return "unknown";
}

Provenance provenance_from_string(std::string_view s) {
    if (s == "closed-form") {
        return Provenance::closed_form;
    }
    if (s == "graph-pairing") {
        return Provenance::graph_pairing;
    }
    if (s == "localization") {
        return Provenance::localization;
    }
    if (s == "eigen-sum") {
        return Provenance::eigen_sum;
    }
    throw ValidationError("unknown provenance '" + std::string(s) + "'");
}

Json to_json(const OutputRecord& record) {
    Json out;
    out["d"] = json_int(record.d);
    Json ms = Json::array();
    for (const Integer& mi : record.m) {
        ms.push_back(json_int(mi));
    }
    out["m"] = std::move(ms);
    out["connected"] = record.connected;
    if (record.e) {
        out["e"] = json_int(*record.e);
    }
    out["quantity"] = record.quantity;
    out["value"] = to_fraction_string(record.value);
    out["decimal"] = to_decimal_string(record.value);
    out["provenance"] = to_string(record.provenance);
    return out;
}

OutputRecord record_from_json(const Json& j) {
    try {
        OutputRecord record;
        record.d = int_from_json(j.at("d"));
        for (const Json& mi : j.at("m")) {
            record.m.push_back(int_from_json(mi));
        }
        record.connected = j.at("connected").get<bool>();
        if (j.contains("e")) {
            record.e = int_from_json(j.at("e"));
        }
        record.quantity = j.at("quantity").get<std::string>();
        record.value = rational_from_string(j.at("value").get<std::string>());
        record.provenance = provenance_from_string(j.at("provenance").get<std::string>());
        return record;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("output record: malformed JSON: ") + ex.what());
    }
}

std::string csv_header() {
    return "d,m,e,quantity,num,den,decimal,connected";
}

std::string to_csv_row(const OutputRecord& record) {
    std::string row = record.d.str() + ",";
    for (std::size_t i = 0; i < record.m.size(); ++i) {
        if (i > 0) {
            row += ";";
        }
        row += record.m[i].str();
    }
    row += ",";
    if (record.e) {
        row += record.e->str();
    }
    row += "," + record.quantity;
    row += "," + numerator(record.value).str();
    row += "," + denominator(record.value).str();
    row += "," + to_decimal_string(record.value);
    row += record.connected ? ",true" : ",false";
    return row;
}

} // namespace hodge
