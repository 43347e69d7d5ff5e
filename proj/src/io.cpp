#include "psskit/io.hpp"

#include <json.hpp>

namespace psskit {

namespace {

using nlohmann::ordered_json;

Rat parse_entry(const ordered_json& e, std::size_t i, std::size_t j) {
    const std::string where = "vector " + std::to_string(i) + ", entry " + std::to_string(j);
    if (e.is_string()) {
        try {
            return parse_rat(e.get<std::string>());
        } catch (const Error& err) {
            throw VecSetError(where + ": " + err.what(), i);
        }
    }
    if (e.is_number_integer()) return e.is_number_unsigned() ? Rat(e.get<unsigned long>()) : Rat(e.get<long>());
    throw VecSetError(where + ": expected a rational string or an integer", i);
}

}  // namespace

VecSet parse_vecset(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error("input must be a JSON object with \"dim\" and \"vectors\"");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0)
        throw Error("\"dim\" must be a positive integer");
    if (!doc.contains("vectors") || !doc["vectors"].is_array()) throw Error("\"vectors\" must be an array");

    const auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());
    std::vector<QVec> vectors;
    const auto& arr = doc["vectors"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& v = arr[i];
        if (!v.is_array()) throw VecSetError("vector " + std::to_string(i) + ": expected an array", i);
        if (v.size() != dim)
            throw VecSetError("vector " + std::to_string(i) + ": has " + std::to_string(v.size()) +
                                  " entries, expected " + std::to_string(dim),
                              i);
        QVec q(dim);
        for (std::size_t j = 0; j < dim; ++j) q[j] = parse_entry(v[j], i, j);
        vectors.push_back(std::move(q));
    }
    return VecSet(dim, std::move(vectors));
}

std::string format_vecset(const VecSet& x) {
    ordered_json doc;
    doc["dim"] = x.dim();
    doc["vectors"] = ordered_json::array();
    for (const auto& v : x) {
        ordered_json row = ordered_json::array();
        for (const auto& r : v.entries()) row.push_back(to_string(r));
        doc["vectors"].push_back(std::move(row));
    }
    return doc.dump() + "\n";
}

}  // namespace psskit
