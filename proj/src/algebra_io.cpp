#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symprod/errors.hpp"
#include "symprod/frobenius.hpp"

namespace symprod {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

std::string require_string(const json& value, const std::string& what) {
    if (!value.is_string()) throw ParseError(what + " must be a string");
    return value.get<std::string>();
}

int require_int(const json& value, const std::string& what) {
    if (!value.is_number_integer()) throw ParseError(what + " must be an integer");
    return value.get<int>();
}

Scalar require_rational(const json& value, const std::string& what) {
    if (value.is_number_integer()) return Scalar(value.get<long>());
    if (!value.is_string()) throw ParseError(what + " must be a rational string \"p/q\"");
    return parse_scalar(value.get<std::string>());
}

}  // namespace

AlgebraSpec parse_algebra_spec(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");

    AlgebraSpec spec;
    spec.name = require_string(require(doc, "name"), "name");
    spec.complex_dim = require_int(require(doc, "complex_dim"), "complex_dim");
    spec.unit = require_string(require(doc, "unit"), "unit");

    const json& basis = require(doc, "basis");
    if (!basis.is_array()) throw ParseError("basis must be an array");
    for (const auto& entry : basis) {
        if (!entry.is_object()) throw ParseError("basis entries must be objects");
        spec.basis.push_back({require_string(require(entry, "id"), "basis id"),
                              require_int(require(entry, "degree"), "basis degree")});
    }

    const json& counit = require(doc, "counit");
    if (!counit.is_object()) throw ParseError("counit must be an object mapping ids to rationals");
    for (const auto& [id, value] : counit.items()) {
        spec.counit.emplace_back(id, require_rational(value, "counit value for " + id));
    }

    const json& products = require(doc, "products");
    if (!products.is_array()) throw ParseError("products must be an array");
    for (const auto& entry : products) {
        if (!entry.is_array() || entry.size() != 4) {
            throw ParseError("each product must be [left, right, result, \"p/q\"]");
        }
        spec.products.push_back({require_string(entry[0], "product id"), require_string(entry[1], "product id"),
                                 require_string(entry[2], "product id"),
                                 require_rational(entry[3], "product coefficient")});
    }
    return spec;
}

AlgebraPtr load_algebra(std::string_view json_text, bool sign_twist) {
    return FrobeniusAlgebra::build(parse_algebra_spec(json_text), sign_twist);
}

AlgebraPtr load_algebra_file(const std::filesystem::path& path, bool sign_twist) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open algebra file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_algebra(buffer.str(), sign_twist);
}

}  // namespace symprod
