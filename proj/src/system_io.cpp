#include "bezsub/system_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bezsub/parse.hpp"

namespace bezsub {

namespace {

Poly poly_from_json(const nlohmann::json& j, std::size_t index, const std::string& context) {
    const std::string where = context + ": polys[" + std::to_string(index) + "]";
    if (j.is_string()) {
        try {
            return parse_poly(j.get<std::string>());
        } catch (const ParseError& e) {
            throw SystemFileError(where + ": " + e.what());
        }
    }
    if (j.is_array()) {
        std::vector<Rat> coeffs;
        coeffs.reserve(j.size());
        for (const auto& c : j) {
            if (!c.is_string())
                throw SystemFileError(where + ": coefficients must be rational literal strings");
            try {
                coeffs.push_back(Rat::from_string(c.get<std::string>()));
            } catch (const std::exception& e) {
                throw SystemFileError(where + ": " + e.what());
            }
        }
        return Poly(std::move(coeffs));
    }
    throw SystemFileError(where + ": expected a string or an array of rational literals");
}

}  // namespace

PolySystem parse_system(const std::string& json_text, const std::string& context) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw SystemFileError(context + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("polys") || !doc["polys"].is_array())
        throw SystemFileError(context + ": expected an object with a \"polys\" array");

    const auto& arr = doc["polys"];
    if (arr.size() < 2) throw SystemFileError(context + ": at least 2 polynomials required");

    std::vector<Poly> polys;
    polys.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) polys.push_back(poly_from_json(arr[i], i, context));

    try {
        return PolySystem(std::move(polys));
    } catch (const std::invalid_argument& e) {
        throw SystemFileError(context + ": " + e.what());
    }
}

PolySystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SystemFileError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str(), path);
}

}  // namespace bezsub
