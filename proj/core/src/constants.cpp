#include "pierce/constants.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pierce {

const ToolkitConstants& default_constants() {
    static const ToolkitConstants defaults;
    return defaults;
}

namespace {

Rational positive_rational(const nlohmann::json& value, const char* key) {
    if (!value.is_string()) {
        raise(Errc::parse_error, std::string("constant '") + key + "' must be a rational string");
    }
    const Rational parsed = parse_rational(value.get<std::string>());
    if (parsed <= 0) {
        raise(Errc::parse_error, std::string("constant '") + key + "' must be positive");
    }
    return parsed;
}

int positive_int(const nlohmann::json& value, const char* key) {
    if (!value.is_number_integer() || value.get<long long>() <= 0) {
        raise(Errc::parse_error, std::string("constant '") + key + "' must be a positive integer");
    }
    return static_cast<int>(value.get<long long>());
}

}  // namespace

ToolkitConstants load_constants(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::parse_error, std::string("constants JSON: ") + e.what());
    }
    if (!doc.is_object()) raise(Errc::parse_error, "constants file must hold a JSON object");

    ToolkitConstants c;
    for (const auto& [key, value] : doc.items()) {
        if (key == "same_type_coefficient") {
            c.same_type_coefficient = positive_rational(value, key.c_str());
        } else if (key == "selection_r_coefficient") {
            c.selection_r_coefficient = positive_rational(value, key.c_str());
        } else if (key == "selection_base_threshold") {
            c.selection_base_threshold = positive_int(value, key.c_str());
        } else if (key == "packing_delta_fraction") {
            c.packing_delta_fraction = positive_rational(value, key.c_str());
        } else if (key == "dyadic_divisor") {
            c.dyadic_divisor = positive_int(value, key.c_str());
        } else if (key == "mnet_large_edge_fraction") {
            c.mnet_large_edge_fraction = positive_rational(value, key.c_str());
        } else if (key == "mnet_keep_fraction") {
            c.mnet_keep_fraction = positive_rational(value, key.c_str());
        } else if (key == "mnet_singleton_threshold") {
            c.mnet_singleton_threshold = positive_rational(value, key.c_str());
        } else if (key == "pinning_eta_shift") {
            c.pinning_eta_shift = positive_int(value, key.c_str());
        } else {
            raise(Errc::parse_error, "unknown constant '" + key + "'");
        }
    }
    return c;
}

ToolkitConstants load_constants_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::parse_error, "cannot open constants file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_constants(buffer.str());
}

}  // namespace pierce
