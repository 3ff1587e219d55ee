#include "focklab/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace focklab {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string format17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

json parse_strict(const std::string& text, std::initializer_list<const char*> keys) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("expected a JSON object");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) throw input_error("unknown key \"" + key + "\"");
    }
    return j;
}

double num_field(const json& j, const char* key) {
    if (!j.contains(key)) throw input_error(std::string("missing key \"") + key + "\"");
    if (!j[key].is_number()) throw input_error(std::string("key \"") + key + "\" must be a number");
    return j[key].get<double>();
}

int int_field(const json& j, const char* key, bool required, int fallback) {
    if (!j.contains(key)) {
        if (required) throw input_error(std::string("missing key \"") + key + "\"");
        return fallback;
    }
    if (!j[key].is_number_integer()) throw input_error(std::string("key \"") + key + "\" must be an integer");
    return j[key].get<int>();
}

std::vector<double> vec_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw input_error(std::string("key \"") + key + "\" must be an array");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw input_error(std::string("key \"") + key + "\" must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

RepSpec parse_model_spec(const std::string& text) {
    json j = parse_strict(text, {"pairs", "trivial_dim", "max_degree"});
    RepSpec spec;
    spec.trivial_dim = int_field(j, "trivial_dim", false, 0);
    spec.max_degree = int_field(j, "max_degree", true, 0);
    if (j.contains("pairs")) {
        if (!j["pairs"].is_array()) throw input_error("key \"pairs\" must be an array");
        for (const auto& p : j["pairs"]) {
            if (!p.is_object()) throw input_error("pair entries must be objects");
            for (const auto& [key, _] : p.items())
                if (key != "lambda" && key != "multiplicity")
                    throw input_error("unknown key \"" + key + "\"");
            RepSpec::Pair pair;
            pair.lambda = num_field(p, "lambda");
            pair.multiplicity = p.contains("multiplicity")
                                    ? int_field(p, "multiplicity", true, 1) : 1;
            spec.pairs.push_back(pair);
        }
    }
    return spec;
}

RadialSymbol parse_phi_spec(const std::string& text) {
    json probe;
    try {
        probe = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("bad JSON: ") + e.what());
    }
    if (!probe.is_object() || !probe.contains("kind") || !probe["kind"].is_string())
        throw input_error("phi spec needs a \"kind\" string");
    std::string kind = probe["kind"].get<std::string>();
    if (kind == "finite") {
        json j = parse_strict(text, {"kind", "values"});
        return rs_finite(vec_field(j, "values"));
    }
    if (kind == "geometric") {
        json j = parse_strict(text, {"kind", "t"});
        return rs_geometric(num_field(j, "t"));
    }
    if (kind == "cutoff_projection") {
        json j = parse_strict(text, {"kind", "d"});
        return rs_cutoff(int_field(j, "d", true, 0));
    }
    if (kind == "general") {
        json j = parse_strict(text, {"kind", "c1", "c2", "psi"});
        return rs_general(num_field(j, "c1"), num_field(j, "c2"), vec_field(j, "psi"));
    }
    throw input_error("unknown phi kind \"" + kind + "\"");
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << cells[i];
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

}  // namespace focklab
