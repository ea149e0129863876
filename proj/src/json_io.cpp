#include "dentedhex/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace dhx {

using nlohmann::json;

namespace {

int get_nonneg(const json& j, const char* key) {
    if (!j.contains(key)) return 0;
    if (!j[key].is_number_integer())
        throw std::invalid_argument(std::string("spec field '") + key + "' must be an integer");
    return j[key].get<int>();
}

std::vector<int> get_vec(const json& j, const char* key) {
    std::vector<int> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array())
        throw std::invalid_argument(std::string("spec field '") + key +
                                    "' must be an array of integers");
    for (const auto& x : j[key]) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string("spec field '") + key +
                                        "' must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

DentedHexParams params_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("spec must be a JSON object");
    DentedHexParams p{get_nonneg(j, "a"), get_nonneg(j, "b"), get_nonneg(j, "c"),
                      get_nonneg(j, "t"), get_vec(j, "u"), get_vec(j, "v")};
    if (std::string err = p.validate(); !err.empty()) throw std::invalid_argument(err);
    return p;
}

std::string params_to_json(const DentedHexParams& p) {
    json j{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"t", p.t}, {"u", p.u}, {"v", p.v}};
    return j.dump();
}

std::string count_report_to_json(const CountReport& rep, bool tileable) {
    json j;
    j["format"] = 1;
    j["spec"] = json::parse(params_to_json(rep.params));
    j["tileable"] = tileable;
    json counts = json::object();
    for (const auto& [name, value] : rep.counts) counts[name] = value.str();
    j["counts"] = counts;
    if (!rep.counts.empty()) {
        j["count"] = rep.counts.front().second.str();
        j["method"] = rep.counts.front().first;
    }
    j["agree"] = rep.agree;
    json timings = json::object();
    for (const auto& [name, ms] : rep.timings_ms) timings[name] = ms;
    j["timings_ms"] = timings;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j.dump(2) + "\n";
}

std::string tileable_report_to_json(const DentedHexParams& p, bool tileable, int witness_n) {
    json j;
    j["format"] = 1;
    j["spec"] = json::parse(params_to_json(p));
    j["tileable"] = tileable;
    j["witness_N"] = tileable ? json(nullptr) : json(witness_n);
    return j.dump(2) + "\n";
}

}  // namespace dhx
