#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "core.hpp"

namespace bdsched {

inline nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json j;
    j["alpha"] = inst.alpha ? nlohmann::json(*inst.alpha) : nlohmann::json();
    auto& jobs = j["jobs"] = nlohmann::json::array();
    for (const Job& job : inst.jobs)
        jobs.push_back({{"id", job.id}, {"r", job.release}, {"d", job.deadline}, {"w", job.weight}});
    return j;
}

inline std::string encode_instance(const Instance& inst) {
    return instance_to_json(inst).dump(2) + "\n";
}

inline Instance instance_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw std::invalid_argument("instance JSON: top level must be an object");
    if (!j.contains("jobs") || !j.at("jobs").is_array())
        throw std::invalid_argument("instance JSON: missing \"jobs\" array");
    Instance inst;
    if (j.contains("alpha") && !j.at("alpha").is_null()) {
        if (!j.at("alpha").is_number())
            throw std::invalid_argument("instance JSON: \"alpha\" must be a number or null");
        inst.alpha = j.at("alpha").get<double>();
    }
    for (const auto& entry : j.at("jobs")) {
        if (!entry.is_object())
            throw std::invalid_argument("instance JSON: every job must be an object");
        for (const char* key : {"id", "r", "d"})
            if (!entry.contains(key) || !entry.at(key).is_number_integer())
                throw std::invalid_argument(std::string("instance JSON: job field \"") + key +
                                            "\" must be an integer");
        if (!entry.contains("w") || !entry.at("w").is_number())
            throw std::invalid_argument("instance JSON: job field \"w\" must be a number");
        inst.jobs.push_back({entry.at("id").get<int>(), entry.at("r").get<int>(),
                             entry.at("d").get<int>(), entry.at("w").get<double>()});
    }
    return inst;
}

inline Instance decode_instance(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("instance JSON: ") + e.what());
    }
    return instance_from_json(j);
}

inline void save_instance(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << encode_instance(inst);
}

inline Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return decode_instance(buf.str());
}

}  // namespace bdsched
