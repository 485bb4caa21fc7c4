#include "frcodes/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>

#include "frcodes/errors.hpp"

namespace fr {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json code_fields(const FrCode& code) {
    ordered_json j;
    j["n"] = code.params.n;
    j["theta"] = code.params.theta;
    j["d"] = code.params.d;
    j["rho"] = code.params.rho;
    j["nodes"] = code.nodes;
    j["provenance"] = code.provenance;
    return j;
}

}  // namespace

std::string code_to_json(const FrCode& code) {
    require_valid(code);
    return code_fields(code).dump();
}

FrCode code_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgumentError(std::string("malformed code JSON: ") + e.what());
    }
    FrCode code;
    try {
        code.params.n = j.at("n").get<int>();
        code.params.theta = j.at("theta").get<int>();
        code.params.d = j.at("d").get<int>();
        code.params.rho = j.at("rho").get<int>();
        code.nodes = j.at("nodes").get<std::vector<std::vector<int>>>();
        code.provenance = j.value("provenance", std::string{});
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgumentError(std::string("code JSON missing fields: ") + e.what());
    }
    for (auto& node : code.nodes) std::sort(node.begin(), node.end());
    require_valid(code);
    return code;
}

std::string repair_to_json(const RepairPlan& plan, const RepairReport& report) {
    ordered_json j;
    j["failed"] = plan.failed_node;
    auto& assignments = j["assignments"] = ordered_json::array();
    for (const auto& [packet, helper] : plan.assignments)
        assignments.push_back({packet, helper});
    j["helpers"] = report.helpers_contacted;
    j["packets"] = report.packets_downloaded;
    j["bandwidth"] = report.bandwidth;
    return j.dump();
}

std::string catalog_entry_to_json(const CatalogEntry& entry) {
    ordered_json j;
    if (entry.valid && entry.code) {
        j = code_fields(*entry.code);
    } else {
        j["n"] = entry.params.n;
        j["theta"] = entry.params.theta;
        j["d"] = entry.params.d;
        j["rho"] = entry.params.rho;
        j["provenance"] = entry.provenance;
    }
    j["valid"] = entry.valid;
    if (!entry.valid) j["error"] = entry.error;
    if (!entry.canonical_digest.empty()) j["canonical_digest"] = entry.canonical_digest;
    return j.dump();
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
    for (const CatalogEntry& entry : entries) out << catalog_entry_to_json(entry) << '\n';
}

std::string count_table_to_csv(const std::vector<CountRowWithClasses>& rows) {
    std::string out = "n,admissible,constructed,classes\n";
    for (const auto& row : rows) {
        out += std::to_string(row.counts.n) + "," + std::to_string(row.counts.admissible) +
               "," + std::to_string(row.counts.constructed) + ",";
        if (row.classes >= 0) out += std::to_string(row.classes);
        out += "\n";
    }
    return out;
}

}  // namespace fr
