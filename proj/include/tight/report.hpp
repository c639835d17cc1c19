#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tight/classify.hpp"

namespace tight {

struct ReportRow {
    std::vector<std::int64_t> weight;
    bool tight = false;
    std::optional<bool> holomorphic;
    Witness witness;
    /// Set when the row was cross-checked.
    std::optional<bool> agree;
    std::optional<Witness> constructive;

    bool operator==(const ReportRow&) const = default;
};

struct ReportDocument {
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<ReportRow> rows;
    bool agreement = true;
    /// Command-specific payload (branching factors, pairing values, lemma lines).
    nlohmann::json details = nlohmann::json::object();
    std::optional<double> timing_seconds;

    bool operator==(const ReportDocument&) const = default;
};

ReportRow make_row(const TightnessVerdict& verdict);
ReportRow make_row(const CrossCheck& check);

nlohmann::json witness_to_json(const Witness& witness);
Witness witness_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

/// Keys sorted, two-space indent, trailing newline.
std::string serialize(const ReportDocument& doc);
ReportDocument parse_report(const std::string& text);

std::string render_markdown(const ReportDocument& doc);

}  // namespace tight
