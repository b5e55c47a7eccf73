#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "triconf/strategies.hpp"

namespace triconf {

enum class OutputFormat { CSV, Markdown, JSON };

OutputFormat parse_format(const std::string& s);
const char* format_extension(OutputFormat f);

// One titled table of records; every record has the same columns.
struct Section {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string command;
    std::vector<Section> sections;
};

std::string render(const Report& r, OutputFormat f);

// Everything a subcommand may read. Paths are resolved against base_dir.
struct AnalysisConfig {
    nlohmann::json raw;
    std::string base_dir;

    std::string path(const std::string& key) const;
    bool has(const std::string& dotted) const;
    const nlohmann::json& at(const std::string& dotted) const;
    std::string str(const std::string& dotted, const std::string& fallback) const;
};

AnalysisConfig make_config(const std::string& json_text, const std::string& base_dir);

AuxiliaryModel model_from_config(const AnalysisConfig& c);
SituationTable table_from_config(const AnalysisConfig& c);

// Commands: validate, trisect-agents, trisect-issues, trisect-pairs, alliance-sets, mcas,
// decisions, strategies, strategy-trisect.
Report run_command(const std::string& command, const AnalysisConfig& config);

// Anchors ordered by descending alliance-set size, ties broken by the position in
// `priority` (unlisted agents last), then by table order.
std::vector<std::size_t> rank_candidates(const std::vector<AllianceSet>& sets, const SituationTable& t,
                                         const std::vector<AgentId>& priority);

struct Check {
    std::string name;
    bool ok;
    std::vector<std::string> diffs;  // cell-level, "where: expected X, got Y"
    std::vector<std::string> notes;
};

struct ReproduceResult {
    std::string target;
    std::vector<Check> checks;
    bool ok() const;
    std::size_t mismatches() const;
};

// Targets: example2, example3, example4, example6, example8, gansu. FixtureMissingError
// when a fixture file is absent.
ReproduceResult reproduce(const std::string& target, const std::string& fixture_dir);
std::vector<std::string> reproduce_targets();
Report reproduce_report(const std::vector<ReproduceResult>& results);

}  // namespace triconf
