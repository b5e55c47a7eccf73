#include "triconf/workbench.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "triconf/errors.hpp"

namespace triconf {

using nlohmann::json;

OutputFormat parse_format(const std::string& s)
{
    if (s == "csv")
        return OutputFormat::CSV;
    if (s == "md" || s == "markdown")
        return OutputFormat::Markdown;
    if (s == "json")
        return OutputFormat::JSON;
    throw ParseError("unknown format '" + s + "' (csv, md, json)");
}

const char* format_extension(OutputFormat f)
{
    switch (f) {
    case OutputFormat::CSV: return "csv";
    case OutputFormat::Markdown: return "md";
    case OutputFormat::JSON: return "json";
    }
    return "txt";
}

namespace {

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string render(const Report& r, OutputFormat f)
{
    std::ostringstream out;
    if (f == OutputFormat::JSON) {
        nlohmann::ordered_json doc;
        doc["command"] = r.command;
        nlohmann::ordered_json secs = nlohmann::ordered_json::object();
        for (const auto& s : r.sections) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& row : s.rows) {
                nlohmann::ordered_json rec = nlohmann::ordered_json::object();
                for (std::size_t k = 0; k < s.columns.size(); ++k)
                    rec[s.columns[k]] = k < row.size() ? nlohmann::ordered_json(row[k]) : nlohmann::ordered_json();
                rows.push_back(rec);
            }
            secs[s.name] = rows;
        }
        doc["sections"] = secs;
        out << doc.dump(2) << "\n";
        return out.str();
    }
    bool first = true;
    for (const auto& s : r.sections) {
        if (f == OutputFormat::CSV) {
            if (r.sections.size() > 1) {
                if (!first)
                    out << "\n";
                out << "# " << s.name << "\n";
            }
            for (std::size_t k = 0; k < s.columns.size(); ++k)
                out << (k ? "," : "") << csv_escape(s.columns[k]);
            out << "\n";
            for (const auto& row : s.rows) {
                for (std::size_t k = 0; k < row.size(); ++k)
                    out << (k ? "," : "") << csv_escape(row[k]);
                out << "\n";
            }
        } else {
            if (!first)
                out << "\n";
            out << "## " << s.name << "\n\n|";
            for (const auto& c : s.columns)
                out << " " << md_escape(c) << " |";
            out << "\n|";
            for (std::size_t k = 0; k < s.columns.size(); ++k)
                out << "---|";
            out << "\n";
            for (const auto& row : s.rows) {
                out << "|";
                for (const auto& c : row)
                    out << " " << md_escape(c) << " |";
                out << "\n";
            }
        }
        first = false;
    }
    return out.str();
}

std::string AnalysisConfig::path(const std::string& key) const
{
    std::filesystem::path p(at(key).get<std::string>());
    if (p.is_relative() && !base_dir.empty())
        p = std::filesystem::path(base_dir) / p;
    return p.string();
}

bool AnalysisConfig::has(const std::string& dotted) const
{
    const json* cur = &raw;
    std::stringstream ss(dotted);
    std::string key;
    while (std::getline(ss, key, '.')) {
        if (!cur->is_object() || !cur->contains(key))
            return false;
        cur = &(*cur)[key];
    }
    return !cur->is_null();
}

const json& AnalysisConfig::at(const std::string& dotted) const
{
    const json* cur = &raw;
    std::stringstream ss(dotted);
    std::string key;
    while (std::getline(ss, key, '.')) {
        if (!cur->is_object() || !cur->contains(key))
            throw ParseError("configuration is missing '" + dotted + "'");
        cur = &(*cur)[key];
    }
    return *cur;
}

std::string AnalysisConfig::str(const std::string& dotted, const std::string& fallback) const
{
    if (!has(dotted))
        return fallback;
    const auto& v = at(dotted);
    if (!v.is_string())
        throw ParseError("configuration '" + dotted + "' must be a string");
    return v.get<std::string>();
}

AnalysisConfig make_config(const std::string& json_text, const std::string& base_dir)
{
    json j;
    try {
        j = json_text.empty() ? json::object() : json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("configuration: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("configuration must be a JSON object");
    return AnalysisConfig{j, base_dir};
}

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

AuxiliaryModel model_from_config(const AnalysisConfig& c)
{
    std::string m = c.str("model", "pawlak");
    if (m == "pawlak")
        return AuxiliaryModel::pawlak();
    if (m == "yao")
        return AuxiliaryModel::yao();
    if (m.rfind("custom:", 0) == 0) {
        std::filesystem::path p(m.substr(7));
        if (p.is_relative() && !c.base_dir.empty())
            p = std::filesystem::path(c.base_dir) / p;
        return AuxiliaryModel::from_json(read_file(p.string()));
    }
    throw ParseError("unknown model '" + m + "' (pawlak, yao, custom:<path>)");
}

SituationTable table_from_config(const AnalysisConfig& c)
{
    if (!c.has("table"))
        throw ParseError("no situation table given (--table or 'table' in the configuration)");
    return load_table_file(c.path("table"));
}

namespace {

Rational rational_value(const json& v, const std::string& where)
{
    if (v.is_number_integer())
        return Rational(v.get<std::int64_t>());
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    throw ParseError("'" + where + "' must be a p/q string or an integer, decimals are not accepted");
}

Threshold threshold_value(const AnalysisConfig& c, const std::string& key, Threshold fallback)
{
    if (!c.has(key))
        return fallback;
    const auto& v = c.at(key);
    if (v.is_string())
        return parse_threshold(v.get<std::string>());
    return Threshold::constant(rational_value(v, key));
}

ThresholdPair signed_pair(const AnalysisConfig& c, const std::string& block)
{
    if (!c.has(block + ".low") || !c.has(block + ".high"))
        throw ParseError("configuration needs '" + block + ".low' and '" + block + ".high'");
    return ThresholdPair(rational_value(c.at(block + ".low"), block + ".low"),
                         rational_value(c.at(block + ".high"), block + ".high"), ThresholdKind::SignedRating);
}

PairThresholds pair_thresholds(const AnalysisConfig& c)
{
    if (!c.has("thresholds.pair"))
        throw ParseError("configuration needs 'thresholds.pair' (l_a, h_a, l_c, h_c)");
    PairThresholds t;
    t.l_a = threshold_value(c, "thresholds.pair.l_a", t.l_a);
    t.h_a = threshold_value(c, "thresholds.pair.h_a", t.h_a);
    t.l_c = threshold_value(c, "thresholds.pair.l_c", t.l_c);
    t.h_c = threshold_value(c, "thresholds.pair.h_c", t.h_c);
    return t;
}

IssueThresholds issue_thresholds(const AnalysisConfig& c)
{
    if (!c.has("thresholds.issue"))
        throw ParseError("configuration needs 'thresholds.issue' (low/high or l_p, h_p, l_n, h_n)");
    IssueThresholds t;
    if (c.has("thresholds.issue.low") || c.has("thresholds.issue.high")) {
        auto lo = threshold_value(c, "thresholds.issue.low", t.l_p);
        auto hi = threshold_value(c, "thresholds.issue.high", t.h_p);
        t = IssueThresholds::both(lo, hi);
    }
    t.l_p = threshold_value(c, "thresholds.issue.l_p", t.l_p);
    t.h_p = threshold_value(c, "thresholds.issue.h_p", t.h_p);
    t.l_n = threshold_value(c, "thresholds.issue.l_n", t.l_n);
    t.h_n = threshold_value(c, "thresholds.issue.h_n", t.h_n);
    return t;
}

std::pair<ThresholdPair, ThresholdPair> strategy_thresholds(const AnalysisConfig& c)
{
    for (const char* k : {"l_s", "h_s", "l_o", "h_o"})
        if (!c.has(std::string("thresholds.strategy.") + k))
            throw ParseError(std::string("configuration needs 'thresholds.strategy.") + k + "'");
    auto v = [&](const char* k) {
        std::string key = std::string("thresholds.strategy.") + k;
        return rational_value(c.at(key), key);
    };
    return {ThresholdPair(v("l_s"), v("h_s"), ThresholdKind::UnitDegree),
            ThresholdPair(v("l_o"), v("h_o"), ThresholdKind::UnitDegree)};
}

IndexSet issue_scope(const AnalysisConfig& c, const SituationTable& t)
{
    if (!c.has("issues") || (c.at("issues").is_string() && c.at("issues").get<std::string>() == "all"))
        return t.all_issues();
    return t.issue_indices(c.at("issues").get<std::vector<std::string>>());
}

IndexSet agent_scope(const AnalysisConfig& c, const SituationTable& t)
{
    if (!c.has("agents") || (c.at("agents").is_string() && c.at("agents").get<std::string>() == "all"))
        return t.all_agents();
    return t.agent_indices(c.at("agents").get<std::vector<std::string>>());
}

PairScope pair_scope(const AnalysisConfig& c)
{
    auto s = c.str("scope", "issue-set");
    if (s == "issue-set")
        return PairScope::IssueSet;
    if (s == "non-neutral")
        return PairScope::NonNeutral;
    throw ParseError("unknown scope '" + s + "' (issue-set, non-neutral)");
}

Restrict restrict_of(const AnalysisConfig& c)
{
    auto s = c.str("restrict", "all");
    if (s == "all")
        return Restrict::All;
    if (s == "non-neutral")
        return Restrict::NonNeutral;
    throw ParseError("unknown restrict '" + s + "' (all, non-neutral)");
}

Combination combo_of(const AnalysisConfig& c)
{
    if (!c.has("combo"))
        return Combination::One;
    const auto& v = c.at("combo");
    if (!v.is_number_integer())
        throw ParseError("'combo' must be 1, 2, 3 or 4");
    return combination_from_int(v.get<int>());
}

std::size_t cap_of(const AnalysisConfig& c, const std::string& key, std::size_t fallback)
{
    if (!c.has(key))
        return fallback;
    const auto& v = c.at(key);
    if (!v.is_number_unsigned())
        throw ParseError("'" + key + "' must be a positive integer");
    return v.get<std::size_t>();
}

std::vector<std::string> ids(const SituationTable& t, const IndexSet& s, bool agents)
{
    return agents ? t.agent_ids(s) : t.issue_ids(s);
}

std::string pair_text(const SituationTable& t, const AgentPair& p)
{
    return "(" + t.agents()[p.first] + "," + t.agents()[p.second] + ")";
}

std::string joined(const std::vector<std::string>& v)
{
    std::string out;
    for (const auto& s : v)
        out += (out.empty() ? "" : " ") + s;
    return out;
}

Section trisection_section(const SituationTable& t, const IndexTrisection& tri, bool agents,
                           const std::array<const char*, 3>& names = {"positive", "negative", "neutral"})
{
    Section s{"trisection", {"part", "members"}, {}};
    s.rows.push_back({names[0], joined(ids(t, tri.positive, agents))});
    s.rows.push_back({names[1], joined(ids(t, tri.negative, agents))});
    s.rows.push_back({names[2], joined(ids(t, tri.neutral, agents))});
    return s;
}

Section pair_trisection_section(const SituationTable& t, const PairTrisection& tri)
{
    Section s{"trisection", {"part", "pairs"}, {}};
    auto list = [&](const std::vector<AgentPair>& ps) {
        std::vector<std::string> v;
        for (const auto& p : ps)
            v.push_back(pair_text(t, p));
        return joined(v);
    };
    s.rows.push_back({"alliance", list(tri.positive)});
    s.rows.push_back({"conflict", list(tri.negative)});
    s.rows.push_back({"neutrality", list(tri.neutral)});
    return s;
}

Strategy strategy_from(const json& v)
{
    if (v.is_string())
        return parse_description(v.get<std::string>());
    return description_from_json(v.dump());
}

Report cmd_validate(const AnalysisConfig& c)
{
    auto t = table_from_config(c);
    auto m = model_from_config(c);
    Report r{"validate", {}};
    r.sections.push_back({"table", {"agents", "issues", "model", "status"},
                          {{std::to_string(t.agent_count()), std::to_string(t.issue_count()), m.name(), "ok"}}});
    return r;
}

Report cmd_trisect_agents(const AnalysisConfig& c)
{
    auto t = table_from_config(c);
    auto X = agent_scope(c, t);
    Report r{"trisect-agents", {}};
    if (c.has("issue")) {
        auto i = t.issue_index(c.str("issue", ""));
        r.sections.push_back(trisection_section(t, trisect_agents(t, X, i), true));
        return r;
    }
    auto J = issue_scope(c, t);
    auto th = signed_pair(c, "thresholds.rating");
    Section ratings{"ratings", {"agent", "rating"}, {}};
    for (auto x : X)
        ratings.rows.push_back({t.agents()[x], to_string(aggregate_rating_over_issues(t, x, J))});
    r.sections.push_back(ratings);
    r.sections.push_back(trisection_section(t, trisect_agents(t, X, J, th), true));
    return r;
}

Report cmd_trisect_issues(const AnalysisConfig& c)
{
    auto t = table_from_config(c);
    auto J = issue_scope(c, t);
    Report r{"trisect-issues", {}};
    if (c.has("agent")) {
        auto x = t.agent_index(c.str("agent", ""));
        r.sections.push_back(trisection_section(t, trisect_issues_by_rating(t, J, x), false));
        return r;
    }
    auto X = agent_scope(c, t);
    if (c.has("thresholds.issue")) {
        auto m = model_from_config(c);
        auto combo = combo_of(c);
        Section views{"views", {"issue", "positive_view", "negative_view"}, {}};
        if (X.empty())
            throw EmptyAgentSetError("issue trisection needs a nonempty agent set");
        for (auto i : J) {
            auto v = issue_views(m, t, X, i, combo);
            views.rows.push_back({t.issues()[i], to_string(v.positive), to_string(v.negative)});
        }
        r.sections.push_back(views);
        r.sections.push_back(
            trisection_section(t, trisect_issues_two_functions(m, t, X, J, combo, issue_thresholds(c)), false));
        return r;
    }
    auto th = signed_pair(c, "thresholds.rating");
    Section ratings{"ratings", {"issue", "rating"}, {}};
    for (auto i : J)
        ratings.rows.push_back({t.issues()[i], to_string(aggregate_rating_over_agents(t, X, i))});
    r.sections.push_back(ratings);
    r.sections.push_back(trisection_section(t, trisect_issues_by_rating(t, J, X, th), false));
    return r;
}

Report cmd_trisect_pairs(const AnalysisConfig& c)
{
    auto t = table_from_config(c);
    auto m = model_from_config(c);
    Report r{"trisect-pairs", {}};
    if (c.has("thresholds.pair")) {
        auto J = issue_scope(c, t);
        auto scope = pair_scope(c);
        Section deg{"degrees", {"first", "second", "alliance", "conflict"}, {}};
        for (std::size_t x = 0; x < t.agent_count(); ++x)
            for (std::size_t y = 0; y < t.agent_count(); ++y) {
                auto d = pair_degrees(m, t, x, y, J, scope);
                deg.rows.push_back({t.agents()[x], t.agents()[y], to_string(d.alliance), to_string(d.conflict)});
            }
        r.sections.push_back(deg);
        r.sections.push_back(pair_trisection_section(t, trisect_pairs_two_functions(m, t, J, pair_thresholds(c), scope)));
        return r;
    }
    Section vals{"values", {"first", "second", "phi"}, {}};
    if (c.has("issue")) {
        auto i = t.issue_index(c.str("issue", ""));
        for (std::size_t x = 0; x < t.agent_count(); ++x)
            for (std::size_t y = 0; y < t.agent_count(); ++y)
                vals.rows.push_back({t.agents()[x], t.agents()[y], rating_text(phi_single(m, t, x, y, i))});
        r.sections.push_back(vals);
        r.sections.push_back(pair_trisection_section(t, trisect_pairs_auxiliary(m, t, i)));
        return r;
    }
    auto J = issue_scope(c, t);
    auto th = signed_pair(c, c.has("thresholds.auxiliary") ? "thresholds.auxiliary" : "thresholds.rating");
    for (std::size_t x = 0; x < t.agent_count(); ++x)
        for (std::size_t y = 0; y < t.agent_count(); ++y)
            vals.rows.push_back({t.agents()[x], t.agents()[y], to_string(phi_aggregated(m, t, x, y, J))});
    r.sections.push_back(vals);
    r.sections.push_back(pair_trisection_section(t, trisect_pairs_auxiliary(m, t, J, th)));
    return r;
}

std::vector<AllianceSet> all_alliance_sets(const AuxiliaryModel& m, const SituationTable& t, const IndexSet& J,
                                           const PairThresholds& th, PairScope scope)
{
    std::vector<AllianceSet> out;
    for (std::size_t x = 0; x < t.agent_count(); ++x)
        out.push_back(alliance_set(m, t, x, J, th, scope));
    return out;
}

Report cmd_alliance_sets(const AnalysisConfig& c)
{
    auto t = table_from_config(c);
    auto m = model_from_config(c);
    auto J = issue_scope(c, t);
    auto scope = pair_scope(c);
    auto restrict = restrict_of(c);
    Report r{"alliance-sets", {}};
    Section s{"alliance_sets", {"anchor", "members", "decision", "valid"}, {}};
    for (const auto& as : all_alliance_sets(m, t, J, pair_thresholds(c), scope)) {
        auto d = decide_alliance_set(t, as, J, restrict);
        s.rows.push_back({t.agents()[as.anchor], joined(t.agent_ids(as.members)), to_text(d.description),
                          d.valid ? "true" : "false"});
    }
    r.sections.push_back(s);
    return r;
}

Report cmd_mcas(const AnalysisConfig& c)
{
    auto t = table_from_config(c);
    auto m = model_from_config(c);
    auto J = issue_scope(c, t);
    auto sets = maximal_consistent_alliance_sets(m, t, J, pair_thresholds(c), pair_scope(c),
                                                 cap_of(c, "cap.agents", kDefaultAgentCap));
    Report r{"mcas", {}};
    Section s{"maximal_consistent_alliance_sets", {"label", "members"}, {}};
    for (std::size_t k = 0; k < sets.size(); ++k)
        s.rows.push_back({"X" + std::to_string(k + 1), joined(t.agent_ids(sets[k]))});
    r.sections.push_back(s);
    return r;
}

Report cmd_decisions(const AnalysisConfig& c)
{
    auto t = table_from_config(c);
    auto m = model_from_config(c);
    auto J = issue_scope(c, t);
    auto sets = maximal_consistent_alliance_sets(m, t, J, pair_thresholds(c), pair_scope(c),
                                                 cap_of(c, "cap.agents", kDefaultAgentCap));
    auto th = issue_thresholds(c);
    auto combo = combo_of(c);
    auto restrict = restrict_of(c);
    Report r{"decisions", {}};
    Section s{"decisions", {"label", "members", "positive", "negative", "neutral", "decision"}, {}};
    for (std::size_t k = 0; k < sets.size(); ++k) {
        auto tri = trisect_issues_two_functions(m, t, sets[k], J, combo, th);
        auto d = decide_alliance_set(m, t, sets[k], J, combo, th, restrict);
        s.rows.push_back({"X" + std::to_string(k + 1), joined(t.agent_ids(sets[k])), joined(t.issue_ids(tri.positive)),
                          joined(t.issue_ids(tri.negative)), joined(t.issue_ids(tri.neutral)), to_text(d)});
    }
    r.sections.push_back(s);
    return r;
}

Report cmd_strategies(const AnalysisConfig& c)
{
    std::vector<IssueId> issues;
    if (c.has("table")) {
        auto t = table_from_config(c);
        issues = t.issue_ids(issue_scope(c, t));
    } else if (c.has("issues") && c.at("issues").is_array()) {
        issues = c.at("issues").get<std::vector<std::string>>();
    } else {
        throw ParseError("strategies needs a table or an explicit 'issues' list");
    }
    auto kind_s = c.str("family", "non-neutral");
    FamilyKind kind;
    if (kind_s == "non-neutral")
        kind = FamilyKind::NonNeutral;
    else if (kind_s == "full")
        kind = FamilyKind::Full;
    else
        throw ParseError("unknown family '" + kind_s + "' (full, non-neutral)");
    FamilyStream stream(issues, kind, cap_of(c, "cap.issues", kDefaultIssueCap));
    Report r{"strategies", {}};
    Section s{"family", {"label", "literals"}, {}};
    std::uint64_t k = 0;
    while (auto st = stream.next())
        s.rows.push_back({"S" + std::to_string(k++), to_text(*st)});
    r.sections.push_back(std::move(s));
    return r;
}

Report cmd_strategy_trisect(const AnalysisConfig& c)
{
    auto t = table_from_config(c);
    auto m = model_from_config(c);
    auto J = issue_scope(c, t);
    auto X = agent_scope(c, t);
    Report r{"strategy-trisect", {}};
    Strategy s;
    std::string source;
    if (c.has("strategy")) {
        s = strategy_from(c.at("strategy"));
        source = "given";
    } else if (c.has("strategy_anchor")) {
        auto x = t.agent_index(c.str("strategy_anchor", ""));
        s = to_non_neutral(describe_agent(t, x, J, Restrict::All).description);
        source = "non-neutral description of " + t.agents()[x];
    } else if (c.str("heuristic", "") == "largest-alliance-set") {
        auto sets = all_alliance_sets(m, t, J, pair_thresholds(c), pair_scope(c));
        std::vector<AgentId> priority;
        if (c.has("priority"))
            priority = c.at("priority").get<std::vector<std::string>>();
        auto ranked = rank_candidates(sets, t, priority);
        Section cand{"candidates", {"rank", "anchor", "alliance_set_size", "strategy"}, {}};
        for (std::size_t k = 0; k < ranked.size(); ++k) {
            auto d = to_non_neutral(describe_agent(t, ranked[k], J, Restrict::All).description);
            cand.rows.push_back({std::to_string(k + 1), t.agents()[ranked[k]],
                                 std::to_string(sets[ranked[k]].members.size()), to_text(d)});
        }
        r.sections.push_back(cand);
        s = to_non_neutral(describe_agent(t, ranked.front(), J, Restrict::All).description);
        source = "largest alliance set, anchor " + t.agents()[ranked.front()];
    } else {
        throw ParseError("strategy-trisect needs 'strategy', 'strategy_anchor' or 'heuristic'");
    }
    auto [ts, to] = strategy_thresholds(c);
    r.sections.insert(r.sections.begin(), Section{"strategy", {"strategy", "source"}, {{to_text(s), source}}});
    Section deg{"degrees", {"agent", "alliance", "conflict"}, {}};
    for (auto x : X) {
        auto d = strategy_agent_degrees(m, t, s, x);
        deg.rows.push_back({t.agents()[x], to_string(d.alliance), to_string(d.conflict)});
    }
    r.sections.push_back(deg);
    r.sections.push_back(trisection_section(t, trisect_agents_by_strategy(m, t, s, X, ts, to), true,
                                            {"supporting", "opposing", "neutral"}));
    return r;
}

}  // namespace

Report run_command(const std::string& command, const AnalysisConfig& config)
{
    if (command == "validate")
        return cmd_validate(config);
    if (command == "trisect-agents")
        return cmd_trisect_agents(config);
    if (command == "trisect-issues")
        return cmd_trisect_issues(config);
    if (command == "trisect-pairs")
        return cmd_trisect_pairs(config);
    if (command == "alliance-sets")
        return cmd_alliance_sets(config);
    if (command == "mcas")
        return cmd_mcas(config);
    if (command == "decisions")
        return cmd_decisions(config);
    if (command == "strategies")
        return cmd_strategies(config);
    if (command == "strategy-trisect")
        return cmd_strategy_trisect(config);
    throw ParseError("unknown command '" + command + "'");
}

std::vector<std::size_t> rank_candidates(const std::vector<AllianceSet>& sets, const SituationTable& t,
                                         const std::vector<AgentId>& priority)
{
    std::vector<std::size_t> rank_of(t.agent_count(), priority.size());
    for (std::size_t k = 0; k < priority.size(); ++k) {
        auto x = t.agent_index(priority[k]);
        rank_of[x] = std::min(rank_of[x], k);
    }
    std::vector<std::size_t> order;
    for (const auto& s : sets)
        order.push_back(s.anchor);
    std::vector<std::size_t> size_of(t.agent_count(), 0);
    for (const auto& s : sets)
        size_of[s.anchor] = s.members.size();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (size_of[a] != size_of[b])
            return size_of[a] > size_of[b];
        if (rank_of[a] != rank_of[b])
            return rank_of[a] < rank_of[b];
        return a < b;
    });
    return order;
}

}  // namespace triconf
