#include "triconf/table.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "triconf/errors.hpp"

namespace triconf {

Rating rating_from_int(int v)
{
    switch (v) {
    case 1: return Rating::Positive;
    case -1: return Rating::Negative;
    case 0: return Rating::Neutral;
    }
    throw DomainError("rating " + std::to_string(v) + " is not one of +1, -1, 0");
}

Rating parse_rating(std::string_view text)
{
    if (text == "+1" || text == "1")
        return Rating::Positive;
    if (text == "-1")
        return Rating::Negative;
    if (text == "0")
        return Rating::Neutral;
    throw DomainError("'" + std::string(text) + "' is not one of +1, 1, -1, 0");
}

const char* rating_text(Rating r)
{
    switch (r) {
    case Rating::Positive: return "+1";
    case Rating::Negative: return "-1";
    case Rating::Neutral: return "0";
    }
    return "?";
}

SituationTable::SituationTable(std::vector<AgentId> agents, std::vector<IssueId> issues,
                               std::vector<std::vector<Rating>> rows)
    : agents_(std::move(agents)), issues_(std::move(issues))
{
    if (agents_.empty() || issues_.empty())
        throw EmptyTableError("a situation table needs at least one agent and one issue");
    for (std::size_t k = 0; k < agents_.size(); ++k) {
        if (agents_[k].empty())
            throw ParseError("agent id in row " + std::to_string(k + 1) + " is empty");
        if (!agent_pos_.emplace(agents_[k], k).second)
            throw DuplicateIdError("duplicate agent id '" + agents_[k] + "'");
    }
    for (std::size_t k = 0; k < issues_.size(); ++k) {
        if (issues_[k].empty())
            throw ParseError("issue id in column " + std::to_string(k + 1) + " is empty");
        if (!issue_pos_.emplace(issues_[k], k).second)
            throw DuplicateIdError("duplicate issue id '" + issues_[k] + "'");
    }
    if (rows.size() != agents_.size())
        throw ParseError("expected " + std::to_string(agents_.size()) + " rows, got " +
                         std::to_string(rows.size()));
    cells_.reserve(agents_.size() * issues_.size());
    for (std::size_t x = 0; x < rows.size(); ++x) {
        if (rows[x].size() != issues_.size())
            throw ParseError("row for agent '" + agents_[x] + "' has " + std::to_string(rows[x].size()) +
                             " ratings, expected " + std::to_string(issues_.size()));
        cells_.insert(cells_.end(), rows[x].begin(), rows[x].end());
    }
}

std::size_t SituationTable::agent_index(std::string_view id) const
{
    auto it = agent_pos_.find(std::string(id));
    if (it == agent_pos_.end())
        throw UnknownIdError("unknown agent '" + std::string(id) + "'");
    return it->second;
}

std::size_t SituationTable::issue_index(std::string_view id) const
{
    auto it = issue_pos_.find(std::string(id));
    if (it == issue_pos_.end())
        throw UnknownIdError("unknown issue '" + std::string(id) + "'");
    return it->second;
}

namespace {

IndexSet sorted_unique(IndexSet v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

IndexSet iota_set(std::size_t n)
{
    IndexSet v(n);
    for (std::size_t k = 0; k < n; ++k)
        v[k] = k;
    return v;
}

}  // namespace

IndexSet SituationTable::agent_indices(const std::vector<AgentId>& ids) const
{
    IndexSet out;
    for (const auto& id : ids)
        out.push_back(agent_index(id));
    return sorted_unique(std::move(out));
}

IndexSet SituationTable::issue_indices(const std::vector<IssueId>& ids) const
{
    IndexSet out;
    for (const auto& id : ids)
        out.push_back(issue_index(id));
    return sorted_unique(std::move(out));
}

IndexSet SituationTable::all_agents() const { return iota_set(agents_.size()); }
IndexSet SituationTable::all_issues() const { return iota_set(issues_.size()); }

std::vector<AgentId> SituationTable::agent_ids(const IndexSet& xs) const
{
    std::vector<AgentId> out;
    for (auto x : xs)
        out.push_back(agents_.at(x));
    return out;
}

std::vector<IssueId> SituationTable::issue_ids(const IndexSet& is) const
{
    std::vector<IssueId> out;
    for (auto i : is)
        out.push_back(issues_.at(i));
    return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c == '"') {
            throw ParseError("quoted CSV fields are not supported");
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    for (auto& s : cells) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    }
    return cells;
}

SituationTable load_csv(std::string_view source)
{
    std::istringstream in{std::string(source)};
    std::string line;
    std::vector<std::vector<std::string>> lines;
    std::vector<std::size_t> line_numbers;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0)
            line.erase(0, 3);
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        lines.push_back(split_csv_line(line));
        line_numbers.push_back(lineno);
    }
    if (lines.empty())
        throw EmptyTableError("CSV input has no header");
    const auto& header = lines.front();
    if (header.front() != "agent")
        throw ParseError("CSV header must start with 'agent', found '" + header.front() + "'");
    std::vector<IssueId> issues(header.begin() + 1, header.end());
    std::vector<AgentId> agents;
    std::vector<std::vector<Rating>> rows;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& cells = lines[r];
        if (cells.size() != header.size())
            throw ParseError("line " + std::to_string(line_numbers[r]) + " has " + std::to_string(cells.size()) +
                             " fields, header has " + std::to_string(header.size()));
        agents.push_back(cells[0]);
        std::vector<Rating> row;
        for (std::size_t c = 1; c < cells.size(); ++c) {
            try {
                row.push_back(parse_rating(cells[c]));
            } catch (const DomainError&) {
                throw DomainError("row " + std::to_string(r) + " (agent '" + cells[0] + "'), column '" +
                                  issues[c - 1] + "': value '" + cells[c] + "' is not one of +1, 1, -1, 0");
            }
        }
        rows.push_back(std::move(row));
    }
    if (issues.empty() || agents.empty())
        throw EmptyTableError("CSV table has no " + std::string(issues.empty() ? "issues" : "agents"));
    return SituationTable(std::move(agents), std::move(issues), std::move(rows));
}

SituationTable load_json(std::string_view source)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON table: ") + e.what());
    }
    if (!j.is_object() || !j.contains("agents") || !j.contains("issues") || !j.contains("ratings"))
        throw ParseError("JSON table needs 'agents', 'issues' and 'ratings'");
    std::vector<AgentId> agents;
    std::vector<IssueId> issues;
    std::vector<std::vector<Rating>> rows;
    try {
        agents = j.at("agents").get<std::vector<std::string>>();
        issues = j.at("issues").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError("JSON 'agents' and 'issues' must be arrays of strings");
    }
    if (agents.empty() || issues.empty())
        throw EmptyTableError("JSON table has no " + std::string(issues.empty() ? "issues" : "agents"));
    const auto& ratings = j.at("ratings");
    if (!ratings.is_array())
        throw ParseError("JSON 'ratings' must be an array of rows");
    for (std::size_t r = 0; r < ratings.size(); ++r) {
        const auto& row = ratings[r];
        if (!row.is_array())
            throw ParseError("JSON ratings row " + std::to_string(r + 1) + " is not an array");
        std::vector<Rating> out;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto& v = row[c];
            std::string where = "row " + std::to_string(r + 1) +
                                (r < agents.size() ? " (agent '" + agents[r] + "')" : std::string()) + ", column " +
                                (c < issues.size() ? "'" + issues[c] + "'" : std::to_string(c + 1));
            if (!v.is_number_integer())
                throw DomainError(where + ": value " + v.dump() + " is not an integer rating");
            auto iv = v.get<long long>();
            if (iv != 1 && iv != -1 && iv != 0)
                throw DomainError(where + ": value " + std::to_string(iv) + " is not one of +1, -1, 0");
            out.push_back(rating_from_int(static_cast<int>(iv)));
        }
        rows.push_back(std::move(out));
    }
    return SituationTable(std::move(agents), std::move(issues), std::move(rows));
}

}  // namespace

SituationTable load_table(std::string_view source, TableFormat format)
{
    return format == TableFormat::CSV ? load_csv(source) : load_json(source);
}

SituationTable load_table_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open table file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return load_table(ss.str(), json ? TableFormat::JSON : TableFormat::CSV);
}

std::string table_to_csv(const SituationTable& t)
{
    std::string out = "agent";
    for (const auto& i : t.issues())
        out += "," + i;
    out += "\n";
    for (std::size_t x = 0; x < t.agent_count(); ++x) {
        out += t.agents()[x];
        for (std::size_t i = 0; i < t.issue_count(); ++i) {
            out += ",";
            out += rating_text(t.at(x, i));
        }
        out += "\n";
    }
    return out;
}

std::string table_to_json(const SituationTable& t)
{
    nlohmann::json j;
    j["agents"] = t.agents();
    j["issues"] = t.issues();
    auto rows = nlohmann::json::array();
    for (std::size_t x = 0; x < t.agent_count(); ++x) {
        auto row = nlohmann::json::array();
        for (std::size_t i = 0; i < t.issue_count(); ++i)
            row.push_back(to_int(t.at(x, i)));
        rows.push_back(row);
    }
    j["ratings"] = rows;
    return j.dump();
}

Rating rating(const SituationTable& t, std::string_view x, std::string_view i)
{
    return t.at(t.agent_index(x), t.issue_index(i));
}

Rational aggregate_rating_over_issues(const SituationTable& t, std::size_t x, const IndexSet& J)
{
    if (J.empty())
        throw EmptyIssueSetError("aggregated rating needs a nonempty issue set");
    std::int64_t sum = 0;
    for (auto i : J)
        sum += to_int(t.at(x, i));
    return Rational(sum, static_cast<std::int64_t>(J.size()));
}

Rational aggregate_rating_over_agents(const SituationTable& t, const IndexSet& X, std::size_t i)
{
    if (X.empty())
        throw EmptyAgentSetError("aggregated rating needs a nonempty agent set");
    std::int64_t sum = 0;
    for (auto x : X)
        sum += to_int(t.at(x, i));
    return Rational(sum, static_cast<std::int64_t>(X.size()));
}

ThresholdPair::ThresholdPair(Rational lo, Rational hi, ThresholdKind k) : ThresholdPair(lo, hi, k, true) {}

ThresholdPair ThresholdPair::relaxed(Rational lo, Rational hi, ThresholdKind k)
{
    return ThresholdPair(lo, hi, k, false);
}

ThresholdPair::ThresholdPair(Rational lo, Rational hi, ThresholdKind k, bool strict) : low(lo), high(hi), kind(k)
{
    Rational floor = kind == ThresholdKind::SignedRating ? Rational(-1) : Rational(0);
    bool ok = floor <= low && low <= 1 && floor <= high && high <= 1;
    if (ok && strict)
        ok = kind == ThresholdKind::SignedRating ? (low < 0 && 0 < high) : low < high;
    if (!ok) {
        const char* rule = kind == ThresholdKind::SignedRating ? (strict ? "-1 <= l < 0 < h <= 1" : "-1 <= l, h <= 1")
                                                               : (strict ? "0 <= l < h <= 1" : "0 <= l, h <= 1");
        throw InvalidThresholdError("thresholds (" + to_string(low) + ", " + to_string(high) + ") violate " + rule);
    }
}

namespace {

template <class Rate>
IndexTrisection split(Carrier carrier, const IndexSet& carrier_set, Rate rate)
{
    IndexTrisection out{carrier, {}, {}, {}};
    for (auto e : carrier_set) {
        int v = rate(e);
        (v > 0 ? out.positive : v < 0 ? out.negative : out.neutral).push_back(e);
    }
    return out;
}

}  // namespace

IndexTrisection trisect_agents(const SituationTable& t, const IndexSet& X, std::size_t i)
{
    return split(Carrier::Agents, X, [&](std::size_t x) { return to_int(t.at(x, i)); });
}

IndexTrisection trisect_agents(const SituationTable& t, const IndexSet& X, const IndexSet& J,
                               const ThresholdPair& th)
{
    return split(Carrier::Agents, X, [&](std::size_t x) {
        auto r = aggregate_rating_over_issues(t, x, J);
        return r >= th.high ? 1 : r <= th.low ? -1 : 0;
    });
}

IndexTrisection trisect_issues_by_rating(const SituationTable& t, const IndexSet& J, std::size_t x)
{
    return split(Carrier::Issues, J, [&](std::size_t i) { return to_int(t.at(x, i)); });
}

IndexTrisection trisect_issues_by_rating(const SituationTable& t, const IndexSet& J, const IndexSet& X,
                                         const ThresholdPair& th)
{
    return split(Carrier::Issues, J, [&](std::size_t i) {
        auto r = aggregate_rating_over_agents(t, X, i);
        return r >= th.high ? 1 : r <= th.low ? -1 : 0;
    });
}

IndexSet non_neutral_issues(const SituationTable& t, std::size_t x, const IndexSet& J)
{
    IndexSet out;
    for (auto i : J)
        if (t.at(x, i) != Rating::Neutral)
            out.push_back(i);
    return out;
}

}  // namespace triconf
