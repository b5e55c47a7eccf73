#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "triconf/rational.hpp"

namespace triconf {

enum class Rating : std::int8_t { Negative = -1, Neutral = 0, Positive = 1 };

inline int to_int(Rating r) { return static_cast<int>(r); }
Rating rating_from_int(int v);  // DomainError outside {+1,-1,0}
// "+1", "1", "-1", "0"
Rating parse_rating(std::string_view text);
// canonical: "+1", "-1", "0"
const char* rating_text(Rating r);

using AgentId = std::string;
using IssueId = std::string;
// Positions into a table's agent or issue list; sets are kept sorted in table order.
using IndexSet = std::vector<std::size_t>;

class SituationTable {
public:
    SituationTable(std::vector<AgentId> agents, std::vector<IssueId> issues,
                   std::vector<std::vector<Rating>> rows);

    std::size_t agent_count() const { return agents_.size(); }
    std::size_t issue_count() const { return issues_.size(); }
    const std::vector<AgentId>& agents() const { return agents_; }
    const std::vector<IssueId>& issues() const { return issues_; }

    Rating at(std::size_t x, std::size_t i) const { return cells_[x * issues_.size() + i]; }

    std::size_t agent_index(std::string_view id) const;  // UnknownIdError
    std::size_t issue_index(std::string_view id) const;
    IndexSet agent_indices(const std::vector<AgentId>& ids) const;
    IndexSet issue_indices(const std::vector<IssueId>& ids) const;
    IndexSet all_agents() const;
    IndexSet all_issues() const;

    std::vector<AgentId> agent_ids(const IndexSet& xs) const;
    std::vector<IssueId> issue_ids(const IndexSet& is) const;

private:
    std::vector<AgentId> agents_;
    std::vector<IssueId> issues_;
    std::vector<Rating> cells_;
    std::unordered_map<std::string, std::size_t> agent_pos_;
    std::unordered_map<std::string, std::size_t> issue_pos_;
};

enum class TableFormat { CSV, JSON };

SituationTable load_table(std::string_view source, TableFormat format);
SituationTable load_table_file(const std::string& path);  // format from extension
std::string table_to_csv(const SituationTable& t);
std::string table_to_json(const SituationTable& t);

Rating rating(const SituationTable& t, std::string_view x, std::string_view i);

Rational aggregate_rating_over_issues(const SituationTable& t, std::size_t x, const IndexSet& J);
Rational aggregate_rating_over_agents(const SituationTable& t, const IndexSet& X, std::size_t i);

enum class ThresholdKind { SignedRating, UnitDegree };

struct ThresholdPair {
    Rational low;
    Rational high;
    ThresholdKind kind;

    // Checks the kind's range and low < high; throws InvalidThresholdError.
    ThresholdPair(Rational low, Rational high, ThresholdKind kind);
    // Only checks that both values lie within the kind's range.
    static ThresholdPair relaxed(Rational low, Rational high, ThresholdKind kind);

private:
    ThresholdPair(Rational low, Rational high, ThresholdKind kind, bool strict);
};

enum class Carrier { Agents, Issues, AgentPairs };

using AgentPair = std::pair<std::size_t, std::size_t>;

template <class T>
struct Trisection {
    Carrier carrier;
    std::vector<T> positive;
    std::vector<T> negative;
    std::vector<T> neutral;

    bool operator==(const Trisection&) const = default;
};

using IndexTrisection = Trisection<std::size_t>;
using PairTrisection = Trisection<AgentPair>;

// Single issue: exact match on the rating.
IndexTrisection trisect_agents(const SituationTable& t, const IndexSet& X, std::size_t i);
// Issue set: r(x,J) against a SignedRating pair. Empty X gives an empty trisection.
IndexTrisection trisect_agents(const SituationTable& t, const IndexSet& X, const IndexSet& J,
                               const ThresholdPair& th);

IndexTrisection trisect_issues_by_rating(const SituationTable& t, const IndexSet& J, std::size_t x);
IndexTrisection trisect_issues_by_rating(const SituationTable& t, const IndexSet& J,
                                         const IndexSet& X, const ThresholdPair& th);

// J_x^{+-} in issue order.
IndexSet non_neutral_issues(const SituationTable& t, std::size_t x, const IndexSet& J);

}  // namespace triconf
