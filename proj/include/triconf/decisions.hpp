#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "triconf/relations.hpp"

namespace triconf {

struct Literal {
    IssueId issue;
    Rating rating;

    bool operator==(const Literal&) const = default;
};

// A conjunction of issue-rating pairs. The empty description means "no condition".
struct Description {
    std::vector<Literal> literals;

    bool empty() const { return literals.empty(); }
    std::size_t size() const { return literals.size(); }
    bool operator==(const Description&) const = default;
};

// Throws DuplicateIssueError when an issue repeats.
void check_distinct_issues(const Description& d);

// ⟨i1,+1⟩∧⟨i4,-1⟩; the empty description prints as ∅.
std::string to_text(const Description& d);
// Also accepts <i1,+1>&<i4,-1>, "+"/"-" as ratings, and ∅ or "" for empty.
Description parse_description(std::string_view text);
// [{"issue": "i1", "rating": 1}, ...]
std::string to_json(const Description& d);
Description description_from_json(std::string_view text);

enum class Restrict { All, NonNeutral };

struct DescribeResult {
    Description description;
    bool valid;  // false for an agent with no non-neutral issue under Restrict::NonNeutral
};

DescribeResult describe_agent(const SituationTable& t, std::size_t x, const IndexSet& J, Restrict restrict);

enum class Pole { XPlus, XMinus };
enum class DegreeKind { Alliance, Conflict };

// Average over y in X of the single-issue value between the all-+1 (or all--1)
// virtual agent and y. The virtual agent is never equal to a real one.
Rational imaginary_degree(const AuxiliaryModel& model, const SituationTable& t, Pole pole, DegreeKind rel,
                          const IndexSet& X, std::size_t i);

// Positive view / negative view:
//   1: Φ^=(x+,X) / Φ^≍(x+,X)    2: Φ^=(x+,X) / Φ^=(x-,X)
//   3: Φ^≍(x-,X) / Φ^≍(x+,X)    4: Φ^≍(x-,X) / Φ^=(x-,X)
enum class Combination { One = 1, Two = 2, Three = 3, Four = 4 };

Combination combination_from_int(int k);

struct IssueThresholds {
    Threshold l_p = Threshold::constant(Rational(0));
    Threshold h_p = Threshold::constant(Rational(1));
    Threshold l_n = Threshold::constant(Rational(0));
    Threshold h_n = Threshold::constant(Rational(1));

    // Same thresholds for both views, as the examples quote them.
    static IssueThresholds both(Threshold low, Threshold high) { return {low, high, low, high}; }
};

struct IssueViews {
    Rational positive;
    Rational negative;
};

IssueViews issue_views(const AuxiliaryModel& model, const SituationTable& t, const IndexSet& X, std::size_t i,
                       Combination combo);

// Rules resolve against |X|.
IndexTrisection trisect_issues_two_functions(const AuxiliaryModel& model, const SituationTable& t,
                                             const IndexSet& X, const IndexSet& J, Combination combo,
                                             const IssueThresholds& th);

Description decide_alliance_set(const AuxiliaryModel& model, const SituationTable& t, const IndexSet& M,
                                const IndexSet& J, Combination combo, const IssueThresholds& th,
                                Restrict restrict);

// The decision of a plain alliance set is the description of its anchor.
inline DescribeResult decide_alliance_set(const SituationTable& t, const AllianceSet& as, const IndexSet& J,
                                          Restrict restrict)
{
    return describe_agent(t, as.anchor, J, restrict);
}

}  // namespace triconf
