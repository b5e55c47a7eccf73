#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "triconf/decisions.hpp"

namespace triconf {

// A strategy shares the representation of a description.
using Strategy = Description;

// Conjunction of single-literal atoms over distinct issues.
Strategy compose(const std::vector<Strategy>& atoms);
std::vector<Strategy> decompose(const Strategy& s);

bool is_non_neutral(const Strategy& s);
Strategy to_non_neutral(const Strategy& s);
// Flips every sign; NeutralLiteralError on a 0-rated literal.
Strategy dual(const Strategy& s);

enum class FamilyKind { Full, NonNeutral };

constexpr std::size_t kDefaultIssueCap = 12;

std::uint64_t family_size(std::size_t n, FamilyKind kind);

// Lazily yields every strategy over subsets of the issues, the empty one first.
// Each issue is a digit (absent < +1 < -1 < 0) and the first issue is the most
// significant, so the order is lexicographic in issue order.
class FamilyStream {
public:
    FamilyStream(std::vector<IssueId> issues, FamilyKind kind, std::size_t cap = kDefaultIssueCap);

    std::optional<Strategy> next();
    std::uint64_t size() const { return family_size(issues_.size(), kind_); }
    std::uint64_t produced() const { return produced_; }

private:
    std::vector<IssueId> issues_;
    FamilyKind kind_;
    std::vector<int> digits_;
    bool done_ = false;
    std::uint64_t produced_ = 0;
};

// The strategy acts as a virtual agent distinct from x, averaged over J_S.
DegreePair strategy_agent_degrees(const AuxiliaryModel& model, const SituationTable& t, const Strategy& s,
                                  std::size_t x);

// supporting: alliance >= h_s and conflict <= l_o; opposing: alliance <= l_s and conflict >= h_o.
IndexTrisection trisect_agents_by_strategy(const AuxiliaryModel& model, const SituationTable& t, const Strategy& s,
                                           const IndexSet& X, const ThresholdPair& ts, const ThresholdPair& to);

}  // namespace triconf
