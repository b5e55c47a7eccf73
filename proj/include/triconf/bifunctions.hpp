#pragma once

#include "triconf/auxiliary.hpp"

namespace triconf {

struct DegreePair {
    Rational alliance;
    Rational conflict;

    bool operator==(const DegreePair&) const = default;
};

// Crisp single-issue values from a Φ value.
inline DegreePair degrees_of(Rating phi)
{
    return {Rational(phi == Rating::Positive ? 1 : 0), Rational(phi == Rating::Negative ? 1 : 0)};
}

struct AggregationScope {
    IndexSet issues;
    IndexSet left;
    IndexSet right;
};

DegreePair alliance_conflict_single(const AuxiliaryModel& model, const SituationTable& t, std::size_t x,
                                    std::size_t y, std::size_t i);

// (1,0) -> +1, (0,1) -> -1, (0,0) -> 0; anything else is InvalidDegreeError.
Rating reconstruct_auxiliary(const DegreePair& d);

// Average over J x X x Y, (0,0) when any of the three is empty. Singleton sets give
// the narrower aggregation cases.
DegreePair alliance_conflict_aggregate(const AuxiliaryModel& model, const SituationTable& t,
                                       const AggregationScope& scope);

// Convenience for the common J-only case.
DegreePair alliance_conflict_over(const AuxiliaryModel& model, const SituationTable& t, std::size_t x,
                                  std::size_t y, const IndexSet& J);

// Aggregated over the first argument's non-neutral issues J_x^{+-}. When that set is
// empty the pair is (0,0), except the self-pair which stays (1,0).
DegreePair alliance_conflict_non_neutral(const AuxiliaryModel& model, const SituationTable& t, std::size_t x,
                                         std::size_t y, const IndexSet& J);

}  // namespace triconf
