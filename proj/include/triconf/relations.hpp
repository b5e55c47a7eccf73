#pragma once

#include <vector>

#include "triconf/bifunctions.hpp"
#include "triconf/thresholds.hpp"

namespace triconf {

enum class PairScope { IssueSet, NonNeutral };

// (l_a, h_a) and (l_c, h_c). l_a and h_c default to 0 and 1 so that runs quoting only
// h_a and l_c leave the conflict part to pairs with no alliance at all and full conflict.
struct PairThresholds {
    Threshold l_a = Threshold::constant(Rational(0));
    Threshold h_a = Threshold::constant(Rational(1));
    Threshold l_c = Threshold::constant(Rational(0));
    Threshold h_c = Threshold::constant(Rational(1));
};

struct ResolvedPairThresholds {
    ThresholdPair alliance;
    ThresholdPair conflict;
};

// Rules are resolved against |J_x^{+-}| of the anchor x.
ResolvedPairThresholds resolve_for_anchor(const PairThresholds& t, const SituationTable& table, std::size_t x,
                                          const IndexSet& J);

DegreePair pair_degrees(const AuxiliaryModel& model, const SituationTable& t, std::size_t x, std::size_t y,
                        const IndexSet& J, PairScope scope);

PairTrisection trisect_pairs_two_functions(const AuxiliaryModel& model, const SituationTable& t,
                                           const IndexSet& J, const PairThresholds& th, PairScope scope);

// rel[x][y] is true when (x,y) is in the alliance part.
using Relation = std::vector<std::vector<bool>>;
Relation alliance_relation(const AuxiliaryModel& model, const SituationTable& t, const IndexSet& J,
                           const PairThresholds& th, PairScope scope);

struct AllianceSet {
    std::size_t anchor;
    IndexSet members;
    PairScope scope;
};

AllianceSet alliance_set(const AuxiliaryModel& model, const SituationTable& t, std::size_t x, const IndexSet& J,
                         const PairThresholds& th, PairScope scope);

constexpr std::size_t kDefaultAgentCap = 64;

// Maximal cliques of the graph that keeps {x,y} only when both (x,y) and (y,x) are in
// the relation. Sorted lexicographically by member lists.
std::vector<IndexSet> maximal_cliques(const Relation& rel, std::size_t cap = kDefaultAgentCap);

std::vector<IndexSet> maximal_consistent_alliance_sets(const AuxiliaryModel& model, const SituationTable& t,
                                                       const IndexSet& J, const PairThresholds& th,
                                                       PairScope scope, std::size_t cap = kDefaultAgentCap);

}  // namespace triconf
