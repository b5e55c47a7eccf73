#pragma once

#include <string>
#include <string_view>

#include "triconf/table.hpp"

namespace triconf {

// A threshold is either a constant or a rule resolved against a count:
// 1/|J_x^{+-}| for an anchor agent, 1/|X| for an agent set.
enum class ThresholdRule { Constant, InverseNonNeutralCount, InverseMemberCount };

struct Threshold {
    ThresholdRule rule = ThresholdRule::Constant;
    Rational value{0};

    static Threshold constant(Rational v) { return {ThresholdRule::Constant, v}; }
    static Threshold inverse_non_neutral_count() { return {ThresholdRule::InverseNonNeutralCount, Rational(0)}; }
    static Threshold inverse_member_count() { return {ThresholdRule::InverseMemberCount, Rational(0)}; }

    bool is_constant() const { return rule == ThresholdRule::Constant; }
    // A zero count resolves to 1.
    Rational resolve(std::size_t count) const;
};

// "1/3", "0", "inverse-non-neutral-count", "inverse-member-count"
Threshold parse_threshold(std::string_view text);
std::string to_string(const Threshold& t);

// Both constant: the strict ThresholdPair check. Otherwise the resolved values only
// have to lie in the kind's range, because per-set rules such as (1/|X|, 1/2) are
// quoted for sets where 1/|X| >= 1/2.
ThresholdPair resolve_pair(const Threshold& low, const Threshold& high, std::size_t count, ThresholdKind kind);

}  // namespace triconf
