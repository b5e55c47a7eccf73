#include "triconf/thresholds.hpp"

#include "triconf/errors.hpp"

namespace triconf {

Rational Threshold::resolve(std::size_t count) const
{
    if (rule == ThresholdRule::Constant)
        return value;
    return count == 0 ? Rational(1) : Rational(1, static_cast<std::int64_t>(count));
}

Threshold parse_threshold(std::string_view text)
{
    if (text == "inverse-non-neutral-count")
        return Threshold::inverse_non_neutral_count();
    if (text == "inverse-member-count")
        return Threshold::inverse_member_count();
    try {
        return Threshold::constant(parse_rational(text));
    } catch (const ParseError&) {
        throw ParseError("threshold '" + std::string(text) +
                         "' is neither a p/q rational nor a rule (inverse-non-neutral-count, inverse-member-count)");
    }
}

std::string to_string(const Threshold& t)
{
    switch (t.rule) {
    case ThresholdRule::Constant: return to_string(t.value);
    case ThresholdRule::InverseNonNeutralCount: return "inverse-non-neutral-count";
    case ThresholdRule::InverseMemberCount: return "inverse-member-count";
    }
    return "?";
}

ThresholdPair resolve_pair(const Threshold& low, const Threshold& high, std::size_t count, ThresholdKind kind)
{
    if (low.is_constant() && high.is_constant())
        return ThresholdPair(low.value, high.value, kind);
    return ThresholdPair::relaxed(low.resolve(count), high.resolve(count), kind);
}

}  // namespace triconf
