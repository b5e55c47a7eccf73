#include "triconf/bifunctions.hpp"

#include "triconf/errors.hpp"

namespace triconf {

DegreePair alliance_conflict_single(const AuxiliaryModel& model, const SituationTable& t, std::size_t x,
                                    std::size_t y, std::size_t i)
{
    return degrees_of(phi_single(model, t, x, y, i));
}

Rating reconstruct_auxiliary(const DegreePair& d)
{
    const Rational one(1), zero(0);
    if (d.alliance == one && d.conflict == zero)
        return Rating::Positive;
    if (d.alliance == zero && d.conflict == one)
        return Rating::Negative;
    if (d.alliance == zero && d.conflict == zero)
        return Rating::Neutral;
    throw InvalidDegreeError("(" + to_string(d.alliance) + ", " + to_string(d.conflict) +
                             ") is not a crisp single-issue degree pair");
}

DegreePair alliance_conflict_aggregate(const AuxiliaryModel& model, const SituationTable& t,
                                       const AggregationScope& scope)
{
    if (scope.issues.empty() || scope.left.empty() || scope.right.empty())
        return {Rational(0), Rational(0)};
    std::int64_t a = 0, c = 0;
    for (auto i : scope.issues)
        for (auto x : scope.left)
            for (auto y : scope.right) {
                auto phi = phi_single(model, t, x, y, i);
                a += phi == Rating::Positive;
                c += phi == Rating::Negative;
            }
    auto n = static_cast<std::int64_t>(scope.issues.size() * scope.left.size() * scope.right.size());
    return {Rational(a, n), Rational(c, n)};
}

DegreePair alliance_conflict_over(const AuxiliaryModel& model, const SituationTable& t, std::size_t x,
                                  std::size_t y, const IndexSet& J)
{
    return alliance_conflict_aggregate(model, t, {J, {x}, {y}});
}

DegreePair alliance_conflict_non_neutral(const AuxiliaryModel& model, const SituationTable& t, std::size_t x,
                                         std::size_t y, const IndexSet& J)
{
    auto nn = non_neutral_issues(t, x, J);
    if (nn.empty())
        return {Rational(x == y ? 1 : 0), Rational(0)};
    return alliance_conflict_over(model, t, x, y, nn);
}

}  // namespace triconf
