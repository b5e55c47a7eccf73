#include "triconf/strategies.hpp"

#include "triconf/errors.hpp"

namespace triconf {

Strategy compose(const std::vector<Strategy>& atoms)
{
    Strategy s;
    for (const auto& a : atoms) {
        if (a.size() != 1)
            throw DomainError("an atomic strategy has exactly one literal, got " + std::to_string(a.size()));
        s.literals.push_back(a.literals.front());
    }
    check_distinct_issues(s);
    return s;
}

std::vector<Strategy> decompose(const Strategy& s)
{
    std::vector<Strategy> atoms;
    for (const auto& l : s.literals)
        atoms.push_back(Strategy{{l}});
    return atoms;
}

bool is_non_neutral(const Strategy& s)
{
    for (const auto& l : s.literals)
        if (l.rating == Rating::Neutral)
            return false;
    return true;
}

Strategy to_non_neutral(const Strategy& s)
{
    Strategy out;
    for (const auto& l : s.literals)
        if (l.rating != Rating::Neutral)
            out.literals.push_back(l);
    return out;
}

Strategy dual(const Strategy& s)
{
    Strategy out;
    for (const auto& l : s.literals) {
        if (l.rating == Rating::Neutral)
            throw NeutralLiteralError("dual of a strategy with neutral literal on '" + l.issue + "'");
        out.literals.push_back({l.issue, l.rating == Rating::Positive ? Rating::Negative : Rating::Positive});
    }
    return out;
}

std::uint64_t family_size(std::size_t n, FamilyKind kind)
{
    std::uint64_t base = kind == FamilyKind::Full ? 4 : 3, v = 1;
    for (std::size_t k = 0; k < n; ++k)
        v *= base;
    return v;
}

FamilyStream::FamilyStream(std::vector<IssueId> issues, FamilyKind kind, std::size_t cap)
    : issues_(std::move(issues)), kind_(kind), digits_(issues_.size(), 0)
{
    if (issues_.size() > cap)
        throw ResourceLimitError("strategy family over " + std::to_string(issues_.size()) +
                                 " issues exceeds the cap of " + std::to_string(cap));
    Strategy probe;
    for (const auto& i : issues_)
        probe.literals.push_back({i, Rating::Positive});
    check_distinct_issues(probe);
}

std::optional<Strategy> FamilyStream::next()
{
    if (done_)
        return std::nullopt;
    static constexpr Rating kOrder[] = {Rating::Positive, Rating::Negative, Rating::Neutral};
    Strategy s;
    for (std::size_t k = 0; k < issues_.size(); ++k)
        if (digits_[k] > 0)
            s.literals.push_back({issues_[k], kOrder[digits_[k] - 1]});
    ++produced_;
    int radix = kind_ == FamilyKind::Full ? 4 : 3;
    std::size_t k = issues_.size();
    while (k > 0) {
        --k;
        if (++digits_[k] < radix)
            return s;
        digits_[k] = 0;
    }
    done_ = true;
    return s;
}

DegreePair strategy_agent_degrees(const AuxiliaryModel& model, const SituationTable& t, const Strategy& s,
                                  std::size_t x)
{
    if (s.empty())
        throw EmptyStrategyError("degrees of the empty strategy are undefined");
    if (x >= t.agent_count())
        throw UnknownIdError("agent position " + std::to_string(x) + " is out of range");
    std::int64_t a = 0, c = 0;
    for (const auto& l : s.literals) {
        auto phi = phi_of(model, l.rating, t.at(x, t.issue_index(l.issue)), false);
        a += phi == Rating::Positive;
        c += phi == Rating::Negative;
    }
    auto n = static_cast<std::int64_t>(s.size());
    return {Rational(a, n), Rational(c, n)};
}

IndexTrisection trisect_agents_by_strategy(const AuxiliaryModel& model, const SituationTable& t, const Strategy& s,
                                           const IndexSet& X, const ThresholdPair& ts, const ThresholdPair& to)
{
    if (s.empty())
        throw EmptyStrategyError("cannot trisect agents by the empty strategy");
    check_distinct_issues(s);
    IndexTrisection out{Carrier::Agents, {}, {}, {}};
    for (auto x : X) {
        auto d = strategy_agent_degrees(model, t, s, x);
        bool sup = d.alliance >= ts.high && d.conflict <= to.low;
        bool opp = d.alliance <= ts.low && d.conflict >= to.high;
        (sup ? out.positive : opp ? out.negative : out.neutral).push_back(x);
    }
    return out;
}

}  // namespace triconf
