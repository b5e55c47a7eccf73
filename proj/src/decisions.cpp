#include "triconf/decisions.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "triconf/errors.hpp"

namespace triconf {

void check_distinct_issues(const Description& d)
{
    std::set<std::string> seen;
    for (const auto& l : d.literals)
        if (!seen.insert(l.issue).second)
            throw DuplicateIssueError("issue '" + l.issue + "' appears twice in a conjunction");
}

namespace {

const std::string kLeft = "⟨";   // ⟨
const std::string kRight = "⟩";  // ⟩
const std::string kAnd = "∧";    // ∧
const std::string kEmpty = "∅";  // ∅

}  // namespace

std::string to_text(const Description& d)
{
    if (d.empty())
        return kEmpty;
    std::string out;
    for (std::size_t k = 0; k < d.literals.size(); ++k) {
        if (k)
            out += kAnd;
        out += kLeft + d.literals[k].issue + "," + rating_text(d.literals[k].rating) + kRight;
    }
    return out;
}

Description parse_description(std::string_view text)
{
    std::string s(text);
    auto replace_all = [&](const std::string& from, const std::string& to) {
        for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size()))
            s.replace(p, from.size(), to);
    };
    replace_all(kLeft, "<");
    replace_all(kRight, ">");
    replace_all(kAnd, "&");
    replace_all(kEmpty, "");
    Description d;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n'))
            ++pos;
    };
    skip_ws();
    if (pos == s.size())
        return d;
    while (true) {
        skip_ws();
        if (pos >= s.size() || s[pos] != '<')
            throw ParseError("expected '<' or '⟨' in description '" + std::string(text) + "'");
        auto close = s.find('>', pos);
        if (close == std::string::npos)
            throw ParseError("unterminated literal in description '" + std::string(text) + "'");
        std::string body = s.substr(pos + 1, close - pos - 1);
        auto comma = body.find(',');
        if (comma == std::string::npos)
            throw ParseError("literal '" + body + "' needs an issue and a rating");
        auto trim = [](std::string v) {
            auto b = v.find_first_not_of(" \t");
            auto e = v.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
        };
        std::string issue = trim(body.substr(0, comma));
        std::string r = trim(body.substr(comma + 1));
        if (issue.empty())
            throw ParseError("literal '" + body + "' has an empty issue");
        if (r == "+")
            r = "+1";
        else if (r == "-")
            r = "-1";
        d.literals.push_back({issue, parse_rating(r)});
        pos = close + 1;
        skip_ws();
        if (pos == s.size())
            break;
        if (s[pos] != '&')
            throw ParseError("expected '&' or '∧' between literals in '" + std::string(text) + "'");
        ++pos;
    }
    check_distinct_issues(d);
    return d;
}

std::string to_json(const Description& d)
{
    auto arr = nlohmann::json::array();
    for (const auto& l : d.literals)
        arr.push_back({{"issue", l.issue}, {"rating", to_int(l.rating)}});
    return arr.dump();
}

Description description_from_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("description: ") + e.what());
    }
    if (!j.is_array())
        throw ParseError("description JSON must be an array of {issue, rating}");
    Description d;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("issue") || !e.contains("rating") || !e["issue"].is_string())
            throw ParseError("description entries need a string 'issue' and a 'rating'");
        const auto& r = e["rating"];
        Rating rating = r.is_string() ? parse_rating(r.get<std::string>())
                        : r.is_number_integer() ? rating_from_int(r.get<int>())
                                                : throw ParseError("rating must be an integer or a string");
        d.literals.push_back({e["issue"].get<std::string>(), rating});
    }
    check_distinct_issues(d);
    return d;
}

DescribeResult describe_agent(const SituationTable& t, std::size_t x, const IndexSet& J, Restrict restrict)
{
    if (x >= t.agent_count())
        throw UnknownIdError("agent position " + std::to_string(x) + " is out of range");
    DescribeResult out{{}, true};
    for (auto i : J) {
        Rating r = t.at(x, i);
        if (restrict == Restrict::NonNeutral && r == Rating::Neutral)
            continue;
        out.description.literals.push_back({t.issues().at(i), r});
    }
    if (restrict == Restrict::NonNeutral && out.description.empty())
        out.valid = false;
    return out;
}

Rational imaginary_degree(const AuxiliaryModel& model, const SituationTable& t, Pole pole, DegreeKind rel,
                          const IndexSet& X, std::size_t i)
{
    if (X.empty())
        throw EmptyAgentSetError("imaginary-agent degree needs a nonempty agent set");
    Rating virt = pole == Pole::XPlus ? Rating::Positive : Rating::Negative;
    Rating target = rel == DegreeKind::Alliance ? Rating::Positive : Rating::Negative;
    std::int64_t hits = 0;
    for (auto y : X)
        hits += phi_of(model, virt, t.at(y, i), false) == target;
    return Rational(hits, static_cast<std::int64_t>(X.size()));
}

Combination combination_from_int(int k)
{
    if (k < 1 || k > 4)
        throw DomainError("combination must be 1, 2, 3 or 4, got " + std::to_string(k));
    return static_cast<Combination>(k);
}

IssueViews issue_views(const AuxiliaryModel& model, const SituationTable& t, const IndexSet& X, std::size_t i,
                       Combination combo)
{
    auto deg = [&](Pole p, DegreeKind r) { return imaginary_degree(model, t, p, r, X, i); };
    switch (combo) {
    case Combination::One:
        return {deg(Pole::XPlus, DegreeKind::Alliance), deg(Pole::XPlus, DegreeKind::Conflict)};
    case Combination::Two:
        return {deg(Pole::XPlus, DegreeKind::Alliance), deg(Pole::XMinus, DegreeKind::Alliance)};
    case Combination::Three:
        return {deg(Pole::XMinus, DegreeKind::Conflict), deg(Pole::XPlus, DegreeKind::Conflict)};
    case Combination::Four:
        return {deg(Pole::XMinus, DegreeKind::Conflict), deg(Pole::XMinus, DegreeKind::Alliance)};
    }
    throw DomainError("unknown combination");
}

IndexTrisection trisect_issues_two_functions(const AuxiliaryModel& model, const SituationTable& t,
                                             const IndexSet& X, const IndexSet& J, Combination combo,
                                             const IssueThresholds& th)
{
    if (X.empty())
        throw EmptyAgentSetError("issue trisection needs a nonempty agent set");
    auto tp = resolve_pair(th.l_p, th.h_p, X.size(), ThresholdKind::UnitDegree);
    auto tn = resolve_pair(th.l_n, th.h_n, X.size(), ThresholdKind::UnitDegree);
    IndexTrisection out{Carrier::Issues, {}, {}, {}};
    for (auto i : J) {
        auto v = issue_views(model, t, X, i, combo);
        bool pos = v.positive >= tp.high && v.negative <= tn.low;
        bool neg = v.positive <= tp.low && v.negative >= tn.high;
        if (pos && neg)
            throw InvalidThresholdError("resolved thresholds put issue '" + t.issues()[i] +
                                        "' in both the positive and the negative part");
        (pos ? out.positive : neg ? out.negative : out.neutral).push_back(i);
    }
    return out;
}

Description decide_alliance_set(const AuxiliaryModel& model, const SituationTable& t, const IndexSet& M,
                                const IndexSet& J, Combination combo, const IssueThresholds& th,
                                Restrict restrict)
{
    auto tri = trisect_issues_two_functions(model, t, M, J, combo, th);
    Description d;
    for (auto i : J) {
        auto in = [&](const IndexSet& part) { return std::find(part.begin(), part.end(), i) != part.end(); };
        if (in(tri.positive))
            d.literals.push_back({t.issues()[i], Rating::Positive});
        else if (in(tri.negative))
            d.literals.push_back({t.issues()[i], Rating::Negative});
        else if (restrict == Restrict::All)
            d.literals.push_back({t.issues()[i], Rating::Neutral});
    }
    return d;
}

}  // namespace triconf
