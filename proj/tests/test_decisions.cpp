#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace th;

namespace {

IssueThresholds both(const std::string& low, const std::string& high)
{
    return IssueThresholds::both(parse_threshold(low), parse_threshold(high));
}

const Combination kCombos[] = {Combination::One, Combination::Two, Combination::Three, Combination::Four};

}  // namespace

TEST_CASE("agent descriptions")
{
    const auto& t = twelve();
    auto d = describe_agent(t, ag(t, "x4"), t.all_issues(), Restrict::NonNeutral);
    CHECK(d.valid);
    CHECK(to_text(d.description) == "⟨i1,+1⟩∧⟨i4,-1⟩");
    auto none = describe_agent(t, ag(t, "x1"), t.all_issues(), Restrict::NonNeutral);
    CHECK_FALSE(none.valid);
    CHECK(none.description.empty());

    const auto& s = six();
    auto all = describe_agent(s, ag(s, "x3"), s.all_issues(), Restrict::All);
    CHECK(all.description.size() == 5);
    for (const auto& l : all.description.literals)
        CHECK(l.rating == Rating::Positive);
}

TEST_CASE("description text and JSON forms")
{
    Description d{{{"i1", Rating::Positive}, {"i4", Rating::Negative}, {"i2", Rating::Neutral}}};
    CHECK(to_text(d) == "⟨i1,+1⟩∧⟨i4,-1⟩∧⟨i2,0⟩");
    CHECK(parse_description(to_text(d)) == d);
    CHECK(parse_description("<i1,+1>&<i4,-1>&<i2,0>") == d);
    CHECK(description_from_json(to_json(d)) == d);
    CHECK(to_text(Description{}) == "∅");
    CHECK(parse_description("∅").empty());
    CHECK_THROWS_AS(parse_description("<i1,+1>&<i1,-1>"), DuplicateIssueError);
    CHECK_THROWS_AS(parse_description("<i1,+2>"), DomainError);
    CHECK_THROWS_AS(parse_description("i1=+1"), ParseError);
}

TEST_CASE("imaginary agents")
{
    const auto& t = twelve();
    auto p = AuxiliaryModel::pawlak();
    auto M = agents(t, {"x2", "x3", "x4", "x12"});
    CHECK(imaginary_degree(p, t, Pole::XPlus, DegreeKind::Alliance, M, is(t, "i1")) == 1);
    CHECK(imaginary_degree(p, t, Pole::XPlus, DegreeKind::Alliance, M, is(t, "i2")) == q("1/2"));
    CHECK(imaginary_degree(p, t, Pole::XMinus, DegreeKind::Alliance, M, is(t, "i2")) == q("1/4"));
    for (std::size_t i = 0; i < t.issue_count(); ++i)
        CHECK(imaginary_degree(p, t, Pole::XMinus, DegreeKind::Alliance, agents(t, {"x5", "x6"}), i) == 0);
    for (std::size_t x = 0; x < t.agent_count(); ++x)
        for (std::size_t i = 0; i < t.issue_count(); ++i)
            CHECK(imaginary_degree(p, t, Pole::XPlus, DegreeKind::Alliance, {x}, i) ==
                  (t.at(x, i) == Rating::Positive ? 1 : 0));
    CHECK_THROWS_AS(imaginary_degree(p, t, Pole::XPlus, DegreeKind::Alliance, {}, 0), EmptyAgentSetError);
    CHECK(combination_from_int(3) == Combination::Three);
    CHECK_THROWS_AS(combination_from_int(5), DomainError);
}

TEST_CASE("issue trisections of alliance sets")
{
    const auto& t = twelve();
    auto p = AuxiliaryModel::pawlak();
    auto tri = trisect_issues_two_functions(p, t, agents(t, {"x2", "x3", "x4", "x12"}), t.all_issues(),
                                            Combination::One, both("1/4", "1/2"));
    CHECK(names(t, tri.positive, false) == S{"i1", "i2"});
    CHECK(names(t, tri.negative, false) == S{"i3", "i4"});
    CHECK(tri.neutral.empty());

    auto one = trisect_issues_two_functions(p, t, agents(t, {"x1"}), t.all_issues(), Combination::One,
                                            both("0", "1"));
    CHECK(names(t, one.neutral, false) == S{"i1", "i2", "i3", "i4"});

    const auto& c = cities();
    auto neg = trisect_issues_two_functions(p, c, agents(c, {"x11", "x14"}), c.all_issues(), Combination::One,
                                            both("0", "1/2"));
    CHECK(neg.negative.size() == 11);
    CHECK_THROWS_AS(trisect_issues_two_functions(p, t, {}, t.all_issues(), Combination::One, both("0", "1")),
                    EmptyAgentSetError);
}

TEST_CASE("decisions of maximal consistent alliance sets")
{
    const auto& t = twelve();
    auto p = AuxiliaryModel::pawlak();
    auto d = decide_alliance_set(p, t, agents(t, {"x7", "x8", "x9", "x10", "x11"}), t.all_issues(), Combination::One,
                                 both("1/5", "1/2"), Restrict::NonNeutral);
    CHECK(to_text(d) == "⟨i1,-1⟩∧⟨i2,-1⟩∧⟨i3,-1⟩");
    auto all = decide_alliance_set(p, t, agents(t, {"x7", "x8", "x9", "x10", "x11"}), t.all_issues(),
                                   Combination::One, both("1/5", "1/2"), Restrict::All);
    CHECK(to_text(all) == "⟨i1,-1⟩∧⟨i2,-1⟩∧⟨i3,-1⟩∧⟨i4,0⟩");
    auto x1 = decide_alliance_set(p, t, agents(t, {"x1"}), t.all_issues(), Combination::One,
                                  both("inverse-member-count", "1/2"), Restrict::NonNeutral);
    CHECK(x1.empty());

    const auto& c = cities();
    auto x2 = decide_alliance_set(p, c, agents(c, {"x2", "x3", "x5", "x12"}), c.all_issues(), Combination::One,
                                  both("0", "1/4"), Restrict::NonNeutral);
    CHECK(x2.size() == 8);
    auto txt = to_text(x2);
    CHECK(txt.find("⟨i2,+1⟩") != std::string::npos);
    CHECK(txt.find("⟨i9,-1⟩") != std::string::npos);

    AllianceSet as{ag(t, "x4"), agents(t, {"x2", "x3", "x4", "x12"}), PairScope::NonNeutral};
    CHECK(to_text(decide_alliance_set(t, as, t.all_issues(), Restrict::NonNeutral).description) ==
          "⟨i1,+1⟩∧⟨i4,-1⟩");
}

TEST_CASE("the four combinations agree under the presets, and a single agent gives its rating trisection")
{
    std::mt19937_64 rng(43);
    for (int round = 0; round < 40; ++round) {
        auto raw = oracle::random_raw(rng, 6, 5);
        auto t = raw.table();
        auto [lp, hp] = oracle::random_unit_pair(rng);
        auto [ln, hn] = oracle::random_unit_pair(rng);
        IssueThresholds th{Threshold::constant(lp), Threshold::constant(hp), Threshold::constant(ln),
                           Threshold::constant(hn)};
        std::vector<IndexSet> groups{{0}, {1, 2}, {0, 3, 5}, t.all_agents()};
        for (const auto& m : {AuxiliaryModel::pawlak(), AuxiliaryModel::yao()})
            for (const auto& X : groups) {
                auto first = trisect_issues_two_functions(m, t, X, t.all_issues(), Combination::One, th);
                for (auto c : kCombos)
                    CHECK(trisect_issues_two_functions(m, t, X, t.all_issues(), c, th) == first);
                if (X.size() == 1) {
                    auto want = trisect_issues_by_rating(t, t.all_issues(), X.front());
                    CHECK(first.positive == want.positive);
                    CHECK(first.negative == want.negative);
                    CHECK(first.neutral == want.neutral);
                }
                // the full decision lists every issue with the part it landed in
                auto d = decide_alliance_set(m, t, X, t.all_issues(), Combination::One, th, Restrict::All);
                CHECK(d.size() == t.issue_count());
                IndexTrisection back{Carrier::Issues, {}, {}, {}};
                for (const auto& l : d.literals) {
                    auto i = t.issue_index(l.issue);
                    (l.rating == Rating::Positive ? back.positive
                     : l.rating == Rating::Negative ? back.negative
                                                    : back.neutral)
                        .push_back(i);
                }
                CHECK(back.positive == first.positive);
                CHECK(back.negative == first.negative);
                CHECK(back.neutral == first.neutral);
            }
    }
}
