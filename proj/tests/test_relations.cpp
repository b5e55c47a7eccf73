#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace th;

namespace {

PairThresholds example_thresholds()
{
    PairThresholds p;
    p.h_a = Threshold::constant(q("1/2"));
    p.l_c = Threshold::constant(q("1/3"));
    return p;
}

PairThresholds city_thresholds()
{
    PairThresholds p;
    p.h_a = Threshold::constant(q("1/4"));
    p.l_c = Threshold::inverse_non_neutral_count();
    return p;
}

std::vector<S> named_sets(const SituationTable& t, const std::vector<IndexSet>& v)
{
    std::vector<S> out;
    for (const auto& s : v)
        out.push_back(t.agent_ids(s));
    return out;
}

}  // namespace

TEST_CASE("alliance sets on the twelve-agent table")
{
    const auto& t = twelve();
    auto p = AuxiliaryModel::pawlak();
    auto J = t.all_issues();
    auto th = example_thresholds();
    CHECK(names(t, alliance_set(p, t, ag(t, "x12"), J, th, PairScope::NonNeutral).members) ==
          S{"x2", "x3", "x4", "x7", "x8", "x12"});
    CHECK(names(t, alliance_set(p, t, ag(t, "x7"), J, th, PairScope::NonNeutral).members) ==
          S{"x7", "x8", "x9", "x10", "x11", "x12"});
    CHECK(names(t, alliance_set(p, t, ag(t, "x1"), J, th, PairScope::NonNeutral).members) == S{"x1"});
}

TEST_CASE("alliance set on the city table with per-anchor thresholds")
{
    const auto& t = cities();
    auto as = alliance_set(AuxiliaryModel::pawlak(), t, ag(t, "x2"), t.all_issues(), city_thresholds(),
                           PairScope::NonNeutral);
    CHECK(names(t, as.members) == S{"x2", "x3", "x5", "x6", "x7", "x9", "x11", "x12"});
    auto r = resolve_for_anchor(city_thresholds(), t, ag(t, "x2"), t.all_issues());
    CHECK(r.conflict.low == q("1/6"));
}

TEST_CASE("maximal consistent alliance sets")
{
    const auto& t = twelve();
    auto sets = maximal_consistent_alliance_sets(AuxiliaryModel::pawlak(), t, t.all_issues(), example_thresholds(),
                                                 PairScope::NonNeutral);
    CHECK(named_sets(t, sets) == std::vector<S>{{"x1"},
                                                {"x2", "x3", "x4", "x12"},
                                                {"x5", "x6"},
                                                {"x7", "x8", "x9", "x10", "x11"},
                                                {"x7", "x8", "x12"}});

    const auto& c = cities();
    auto city = maximal_consistent_alliance_sets(AuxiliaryModel::pawlak(), c, c.all_issues(), city_thresholds(),
                                                 PairScope::NonNeutral);
    CHECK(city.size() == 9);
    auto named = named_sets(c, city);
    CHECK(std::count(named.begin(), named.end(), S{"x2", "x3", "x5", "x12"}) == 1);
    CHECK(std::count(named.begin(), named.end(), S{"x11", "x14"}) == 1);

    Relation complete(4, std::vector<bool>(4, true));
    CHECK(maximal_cliques(complete) == std::vector<IndexSet>{{0, 1, 2, 3}});
}

TEST_CASE("clique enumeration respects the agent cap")
{
    Relation r(5, std::vector<bool>(5, true));
    CHECK_THROWS_AS(maximal_cliques(r, 4), ResourceLimitError);
    CHECK_NOTHROW(maximal_cliques(r, 5));
}

TEST_CASE("diagonal pairs are allied under issue-set scope")
{
    const auto& t = six();
    PairThresholds th;
    th.h_a = Threshold::constant(1);
    auto tri = trisect_pairs_two_functions(AuxiliaryModel::pawlak(), t, t.all_issues(), th, PairScope::IssueSet);
    for (std::size_t x = 0; x < t.agent_count(); ++x)
        CHECK(std::count(tri.positive.begin(), tri.positive.end(), AgentPair{x, x}) == 1);
}

TEST_CASE("relation properties on random tables")
{
    std::mt19937_64 rng(41);
    for (int round = 0; round < 60; ++round) {
        auto raw = oracle::random_raw(rng, 7, 5);
        auto t = raw.table();
        auto [la, ha] = oracle::random_unit_pair(rng);
        auto [lc, hc] = oracle::random_unit_pair(rng);
        PairThresholds th{Threshold::constant(la), Threshold::constant(ha), Threshold::constant(lc),
                          Threshold::constant(hc)};
        for (auto scope : {PairScope::IssueSet, PairScope::NonNeutral}) {
            auto rel = alliance_relation(AuxiliaryModel::pawlak(), t, t.all_issues(), th, scope);
            for (std::size_t x = 0; x < 7; ++x) {
                CHECK(rel[x][x]);
                if (scope == PairScope::IssueSet)
                    for (std::size_t y = 0; y < 7; ++y)
                        CHECK(rel[x][y] == rel[y][x]);
            }
            auto sets = maximal_consistent_alliance_sets(AuxiliaryModel::pawlak(), t, t.all_issues(), th, scope);
            CHECK(sets == oracle::mcas_brute(rel));
            std::vector<bool> covered(7, false);
            for (const auto& s : sets)
                for (auto x : s)
                    covered[x] = true;
            CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
        }
    }
}
