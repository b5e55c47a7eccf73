#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace th;

namespace {

Strategy st(const std::string& text) { return parse_description(text); }

}  // namespace

TEST_CASE("composition and decomposition")
{
    auto a = st("<i1,+1>"), b = st("<i3,0>");
    auto s = compose({a, b});
    CHECK(to_text(s) == "⟨i1,+1⟩∧⟨i3,0⟩");
    CHECK(decompose(s) == std::vector<Strategy>{a, b});
    CHECK(compose({}).empty());
    CHECK_THROWS_AS(compose({a, st("<i1,-1>")}), DuplicateIssueError);
    CHECK_THROWS_AS(compose({st("<i1,+1>&<i2,+1>")}), DomainError);
}

TEST_CASE("non-neutral strategies and duals")
{
    CHECK(to_text(to_non_neutral(st("<i1,+1>&<i3,0>"))) == "⟨i1,+1⟩");
    CHECK(to_non_neutral(st("<i1,0>&<i2,0>")).empty());
    CHECK(is_non_neutral(st("<i1,+1>&<i2,-1>")));
    CHECK_FALSE(is_non_neutral(st("<i1,0>")));
    auto s9 = st("<i1,+1>&<i2,+1>");
    CHECK(dual(s9) == st("<i1,-1>&<i2,-1>"));
    CHECK(dual(dual(s9)) == s9);
    CHECK(dual(st("<i1,+1>&<i2,+1>&<i3,+1>&<i4,+1>")) == st("<i1,-1>&<i2,-1>&<i3,-1>&<i4,-1>"));
    CHECK_THROWS_AS(dual(st("<i1,0>")), NeutralLiteralError);

    const auto& c = cities();
    auto sj = to_non_neutral(describe_agent(c, ag(c, "x2"), c.all_issues(), Restrict::All).description);
    CHECK(to_text(sj) == "⟨i2,+1⟩∧⟨i3,-1⟩∧⟨i6,+1⟩∧⟨i7,-1⟩∧⟨i10,+1⟩∧⟨i11,-1⟩");
}

TEST_CASE("family sizes and enumeration")
{
    CHECK(family_size(4, FamilyKind::NonNeutral) == 81);
    CHECK(family_size(4, FamilyKind::Full) == 256);
    CHECK(family_size(11, FamilyKind::NonNeutral) == 177147);
    for (std::size_t n = 0; n <= 6; ++n)
        for (auto kind : {FamilyKind::Full, FamilyKind::NonNeutral}) {
            std::vector<std::string> ids;
            for (std::size_t k = 0; k < n; ++k)
                ids.push_back("i" + std::to_string(k + 1));
            FamilyStream a(ids, kind), b(ids, kind);
            std::set<std::string> seen;
            std::uint64_t count = 0;
            bool empty_seen = false;
            while (auto s = a.next()) {
                auto other = b.next();
                REQUIRE(other);
                CHECK(*other == *s);
                seen.insert(to_text(*s));
                empty_seen |= s->empty();
                if (kind == FamilyKind::NonNeutral)
                    CHECK(is_non_neutral(*s));
                ++count;
            }
            CHECK_FALSE(b.next());
            CHECK(count == family_size(n, kind));
            CHECK(seen.size() == count);
            CHECK(empty_seen);
        }
    CHECK_THROWS_AS(FamilyStream(std::vector<std::string>(13, "i"), FamilyKind::Full), ResourceLimitError);
    std::vector<std::string> ids13;
    for (int k = 0; k < 13; ++k)
        ids13.push_back("i" + std::to_string(k));
    CHECK_NOTHROW(FamilyStream(ids13, FamilyKind::NonNeutral, 13));
}

TEST_CASE("enumeration order: first issue most significant, absent < +1 < -1 < 0")
{
    FamilyStream f({"i1", "i2"}, FamilyKind::Full);
    std::vector<std::string> got;
    for (int k = 0; k < 6; ++k)
        got.push_back(to_text(*f.next()));
    CHECK(got == S{"∅", "⟨i2,+1⟩", "⟨i2,-1⟩", "⟨i2,0⟩", "⟨i1,+1⟩", "⟨i1,+1⟩∧⟨i2,+1⟩"});
}

TEST_CASE("strategy degrees")
{
    const auto& t = twelve();
    auto p = AuxiliaryModel::pawlak();
    CHECK(strategy_agent_degrees(p, t, st("<i1,+1>&<i2,-1>"), ag(t, "x2")).alliance == q("1/2"));
    CHECK(strategy_agent_degrees(p, t, st("<i4,-1>"), ag(t, "x7")).alliance == 1);
    for (std::size_t x = 0; x < t.agent_count(); ++x) {
        auto self = describe_agent(t, x, t.all_issues(), Restrict::All).description;
        auto d = strategy_agent_degrees(AuxiliaryModel::yao(), t, self, x);
        CHECK(d.alliance == 1);
        CHECK(d.conflict == 0);
    }
    CHECK_THROWS_AS(strategy_agent_degrees(p, t, Strategy{}, 0), EmptyStrategyError);
    CHECK_THROWS_AS(strategy_agent_degrees(p, t, st("<i9,+1>"), 0), UnknownIdError);
}

TEST_CASE("agent trisections by strategy")
{
    const auto& t = twelve();
    auto p = AuxiliaryModel::pawlak();
    ThresholdPair half(0, q("1/2"), ThresholdKind::UnitDegree);
    auto s10 = trisect_agents_by_strategy(p, t, st("<i1,-1>&<i2,-1>"), t.all_agents(), half, half);
    CHECK(names(t, s10.positive) == S{"x7", "x8", "x9", "x10", "x11"});
    CHECK(names(t, s10.negative) == S{"x2", "x3", "x4", "x5", "x6"});
    CHECK(names(t, s10.neutral) == S{"x1", "x12"});

    ThresholdPair quarter(0, q("1/4"), ThresholdKind::UnitDegree);
    auto s65 = trisect_agents_by_strategy(p, t, st("<i1,+1>&<i2,+1>&<i3,+1>&<i4,+1>"), t.all_agents(), quarter,
                                          quarter);
    CHECK(names(t, s65.positive) == S{"x5", "x6"});
    CHECK(names(t, s65.negative) == S{"x7", "x8", "x10", "x11"});
    CHECK(names(t, s65.neutral) == S{"x1", "x2", "x3", "x4", "x9", "x12"});

    const auto& c = cities();
    auto sg = st("<i1,-1>&<i2,-1>&<i3,-1>&<i5,-1>&<i6,-1>&<i7,-1>&<i9,-1>&<i10,-1>&<i11,-1>");
    auto g = trisect_agents_by_strategy(p, c, sg, c.all_agents(), ThresholdPair(q("2/9"), q("1/3"), ThresholdKind::UnitDegree),
                                        ThresholdPair(q("1/9"), q("4/9"), ThresholdKind::UnitDegree));
    CHECK(names(c, g.positive) == S{"x4", "x11", "x13", "x14"});
    CHECK(names(c, g.negative) == S{"x7", "x9", "x12"});
    CHECK_THROWS_AS(trisect_agents_by_strategy(p, t, Strategy{}, t.all_agents(), half, half), EmptyStrategyError);
}

TEST_CASE("strategy degrees against the oracle")
{
    std::mt19937_64 rng(47);
    for (int round = 0; round < 100; ++round) {
        auto raw = oracle::random_raw(rng, 5, 6);
        auto t = raw.table();
        auto s = oracle::random_strategy(rng, t.issues(), false);
        // treat the strategy as an extra row appended to the table
        auto ext = raw;
        ext.agents.push_back("strategy");
        ext.r.emplace_back(t.issue_count(), 0);
        IndexSet J;
        for (const auto& l : s.literals) {
            auto i = t.issue_index(l.issue);
            ext.r.back()[i] = to_int(l.rating);
            J.push_back(i);
        }
        std::sort(J.begin(), J.end());
        for (bool yao : {false, true})
            for (std::size_t x = 0; x < 5; ++x) {
                auto got = strategy_agent_degrees(yao ? AuxiliaryModel::yao() : AuxiliaryModel::pawlak(), t, s, x);
                auto want = oracle::degrees(yao, ext, J, {5}, {x});
                CHECK(got.alliance == want.alliance);
                CHECK(got.conflict == want.conflict);
            }
    }
}
