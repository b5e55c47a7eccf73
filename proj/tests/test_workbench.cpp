#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"

using namespace th;

namespace {

AnalysisConfig cfg(const std::string& json) { return make_config(json, fixture_dir() + "/tables"); }

const Section& section(const Report& r, const std::string& name)
{
    for (const auto& s : r.sections)
        if (s.name == name)
            return s;
    throw std::runtime_error("no section " + name);
}

std::string cell(const Section& s, std::size_t row, const std::string& col)
{
    auto it = std::find(s.columns.begin(), s.columns.end(), col);
    return s.rows.at(row).at(static_cast<std::size_t>(it - s.columns.begin()));
}

const char* kTwelve = R"("table": "twelve_agents_four_issues.csv")";
const char* kCities = R"("table": "gansu_cities.csv")";

}  // namespace

TEST_CASE("rendering")
{
    Report r{"demo", {{"one", {"a", "b"}, {{"x,y", "say \"hi\""}, {"1", "p|q"}}}, {"two", {"c"}, {{"3"}}}}};
    CHECK(render(r, OutputFormat::CSV) ==
          "# one\na,b\n\"x,y\",\"say \"\"hi\"\"\"\n1,p|q\n\n# two\nc\n3\n");
    CHECK(render(r, OutputFormat::Markdown) ==
          "## one\n\n| a | b |\n|---|---|\n| x,y | say \"hi\" |\n| 1 | p\\|q |\n\n## two\n\n| c |\n|---|\n| 3 |\n");
    auto j = nlohmann::json::parse(render(r, OutputFormat::JSON));
    CHECK(j["command"] == "demo");
    CHECK(j["sections"]["one"][0]["a"] == "x,y");
    CHECK(render(r, OutputFormat::JSON) == render(r, OutputFormat::JSON));
    CHECK(parse_format("md") == OutputFormat::Markdown);
    CHECK_THROWS_AS(parse_format("xml"), ParseError);
}

TEST_CASE("configuration access")
{
    auto c = cfg(R"({"a": {"b": "1/2"}, "model": "yao"})");
    CHECK(c.has("a.b"));
    CHECK_FALSE(c.has("a.c"));
    CHECK(c.str("a.b", "") == "1/2");
    CHECK(c.str("nope", "dflt") == "dflt");
    CHECK_THROWS_AS(c.at("a.c"), ParseError);
    CHECK(model_from_config(c).name() == "yao");
    CHECK_THROWS_AS(model_from_config(cfg(R"({"model": "other"})")), ParseError);
    CHECK_THROWS_AS(make_config("[1]", ""), ParseError);
    CHECK_THROWS_AS(make_config("{bad", ""), ParseError);
    CHECK_THROWS_AS(table_from_config(cfg("{}")), ParseError);
}

TEST_CASE("pair trisection report on the six-agent table")
{
    auto r = run_command("trisect-pairs", cfg(R"({"table": "six_agents_five_issues.csv",
        "thresholds": {"auxiliary": {"low": "-1/2", "high": "1/2"}}})"));
    const auto& tri = section(r, "trisection");
    CHECK(cell(tri, 1, "part") == "conflict");
    CHECK(cell(tri, 1, "pairs") == "(x4,x6) (x6,x4)");
}

TEST_CASE("maximal consistent alliance sets of the cities")
{
    auto r = run_command("mcas", cfg(std::string("{") + kCities + R"(, "scope": "non-neutral",
        "thresholds": {"pair": {"h_a": "1/4", "l_c": "inverse-non-neutral-count"}}})"));
    const auto& s = section(r, "maximal_consistent_alliance_sets");
    CHECK(s.rows.size() == 9);
    CHECK(cell(s, 8, "members") == "x11 x14");
}

TEST_CASE("strategy trisection from an anchor")
{
    auto r = run_command("strategy-trisect", cfg(std::string("{") + kCities + R"(, "strategy_anchor": "x2",
        "thresholds": {"strategy": {"l_s": "1/7", "h_s": "1/6", "l_o": "1/6", "h_o": "1/3"}}})"));
    const auto& tri = section(r, "trisection");
    CHECK(cell(tri, 0, "members") == "x2 x3 x5 x6 x7 x9 x11 x12 x13");
    CHECK(cell(tri, 1, "members") == "x1");
}

TEST_CASE("heuristic strategy choice and candidate ranking")
{
    const auto& t = twelve();
    PairThresholds th;
    th.h_a = Threshold::constant(q("1/2"));
    th.l_c = Threshold::constant(q("1/3"));
    std::vector<AllianceSet> sets;
    for (std::size_t x = 0; x < t.agent_count(); ++x)
        sets.push_back(alliance_set(AuxiliaryModel::pawlak(), t, x, t.all_issues(), th, PairScope::NonNeutral));
    auto order = rank_candidates(sets, t, {});
    // x7, x8, x12 have six members each; table order breaks the tie
    CHECK(names(t, {order[0], order[1], order[2]}) == S{"x7", "x8", "x12"});
    auto prio = rank_candidates(sets, t, {"x12", "x8"});
    CHECK(names(t, {prio[0], prio[1], prio[2]}) == S{"x12", "x8", "x7"});
    CHECK_THROWS_AS(rank_candidates(sets, t, {"nobody"}), UnknownIdError);

    auto r = run_command("strategy-trisect", cfg(std::string("{") + kTwelve + R"(, "scope": "non-neutral",
        "heuristic": "largest-alliance-set", "priority": ["x12"],
        "thresholds": {"pair": {"h_a": "1/2", "l_c": "1/3"},
                       "strategy": {"l_s": "0", "h_s": "1/2", "l_o": "0", "h_o": "1/2"}}})"));
    CHECK(cell(section(r, "candidates"), 0, "anchor") == "x12");
    CHECK(cell(section(r, "strategy"), 0, "strategy") == "⟨i1,+1⟩∧⟨i2,-1⟩∧⟨i4,-1⟩");
}

TEST_CASE("every command runs and is deterministic")
{
    std::string base = std::string("{") + kTwelve + R"(, "scope": "non-neutral", "restrict": "non-neutral",
        "strategy": "<i1,-1>&<i2,-1>", "combo": 2,
        "thresholds": {"rating": {"low": "-1/2", "high": "1/2"},
                       "pair": {"h_a": "1/2", "l_c": "1/3"},
                       "issue": {"low": "inverse-member-count", "high": "1/2"},
                       "strategy": {"l_s": "0", "h_s": "1/2", "l_o": "0", "h_o": "1/2"}}})";
    for (const char* cmd : {"validate", "trisect-agents", "trisect-issues", "trisect-pairs", "alliance-sets", "mcas",
                            "decisions", "strategies", "strategy-trisect"}) {
        CAPTURE(cmd);
        auto a = render(run_command(cmd, cfg(base)), OutputFormat::CSV);
        auto b = render(run_command(cmd, cfg(base)), OutputFormat::CSV);
        CHECK(a == b);
        CHECK_FALSE(a.empty());
    }
    CHECK(section(run_command("strategies", cfg(base)), "family").rows.size() == 81);
    CHECK_THROWS_AS(run_command("frobnicate", cfg(base)), ParseError);
}

TEST_CASE("command input errors")
{
    CHECK_THROWS_AS(run_command("trisect-agents", cfg(std::string("{") + kTwelve + "}")), ParseError);
    CHECK_THROWS_AS(run_command("trisect-agents", cfg(std::string("{") + kTwelve +
                                                       R"(, "thresholds": {"rating": {"low": "0.5", "high": "1"}}})")),
                    ParseError);
    CHECK_THROWS_AS(run_command("trisect-agents", cfg(std::string("{") + kTwelve +
                                                       R"(, "thresholds": {"rating": {"low": "1/2", "high": "1"}}})")),
                    InvalidThresholdError);
    CHECK_THROWS_AS(run_command("trisect-issues", cfg(std::string("{") + kTwelve + R"(, "agent": "x99"})")),
                    UnknownIdError);
    CHECK_THROWS_AS(run_command("mcas", cfg(std::string("{") + kTwelve + R"(, "cap": {"agents": 5},
        "thresholds": {"pair": {"h_a": "1/2"}}})")),
                    ResourceLimitError);
    CHECK_THROWS_AS(run_command("validate", cfg(R"({"table": "missing.csv"})")), ParseError);
}

TEST_CASE("reproduction targets")
{
    for (const auto& target : reproduce_targets()) {
        CAPTURE(target);
        auto r = reproduce(target, fixture_dir());
        CHECK(r.ok());
        CHECK(r.mismatches() == 0);
    }
    auto g = reproduce("gansu", fixture_dir());
    std::size_t notes = 0;
    for (const auto& c : g.checks)
        notes += c.notes.size();
    CHECK(notes == 1);
    CHECK_THROWS_AS(reproduce("example2", "/nonexistent/dir"), FixtureMissingError);
    CHECK_THROWS_AS(reproduce("example9", fixture_dir()), UnknownIdError);
}

TEST_CASE("reproduction reports a cell-level diff on a corrupted fixture")
{
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "triconf_bad_fixtures";
    fs::remove_all(dir);
    fs::create_directories(dir / "expected");
    fs::copy(fixture_dir() + "/tables", dir / "tables");
    auto e = nlohmann::json::parse(std::ifstream(fixture_dir() + "/expected/example2.json"));
    e["aggregated_ratings"]["x4"] = "1/5";
    std::ofstream(dir / "expected" / "example2.json") << e.dump();
    auto r = reproduce("example2", dir.string());
    CHECK_FALSE(r.ok());
    REQUIRE(r.mismatches() == 1);
    std::string diff;
    for (const auto& c : r.checks)
        for (const auto& d : c.diffs)
            diff = d;
    CHECK(diff == "r(x4): expected 1/5, got 3/5");
    fs::remove(dir / "expected" / "example3.json");
    CHECK_THROWS_AS(reproduce("example3", dir.string()), FixtureMissingError);
    fs::remove_all(dir);
}
