#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <map>
#include <sstream>

#include "triconf/errors.hpp"
#include "triconf/workbench.hpp"

namespace triconf {

using nlohmann::json;
namespace fs = std::filesystem;

bool ReproduceResult::ok() const
{
    for (const auto& c : checks)
        if (!c.ok)
            return false;
    return true;
}

std::size_t ReproduceResult::mismatches() const
{
    std::size_t n = 0;
    for (const auto& c : checks)
        n += c.diffs.size();
    return n;
}

std::vector<std::string> reproduce_targets()
{
    return {"example2", "example3", "example4", "example6", "example8", "gansu"};
}

namespace {

struct Fixtures {
    fs::path dir;

    json expected(const std::string& name) const
    {
        auto p = dir / "expected" / (name + ".json");
        std::ifstream in(p);
        if (!in)
            throw FixtureMissingError("fixture not found: " + p.string());
        try {
            return json::parse(in);
        } catch (const json::parse_error& e) {
            throw ParseError(p.string() + ": " + e.what());
        }
    }

    SituationTable table(const std::string& name) const
    {
        auto p = dir / "tables" / (name + ".csv");
        if (!fs::exists(p))
            throw FixtureMissingError("fixture not found: " + p.string());
        return load_table_file(p.string());
    }
};

// Collects cell comparisons for one named check.
class Checker {
public:
    explicit Checker(std::string name) { c_.name = std::move(name); }

    void same(const std::string& where, const std::string& expected, const std::string& got)
    {
        if (expected != got)
            c_.diffs.push_back(where + ": expected " + expected + ", got " + got);
    }
    void same(const std::string& where, const json& expected, const Rational& got)
    {
        same(where, to_string(parse_rational(expected.get<std::string>())), to_string(got));
    }
    void note(std::string s) { c_.notes.push_back(std::move(s)); }

    Check done()
    {
        c_.ok = c_.diffs.empty();
        return std::move(c_);
    }

private:
    Check c_;
};

std::string listed(const std::vector<std::string>& v)
{
    std::string out = "{";
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? "," : "") + v[k];
    return out + "}";
}

std::string listed(const json& v) { return listed(v.get<std::vector<std::string>>()); }

std::string pair_list(const SituationTable& t, const std::vector<AgentPair>& ps)
{
    std::vector<std::string> v;
    for (const auto& p : ps)
        v.push_back("(" + t.agents()[p.first] + "," + t.agents()[p.second] + ")");
    return listed(v);
}

std::string pair_list(const json& ps)
{
    std::vector<std::string> v;
    for (const auto& p : ps)
        v.push_back("(" + p[0].get<std::string>() + "," + p[1].get<std::string>() + ")");
    return listed(v);
}

Description literals(const json& v)
{
    Description d;
    for (const auto& l : v)
        d.literals.push_back({l[0].get<std::string>(), parse_rating(l[1].get<std::string>())});
    return d;
}

AuxiliaryModel model_named(const std::string& s)
{
    if (s == "yao")
        return AuxiliaryModel::yao();
    return AuxiliaryModel::pawlak();
}

PairThresholds pair_thresholds_of(const json& j)
{
    PairThresholds th;
    auto get = [&](const char* k, Threshold& dst) {
        if (j.contains(k))
            dst = parse_threshold(j[k].get<std::string>());
    };
    get("l_a", th.l_a);
    get("h_a", th.h_a);
    get("l_c", th.l_c);
    get("h_c", th.h_c);
    return th;
}

IssueThresholds issue_thresholds_of(const json& j)
{
    return IssueThresholds::both(parse_threshold(j["low"].get<std::string>()),
                                 parse_threshold(j["high"].get<std::string>()));
}

void compare_trisection(Checker& ck, const std::string& where, const SituationTable& t, const IndexTrisection& got,
                        const json& exp, bool agents)
{
    auto ids = [&](const IndexSet& s) { return agents ? t.agent_ids(s) : t.issue_ids(s); };
    // A part missing from the fixture was not printed and is left unchecked.
    if (exp.contains("positive"))
        ck.same(where + " positive", listed(exp["positive"]), listed(ids(got.positive)));
    if (exp.contains("negative"))
        ck.same(where + " negative", listed(exp["negative"]), listed(ids(got.negative)));
    if (exp.contains("neutral"))
        ck.same(where + " neutral", listed(exp["neutral"]), listed(ids(got.neutral)));
}

struct Erratum {
    std::string printed;
    std::string note;
};

// key: "matrix|first|second|component"
std::map<std::string, Erratum> errata_of(const json& e)
{
    std::map<std::string, Erratum> out;
    if (!e.contains("errata"))
        return out;
    for (const auto& x : e["errata"])
        out[x["matrix"].get<std::string>() + "|" + x["first"].get<std::string>() + "|" +
            x["second"].get<std::string>() + "|" + x["component"].get<std::string>()] = {
            x["printed"].get<std::string>(), x["note"].get<std::string>()};
    return out;
}

void compare_degree_matrix(Checker& ck, const std::string& matrix, const SituationTable& t, const json& exp,
                           const std::map<std::string, Erratum>& errata,
                           const std::function<DegreePair(std::size_t, std::size_t)>& f)
{
    for (auto& [xs, row] : exp.items())
        for (auto& [ys, cell] : row.items()) {
            auto d = f(t.agent_index(xs), t.agent_index(ys));
            std::pair<const char*, Rational> parts[] = {{"alliance", d.alliance}, {"conflict", d.conflict}};
            for (int k = 0; k < 2; ++k) {
                std::string where = matrix + " (" + xs + "," + ys + ") " + parts[k].first;
                auto expected = to_string(parse_rational(cell[k].get<std::string>()));
                auto got = to_string(parts[k].second);
                auto it = errata.find(matrix + "|" + xs + "|" + ys + "|" + parts[k].first);
                if (it != errata.end() && expected != got &&
                    expected == to_string(parse_rational(it->second.printed))) {
                    ck.note(where + ": printed " + expected + ", computed " + got + " (erratum: " + it->second.note +
                            ")");
                    continue;
                }
                ck.same(where, expected, got);
            }
        }
}

ReproduceResult run_example2(const Fixtures& fx)
{
    auto e = fx.expected("example2");
    auto t = fx.table(e["table"].get<std::string>());
    auto X = t.all_agents();
    auto J = t.all_issues();
    ReproduceResult r{"example2", {}};

    Checker ratings("aggregated ratings");
    for (auto& [x, v] : e["aggregated_ratings"].items())
        ratings.same("r(" + x + ")", v, aggregate_rating_over_issues(t, t.agent_index(x), J));
    for (auto& [i, v] : e["issue_ratings"].items())
        ratings.same("r(" + i + ")", v, aggregate_rating_over_agents(t, X, t.issue_index(i)));
    r.checks.push_back(ratings.done());

    Checker tri("agent and issue trisections");
    {
        const auto& a = e["agent_trisection"];
        ThresholdPair th(parse_rational(a["low"].get<std::string>()), parse_rational(a["high"].get<std::string>()),
                         ThresholdKind::SignedRating);
        compare_trisection(tri, "agents", t, trisect_agents(t, X, J, th), a, true);
        const auto& b = e["issue_trisection"];
        ThresholdPair ti(parse_rational(b["low"].get<std::string>()), parse_rational(b["high"].get<std::string>()),
                         ThresholdKind::SignedRating);
        compare_trisection(tri, "issues", t, trisect_issues_by_rating(t, J, X, ti), b, false);
    }
    r.checks.push_back(tri.done());

    Checker aux("auxiliary function values");
    for (auto& [mname, mat] : e["auxiliary_values"].items()) {
        auto m = model_named(mname);
        for (auto& [xs, row] : mat.items())
            for (auto& [ys, v] : row.items())
                aux.same(mname + " (" + xs + "," + ys + ")", v,
                         phi_aggregated(m, t, t.agent_index(xs), t.agent_index(ys), J));
    }
    r.checks.push_back(aux.done());

    Checker pairs("pair trisections");
    {
        const auto& p = e["pair_trisections"];
        ThresholdPair th(parse_rational(p["low"].get<std::string>()), parse_rational(p["high"].get<std::string>()),
                         ThresholdKind::SignedRating);
        for (const char* mname : {"pawlak", "yao"}) {
            auto got = trisect_pairs_auxiliary(model_named(mname), t, J, th);
            const auto& ex = p[mname];
            pairs.same(std::string(mname) + " alliance", pair_list(ex["alliance"]), pair_list(t, got.positive));
            pairs.same(std::string(mname) + " conflict", pair_list(ex["conflict"]), pair_list(t, got.negative));
            pairs.same(std::string(mname) + " neutrality", pair_list(ex["neutral"]), pair_list(t, got.neutral));
        }
    }
    r.checks.push_back(pairs.done());

    Checker col("averaged values over issue subsets");
    for (const auto& c : e["collision"]) {
        auto m = model_named(c["model"].get<std::string>());
        auto Js = t.issue_indices(c["issues"].get<std::vector<std::string>>());
        col.same(c["model"].get<std::string>() + " (" + c["first"].get<std::string>() + "," +
                     c["second"].get<std::string>() + ") over " + listed(c["issues"]),
                 c["value"],
                 phi_aggregated(m, t, t.agent_index(c["first"].get<std::string>()),
                                t.agent_index(c["second"].get<std::string>()), Js));
    }
    r.checks.push_back(col.done());
    return r;
}

ReproduceResult run_example3(const Fixtures& fx)
{
    auto e = fx.expected("example3");
    ReproduceResult r{"example3", {}};
    std::vector<Rating> order;
    for (const auto& s : e["order"])
        order.push_back(parse_rating(s.get<std::string>()));
    for (const char* mname : {"pawlak", "yao"}) {
        auto m = model_named(mname);
        Checker ck(std::string(mname) + " single-issue degrees");
        for (const char* comp : {"alliance", "conflict"}) {
            const auto& tab = e[mname][comp];
            for (std::size_t a = 0; a < order.size(); ++a)
                for (std::size_t b = 0; b < order.size(); ++b) {
                    auto cell = tab[a][b].get<std::string>();
                    std::string where = std::string(comp) + " [" + rating_text(order[a]) + "," +
                                        rating_text(order[b]) + "]";
                    auto value = [&](bool same_agent) {
                        auto d = degrees_of(phi_of(m, order[a], order[b], same_agent));
                        return std::string(comp) == "alliance" ? d.alliance : d.conflict;
                    };
                    if (cell == "0*") {
                        ck.same(where + " distinct agents", "0", to_string(value(false)));
                        ck.same(where + " same agent", "1", to_string(value(true)));
                    } else {
                        ck.same(where, to_string(parse_rational(cell)), to_string(value(false)));
                    }
                }
        }
        r.checks.push_back(ck.done());
    }
    return r;
}

ReproduceResult run_example4(const Fixtures& fx)
{
    auto e = fx.expected("example4");
    auto t = fx.table(e["table"].get<std::string>());
    auto J = t.all_issues();
    ReproduceResult r{"example4", {}};
    std::map<std::string, Erratum> none;
    for (const char* mname : {"pawlak", "yao"}) {
        auto m = model_named(mname);
        Checker ck(std::string(mname) + " degree matrix");
        compare_degree_matrix(ck, mname, t, e[mname], none,
                              [&](std::size_t x, std::size_t y) { return pair_degrees(m, t, x, y, J, PairScope::IssueSet); });
        r.checks.push_back(ck.done());
    }
    auto pw = AuxiliaryModel::pawlak();
    Checker nn("non-neutral degree matrix");
    compare_degree_matrix(nn, "non_neutral", t, e["non_neutral"], none,
                          [&](std::size_t x, std::size_t y) { return pair_degrees(pw, t, x, y, J, PairScope::NonNeutral); });
    r.checks.push_back(nn.done());

    Checker spot("spot values and non-neutral issue sets");
    for (const auto& s : e["spot"]) {
        auto kind = s["kind"].get<std::string>();
        auto x = t.agent_index(s["first"].get<std::string>());
        auto y = t.agent_index(s["second"].get<std::string>());
        auto d = kind == "non_neutral" ? pair_degrees(pw, t, x, y, J, PairScope::NonNeutral)
                                       : pair_degrees(model_named(kind), t, x, y, J, PairScope::IssueSet);
        std::string where = kind + " (" + s["first"].get<std::string>() + "," + s["second"].get<std::string>() + ")";
        if (s.contains("alliance"))
            spot.same(where + " alliance", s["alliance"], d.alliance);
        if (s.contains("conflict"))
            spot.same(where + " conflict", s["conflict"], d.conflict);
    }
    for (auto& [x, v] : e["non_neutral_issues"].items())
        spot.same("J_" + x, listed(v), listed(t.issue_ids(non_neutral_issues(t, t.agent_index(x), J))));
    r.checks.push_back(spot.done());
    return r;
}

// Shared by the twelve-agent example and the city case study.
void run_alliance_pipeline(const json& e, const SituationTable& t, ReproduceResult& r)
{
    auto m = model_named(e["model"].get<std::string>());
    auto scope = e["scope"].get<std::string>() == "non-neutral" ? PairScope::NonNeutral : PairScope::IssueSet;
    auto J = t.all_issues();
    auto pth = pair_thresholds_of(e["pair_thresholds"]);
    auto ith = issue_thresholds_of(e["issue_thresholds"]);
    auto combo = combination_from_int(e["combo"].get<int>());

    Checker as("alliance sets");
    for (auto& [x, v] : e["alliance_sets"].items())
        as.same("AS(" + x + ")", listed(v),
                listed(t.agent_ids(alliance_set(m, t, t.agent_index(x), J, pth, scope).members)));
    r.checks.push_back(as.done());

    Checker mc("maximal consistent alliance sets");
    auto sets = maximal_consistent_alliance_sets(m, t, J, pth, scope);
    std::vector<std::string> got, exp;
    for (const auto& s : sets)
        got.push_back(listed(t.agent_ids(s)));
    for (const auto& s : e["mcas"])
        exp.push_back(listed(s));
    std::sort(got.begin(), got.end());
    std::sort(exp.begin(), exp.end());
    mc.same("family", listed(exp), listed(got));
    r.checks.push_back(mc.done());

    Checker it("issue trisections and decisions");
    for (std::size_t k = 0; k < e["mcas"].size(); ++k) {
        auto M = t.agent_indices(e["mcas"][k].get<std::vector<std::string>>());
        std::string where = "X" + std::to_string(k + 1) + "=" + listed(e["mcas"][k]);
        compare_trisection(it, where, t, trisect_issues_two_functions(m, t, M, J, combo, ith), e["issue_trisections"][k],
                           false);
        it.same(where + " decision", to_text(literals(e["decisions"][k])),
                to_text(decide_alliance_set(m, t, M, J, combo, ith, Restrict::NonNeutral)));
    }
    for (auto& [x, v] : e["anchor_decisions"].items())
        it.same("Des(AS(" + x + "))", to_text(literals(v)),
                to_text(describe_agent(t, t.agent_index(x), J, Restrict::NonNeutral).description));
    r.checks.push_back(it.done());
}

ReproduceResult run_example6(const Fixtures& fx)
{
    auto e = fx.expected("example6");
    auto t = fx.table(e["table"].get<std::string>());
    ReproduceResult r{"example6", {}};
    run_alliance_pipeline(e, t, r);
    return r;
}

ReproduceResult run_example8(const Fixtures& fx)
{
    auto e = fx.expected("example8");
    auto t = fx.table(e["table"].get<std::string>());
    auto m = model_named(e["model"].get<std::string>());
    auto issues = e["issues"].get<std::vector<std::string>>();
    ReproduceResult r{"example8", {}};

    std::map<std::string, Strategy> family;
    for (auto& [label, lits] : e["family"].items())
        family[label] = literals(lits);

    Checker fam("non-neutral family");
    {
        std::vector<std::string> exp, got;
        for (auto& [label, s] : family)
            exp.push_back(to_text(s));
        // The tabulated family omits the empty strategy S0, which belongs to the family.
        exp.push_back(to_text(Strategy{}));
        FamilyStream stream(issues, FamilyKind::NonNeutral);
        while (auto s = stream.next())
            got.push_back(to_text(*s));
        std::sort(exp.begin(), exp.end());
        std::sort(got.begin(), got.end());
        fam.same("size", std::to_string(exp.size()), std::to_string(got.size()));
        if (exp != got)
            fam.same("members", listed(exp), listed(got));
    }
    r.checks.push_back(fam.done());

    Checker al("strategy alliance degrees");
    for (auto& [label, row] : e["alliance"].items())
        for (auto& [x, v] : row.items())
            al.same(label + "," + x, v, strategy_agent_degrees(m, t, family.at(label), t.agent_index(x)).alliance);
    for (const auto& s : e["spot"])
        al.same("spot " + s["strategy"].get<std::string>() + "," + s["agent"].get<std::string>(), s["alliance"],
                strategy_agent_degrees(m, t, family.at(s["strategy"].get<std::string>()),
                                       t.agent_index(s["agent"].get<std::string>()))
                    .alliance);
    r.checks.push_back(al.done());

    Checker du("duals and strategy trisections");
    for (const auto& d : e["duals"]) {
        auto a = d[0].get<std::string>(), b = d[1].get<std::string>();
        du.same("dual(" + a + ")", to_text(family.at(b)), to_text(dual(family.at(a))));
    }
    auto q = [](const json& j, const char* k) { return parse_rational(j[k].get<std::string>()); };
    for (const auto& s : e["trisections"]) {
        ThresholdPair ts(q(s, "l_s"), q(s, "h_s"), ThresholdKind::UnitDegree);
        ThresholdPair to(q(s, "l_o"), q(s, "h_o"), ThresholdKind::UnitDegree);
        auto label = s["strategy"].get<std::string>();
        compare_trisection(du, label, t, trisect_agents_by_strategy(m, t, family.at(label), t.all_agents(), ts, to), s,
                           true);
    }
    r.checks.push_back(du.done());
    return r;
}

ReproduceResult run_gansu(const Fixtures& fx)
{
    auto e = fx.expected("gansu");
    auto t = fx.table(e["table"].get<std::string>());
    auto m = model_named(e["model"].get<std::string>());
    auto J = t.all_issues();
    ReproduceResult r{"gansu", {}};

    Checker deg("non-neutral degree matrix");
    compare_degree_matrix(deg, "degrees", t, e["degrees"], errata_of(e),
                          [&](std::size_t x, std::size_t y) { return pair_degrees(m, t, x, y, J, PairScope::NonNeutral); });
    r.checks.push_back(deg.done());

    run_alliance_pipeline(e, t, r);

    Checker st("strategies");
    auto q = [](const json& j, const char* k) { return parse_rational(j[k].get<std::string>()); };
    for (const auto& s : e["strategies"]) {
        auto name = s["name"].get<std::string>();
        auto S = literals(s["literals"]);
        auto anchor = t.agent_index(s["anchor"].get<std::string>());
        st.same(name + " literals", to_text(S),
                to_text(to_non_neutral(describe_agent(t, anchor, J, Restrict::All).description)));
        ThresholdPair ts(q(s, "l_s"), q(s, "h_s"), ThresholdKind::UnitDegree);
        ThresholdPair to(q(s, "l_o"), q(s, "h_o"), ThresholdKind::UnitDegree);
        compare_trisection(st, name, t, trisect_agents_by_strategy(m, t, S, t.all_agents(), ts, to), s, true);
    }
    st.same("non-neutral family size", e["non_neutral_family_size"].get<std::string>(),
            std::to_string(family_size(t.issue_count(), FamilyKind::NonNeutral)));
    r.checks.push_back(st.done());
    return r;
}

}  // namespace

ReproduceResult reproduce(const std::string& target, const std::string& fixture_dir)
{
    Fixtures fx{fs::path(fixture_dir)};
    if (!fs::is_directory(fx.dir))
        throw FixtureMissingError("fixture directory not found: " + fixture_dir);
    if (target == "example2")
        return run_example2(fx);
    if (target == "example3")
        return run_example3(fx);
    if (target == "example4")
        return run_example4(fx);
    if (target == "example6")
        return run_example6(fx);
    if (target == "example8")
        return run_example8(fx);
    if (target == "gansu")
        return run_gansu(fx);
    throw UnknownIdError("unknown reproduce target '" + target + "'");
}

Report reproduce_report(const std::vector<ReproduceResult>& results)
{
    Report r{"reproduce", {}};
    Section summary{"summary", {"target", "check", "status", "mismatches"}, {}};
    Section diffs{"mismatches", {"target", "check", "detail"}, {}};
    Section notes{"notes", {"target", "check", "detail"}, {}};
    for (const auto& res : results)
        for (const auto& c : res.checks) {
            summary.rows.push_back({res.target, c.name, c.ok ? "ok" : "MISMATCH", std::to_string(c.diffs.size())});
            for (const auto& d : c.diffs)
                diffs.rows.push_back({res.target, c.name, d});
            for (const auto& n : c.notes)
                notes.rows.push_back({res.target, c.name, n});
        }
    r.sections.push_back(summary);
    if (!diffs.rows.empty())
        r.sections.push_back(diffs);
    if (!notes.rows.empty())
        r.sections.push_back(notes);
    return r;
}

}  // namespace triconf
