#pragma once

#include <string>
#include <vector>

#include "triconf/errors.hpp"
#include "triconf/workbench.hpp"

#ifndef TRICONF_FIXTURE_DIR
#error "TRICONF_FIXTURE_DIR must be defined by the build"
#endif

namespace th {

using namespace triconf;

inline std::string fixture_dir() { return TRICONF_FIXTURE_DIR; }

inline SituationTable fixture(const std::string& name)
{
    return load_table_file(fixture_dir() + "/tables/" + name + ".csv");
}

// The three bundled situation tables.
inline const SituationTable& six()
{
    static const SituationTable t = fixture("six_agents_five_issues");
    return t;
}
inline const SituationTable& twelve()
{
    static const SituationTable t = fixture("twelve_agents_four_issues");
    return t;
}
inline const SituationTable& cities()
{
    static const SituationTable t = fixture("gansu_cities");
    return t;
}

inline Rational q(const std::string& s) { return parse_rational(s); }

inline IndexSet agents(const SituationTable& t, const std::vector<std::string>& ids) { return t.agent_indices(ids); }
inline IndexSet issues(const SituationTable& t, const std::vector<std::string>& ids) { return t.issue_indices(ids); }
inline std::size_t ag(const SituationTable& t, const std::string& id) { return t.agent_index(id); }
inline std::size_t is(const SituationTable& t, const std::string& id) { return t.issue_index(id); }

inline std::vector<std::string> names(const SituationTable& t, const IndexSet& s, bool agent = true)
{
    return agent ? t.agent_ids(s) : t.issue_ids(s);
}

inline std::vector<std::string> pairs(const SituationTable& t, const std::vector<AgentPair>& ps)
{
    std::vector<std::string> out;
    for (const auto& p : ps)
        out.push_back(t.agents()[p.first] + "," + t.agents()[p.second]);
    return out;
}

using S = std::vector<std::string>;

}  // namespace th
