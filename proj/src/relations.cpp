#include "triconf/relations.hpp"

#include <algorithm>

#include "triconf/errors.hpp"

namespace triconf {

ResolvedPairThresholds resolve_for_anchor(const PairThresholds& t, const SituationTable& table, std::size_t x,
                                          const IndexSet& J)
{
    std::size_t count = 0;
    bool rules = !(t.l_a.is_constant() && t.h_a.is_constant() && t.l_c.is_constant() && t.h_c.is_constant());
    if (rules)
        count = non_neutral_issues(table, x, J).size();
    return {resolve_pair(t.l_a, t.h_a, count, ThresholdKind::UnitDegree),
            resolve_pair(t.l_c, t.h_c, count, ThresholdKind::UnitDegree)};
}

DegreePair pair_degrees(const AuxiliaryModel& model, const SituationTable& t, std::size_t x, std::size_t y,
                        const IndexSet& J, PairScope scope)
{
    return scope == PairScope::NonNeutral ? alliance_conflict_non_neutral(model, t, x, y, J)
                                          : alliance_conflict_over(model, t, x, y, J);
}

namespace {

// +1 alliance, -1 conflict, 0 neutrality
int classify(const DegreePair& d, const ResolvedPairThresholds& r, std::size_t x, std::size_t y)
{
    bool allied = d.alliance >= r.alliance.high && d.conflict <= r.conflict.low;
    bool conflicting = d.alliance <= r.alliance.low && d.conflict >= r.conflict.high;
    if (allied && conflicting)
        throw InvalidThresholdError("resolved thresholds put pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                    ") in both the alliance and the conflict part");
    return allied ? 1 : conflicting ? -1 : 0;
}

}  // namespace

PairTrisection trisect_pairs_two_functions(const AuxiliaryModel& model, const SituationTable& t,
                                           const IndexSet& J, const PairThresholds& th, PairScope scope)
{
    PairTrisection out{Carrier::AgentPairs, {}, {}, {}};
    for (std::size_t x = 0; x < t.agent_count(); ++x) {
        auto r = resolve_for_anchor(th, t, x, J);
        for (std::size_t y = 0; y < t.agent_count(); ++y) {
            int v = classify(pair_degrees(model, t, x, y, J, scope), r, x, y);
            (v > 0 ? out.positive : v < 0 ? out.negative : out.neutral).emplace_back(x, y);
        }
    }
    return out;
}

Relation alliance_relation(const AuxiliaryModel& model, const SituationTable& t, const IndexSet& J,
                           const PairThresholds& th, PairScope scope)
{
    std::size_t n = t.agent_count();
    Relation rel(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
        auto r = resolve_for_anchor(th, t, x, J);
        for (std::size_t y = 0; y < n; ++y)
            rel[x][y] = classify(pair_degrees(model, t, x, y, J, scope), r, x, y) > 0;
    }
    return rel;
}

AllianceSet alliance_set(const AuxiliaryModel& model, const SituationTable& t, std::size_t x, const IndexSet& J,
                         const PairThresholds& th, PairScope scope)
{
    if (x >= t.agent_count())
        throw UnknownIdError("agent position " + std::to_string(x) + " is out of range");
    auto r = resolve_for_anchor(th, t, x, J);
    AllianceSet as{x, {}, scope};
    for (std::size_t y = 0; y < t.agent_count(); ++y)
        if (classify(pair_degrees(model, t, x, y, J, scope), r, x, y) > 0)
            as.members.push_back(y);
    return as;
}

namespace {

struct CliqueSearch {
    const std::vector<std::vector<bool>>& adj;
    std::vector<IndexSet> found;

    void expand(IndexSet& R, IndexSet P, IndexSet X)
    {
        if (P.empty() && X.empty()) {
            found.push_back(R);
            std::sort(found.back().begin(), found.back().end());
            return;
        }
        // Tomita pivot: the vertex of P ∪ X with most neighbours in P
        std::size_t pivot = 0, best = 0;
        bool have = false;
        for (const auto* set : {&P, &X})
            for (auto u : *set) {
                std::size_t deg = 0;
                for (auto v : P)
                    deg += adj[u][v];
                if (!have || deg > best) {
                    pivot = u;
                    best = deg;
                    have = true;
                }
            }
        IndexSet candidates;
        for (auto v : P)
            if (!adj[pivot][v])
                candidates.push_back(v);
        for (auto v : candidates) {
            IndexSet P2, X2;
            for (auto w : P)
                if (adj[v][w])
                    P2.push_back(w);
            for (auto w : X)
                if (adj[v][w])
                    X2.push_back(w);
            R.push_back(v);
            expand(R, std::move(P2), std::move(X2));
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), v));
            X.push_back(v);
        }
    }
};

}  // namespace

std::vector<IndexSet> maximal_cliques(const Relation& rel, std::size_t cap)
{
    std::size_t n = rel.size();
    if (n > cap)
        throw ResourceLimitError("maximal consistent alliance sets: " + std::to_string(n) +
                                 " agents exceed the cap of " + std::to_string(cap));
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            adj[x][y] = x != y && rel[x][y] && rel[y][x];
    CliqueSearch search{adj, {}};
    IndexSet R, P, X;
    // an agent whose self-pair is not allied cannot sit in any consistent set
    for (std::size_t x = 0; x < n; ++x)
        if (rel[x][x])
            P.push_back(x);
    if (P.empty())
        return {};
    search.expand(R, std::move(P), std::move(X));
    std::sort(search.found.begin(), search.found.end());
    return std::move(search.found);
}

std::vector<IndexSet> maximal_consistent_alliance_sets(const AuxiliaryModel& model, const SituationTable& t,
                                                       const IndexSet& J, const PairThresholds& th,
                                                       PairScope scope, std::size_t cap)
{
    if (t.agent_count() > cap)
        throw ResourceLimitError("maximal consistent alliance sets: " + std::to_string(t.agent_count()) +
                                 " agents exceed the cap of " + std::to_string(cap));
    return maximal_cliques(alliance_relation(model, t, J, th, scope), cap);
}

}  // namespace triconf
