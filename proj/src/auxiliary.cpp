#include "triconf/auxiliary.hpp"

#include <json.hpp>

#include "triconf/errors.hpp"

namespace triconf {

namespace {

constexpr Rating P = Rating::Positive;
constexpr Rating N = Rating::Negative;
constexpr Rating Z = Rating::Neutral;

}  // namespace

AuxiliaryModel AuxiliaryModel::pawlak()
{
    return AuxiliaryModel("pawlak", Matrix{{{P, N, Z}, {N, P, Z}, {Z, Z, Z}}});
}

AuxiliaryModel AuxiliaryModel::yao()
{
    return AuxiliaryModel("yao", Matrix{{{P, N, Z}, {N, P, Z}, {Z, Z, P}}});
}

AuxiliaryModel AuxiliaryModel::custom(std::string name, const Matrix& m)
{
    if (m[0][0] != P || m[1][1] != P || m[0][1] != N || m[1][0] != N)
        throw DomainError("auxiliary model '" + name +
                          "' must map (+1,+1) and (-1,-1) to +1 and (+1,-1), (-1,+1) to -1");
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (m[a][b] != m[b][a])
                throw DomainError("auxiliary model '" + name + "' is not symmetric");
    return AuxiliaryModel(std::move(name), m);
}

AuxiliaryModel AuxiliaryModel::from_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("auxiliary model: ") + e.what());
    }
    std::string name = "custom";
    nlohmann::json rows = j;
    if (j.is_object()) {
        if (j.contains("name") && j["name"].is_string())
            name = j["name"].get<std::string>();
        if (!j.contains("matrix"))
            throw ParseError("auxiliary model JSON needs a 'matrix'");
        rows = j["matrix"];
    }
    if (!rows.is_array() || rows.size() != 3)
        throw ParseError("auxiliary model matrix must be 3x3");
    Matrix m{};
    for (std::size_t a = 0; a < 3; ++a) {
        if (!rows[a].is_array() || rows[a].size() != 3)
            throw ParseError("auxiliary model matrix must be 3x3");
        for (std::size_t b = 0; b < 3; ++b) {
            const auto& v = rows[a][b];
            if (v.is_number_integer())
                m[a][b] = rating_from_int(v.get<int>());
            else if (v.is_string())
                m[a][b] = parse_rating(v.get<std::string>());
            else
                throw ParseError("auxiliary model cells must be ratings");
        }
    }
    return custom(name, m);
}

Rating phi_single(const AuxiliaryModel& model, const SituationTable& t, std::size_t x, std::size_t y,
                  std::size_t i)
{
    return phi_of(model, t.at(x, i), t.at(y, i), x == y);
}

Rational phi_aggregated(const AuxiliaryModel& model, const SituationTable& t, std::size_t x, std::size_t y,
                        const IndexSet& J)
{
    if (J.empty())
        return Rational(0);
    std::int64_t sum = 0;
    for (auto i : J)
        sum += to_int(phi_single(model, t, x, y, i));
    return Rational(sum, static_cast<std::int64_t>(J.size()));
}

namespace {

template <class Rate>
PairTrisection split_pairs(const SituationTable& t, Rate rate)
{
    PairTrisection out{Carrier::AgentPairs, {}, {}, {}};
    for (std::size_t x = 0; x < t.agent_count(); ++x)
        for (std::size_t y = 0; y < t.agent_count(); ++y) {
            int v = rate(x, y);
            (v > 0 ? out.positive : v < 0 ? out.negative : out.neutral).emplace_back(x, y);
        }
    return out;
}

}  // namespace

PairTrisection trisect_pairs_auxiliary(const AuxiliaryModel& model, const SituationTable& t, std::size_t i)
{
    return split_pairs(t, [&](std::size_t x, std::size_t y) { return to_int(phi_single(model, t, x, y, i)); });
}

PairTrisection trisect_pairs_auxiliary(const AuxiliaryModel& model, const SituationTable& t, const IndexSet& J,
                                       const ThresholdPair& th)
{
    return split_pairs(t, [&](std::size_t x, std::size_t y) {
        auto v = phi_aggregated(model, t, x, y, J);
        return v >= th.high ? 1 : v <= th.low ? -1 : 0;
    });
}

}  // namespace triconf
