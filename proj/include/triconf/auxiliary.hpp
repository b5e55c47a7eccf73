#pragma once

#include <array>
#include <string>
#include <string_view>

#include "triconf/table.hpp"

namespace triconf {

// Value of Φ_i for two distinct agents given their ratings. Matrix rows and
// columns are indexed in the order +1, -1, 0.
class AuxiliaryModel {
public:
    using Matrix = std::array<std::array<Rating, 3>, 3>;

    static AuxiliaryModel pawlak();
    static AuxiliaryModel yao();
    // Rejects matrices that break symmetry or the fixed ±1 cells (DomainError).
    static AuxiliaryModel custom(std::string name, const Matrix& m);
    // {"name": "...", "matrix": [[...],[...],[...]]} or a bare 3x3 array.
    static AuxiliaryModel from_json(std::string_view text);

    const std::string& name() const { return name_; }
    Rating cell(Rating a, Rating b) const { return m_[slot(a)][slot(b)]; }
    const Matrix& matrix() const { return m_; }

    static std::size_t slot(Rating r) { return r == Rating::Positive ? 0 : r == Rating::Negative ? 1 : 2; }

private:
    AuxiliaryModel(std::string name, const Matrix& m) : name_(std::move(name)), m_(m) {}

    std::string name_;
    Matrix m_;
};

// Φ between two rating rows. `same` marks the self-pair, which is always allied.
inline Rating phi_of(const AuxiliaryModel& model, Rating a, Rating b, bool same)
{
    return same ? Rating::Positive : model.cell(a, b);
}

Rating phi_single(const AuxiliaryModel& model, const SituationTable& t, std::size_t x, std::size_t y,
                  std::size_t i);

// Average of Φ_i over J; 0 for the empty set.
Rational phi_aggregated(const AuxiliaryModel& model, const SituationTable& t, std::size_t x, std::size_t y,
                        const IndexSet& J);

// All ordered pairs of agents including the diagonal, row-major.
PairTrisection trisect_pairs_auxiliary(const AuxiliaryModel& model, const SituationTable& t, std::size_t i);
PairTrisection trisect_pairs_auxiliary(const AuxiliaryModel& model, const SituationTable& t, const IndexSet& J,
                                       const ThresholdPair& th);

}  // namespace triconf
