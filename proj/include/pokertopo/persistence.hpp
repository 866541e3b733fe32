#pragma once

#include <string>
#include <vector>

#include "pokertopo/complex.hpp"
#include "pokertopo/equity.hpp"
#include "pokertopo/rational.hpp"

namespace pokertopo {

/// One stage of a threshold filtration; stages are ordered by strictly
/// decreasing threshold and each complex contains the previous one.
struct FiltrationStage {
    Rational threshold;
    SimplicialComplex complex;
};

using Filtration = std::vector<FiltrationStage>;

/// Death value reported for classes that survive every stage.
Rational persistence_sentinel();

struct PersistencePoint {
    int dimension = 0;
    Rational birth;
    Rational death;  // persistence_sentinel() if never killed
    bool essential = false;

    bool operator==(const PersistencePoint&) const = default;
};

struct PersistenceDiagram {
    std::vector<PersistencePoint> points;

    /// Points of the given dimension alive in the stage with this threshold:
    /// birth >= threshold > death.
    std::size_t alive(int dimension, const Rational& threshold) const;
};

class FiltrationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Column reduction over the two-element field. Faces are ordered by
/// (birth threshold descending, dimension, lexicographic labels); pairs with
/// equal birth and death are dropped. Throws FiltrationError when the stages
/// are not nested, naming the first face that disappears.
PersistenceDiagram persistence(const Filtration& filtration);

/// Threshold filtration of the order complexes of r_p on `vertices`: a first
/// stage at p = 1, then one stage per distinct win probability in (1/2, 1),
/// in decreasing order. The last stage equals the strict relation at 1/2.
Filtration filtration_from_matrix(const CountsSource& source, const std::vector<HolePair>& vertices, TieConvention tc);

}  // namespace pokertopo
