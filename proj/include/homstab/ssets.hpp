#pragma once

#include "homstab/chain_complex.hpp"
#include "homstab/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homstab {

/// Finite semi-simplicial set: level_sizes[k] simplices in dimension k and,
/// for k >= 1, face maps faces[k][i] : level k -> level k-1 for 0 <= i <= k.
/// labels are optional display names (empty, or one list per level).
struct SemiSimplicialSet {
    std::vector<std::size_t> level_sizes;
    std::vector<std::vector<std::vector<std::size_t>>> faces;
    std::vector<std::vector<std::string>> labels;

    int dimension() const { return static_cast<int>(level_sizes.size()) - 1; }
    std::size_t level_size(std::size_t k) const { return k < level_sizes.size() ? level_sizes[k] : 0; }
    std::size_t face(std::size_t k, std::size_t i, std::size_t simplex) const;
    std::size_t simplex_count() const;
    std::string label(std::size_t k, std::size_t simplex) const;
};

/// First failed simplicial identity d_i d_j = d_{j-1} d_i (i < j) at level k,
/// or a structural problem described by `what`.
struct SimplicialDefect {
    std::size_t k = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t simplex = 0;
    std::string what;
};

std::optional<SimplicialDefect> validate(const SemiSimplicialSet& x);

/// Semi-simplicial set with a basepoint simplex in every level; face maps
/// must send basepoints to basepoints.
struct PointedSemiSimplicialSet {
    SemiSimplicialSet space;
    std::vector<std::size_t> basepoints;
};

std::optional<SimplicialDefect> validate(const PointedSemiSimplicialSet& x);

/// Simplicial chain complex: free on the simplices, boundary the alternating
/// sum of the face maps.
ChainComplex chain_complex_of(const SemiSimplicialSet& x);

/// Free on the non-basepoint simplices; faces landing on a basepoint
/// contribute zero.  Computes the reduced homology of the pointed realisation.
ChainComplex reduced_chain_complex_of(const PointedSemiSimplicialSet& x);

/// The half-smash construction: level m is the basepoint together with the
/// pairs (sigma, j) for sigma an (m-1)-simplex of x and 0 <= j <= m, with
///   d_i(sigma, j) = (d_i sigma, j-1)      for i < j,
///   d_i(sigma, j) = basepoint             for i = j,
///   d_i(sigma, j) = (d_{i-1} sigma, j)    for i > j.
/// The input is read as augmented by one (-1)-simplex, so level 0 carries a
/// single vertex besides the basepoint and faces of 0-simplices land on it.
/// Equivalently, the result is the levelwise quotient of the join with one
/// point by the original set.
PointedSemiSimplicialSet half_smash_construction(const SemiSimplicialSet& x);

/// Filtration of the simplicial chain complex by simplex dimension.
FilteredComplex skeletal_filtration(const SemiSimplicialSet& x);

/// Levelwise simplicial map: map[k][s] is the image in the target's level k.
struct SimplicialMap {
    SemiSimplicialSet source;
    SemiSimplicialSet target;
    std::vector<std::vector<std::size_t>> map;
};

/// Shape + commutation with all face maps.
std::optional<std::string> validate_simplicial_map(const SimplicialMap& f);

ChainMap chain_map_of(const SimplicialMap& f);

/// A covering additionally has constant fiber cardinality over every simplex
/// and face maps restricting to bijections between fibers.
std::optional<std::string> validate_covering(const SimplicialMap& p);

/// Number of sheets (1 for coverings of the empty set).
std::size_t covering_degree(const SimplicialMap& p);

/// Chain-level transfer of a finite covering p : E -> B, sending a simplex of
/// B to the sum of its preimages.  The composite (chains of p) * transfer is
/// exactly (degree) * identity.  Throws std::invalid_argument if p is not a
/// covering.
ChainMap covering_transfer(const SimplicialMap& p);

}  // namespace homstab
