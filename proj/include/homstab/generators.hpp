#pragma once

#include "homstab/chain_complex.hpp"
#include "homstab/spectral.hpp"
#include "homstab/ssets.hpp"

#include <random>

namespace homstab {

/// Deterministic random instances for property checks.  All draws reduce the
/// engine's raw output directly (no distribution objects), so sequences are
/// identical across standard libraries.

IntegerMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t max_dim, long max_abs);

/// Random bounded complex with dd = 0 by construction: each boundary is a
/// random combination of kernel columns of the previous one.
ChainComplex random_chain_complex(std::mt19937_64& rng, std::size_t max_degrees, std::size_t max_rank, long max_abs);

/// Random chain map between random complexes, of the form dh + hd for a
/// random degree-raising h (always commutes with the boundaries).
ChainMap random_chain_map(std::mt19937_64& rng, std::size_t max_degrees, std::size_t max_rank, long max_abs);

/// Random chain complex with admissible filtration levels.
FilteredComplex random_filtered_complex(std::mt19937_64& rng, std::size_t max_degrees, std::size_t max_rank,
                                        long max_abs, unsigned level_slack);

/// Random downward-closed set family on `vertices` vertices (faces delete
/// the i-th smallest element, so the simplicial identities hold on the nose).
SemiSimplicialSet random_semi_simplicial_set(std::mt19937_64& rng, std::size_t vertices, std::size_t max_facets);

SemiSimplicialSet semi_simplicial_circle();

/// Disjoint union of `sheets` copies of the base, projecting down.
SimplicialMap trivial_sheeted_cover(const SemiSimplicialSet& base, std::size_t sheets);

/// Connected m-fold cover of the semi-simplicial circle.
SimplicialMap cyclic_circle_cover(std::size_t sheets);

}  // namespace homstab
