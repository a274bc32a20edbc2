#pragma once

#include "homstab/integer_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homstab {

/// Bounded chain complex of finitely generated free Z-modules.
///
/// ranks[i] is the rank in degree bottom_degree + i; boundaries[i] maps that
/// degree to the one below (shape rank(degree-1) x rank(degree), so
/// boundaries[0] has zero rows).  Degrees outside the window have rank zero.
struct ChainComplex {
    int bottom_degree = 0;
    std::vector<std::size_t> ranks;
    std::vector<IntegerMatrix> boundaries;

    bool empty() const { return ranks.empty(); }
    int top_degree() const { return bottom_degree + static_cast<int>(ranks.size()) - 1; }

    std::size_t rank(int degree) const;
    /// Boundary out of the given degree; zero-shaped outside the window.
    IntegerMatrix boundary(int degree) const;

    std::size_t total_rank() const;
};

struct ComplexDefect {
    int degree = 0;
    std::string what;
};

/// Shape consistency plus the exact check that consecutive boundaries
/// compose to zero; reports the first offending degree.
std::optional<ComplexDefect> validate_complex(const ChainComplex& c);

/// Degreewise map of chain complexes.  blocks[i] acts in degree
/// bottom_degree + i and has shape target.rank(degree) x source.rank(degree);
/// degrees outside the window carry the zero map.
struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    int bottom_degree = 0;
    std::vector<IntegerMatrix> blocks;

    IntegerMatrix block(int degree) const;
};

/// Shape consistency plus exact commutation with the boundaries.
std::optional<ComplexDefect> validate_chain_map(const ChainMap& f);

ChainMap identity_chain_map(const ChainComplex& c);
ChainMap zero_chain_map(const ChainComplex& source, const ChainComplex& target);

/// H_k(c; Z) = ker d_k / im d_{k+1}, as invariant factors.
/// Throws std::invalid_argument when the complex does not validate.
AbelianGroupInvariants homology_integral(const ChainComplex& c, int degree);

/// All degrees at once (each boundary is put in Smith form exactly once).
std::map<int, AbelianGroupInvariants> homology_integral_all(const ChainComplex& c);

/// dim H_k over Q (characteristic 0) or F_p, for k = bottom..top.
std::vector<std::size_t> homology_field_dims(const ChainComplex& c, std::int64_t characteristic);

/// Mapping cone of f: cone_k = target_k + source_{k-1} with boundary
/// [d_target, f; 0, -d_source].
ChainComplex mapping_cone(const ChainMap& f);

/// Complex computing the reduced homology of the suspension: a rank-one
/// degree 0 absorbs the augmentation and the input sits shifted up by one,
/// so H_k(result) = reduced H_{k-1}(c).  Requires bottom_degree >= 0.
ChainComplex suspension(const ChainComplex& c);

/// Adjoins a rank-one degree -1 with the augmentation (row of ones) as d_0;
/// homology of the result in degrees >= 0 is the reduced homology of c.
ChainComplex augmented_complex(const ChainComplex& c);

}  // namespace homstab
