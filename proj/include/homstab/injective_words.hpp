#pragma once

#include "homstab/ssets.hpp"

#include <cstddef>
#include <vector>

namespace homstab {

/// Complex of injective words on n letters: k-simplices are the injective
/// (k+1)-tuples from {1..n}, the j-th face deletes the j-th letter.
/// Simplices are ordered by length then lexicographically, so indices (and
/// labels) are reproducible.
struct InjectiveWordsComplex {
    std::size_t alphabet_size = 0;
    SemiSimplicialSet space;
};

InjectiveWordsComplex build_injective_words(std::size_t n);

/// Exact integral certificate that F(n) is a wedge of (n-1)-spheres: reduced
/// homology vanishes below the top degree and is torsion free there.
struct WedgeCertificate {
    std::size_t n = 0;
    std::vector<std::size_t> reduced_betti;  // degrees 0 .. n-1
    std::size_t top_rank = 0;
    bool torsion_free = true;
};

/// Computes the reduced integral homology of F(n) and checks the wedge
/// shape; throws std::runtime_error if the check fails (it never should).
WedgeCertificate certify_wedge(std::size_t n);

/// |reduced Euler characteristic| of F(n), straight from the counting
/// formula for the number of injective words.  Independent of any homology
/// computation; serves as the oracle for certify_wedge's top rank.
Int expected_top_rank(std::size_t n);

}  // namespace homstab
