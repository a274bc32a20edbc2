#pragma once

#include "homstab/chain_complex.hpp"
#include "homstab/rational_matrix.hpp"
#include "homstab/stability_table.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace homstab {

/// Abstract stability system in one homological degree: rational spaces
/// A_0..A_N with stabilisations i_n : A_n -> A_{n+1} and transfers
/// t_n : A_n -> A_{n-1} satisfying t_n i_{n-1} = i_{n-2} t_{n-1} + Id
/// (with the n = 1 case reading t_1 i_0 = Id).
struct DoldSystem {
    std::vector<std::size_t> dims;        // a_0 .. a_N
    std::vector<RationalMatrix> stab;     // stab[n] = i_n,     n = 0..N-1
    std::vector<RationalMatrix> trans;    // trans[n-1] = t_n,  n = 1..N

    std::size_t length() const { return dims.empty() ? 0 : dims.size() - 1; }
    const RationalMatrix& i(std::size_t n) const { return stab.at(n); }
    const RationalMatrix& t(std::size_t n) const { return trans.at(n - 1); }
};

/// Exact check of the transfer relations; nullopt when they all hold,
/// otherwise the first failing n.  Throws on inconsistent shapes.
std::optional<std::size_t> verify_dold_relations(const DoldSystem& s);

/// t_{n,m} = (t_{m+1} ... t_n) / (n-m)!  (so t_{n,n} = Id).
RationalMatrix iterated_transfer(const DoldSystem& s, std::size_t n, std::size_t m);

struct DoldDecomposition {
    std::vector<std::size_t> b_dims;        // dim coker(i_{n-1})
    std::vector<RationalMatrix> phi;        // Phi_n : A_n -> B_n + ... + B_0
    bool iso = false;                       // every Phi_n invertible
    bool composites_invertible = false;     // every t_{n+1} i_n invertible
};

/// Splits each A_n as the sum of the B_m via iterated transfers.
/// Throws std::invalid_argument when the relations do not hold.
DoldDecomposition dold_decompose(const DoldSystem& s);

/// Canonical relation-satisfying system with prescribed summand dimensions,
/// conjugated by seeded random unimodular changes of basis.  Deterministic
/// for a fixed seed.
DoldSystem random_dold_system(std::uint64_t seed, std::size_t N, const std::vector<std::size_t>& b_dims);

/// Stabilisation onset of one table row: the smallest n such that the row is
/// constant from n to the end of the table.  "none" (nullopt) when only the
/// final column would qualify, i.e. the row still moves at the table edge.
struct OnsetReport {
    std::optional<std::size_t> onset;
    bool within_2i_bound = false;  // onset <= max(2i, first tabulated n)
};

std::vector<OnsetReport> stability_range(const StabilityTable& t);

/// Minimal CW chain model of S^{d-1} with free Z/2-action (two cells per
/// degree 0..d-1).
ChainComplex sphere_equivariant_model(std::size_t d);

/// Quotient model of RP^{d-1}: one cell per degree, boundary 1 + (-1)^k.
ChainComplex projective_space_model(std::size_t d);

/// Chain map of the double cover S^{d-1} -> RP^{d-1} (both cells of each
/// degree map to the unique quotient cell).
ChainMap sphere_quotient_map(std::size_t d);

/// Divisibility of the top-degree class tau: computes H_{d-1} of the
/// quotient model and the index of the image of the covering projection on
/// top homology (nullopt when the image, or the target, is zero).
struct TauExperimentResult {
    AbelianGroupInvariants target_group;
    std::optional<Int> image_index;
};

TauExperimentResult tau_experiment(std::size_t d);  // d >= 2

}  // namespace homstab
