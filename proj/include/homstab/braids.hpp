#pragma once

#include "homstab/integer_matrix.hpp"
#include "homstab/stability_table.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace homstab {

/// Ordered sequence of positive parts summing to n; the basis elements of
/// the mod-2 cochain model of the n-strand configuration space of the plane.
struct Composition {
    std::vector<std::size_t> parts;

    std::size_t total() const;
    std::size_t degree() const { return total() - parts.size(); }
    std::string to_string() const;
    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;
};

/// Mod-2 cochain complex on compositions of n.  The differential raises the
/// cohomological degree by one, merging adjacent parts with the binomial
/// coefficient binom(a_j + a_{j+1}, a_j) reduced mod 2.
struct FuksComplex {
    std::size_t n = 0;
    std::vector<std::vector<Composition>> basis;  // basis[i]: degree-i compositions, lex order
    std::vector<IntegerMatrix> deltas;            // deltas[i] : C^i -> C^{i+1}, 0/1 entries

    std::size_t dim(std::size_t i) const { return i < basis.size() ? basis[i].size() : 0; }
};

FuksComplex build_fuks_complex(std::size_t n);

/// dim H^i(C_n(R^2); F_2) for i = 0..n-1; over a field these coincide with
/// the homology dimensions in the same degrees.
std::vector<std::size_t> fuks_mod2_dims(std::size_t n);

/// Table dims[i][n] for n = 1..n_max, i = 0..i_max.
StabilityTable stability_table_mod2(std::size_t n_max, std::size_t i_max);
StabilityTable stability_table_mod2(std::size_t n_max, std::size_t i_max, std::size_t jobs);

/// Finite presentation: relators are words in the generators, stored as
/// signed 1-based indices (-g is the inverse of generator g).
struct GroupPresentation {
    std::size_t generators = 0;
    std::vector<std::vector<int>> relators;
};

/// Standard braid-group presentation on n strands: generators s_1..s_{n-1},
/// braid relators and distant commutators.
GroupPresentation artin_presentation(std::size_t n);

/// Braid presentation plus the sphere relator s_1 s_2 .. s_{n-1} s_{n-1} .. s_2 s_1.
GroupPresentation spherical_presentation(std::size_t n);  // n >= 2

/// Exponent-sum matrix, generators x relators.
IntegerMatrix exponent_sum_matrix(const GroupPresentation& p);

/// H_1 of the presented group: cokernel of the exponent-sum matrix.
AbelianGroupInvariants abelianization(const GroupPresentation& p);

/// dim of H_1 tensored with F_char.
std::size_t h1_mod_p(const GroupPresentation& p, std::int64_t characteristic);

}  // namespace homstab
