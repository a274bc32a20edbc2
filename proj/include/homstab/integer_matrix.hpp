#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace homstab {

using Int = boost::multiprecision::cpp_int;

/// Exact integer matrix with arbitrary-precision entries.
///
/// Storage is sparse (row-major); in-range entries that were never set are
/// zero, while any out-of-range access throws.  All mutating operations keep
/// the invariant that stored entries are nonzero.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static IntegerMatrix identity(std::size_t n);
    /// Convenience for literal matrices in tests and fixtures.
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Int v);
    /// Adds v to the (r, c) entry, erasing it if the sum is zero.
    void add_at(std::size_t r, std::size_t c, const Int& v);

    /// Sparse view of one row: column index -> nonzero value.
    const std::map<std::size_t, Int>& row(std::size_t r) const;

    std::size_t nonzero_count() const;
    bool is_zero() const;

    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    IntegerMatrix operator+(const IntegerMatrix& rhs) const;
    IntegerMatrix operator-(const IntegerMatrix& rhs) const;
    IntegerMatrix operator-() const;
    IntegerMatrix scaled(const Int& k) const;
    bool operator==(const IntegerMatrix& rhs) const;

    std::string to_string() const;

private:
    void check_bounds(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::map<std::size_t, Int>> data_;
};

/// Smith normal form with a unimodular certificate: left * m * right is the
/// diagonal matrix with the given entries (nonnegative, divisibility chain,
/// zeros trailing, length min(rows, cols)).
struct SmithForm {
    std::vector<Int> diagonal;
    IntegerMatrix left;
    IntegerMatrix right;
};

/// Invariant-factor description of a finitely generated abelian group:
/// Z^free_rank  +  Z/t_1 + ... + Z/t_k  with  t_1 | t_2 | ... | t_k, t_i > 1.
struct AbelianGroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool torsion_free() const { return torsion.empty(); }
    std::string to_string() const;
    bool operator==(const AbelianGroupInvariants&) const = default;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Diagonal of the Smith normal form without the unimodular certificate.
/// Sparse elimination; this is the workhorse for large boundary matrices.
std::vector<Int> smith_diagonal(const IntegerMatrix& m);

/// Rank of m with entries reduced into Q (characteristic 0) or F_p.
/// Rejects composite characteristics.
std::size_t rank_over_field(const IntegerMatrix& m, std::int64_t characteristic);

/// Invariants of coker(m : Z^cols -> Z^rows), columns read as relations.
AbelianGroupInvariants cokernel_invariants(const IntegerMatrix& m);

/// Exact determinant (fraction-free elimination). Requires a square matrix.
Int determinant(const IntegerMatrix& m);

bool is_prime(std::int64_t p);

/// Columns form a basis of the integer kernel lattice of m (saturated, so it
/// is also a Q-basis of the rational kernel).
IntegerMatrix kernel_basis(const IntegerMatrix& m);

}  // namespace homstab
