#pragma once

#include "homstab/integer_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homstab {

using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix over Q with exact entries.  Used where division is part of
/// the algebra (transfer normalisations, splittings); kept separate from the
/// sparse integer type on purpose.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_integer(const IntegerMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return data_.at(index(r, c)); }
    Rational& at(std::size_t r, std::size_t c) { return data_.at(index(r, c)); }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix scaled(const Rational& k) const;
    bool operator==(const RationalMatrix& rhs) const = default;

    bool is_zero() const;
    std::size_t rank() const;
    /// Inverse via Gauss-Jordan; nullopt when singular (or not square).
    std::optional<RationalMatrix> inverse() const;
    /// Columns form a basis of the kernel.
    RationalMatrix kernel() const;
    /// Horizontal concatenation [this | rhs].
    RationalMatrix hstack(const RationalMatrix& rhs) const;

    std::string to_string() const;

private:
    std::size_t index(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace homstab
