#include "homstab/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace homstab {

std::size_t RationalMatrix::index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("RationalMatrix: entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    return r * cols_ + c;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_integer(const IntegerMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) out.at(r, c) = Rational(v);
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("RationalMatrix: product shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = data_[i * cols_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.data_[i * rhs.cols_ + j] += a * rhs.data_[k * rhs.cols_ + j];
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RationalMatrix: sum shape mismatch");
    RationalMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const { return *this + rhs.scaled(-1); }

RationalMatrix RationalMatrix::scaled(const Rational& k) const {
    RationalMatrix out = *this;
    for (auto& v : out.data_) v *= k;
    return out;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

std::size_t RationalMatrix::rank() const {
    std::vector<Rational> a = data_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && a[pivot * cols_ + c] == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a[rank * cols_ + j], a[pivot * cols_ + j]);
        const Rational inv = Rational(1) / a[rank * cols_ + c];
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            const Rational f = a[r * cols_ + c] * inv;
            if (f == 0) continue;
            for (std::size_t j = c; j < cols_; ++j) a[r * cols_ + j] -= f * a[rank * cols_ + j];
        }
        ++rank;
    }
    return rank;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a.at(pivot, c) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a.at(c, j), a.at(pivot, j));
            std::swap(inv.at(c, j), inv.at(pivot, j));
        }
        const Rational d = a.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(c, j) /= d;
            inv.at(c, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const Rational f = a.at(r, c);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

RationalMatrix RationalMatrix::kernel() const {
    // reduced echelon form, then back-substitute the free columns
    std::vector<Rational> a = data_;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && a[pivot * cols_ + c] == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a[rank * cols_ + j], a[pivot * cols_ + j]);
        const Rational d = a[rank * cols_ + c];
        for (std::size_t j = c; j < cols_; ++j) a[rank * cols_ + j] /= d;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            const Rational f = a[r * cols_ + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols_; ++j) a[r * cols_ + j] -= f * a[rank * cols_ + j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0, k = 0; c < cols_; ++c) {
        if (k < pivot_col.size() && pivot_col[k] == c)
            ++k;
        else
            free_cols.push_back(c);
    }
    RationalMatrix out(cols_, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        out.at(free_cols[f], f) = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) out.at(pivot_col[k], f) = -a[k * cols_ + free_cols[f]];
    }
    return out;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("RationalMatrix: hstack shape mismatch");
    RationalMatrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
        for (std::size_t c = 0; c < rhs.cols_; ++c) out.at(r, cols_ + c) = rhs.at(r, c);
    }
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " [";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << " ";
            os << at(r, c);
        }
    }
    os << "]";
    return os.str();
}

}  // namespace homstab
