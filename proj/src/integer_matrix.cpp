#include "homstab/integer_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace homstab {

namespace {
const Int kZero = 0;

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }
}  // namespace

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t nr = rows.size();
    std::size_t nc = 0;
    for (const auto& r : rows) nc = std::max(nc, r.size());
    IntegerMatrix m(nr, nc);
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long long v : r) m.set(i, j++, v);
        ++i;
    }
    return m;
}

void IntegerMatrix::check_bounds(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("IntegerMatrix: entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

const Int& IntegerMatrix::at(std::size_t r, std::size_t c) const {
    check_bounds(r, c);
    const auto& row = data_[r];
    auto it = row.find(c);
    return it == row.end() ? kZero : it->second;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, Int v) {
    check_bounds(r, c);
    if (v == 0)
        data_[r].erase(c);
    else
        data_[r][c] = std::move(v);
}

void IntegerMatrix::add_at(std::size_t r, std::size_t c, const Int& v) {
    check_bounds(r, c);
    if (v == 0) return;
    auto [it, inserted] = data_[r].try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) data_[r].erase(it);
    }
}

const std::map<std::size_t, Int>& IntegerMatrix::row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("IntegerMatrix: row index out of range");
    return data_[r];
}

std::size_t IntegerMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool IntegerMatrix::is_zero() const { return nonzero_count() == 0; }

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntegerMatrix: product shape mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::map<std::size_t, Int> acc;
        for (const auto& [k, a] : data_[i])
            for (const auto& [j, b] : rhs.data_[k]) {
                auto [it, inserted] = acc.try_emplace(j, Int(a * b));
                if (!inserted) it->second += a * b;
            }
        for (auto& [j, v] : acc)
            if (v != 0) out.data_[i].emplace(j, std::move(v));
    }
    return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("IntegerMatrix: sum shape mismatch");
    IntegerMatrix out = *this;
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rhs.data_[r]) out.add_at(r, c, v);
    return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const { return *this + (-rhs); }

IntegerMatrix IntegerMatrix::operator-() const { return scaled(-1); }

IntegerMatrix IntegerMatrix::scaled(const Int& k) const {
    IntegerMatrix out(rows_, cols_);
    if (k == 0) return out;
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out.data_[r].emplace(c, Int(v * k));
    return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string IntegerMatrix::to_string() const {
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

std::string AbelianGroupInvariants::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form with certificate (dense, small matrices)
// ---------------------------------------------------------------------------

namespace {

struct DenseSmith {
    std::size_t nr, nc;
    std::vector<std::vector<Int>> a, left, right;

    explicit DenseSmith(const IntegerMatrix& m)
        : nr(m.rows()), nc(m.cols()), a(nr, std::vector<Int>(nc, 0)),
          left(nr, std::vector<Int>(nr, 0)), right(nc, std::vector<Int>(nc, 0)) {
        for (std::size_t r = 0; r < nr; ++r)
            for (const auto& [c, v] : m.row(r)) a[r][c] = v;
        for (std::size_t i = 0; i < nr; ++i) left[i][i] = 1;
        for (std::size_t j = 0; j < nc; ++j) right[j][j] = 1;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(left[i], left[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : right) std::swap(row[i], row[j]);
    }
    // row_dst -= q * row_src
    void row_op(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t c = 0; c < nc; ++c) a[dst][c] -= q * a[src][c];
        for (std::size_t c = 0; c < nr; ++c) left[dst][c] -= q * left[src][c];
    }
    // col_dst -= q * col_src
    void col_op(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t r = 0; r < nr; ++r) a[r][dst] -= q * a[r][src];
        for (std::size_t r = 0; r < nc; ++r) right[r][dst] -= q * right[r][src];
    }
    void negate_row(std::size_t i) {
        for (auto& v : a[i]) v = -v;
        for (auto& v : left[i]) v = -v;
    }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (a[i][j] == 0) continue;
                Int mag = abs_int(a[i][j]);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                    if (best == 1) return true;
                }
            }
        return found;
    }

    // Clears row and column t, leaving a[t][t] as the sole nonzero there.
    void eliminate_at(std::size_t t) {
        while (true) {
            bool restart = false;
            for (std::size_t i = t + 1; i < nr && !restart; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                if (q != 0) row_op(i, t, q);
                if (a[i][t] != 0) {
                    swap_rows(t, i);
                    restart = true;
                }
            }
            if (restart) continue;
            for (std::size_t j = t + 1; j < nc && !restart; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                if (q != 0) col_op(j, t, q);
                if (a[t][j] != 0) {
                    swap_cols(t, j);
                    restart = true;
                }
            }
            if (!restart) break;
        }
    }

    SmithForm run() {
        const std::size_t dmax = std::min(nr, nc);
        std::size_t t = 0;
        while (t < dmax) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            while (true) {
                eliminate_at(t);
                // divisibility: pivot must divide the remaining block
                bool fixed = true;
                for (std::size_t i = t + 1; i < nr && fixed; ++i)
                    for (std::size_t j = t + 1; j < nc && fixed; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            row_op(t, i, -1);
                            fixed = false;
                        }
                if (fixed) break;
            }
            if (a[t][t] < 0) negate_row(t);
            ++t;
        }
        SmithForm out;
        out.diagonal.resize(dmax, 0);
        for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = a[i][i];
        out.left = IntegerMatrix(nr, nr);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nr; ++j)
                if (left[i][j] != 0) out.left.set(i, j, left[i][j]);
        out.right = IntegerMatrix(nc, nc);
        for (std::size_t i = 0; i < nc; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                if (right[i][j] != 0) out.right.set(i, j, right[i][j]);
        return out;
    }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) { return DenseSmith(m).run(); }

// ---------------------------------------------------------------------------
// Sparse diagonal-only Smith form
// ---------------------------------------------------------------------------

namespace {

// Unimodular row/column elimination on a sparse structure.  Unit pivots are
// preferred (Markowitz cost) and removed with row operations only; when no
// unit entry remains the smallest entry is reduced Euclidean-style.  The
// eliminated pivots are normalised into a divisor chain at the end, which
// yields the Smith diagonal.
struct SparseElim {
    std::size_t nr, nc;
    std::vector<std::map<std::size_t, Int>> rowdat;
    std::vector<std::set<std::size_t>> col_rows;
    std::set<std::pair<std::size_t, std::size_t>> col_fill;  // (nnz, col)
    std::vector<Int> collected;

    explicit SparseElim(const IntegerMatrix& m) : nr(m.rows()), nc(m.cols()), rowdat(nr), col_rows(nc) {
        for (std::size_t r = 0; r < nr; ++r) rowdat[r] = m.row(r);
        for (std::size_t r = 0; r < nr; ++r)
            for (const auto& [c, v] : rowdat[r]) col_rows[c].insert(r);
        for (std::size_t c = 0; c < nc; ++c)
            if (!col_rows[c].empty()) col_fill.insert({col_rows[c].size(), c});
    }

    void col_unlink(std::size_t c, std::size_t r) {
        col_fill.erase({col_rows[c].size(), c});
        col_rows[c].erase(r);
        if (!col_rows[c].empty()) col_fill.insert({col_rows[c].size(), c});
    }
    void col_link(std::size_t c, std::size_t r) {
        col_fill.erase({col_rows[c].size(), c});
        col_rows[c].insert(r);
        col_fill.insert({col_rows[c].size(), c});
    }

    // row_dst -= q * row_src
    void row_axpy(std::size_t dst, std::size_t src, const Int& q) {
        for (const auto& [c, v] : rowdat[src]) {
            auto it = rowdat[dst].find(c);
            if (it == rowdat[dst].end()) {
                rowdat[dst].emplace(c, Int(-q * v));
                col_link(c, dst);
            } else {
                it->second -= q * v;
                if (it->second == 0) {
                    rowdat[dst].erase(it);
                    col_unlink(c, dst);
                }
            }
        }
    }

    void delete_row(std::size_t r) {
        for (const auto& [c, v] : rowdat[r]) col_unlink(c, r);
        rowdat[r].clear();
    }

    // Unit pivot search: scan columns in fill order, stop early once a cheap
    // pivot has been seen.
    bool find_unit_pivot(std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        std::size_t best_cost = 0;
        std::size_t scanned_past_best = 0;
        for (const auto& [sz, c] : col_fill) {
            for (std::size_t r : col_rows[c]) {
                const Int& v = rowdat[r].at(c);
                if (v != 1 && v != -1) continue;
                std::size_t cost = (rowdat[r].size() - 1) * (sz - 1);
                if (!found || cost < best_cost) {
                    found = true;
                    best_cost = cost;
                    pr = r;
                    pc = c;
                }
            }
            if (found) {
                if (best_cost == 0) return true;
                if (++scanned_past_best >= 16) return true;
            }
        }
        return found;
    }

    bool find_min_entry(std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        Int best;
        for (const auto& [sz, c] : col_fill)
            for (std::size_t r : col_rows[c]) {
                Int mag = abs_int(rowdat[r].at(c));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        return found;
    }

    void eliminate_unit(std::size_t r, std::size_t c) {
        const Int v = rowdat[r].at(c);  // +1 or -1
        std::vector<std::size_t> others(col_rows[c].begin(), col_rows[c].end());
        for (std::size_t r2 : others) {
            if (r2 == r) continue;
            Int q = rowdat[r2].at(c) * v;
            row_axpy(r2, r, q);
        }
        delete_row(r);
        collected.push_back(1);
    }

    void eliminate_euclidean(std::size_t r, std::size_t c) {
        while (true) {
            const Int v = rowdat[r].at(c);
            bool moved = false;
            std::vector<std::size_t> others(col_rows[c].begin(), col_rows[c].end());
            for (std::size_t r2 : others) {
                if (r2 == r) continue;
                Int q = rowdat[r2].at(c) / v;
                if (q != 0) row_axpy(r2, r, q);
                auto it = rowdat[r2].find(c);
                if (it != rowdat[r2].end()) {  // residue smaller than |v|
                    r = r2;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            // column is clear; clear the row (column ops touch only this row
            // because the pivot column is a singleton now)
            std::vector<std::size_t> cols;
            for (const auto& [c2, w] : rowdat[r])
                if (c2 != c) cols.push_back(c2);
            for (std::size_t c2 : cols) {
                Int w = rowdat[r].at(c2);
                Int q = w / v;
                Int res = w - q * v;
                if (res == 0) {
                    rowdat[r].erase(c2);
                    col_unlink(c2, r);
                } else {
                    rowdat[r][c2] = res;
                    c = c2;  // smaller pivot; its column may be populated
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            collected.push_back(abs_int(v));
            delete_row(r);
            return;
        }
    }

    std::vector<Int> run() {
        while (!col_fill.empty()) {
            std::size_t r = 0, c = 0;
            if (find_unit_pivot(r, c))
                eliminate_unit(r, c);
            else if (find_min_entry(r, c))
                eliminate_euclidean(r, c);
            else
                break;
        }
        return normalise();
    }

    std::vector<Int> normalise() {
        std::size_t units = 0;
        std::vector<Int> rest;
        for (auto& d : collected) {
            if (d == 1)
                ++units;
            else
                rest.push_back(d);
        }
        // gcd/lcm sweeps turn an arbitrary diagonal into a divisor chain
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j)
                if (rest[j] % rest[i] != 0) {
                    Int g = boost::multiprecision::gcd(rest[i], rest[j]);
                    Int l = rest[i] / g * rest[j];
                    rest[i] = g;
                    rest[j] = l;
                }
        std::vector<Int> diag(std::min(nr, nc), 0);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < units; ++i) diag[pos++] = 1;
        std::sort(rest.begin(), rest.end());
        for (auto& d : rest) diag[pos++] = d;
        return diag;
    }
};

}  // namespace

std::vector<Int> smith_diagonal(const IntegerMatrix& m) { return SparseElim(m).run(); }

// ---------------------------------------------------------------------------
// Field ranks
// ---------------------------------------------------------------------------

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d <= p / d; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {

std::size_t rank_mod2(const IntegerMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    const std::size_t words = (nc + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits;
    bits.reserve(nr);
    for (std::size_t r = 0; r < nr; ++r) {
        std::vector<std::uint64_t> row(words, 0);
        bool any = false;
        for (const auto& [c, v] : m.row(r))
            if ((v & 1) != 0) {
                row[c / 64] ^= (std::uint64_t{1} << (c % 64));
                any = true;
            }
        if (any) bits.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < bits.size(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < bits.size() && !(bits[pivot][w] & mask)) ++pivot;
        if (pivot == bits.size()) continue;
        std::swap(bits[rank], bits[pivot]);
        for (std::size_t r = 0; r < bits.size(); ++r)
            if (r != rank && (bits[r][w] & mask))
                for (std::size_t k = w; k < words; ++k) bits[r][k] ^= bits[rank][k];
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(const IntegerMatrix& m, std::int64_t p) {
    const std::size_t nr = m.rows(), nc = m.cols();
    const std::uint64_t up = static_cast<std::uint64_t>(p);
    std::vector<std::vector<std::uint64_t>> a(nr, std::vector<std::uint64_t>(nc, 0));
    for (std::size_t r = 0; r < nr; ++r)
        for (const auto& [c, v] : m.row(r)) {
            Int red = v % p;
            if (red < 0) red += p;
            a[r][c] = red.convert_to<std::uint64_t>();
        }
    auto mulmod = [up](std::uint64_t x, std::uint64_t y) { return (x * y) % up; };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = mulmod(acc, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return acc;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        std::size_t pivot = rank;
        while (pivot < nr && a[pivot][c] == 0) ++pivot;
        if (pivot == nr) continue;
        std::swap(a[rank], a[pivot]);
        const std::uint64_t inv = powmod(a[rank][c], up - 2);
        for (std::size_t r = rank + 1; r < nr; ++r) {
            if (a[r][c] == 0) continue;
            const std::uint64_t f = mulmod(a[r][c], inv);
            for (std::size_t j = c; j < nc; ++j) {
                std::uint64_t sub = mulmod(f, a[rank][j]);
                a[r][j] = (a[r][j] + up - sub) % up;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank_over_field(const IntegerMatrix& m, std::int64_t characteristic) {
    if (characteristic == 0) {
        // fraction-free integer elimination gives the rational rank
        const std::size_t nr = m.rows(), nc = m.cols();
        std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc, 0));
        for (std::size_t r = 0; r < nr; ++r)
            for (const auto& [c, v] : m.row(r)) a[r][c] = v;
        std::size_t rank = 0;
        Int prev = 1;
        for (std::size_t c = 0; c < nc && rank < nr; ++c) {
            std::size_t pivot = rank;
            while (pivot < nr && a[pivot][c] == 0) ++pivot;
            if (pivot == nr) continue;
            std::swap(a[rank], a[pivot]);
            for (std::size_t r = rank + 1; r < nr; ++r) {
                for (std::size_t j = c + 1; j < nc; ++j)
                    a[r][j] = (a[r][j] * a[rank][c] - a[r][c] * a[rank][j]) / prev;
                a[r][c] = 0;
            }
            prev = a[rank][c];
            ++rank;
        }
        return rank;
    }
    if (!is_prime(characteristic))
        throw std::invalid_argument("rank_over_field: characteristic must be 0 or prime, got " +
                                    std::to_string(characteristic));
    if (characteristic == 2) return rank_mod2(m);
    if (characteristic >= (std::int64_t{1} << 31))
        throw std::invalid_argument("rank_over_field: characteristic too large");
    return rank_mod_p(m, characteristic);
}

AbelianGroupInvariants cokernel_invariants(const IntegerMatrix& m) {
    auto diag = smith_diagonal(m);
    AbelianGroupInvariants out;
    std::size_t nonzero = 0;
    for (const auto& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) out.torsion.push_back(d);
    }
    out.free_rank = m.rows() - nonzero;
    return out;
}

Int determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (const auto& [c, v] : m.row(r)) a[r][c] = v;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
    SmithForm s = smith_normal_form(m);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= s.diagonal.size() || s.diagonal[j] == 0) free_cols.push_back(j);
    IntegerMatrix out(m.cols(), free_cols.size());
    for (std::size_t r = 0; r < m.cols(); ++r)
        for (const auto& [c, v] : s.right.row(r)) {
            auto it = std::lower_bound(free_cols.begin(), free_cols.end(), c);
            if (it != free_cols.end() && *it == c)
                out.set(r, static_cast<std::size_t>(it - free_cols.begin()), v);
        }
    return out;
}

}  // namespace homstab
