#include "homstab/spectral.hpp"

#include "homstab/rational_matrix.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace homstab {

unsigned FilteredComplex::level(int degree, std::size_t index) const {
    const int i = degree - ambient.bottom_degree;
    if (i < 0 || i >= static_cast<int>(levels.size())) throw std::out_of_range("FilteredComplex: degree out of range");
    return levels[static_cast<std::size_t>(i)].at(index);
}

unsigned FilteredComplex::max_level() const {
    unsigned m = 0;
    for (const auto& lv : levels)
        for (unsigned v : lv) m = std::max(m, v);
    return m;
}

std::optional<ComplexDefect> validate_filtered(const FilteredComplex& fc) {
    if (auto d = validate_complex(fc.ambient)) return d;
    if (fc.levels.size() != fc.ambient.ranks.size())
        return ComplexDefect{fc.ambient.bottom_degree, "level table does not match rank list"};
    for (std::size_t i = 0; i < fc.levels.size(); ++i)
        if (fc.levels[i].size() != fc.ambient.ranks[i])
            return ComplexDefect{fc.ambient.bottom_degree + static_cast<int>(i), "level table size mismatch"};
    for (std::size_t i = 1; i < fc.levels.size(); ++i) {
        const int degree = fc.ambient.bottom_degree + static_cast<int>(i);
        const IntegerMatrix& d = fc.ambient.boundaries[i];
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (const auto& [c, v] : d.row(r))
                if (fc.levels[i - 1][r] > fc.levels[i][c])
                    return ComplexDefect{degree,
                                         "boundary raises filtration at degree " + std::to_string(degree)};
    }
    return std::nullopt;
}

std::size_t SpectralPage::dim(int s, int t) const {
    auto it = dims.find({s, t});
    return it == dims.end() ? 0 : it->second;
}

std::map<int, std::size_t> SpectralPage::total_dims() const {
    std::map<int, std::size_t> out;
    for (const auto& [st, d] : dims) out[st.first + st.second] += d;
    return out;
}

namespace {

// Dense matrix over F_p, just enough echelon machinery for page dimensions.
struct FpMat {
    std::uint64_t p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    FpMat() = default;
    FpMat(std::uint64_t p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}
    std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

std::uint64_t fp_inv(std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 1, e = p - 2, b = x % p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

// Reduced echelon form in place; returns pivot columns.
std::vector<std::size_t> fp_rref(FpMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t pr = rank;
        while (pr < m.rows && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pr, j));
        const std::uint64_t inv = fp_inv(m.at(rank, c), m.p);
        for (std::size_t j = c; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) * inv % m.p;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, c) == 0) continue;
            const std::uint64_t f = m.at(r, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(r, j) = (m.at(r, j) + (m.p - f) * m.at(rank, j)) % m.p;
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

struct FpOps {
    std::uint64_t p;
    using Mat = FpMat;

    Mat make(std::size_t r, std::size_t c) const { return FpMat(p, r, c); }
    void set(Mat& m, std::size_t r, std::size_t c, const Int& v) const {
        Int red = v % static_cast<std::int64_t>(p);
        if (red < 0) red += static_cast<std::int64_t>(p);
        m.at(r, c) = red.convert_to<std::uint64_t>();
    }
    static std::size_t cols(const Mat& m) { return m.cols; }
    std::size_t rank(const Mat& m) const {
        Mat cp = m;
        return fp_rref(cp).size();
    }
    Mat kernel(const Mat& m) const {
        Mat cp = m;
        auto pivots = fp_rref(cp);
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0, k = 0; c < m.cols; ++c) {
            if (k < pivots.size() && pivots[k] == c)
                ++k;
            else
                free_cols.push_back(c);
        }
        Mat out(p, m.cols, free_cols.size());
        for (std::size_t f = 0; f < free_cols.size(); ++f) {
            out.at(free_cols[f], f) = 1;
            for (std::size_t k = 0; k < pivots.size(); ++k) {
                const std::uint64_t v = cp.at(k, free_cols[f]);
                if (v) out.at(pivots[k], f) = p - v;
            }
        }
        return out;
    }
    Mat hstack(const Mat& x, const Mat& y) const {
        Mat out(p, x.rows, x.cols + y.cols);
        for (std::size_t r = 0; r < x.rows; ++r) {
            for (std::size_t c = 0; c < x.cols; ++c) out.at(r, c) = x.at(r, c);
            for (std::size_t c = 0; c < y.cols; ++c) out.at(r, x.cols + c) = y.at(r, c);
        }
        return out;
    }
    Mat mul_integer(const IntegerMatrix& a, const Mat& k) const {
        Mat out(p, a.rows(), k.cols);
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (const auto& [c, v] : a.row(r)) {
                Int red = v % static_cast<std::int64_t>(p);
                if (red < 0) red += static_cast<std::int64_t>(p);
                const std::uint64_t f = red.convert_to<std::uint64_t>();
                if (!f) continue;
                for (std::size_t j = 0; j < k.cols; ++j)
                    out.at(r, j) = (out.at(r, j) + f * k.at(c, j)) % p;
            }
        return out;
    }
};

struct RationalOps {
    using Mat = RationalMatrix;

    Mat make(std::size_t r, std::size_t c) const { return RationalMatrix(r, c); }
    void set(Mat& m, std::size_t r, std::size_t c, const Int& v) const { m.at(r, c) = Rational(v); }
    static std::size_t cols(const Mat& m) { return m.cols(); }
    std::size_t rank(const Mat& m) const { return m.rank(); }
    Mat kernel(const Mat& m) const { return m.kernel(); }
    Mat hstack(const Mat& x, const Mat& y) const { return x.hstack(y); }
    Mat mul_integer(const IntegerMatrix& a, const Mat& k) const {
        Mat out(a.rows(), k.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (const auto& [c, v] : a.row(r)) {
                const Rational f(v);
                for (std::size_t j = 0; j < k.cols(); ++j) out.at(r, j) += f * k.at(c, j);
            }
        return out;
    }
};

void embedded_set(FpMat& dst, std::size_t dst_row, std::size_t c, const FpMat& src, std::size_t src_row) {
    dst.at(dst_row, c) = src.at(src_row, c);
}
void embedded_set(RationalMatrix& dst, std::size_t dst_row, std::size_t c, const RationalMatrix& src,
                  std::size_t src_row) {
    dst.at(dst_row, c) = src.at(src_row, c);
}

// E^r_{s,t} = Z(r,s,n) / ( Z(r-1,s-1,n) + d Z(r-1,s+r-1,n+1) ),  n = s+t,
// where Z(r,s,n) = { x in F_s C_n : dx in F_{s-r} C_{n-1} } and Z(0,s,n) is
// F_s C_n itself.  All dimensions come out of exact ranks over the field.
template <class Ops>
std::vector<SpectralPage> pages_impl(const FilteredComplex& fc, std::int64_t characteristic, std::size_t r_max,
                                     const Ops& ops) {
    using Mat = typename Ops::Mat;
    const ChainComplex& amb = fc.ambient;
    const int bottom = amb.bottom_degree;
    const int top = amb.empty() ? bottom - 1 : amb.top_degree();
    const int smax = static_cast<int>(fc.max_level());

    auto members = [&](int s, int n) {
        std::vector<std::size_t> idx;
        const int i = n - bottom;
        if (s < 0 || i < 0 || i >= static_cast<int>(fc.levels.size())) return idx;
        const auto& lv = fc.levels[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < lv.size(); ++j)
            if (static_cast<int>(lv[j]) <= s) idx.push_back(j);
        return idx;
    };

    // basis matrix of Z(r, s, n) in full degree-n coordinates
    std::map<std::tuple<int, int, int>, Mat> cache;
    std::function<const Mat&(int, int, int)> z_basis = [&](int r, int s, int n) -> const Mat& {
        auto key = std::make_tuple(r, s, n);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const std::size_t full = amb.rank(n);
        const auto cols_in = members(s, n);
        Mat result = ops.make(full, 0);
        if (!cols_in.empty()) {
            if (r <= 0) {
                Mat basis = ops.make(full, cols_in.size());
                for (std::size_t j = 0; j < cols_in.size(); ++j) ops.set(basis, cols_in[j], j, Int(1));
                result = std::move(basis);
            } else {
                const IntegerMatrix d = amb.boundary(n);
                const auto rows_low = members(s - r, n - 1);  // rows allowed to be hit
                std::vector<bool> allowed(amb.rank(n - 1), false);
                for (auto rr : rows_low) allowed[rr] = true;
                std::vector<std::size_t> rows_bad;
                for (std::size_t rr = 0; rr < amb.rank(n - 1); ++rr)
                    if (!allowed[rr]) rows_bad.push_back(rr);
                Mat restricted = ops.make(rows_bad.size(), cols_in.size());
                for (std::size_t bi = 0; bi < rows_bad.size(); ++bi)
                    for (const auto& [c, v] : d.row(rows_bad[bi])) {
                        auto pos = std::lower_bound(cols_in.begin(), cols_in.end(), c);
                        if (pos != cols_in.end() && *pos == c)
                            ops.set(restricted, bi, static_cast<std::size_t>(pos - cols_in.begin()), v);
                    }
                Mat ker = ops.kernel(restricted);  // in S-coordinates
                Mat embedded = ops.make(full, Ops::cols(ker));
                for (std::size_t j = 0; j < cols_in.size(); ++j)
                    for (std::size_t cc = 0; cc < Ops::cols(ker); ++cc) {
                        // scatter row j of ker to row cols_in[j]
                        // (generic copy; Mat is dense in both instantiations)
                        embedded_set(embedded, cols_in[j], cc, ker, j);
                    }
                result = std::move(embedded);
            }
        }
        return cache.emplace(key, std::move(result)).first->second;
    };

    std::vector<SpectralPage> pages;
    for (std::size_t r = 1; r <= r_max; ++r) {
        SpectralPage page;
        page.r = r;
        page.field_char = characteristic;
        for (int s = 0; s <= smax; ++s)
            for (int n = bottom; n <= top; ++n) {
                const Mat& z = z_basis(static_cast<int>(r), s, n);
                if (Ops::cols(z) == 0) continue;
                const Mat& below = z_basis(static_cast<int>(r) - 1, s - 1, n);
                const Mat& zsrc = z_basis(static_cast<int>(r) - 1, s + static_cast<int>(r) - 1, n + 1);
                Mat img = ops.mul_integer(amb.boundary(n + 1), zsrc);
                const std::size_t killed = ops.rank(ops.hstack(below, img));
                const std::size_t dim = Ops::cols(z) - killed;
                if (dim > 0) page.dims[{s, n - s}] = dim;
            }
        pages.push_back(std::move(page));
    }
    return pages;
}

}  // namespace

std::vector<SpectralPage> spectral_pages(const FilteredComplex& fc, std::int64_t characteristic, std::size_t r_max) {
    if (auto d = validate_filtered(fc)) throw std::invalid_argument("spectral_pages: " + d->what);
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("spectral_pages: field characteristic must be 0 or prime");
    if (characteristic == 0) return pages_impl(fc, 0, r_max, RationalOps{});
    return pages_impl(fc, characteristic, r_max, FpOps{static_cast<std::uint64_t>(characteristic)});
}

}  // namespace homstab
