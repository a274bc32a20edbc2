#include "homstab/chain_complex.hpp"

#include <stdexcept>

namespace homstab {

std::size_t ChainComplex::rank(int degree) const {
    const int i = degree - bottom_degree;
    if (i < 0 || i >= static_cast<int>(ranks.size())) return 0;
    return ranks[static_cast<std::size_t>(i)];
}

IntegerMatrix ChainComplex::boundary(int degree) const {
    const int i = degree - bottom_degree;
    if (i < 0 || i >= static_cast<int>(boundaries.size())) return IntegerMatrix(rank(degree - 1), rank(degree));
    return boundaries[static_cast<std::size_t>(i)];
}

std::size_t ChainComplex::total_rank() const {
    std::size_t n = 0;
    for (auto r : ranks) n += r;
    return n;
}

std::optional<ComplexDefect> validate_complex(const ChainComplex& c) {
    if (c.boundaries.size() != c.ranks.size())
        return ComplexDefect{c.bottom_degree, "boundary list does not match rank list"};
    for (std::size_t i = 0; i < c.ranks.size(); ++i) {
        const int degree = c.bottom_degree + static_cast<int>(i);
        const std::size_t expect_rows = i == 0 ? 0 : c.ranks[i - 1];
        if (c.boundaries[i].rows() != expect_rows || c.boundaries[i].cols() != c.ranks[i])
            return ComplexDefect{degree, "boundary shape mismatch in degree " + std::to_string(degree)};
    }
    for (std::size_t i = 1; i < c.ranks.size(); ++i) {
        const int degree = c.bottom_degree + static_cast<int>(i);
        if (!(c.boundaries[i - 1] * c.boundaries[i]).is_zero())
            return ComplexDefect{degree, "dd != 0 at degree " + std::to_string(degree)};
    }
    return std::nullopt;
}

IntegerMatrix ChainMap::block(int degree) const {
    const int i = degree - bottom_degree;
    if (i < 0 || i >= static_cast<int>(blocks.size())) return IntegerMatrix(target.rank(degree), source.rank(degree));
    return blocks[static_cast<std::size_t>(i)];
}

std::optional<ComplexDefect> validate_chain_map(const ChainMap& f) {
    if (auto d = validate_complex(f.source)) return ComplexDefect{d->degree, "source: " + d->what};
    if (auto d = validate_complex(f.target)) return ComplexDefect{d->degree, "target: " + d->what};
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        const int degree = f.bottom_degree + static_cast<int>(i);
        if (f.blocks[i].rows() != f.target.rank(degree) || f.blocks[i].cols() != f.source.rank(degree))
            return ComplexDefect{degree, "block shape mismatch in degree " + std::to_string(degree)};
    }
    const int lo = std::min(f.source.bottom_degree, f.target.bottom_degree);
    const int hi = std::max(f.source.top_degree(), f.target.top_degree());
    for (int k = lo; k <= hi; ++k) {
        if (!(f.target.boundary(k) * f.block(k) == f.block(k - 1) * f.source.boundary(k)))
            return ComplexDefect{k, "does not commute with boundaries at degree " + std::to_string(k)};
    }
    return std::nullopt;
}

ChainMap identity_chain_map(const ChainComplex& c) {
    ChainMap f;
    f.source = c;
    f.target = c;
    f.bottom_degree = c.bottom_degree;
    for (auto r : c.ranks) f.blocks.push_back(IntegerMatrix::identity(r));
    return f;
}

ChainMap zero_chain_map(const ChainComplex& source, const ChainComplex& target) {
    ChainMap f;
    f.source = source;
    f.target = target;
    f.bottom_degree = source.bottom_degree;
    for (std::size_t i = 0; i < source.ranks.size(); ++i) {
        const int degree = source.bottom_degree + static_cast<int>(i);
        f.blocks.emplace_back(target.rank(degree), source.rank(degree));
    }
    return f;
}

namespace {

void require_valid(const ChainComplex& c) {
    if (auto d = validate_complex(c)) throw std::invalid_argument("invalid chain complex: " + d->what);
}

// The all-ones augmentation is a chain map iff every column of d_1 has
// coefficient sum zero; complexes of semi-simplicial origin always qualify.
void require_augmentable(const ChainComplex& c, const char* who) {
    const IntegerMatrix d1 = c.boundary(1);
    for (std::size_t j = 0; j < d1.cols(); ++j) {
        Int sum = 0;
        for (std::size_t r = 0; r < d1.rows(); ++r) sum += d1.at(r, j);
        if (sum != 0)
            throw std::invalid_argument(std::string(who) + ": complex does not admit the simplicial augmentation");
    }
}

AbelianGroupInvariants homology_from_diagonals(std::size_t rank_k, const std::vector<Int>& diag_k,
                                               const std::vector<Int>& diag_k1) {
    std::size_t r_out = 0;
    for (const auto& d : diag_k)
        if (d != 0) ++r_out;
    AbelianGroupInvariants h;
    std::size_t r_in = 0;
    for (const auto& d : diag_k1) {
        if (d == 0) continue;
        ++r_in;
        if (d > 1) h.torsion.push_back(d);
    }
    h.free_rank = rank_k - r_out - r_in;
    return h;
}

}  // namespace

AbelianGroupInvariants homology_integral(const ChainComplex& c, int degree) {
    require_valid(c);
    if (c.rank(degree) == 0) return {};
    return homology_from_diagonals(c.rank(degree), smith_diagonal(c.boundary(degree)),
                                   smith_diagonal(c.boundary(degree + 1)));
}

std::map<int, AbelianGroupInvariants> homology_integral_all(const ChainComplex& c) {
    require_valid(c);
    std::map<int, AbelianGroupInvariants> out;
    if (c.empty()) return out;
    std::vector<std::vector<Int>> diags;
    diags.reserve(c.ranks.size() + 1);
    for (int k = c.bottom_degree; k <= c.top_degree() + 1; ++k) diags.push_back(smith_diagonal(c.boundary(k)));
    for (int k = c.bottom_degree; k <= c.top_degree(); ++k) {
        const std::size_t i = static_cast<std::size_t>(k - c.bottom_degree);
        out[k] = homology_from_diagonals(c.rank(k), diags[i], diags[i + 1]);
    }
    return out;
}

std::vector<std::size_t> homology_field_dims(const ChainComplex& c, std::int64_t characteristic) {
    require_valid(c);
    std::vector<std::size_t> dims;
    if (c.empty()) return dims;
    std::vector<std::size_t> boundary_ranks;
    for (int k = c.bottom_degree; k <= c.top_degree() + 1; ++k)
        boundary_ranks.push_back(rank_over_field(c.boundary(k), characteristic));
    for (std::size_t i = 0; i < c.ranks.size(); ++i)
        dims.push_back(c.ranks[i] - boundary_ranks[i] - boundary_ranks[i + 1]);
    return dims;
}

ChainComplex mapping_cone(const ChainMap& f) {
    if (auto d = validate_chain_map(f)) throw std::invalid_argument("mapping_cone: invalid chain map: " + d->what);
    const ChainComplex& s = f.source;
    const ChainComplex& t = f.target;
    ChainComplex cone;
    if (s.empty() && t.empty()) return cone;
    int lo, hi;
    if (s.empty()) {
        lo = t.bottom_degree;
        hi = t.top_degree();
    } else if (t.empty()) {
        lo = s.bottom_degree + 1;
        hi = s.top_degree() + 1;
    } else {
        lo = std::min(t.bottom_degree, s.bottom_degree + 1);
        hi = std::max(t.top_degree(), s.top_degree() + 1);
    }
    cone.bottom_degree = lo;
    for (int k = lo; k <= hi; ++k) cone.ranks.push_back(t.rank(k) + s.rank(k - 1));
    for (int k = lo; k <= hi; ++k) {
        const std::size_t out_rows = k == lo ? 0 : cone.ranks[static_cast<std::size_t>(k - lo - 1)];
        IntegerMatrix d(out_rows, cone.ranks[static_cast<std::size_t>(k - lo)]);
        if (k > lo) {
            const IntegerMatrix dt = t.boundary(k);
            const IntegerMatrix fb = f.block(k - 1);
            const IntegerMatrix ds = s.boundary(k - 1);
            const std::size_t col_off = t.rank(k);
            const std::size_t row_off = t.rank(k - 1);
            for (std::size_t r = 0; r < dt.rows(); ++r)
                for (const auto& [c2, v] : dt.row(r)) d.set(r, c2, v);
            for (std::size_t r = 0; r < fb.rows(); ++r)
                for (const auto& [c2, v] : fb.row(r)) d.set(r, col_off + c2, v);
            for (std::size_t r = 0; r < ds.rows(); ++r)
                for (const auto& [c2, v] : ds.row(r)) d.set(row_off + r, col_off + c2, -v);
        }
        cone.boundaries.push_back(std::move(d));
    }
    return cone;
}

ChainComplex suspension(const ChainComplex& c) {
    require_valid(c);
    if (c.bottom_degree < 0) throw std::invalid_argument("suspension: complex must be concentrated in degrees >= 0");
    require_augmentable(c, "suspension");
    ChainComplex out;
    out.bottom_degree = 0;
    out.ranks.push_back(1);
    out.boundaries.emplace_back(0, 1);
    if (c.empty()) return out;
    const int top = c.top_degree();
    for (int k = 0; k <= top; ++k) out.ranks.push_back(c.rank(k));
    // degree 1 boundary is the augmentation of the old degree 0
    IntegerMatrix eps(1, c.rank(0));
    for (std::size_t j = 0; j < c.rank(0); ++j) eps.set(0, j, 1);
    out.boundaries.push_back(std::move(eps));
    for (int k = 1; k <= top; ++k) out.boundaries.push_back(c.boundary(k));
    return out;
}

ChainComplex augmented_complex(const ChainComplex& c) {
    require_valid(c);
    if (c.bottom_degree < 0) throw std::invalid_argument("augmented_complex: degrees must start at 0 or above");
    require_augmentable(c, "augmented_complex");
    ChainComplex out;
    out.bottom_degree = -1;
    out.ranks.push_back(1);
    out.boundaries.emplace_back(0, 1);
    if (c.empty()) return out;
    const int top = c.top_degree();
    for (int k = 0; k <= top; ++k) out.ranks.push_back(c.rank(k));
    IntegerMatrix eps(1, c.rank(0));
    for (std::size_t j = 0; j < c.rank(0); ++j) eps.set(0, j, 1);
    out.boundaries.push_back(std::move(eps));
    for (int k = 1; k <= top; ++k) out.boundaries.push_back(c.boundary(k));
    return out;
}

}  // namespace homstab
