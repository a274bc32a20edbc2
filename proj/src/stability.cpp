#include "homstab/stability.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace homstab {

namespace {

void require_shapes(const DoldSystem& s) {
    const std::size_t N = s.length();
    if (s.dims.empty()) throw std::invalid_argument("DoldSystem: dims must contain a_0..a_N");
    if (s.stab.size() != N || s.trans.size() != N)
        throw std::invalid_argument("DoldSystem: expected N stabilisations and N transfers");
    for (std::size_t n = 0; n < N; ++n) {
        if (s.stab[n].rows() != s.dims[n + 1] || s.stab[n].cols() != s.dims[n])
            throw std::invalid_argument("DoldSystem: i_" + std::to_string(n) + " has the wrong shape");
        if (s.trans[n].rows() != s.dims[n] || s.trans[n].cols() != s.dims[n + 1])
            throw std::invalid_argument("DoldSystem: t_" + std::to_string(n + 1) + " has the wrong shape");
    }
}

Rational factorial(std::size_t k) {
    Rational f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

}  // namespace

std::optional<std::size_t> verify_dold_relations(const DoldSystem& s) {
    require_shapes(s);
    const std::size_t N = s.length();
    for (std::size_t n = 1; n <= N; ++n) {
        RationalMatrix lhs = s.t(n) * s.i(n - 1);
        RationalMatrix rhs = RationalMatrix::identity(s.dims[n - 1]);
        if (n >= 2) rhs = rhs + s.i(n - 2) * s.t(n - 1);
        if (!(lhs == rhs)) return n;
    }
    return std::nullopt;
}

RationalMatrix iterated_transfer(const DoldSystem& s, std::size_t n, std::size_t m) {
    require_shapes(s);
    if (m > n || n > s.length()) throw std::invalid_argument("iterated_transfer: need m <= n <= N");
    if (m == n) return RationalMatrix::identity(s.dims[n]);
    RationalMatrix acc = s.t(m + 1);
    for (std::size_t j = m + 2; j <= n; ++j) acc = acc * s.t(j);
    return acc.scaled(Rational(1) / factorial(n - m));
}

namespace {

// Canonical projection onto the cokernel of `incl` (columns span the image):
// the complement is spanned by the standard basis vectors away from the
// pivot rows of the reduced echelon form of incl^T.
RationalMatrix coker_projection(const RationalMatrix& incl, std::size_t ambient) {
    // RREF of the transpose; pivot columns = pivot rows of incl
    const std::size_t rows = incl.cols(), cols = ambient;
    std::vector<Rational> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = incl.at(c, r);
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a[rank * cols + j], a[pr * cols + j]);
        const Rational d = a[rank * cols + c];
        for (std::size_t j = c; j < cols; ++j) a[rank * cols + j] /= d;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Rational f = a[r * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) a[r * cols + j] -= f * a[rank * cols + j];
        }
        pivots.push_back(c);
        ++rank;
    }
    std::vector<std::size_t> free_rows;
    for (std::size_t c = 0, k = 0; c < cols; ++c) {
        if (k < pivots.size() && pivots[k] == c)
            ++k;
        else
            free_rows.push_back(c);
    }
    // pi(x) = (x - R^T x_P) restricted to the free coordinates, where R is
    // the echelon basis of the image (identity on the pivot coordinates)
    RationalMatrix pi(free_rows.size(), ambient);
    for (std::size_t q = 0; q < free_rows.size(); ++q) {
        pi.at(q, free_rows[q]) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) pi.at(q, pivots[k]) -= a[k * cols + free_rows[q]];
    }
    return pi;
}

}  // namespace

DoldDecomposition dold_decompose(const DoldSystem& s) {
    if (auto bad = verify_dold_relations(s))
        throw std::invalid_argument("dold_decompose: transfer relations fail at n = " + std::to_string(*bad));
    const std::size_t N = s.length();
    DoldDecomposition out;
    std::vector<RationalMatrix> projections;
    for (std::size_t n = 0; n <= N; ++n) {
        const RationalMatrix incl = n == 0 ? RationalMatrix(s.dims[0], 0) : s.i(n - 1);
        RationalMatrix pi = coker_projection(incl, s.dims[n]);
        out.b_dims.push_back(pi.rows());
        projections.push_back(std::move(pi));
    }
    out.iso = true;
    for (std::size_t n = 0; n <= N; ++n) {
        std::size_t total = 0;
        for (std::size_t m = 0; m <= n; ++m) total += out.b_dims[m];
        RationalMatrix phi(total, s.dims[n]);
        std::size_t row = 0;
        for (std::size_t m0 = 0; m0 <= n; ++m0) {
            const std::size_t m = n - m0;  // blocks ordered B_n, B_{n-1}, ..., B_0
            const RationalMatrix block = projections[m] * iterated_transfer(s, n, m);
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c) phi.at(row + r, c) = block.at(r, c);
            row += block.rows();
        }
        if (total != s.dims[n] || (total > 0 && !phi.inverse().has_value())) out.iso = false;
        if (total == 0 && s.dims[n] != 0) out.iso = false;
        out.phi.push_back(std::move(phi));
    }
    out.composites_invertible = true;
    for (std::size_t n = 0; n + 1 <= N; ++n) {
        const RationalMatrix comp = s.t(n + 1) * s.i(n);
        if (comp.rows() > 0 && !comp.inverse().has_value()) out.composites_invertible = false;
    }
    return out;
}

DoldSystem random_dold_system(std::uint64_t seed, std::size_t N, const std::vector<std::size_t>& b_dims) {
    std::vector<std::size_t> b(N + 1, 0);
    for (std::size_t m = 0; m < b_dims.size() && m <= N; ++m) b[m] = b_dims[m];
    std::vector<std::size_t> a(N + 1, 0);
    for (std::size_t n = 0; n <= N; ++n) a[n] = (n == 0 ? 0 : a[n - 1]) + b[n];

    // A_n = B_0 + ... + B_n, i_n the inclusion, t_n scalar (n - m) on B_m.
    std::vector<RationalMatrix> stab, trans;
    for (std::size_t n = 0; n < N; ++n) {
        RationalMatrix i_n(a[n + 1], a[n]);
        for (std::size_t k = 0; k < a[n]; ++k) i_n.at(k, k) = 1;
        stab.push_back(std::move(i_n));
        RationalMatrix t_n1(a[n], a[n + 1]);
        std::size_t off = 0;
        for (std::size_t m = 0; m <= n; ++m) {
            for (std::size_t k = 0; k < b[m]; ++k) t_n1.at(off + k, off + k) = Rational(static_cast<long>(n + 1 - m));
            off += b[m];
        }
        trans.push_back(std::move(t_n1));
    }

    // seeded unimodular change of basis on every level
    std::mt19937_64 eng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto unimodular = [&](std::size_t n) {
        RationalMatrix lower = RationalMatrix::identity(n);
        RationalMatrix upper(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            upper.at(r, r) = (eng() & 1) ? 1 : -1;
            for (std::size_t c = r + 1; c < n; ++c) upper.at(r, c) = static_cast<long>(eng() % 5) - 2;
            for (std::size_t c = 0; c < r; ++c) lower.at(r, c) = static_cast<long>(eng() % 5) - 2;
        }
        return lower * upper;
    };
    std::vector<RationalMatrix> p, p_inv;
    for (std::size_t n = 0; n <= N; ++n) {
        p.push_back(unimodular(a[n]));
        p_inv.push_back(*p.back().inverse());
    }
    DoldSystem out;
    out.dims = a;
    for (std::size_t n = 0; n < N; ++n) {
        out.stab.push_back(p[n + 1] * stab[n] * p_inv[n]);
        out.trans.push_back(p[n] * trans[n] * p_inv[n + 1]);
    }
    return out;
}

std::vector<OnsetReport> stability_range(const StabilityTable& t) {
    std::vector<OnsetReport> out;
    const std::size_t width = t.columns();
    for (std::size_t i = 0; i < t.degrees(); ++i) {
        OnsetReport rep;
        if (width > 0) {
            const std::size_t n_max = t.n_start + width - 1;
            std::size_t idx = width - 1;  // first index from which the row is constant
            while (idx > 0 && t.dims[i][idx - 1] == t.dims[i][width - 1]) --idx;
            // a tail consisting of the last column alone is no evidence
            const bool trivial_tail = (idx == width - 1) && width > 1;
            if (!trivial_tail) rep.onset = t.n_start + idx;
            const std::size_t bound = std::max(2 * i, t.n_start);
            // consistent with stabilisation from max(2i, first column); a
            // bound at or past the table edge cannot be contradicted
            rep.within_2i_bound = rep.onset ? *rep.onset <= bound : bound >= n_max;
        }
        out.push_back(rep);
    }
    return out;
}

ChainComplex sphere_equivariant_model(std::size_t d) {
    if (d < 1) throw std::invalid_argument("sphere_equivariant_model: d must be at least 1");
    ChainComplex c;
    c.bottom_degree = 0;
    c.ranks.assign(d, 2);
    for (std::size_t k = 0; k < d; ++k) {
        IntegerMatrix m(k == 0 ? 0 : 2, 2);
        if (k > 0) {
            const long sign = (k % 2 == 0) ? 1 : -1;
            // d e_k = e_{k-1} + (-1)^k T e_{k-1};  d (T e_k) = T e_{k-1} + (-1)^k e_{k-1}
            m.set(0, 0, 1);
            m.set(1, 0, sign);
            m.set(1, 1, 1);
            m.set(0, 1, sign);
        }
        c.boundaries.push_back(std::move(m));
    }
    return c;
}

ChainComplex projective_space_model(std::size_t d) {
    if (d < 1) throw std::invalid_argument("projective_space_model: d must be at least 1");
    ChainComplex c;
    c.bottom_degree = 0;
    c.ranks.assign(d, 1);
    for (std::size_t k = 0; k < d; ++k) {
        IntegerMatrix m(k == 0 ? 0 : 1, 1);
        if (k > 0 && k % 2 == 0) m.set(0, 0, 2);  // 1 + (-1)^k
        c.boundaries.push_back(std::move(m));
    }
    return c;
}

ChainMap sphere_quotient_map(std::size_t d) {
    ChainMap q;
    q.source = sphere_equivariant_model(d);
    q.target = projective_space_model(d);
    q.bottom_degree = 0;
    for (std::size_t k = 0; k < d; ++k) {
        IntegerMatrix b(1, 2);
        b.set(0, 0, 1);
        b.set(0, 1, 1);
        q.blocks.push_back(std::move(b));
    }
    return q;
}

TauExperimentResult tau_experiment(std::size_t d) {
    if (d < 2) throw std::invalid_argument("tau_experiment: d must be at least 2");
    const ChainMap q = sphere_quotient_map(d);
    if (auto bad = validate_chain_map(q)) throw std::logic_error("tau_experiment: model defect: " + bad->what);
    const int top = static_cast<int>(d) - 1;
    TauExperimentResult out;
    out.target_group = homology_integral(q.target, top);
    if (out.target_group.trivial()) return out;  // image is zero in a zero group
    // fundamental cycle of the sphere model in top degree
    const IntegerMatrix cycles = kernel_basis(q.source.boundary(top));
    if (cycles.cols() != 1) throw std::logic_error("tau_experiment: sphere model top cycle space is not a line");
    const IntegerMatrix image = q.block(top) * cycles;  // 1 x 1: coefficient on the top cell
    const Int w = image.at(0, 0);
    if (w != 0) out.image_index = w < 0 ? Int(-w) : w;
    return out;
}

}  // namespace homstab
