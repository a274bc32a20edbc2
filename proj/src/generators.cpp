#include "homstab/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace homstab {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {  // inclusive
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

}  // namespace

IntegerMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t max_dim, long max_abs) {
    const std::size_t rows = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(max_dim)));
    const std::size_t cols = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(max_dim)));
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, draw(rng, -max_abs, max_abs));
    return m;
}

ChainComplex random_chain_complex(std::mt19937_64& rng, std::size_t max_degrees, std::size_t max_rank, long max_abs) {
    ChainComplex c;
    c.bottom_degree = 0;
    const std::size_t degrees = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(max_degrees)));
    c.ranks.push_back(static_cast<std::size_t>(draw(rng, 0, static_cast<long>(max_rank))));
    c.boundaries.emplace_back(0, c.ranks[0]);
    for (std::size_t k = 1; k < degrees; ++k) {
        const IntegerMatrix kernel = kernel_basis(c.boundaries[k - 1]);
        const std::size_t rank = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(max_rank)));
        IntegerMatrix coeff(kernel.cols(), rank);
        for (std::size_t r = 0; r < coeff.rows(); ++r)
            for (std::size_t cc = 0; cc < rank; ++cc) coeff.set(r, cc, draw(rng, -max_abs, max_abs));
        c.ranks.push_back(rank);
        c.boundaries.push_back(kernel * coeff);
    }
    return c;
}

ChainMap random_chain_map(std::mt19937_64& rng, std::size_t max_degrees, std::size_t max_rank, long max_abs) {
    ChainMap f;
    f.source = random_chain_complex(rng, max_degrees, max_rank, max_abs);
    f.target = random_chain_complex(rng, max_degrees, max_rank, max_abs);
    f.bottom_degree = f.source.bottom_degree;
    // h_k : source_k -> target_{k+1}, f = dh + hd
    std::map<int, IntegerMatrix> h;
    for (int k = f.source.bottom_degree; k <= f.source.top_degree(); ++k) {
        IntegerMatrix hk(f.target.rank(k + 1), f.source.rank(k));
        for (std::size_t r = 0; r < hk.rows(); ++r)
            for (std::size_t c = 0; c < hk.cols(); ++c) hk.set(r, c, draw(rng, -2, 2));
        h.emplace(k, std::move(hk));
    }
    auto h_at = [&](int k) -> IntegerMatrix {
        auto it = h.find(k);
        if (it != h.end()) return it->second;
        return IntegerMatrix(f.target.rank(k + 1), f.source.rank(k));
    };
    for (int k = f.source.bottom_degree; k <= f.source.top_degree(); ++k)
        f.blocks.push_back(f.target.boundary(k + 1) * h_at(k) + h_at(k - 1) * f.source.boundary(k));
    return f;
}

FilteredComplex random_filtered_complex(std::mt19937_64& rng, std::size_t max_degrees, std::size_t max_rank,
                                        long max_abs, unsigned level_slack) {
    FilteredComplex fc;
    fc.ambient = random_chain_complex(rng, max_degrees, max_rank, max_abs);
    fc.levels.resize(fc.ambient.ranks.size());
    for (std::size_t k = 0; k < fc.ambient.ranks.size(); ++k) {
        fc.levels[k].assign(fc.ambient.ranks[k], 0);
        for (std::size_t j = 0; j < fc.ambient.ranks[k]; ++j) {
            unsigned floor_level = 0;
            if (k > 0) {
                const IntegerMatrix& d = fc.ambient.boundaries[k];
                for (std::size_t r = 0; r < d.rows(); ++r)
                    if (d.at(r, j) != 0) floor_level = std::max(floor_level, fc.levels[k - 1][r]);
            }
            fc.levels[k][j] = floor_level + static_cast<unsigned>(rng() % (level_slack + 1));
        }
    }
    return fc;
}

SemiSimplicialSet random_semi_simplicial_set(std::mt19937_64& rng, std::size_t vertices, std::size_t max_facets) {
    using Simplex = std::vector<std::size_t>;  // strictly increasing vertex lists
    std::set<Simplex> closed;
    const std::size_t facets = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(max_facets)));
    for (std::size_t f = 0; f < facets; ++f) {
        Simplex s;
        for (std::size_t v = 0; v < vertices; ++v)
            if (rng() & 1) s.push_back(v);
        if (s.empty()) s.push_back(static_cast<std::size_t>(rng() % vertices));
        // close downward
        std::vector<Simplex> stack{std::move(s)};
        while (!stack.empty()) {
            Simplex cur = std::move(stack.back());
            stack.pop_back();
            if (!closed.insert(cur).second || cur.size() == 1) continue;
            for (std::size_t i = 0; i < cur.size(); ++i) {
                Simplex face;
                for (std::size_t t = 0; t < cur.size(); ++t)
                    if (t != i) face.push_back(cur[t]);
                stack.push_back(std::move(face));
            }
        }
    }
    std::size_t top = 0;
    for (const auto& s : closed) top = std::max(top, s.size());
    SemiSimplicialSet x;
    x.level_sizes.assign(top, 0);
    x.faces.resize(top);
    std::vector<std::map<Simplex, std::size_t>> index(top);
    for (const auto& s : closed) {
        index[s.size() - 1].emplace(s, index[s.size() - 1].size());
    }
    for (std::size_t k = 0; k < top; ++k) x.level_sizes[k] = index[k].size();
    for (std::size_t k = 1; k < top; ++k) x.faces[k].assign(k + 1, std::vector<std::size_t>(x.level_sizes[k], 0));
    for (std::size_t k = 1; k < top; ++k)
        for (const auto& [s, idx] : index[k])
            for (std::size_t i = 0; i <= k; ++i) {
                Simplex face;
                for (std::size_t t = 0; t < s.size(); ++t)
                    if (t != i) face.push_back(s[t]);
                x.faces[k][i][idx] = index[k - 1].at(face);
            }
    return x;
}

SemiSimplicialSet semi_simplicial_circle() {
    SemiSimplicialSet x;
    x.level_sizes = {1, 1};
    x.faces.resize(2);
    x.faces[1] = {{0}, {0}};
    x.labels = {{"v"}, {"e"}};
    return x;
}

SimplicialMap trivial_sheeted_cover(const SemiSimplicialSet& base, std::size_t sheets) {
    SimplicialMap p;
    p.target = base;
    SemiSimplicialSet e;
    const std::size_t levels = base.level_sizes.size();
    e.level_sizes.resize(levels);
    e.faces.resize(levels);
    for (std::size_t k = 0; k < levels; ++k) {
        e.level_sizes[k] = base.level_sizes[k] * sheets;
        if (k == 0) continue;
        e.faces[k].assign(k + 1, std::vector<std::size_t>(e.level_sizes[k], 0));
        for (std::size_t copy = 0; copy < sheets; ++copy)
            for (std::size_t s = 0; s < base.level_sizes[k]; ++s)
                for (std::size_t i = 0; i <= k; ++i)
                    e.faces[k][i][copy * base.level_sizes[k] + s] = copy * base.level_sizes[k - 1] + base.face(k, i, s);
    }
    p.source = std::move(e);
    p.map.resize(levels);
    for (std::size_t k = 0; k < levels; ++k) {
        p.map[k].resize(base.level_sizes[k] * sheets);
        for (std::size_t copy = 0; copy < sheets; ++copy)
            for (std::size_t s = 0; s < base.level_sizes[k]; ++s) p.map[k][copy * base.level_sizes[k] + s] = s;
    }
    return p;
}

SimplicialMap cyclic_circle_cover(std::size_t sheets) {
    SimplicialMap p;
    p.target = semi_simplicial_circle();
    SemiSimplicialSet e;
    e.level_sizes = {sheets, sheets};
    e.faces.resize(2);
    e.faces[1].assign(2, std::vector<std::size_t>(sheets, 0));
    for (std::size_t i = 0; i < sheets; ++i) {
        e.faces[1][0][i] = (i + 1) % sheets;  // d_0 = head
        e.faces[1][1][i] = i;                 // d_1 = tail
    }
    p.source = std::move(e);
    p.map.assign(2, std::vector<std::size_t>(sheets, 0));
    return p;
}

}  // namespace homstab
