#include "homstab/ssets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homstab {

std::size_t SemiSimplicialSet::face(std::size_t k, std::size_t i, std::size_t simplex) const {
    return faces.at(k).at(i).at(simplex);
}

std::size_t SemiSimplicialSet::simplex_count() const {
    std::size_t n = 0;
    for (auto s : level_sizes) n += s;
    return n;
}

std::string SemiSimplicialSet::label(std::size_t k, std::size_t simplex) const {
    if (k < labels.size() && simplex < labels[k].size()) return labels[k][simplex];
    return std::to_string(k) + "#" + std::to_string(simplex);
}

std::optional<SimplicialDefect> validate(const SemiSimplicialSet& x) {
    const std::size_t top = x.level_sizes.size();
    if (x.faces.size() != top)
        return SimplicialDefect{0, 0, 0, 0, "face table must have one entry per level"};
    for (std::size_t k = 0; k < top; ++k) {
        const std::size_t expected = k == 0 ? 0 : k + 1;
        if (x.faces[k].size() != expected)
            return SimplicialDefect{k, 0, 0, 0, "level " + std::to_string(k) + " must carry " +
                                                    std::to_string(expected) + " face maps"};
        for (std::size_t i = 0; i < x.faces[k].size(); ++i) {
            if (x.faces[k][i].size() != x.level_sizes[k])
                return SimplicialDefect{k, i, 0, 0, "face map size mismatch"};
            for (std::size_t s = 0; s < x.faces[k][i].size(); ++s)
                if (x.faces[k][i][s] >= x.level_sizes[k - 1])
                    return SimplicialDefect{k, i, 0, s, "face image out of range"};
        }
    }
    for (std::size_t k = 2; k < top; ++k)
        for (std::size_t i = 0; i + 1 <= k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j)
                for (std::size_t s = 0; s < x.level_sizes[k]; ++s)
                    if (x.face(k - 1, i, x.face(k, j, s)) != x.face(k - 1, j - 1, x.face(k, i, s)))
                        return SimplicialDefect{k, i, j, s,
                                                "d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                                    " != d_" + std::to_string(j - 1) + " d_" + std::to_string(i) +
                                                    " on simplex " + std::to_string(s)};
    return std::nullopt;
}

std::optional<SimplicialDefect> validate(const PointedSemiSimplicialSet& x) {
    if (auto d = validate(x.space)) return d;
    if (x.basepoints.size() != x.space.level_sizes.size())
        return SimplicialDefect{0, 0, 0, 0, "one basepoint per level required"};
    for (std::size_t k = 0; k < x.basepoints.size(); ++k)
        if (x.basepoints[k] >= x.space.level_sizes[k])
            return SimplicialDefect{k, 0, 0, 0, "basepoint index out of range in level " + std::to_string(k)};
    for (std::size_t k = 1; k < x.basepoints.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i)
            if (x.space.face(k, i, x.basepoints[k]) != x.basepoints[k - 1])
                return SimplicialDefect{k, i, 0, x.basepoints[k], "face does not preserve the basepoint"};
    return std::nullopt;
}

namespace {

void require_valid(const SemiSimplicialSet& x, const char* who) {
    if (auto d = validate(x)) throw std::invalid_argument(std::string(who) + ": invalid semi-simplicial set: " + d->what);
}

}  // namespace

ChainComplex chain_complex_of(const SemiSimplicialSet& x) {
    require_valid(x, "chain_complex_of");
    ChainComplex c;
    c.bottom_degree = 0;
    c.ranks = x.level_sizes;
    for (std::size_t k = 0; k < x.level_sizes.size(); ++k) {
        IntegerMatrix d(k == 0 ? 0 : x.level_sizes[k - 1], x.level_sizes[k]);
        for (std::size_t s = 0; k > 0 && s < x.level_sizes[k]; ++s)
            for (std::size_t i = 0; i <= k; ++i) d.add_at(x.face(k, i, s), s, (i % 2 == 0) ? 1 : -1);
        c.boundaries.push_back(std::move(d));
    }
    return c;
}

ChainComplex reduced_chain_complex_of(const PointedSemiSimplicialSet& x) {
    if (auto d = validate(x))
        throw std::invalid_argument(std::string("reduced_chain_complex_of: invalid pointed set: ") + d->what);
    const std::size_t top = x.space.level_sizes.size();
    // renumber the non-basepoint simplices per level
    std::vector<std::vector<std::size_t>> reduced_index(top);
    std::vector<std::size_t> reduced_size(top, 0);
    for (std::size_t k = 0; k < top; ++k) {
        reduced_index[k].assign(x.space.level_sizes[k], SIZE_MAX);
        for (std::size_t s = 0; s < x.space.level_sizes[k]; ++s)
            if (s != x.basepoints[k]) reduced_index[k][s] = reduced_size[k]++;
    }
    ChainComplex c;
    c.bottom_degree = 0;
    c.ranks.assign(reduced_size.begin(), reduced_size.end());
    for (std::size_t k = 0; k < top; ++k) {
        IntegerMatrix d(k == 0 ? 0 : reduced_size[k - 1], reduced_size[k]);
        if (k > 0)
            for (std::size_t s = 0; s < x.space.level_sizes[k]; ++s) {
                if (s == x.basepoints[k]) continue;
                for (std::size_t i = 0; i <= k; ++i) {
                    const std::size_t f = x.space.face(k, i, s);
                    if (f == x.basepoints[k - 1]) continue;
                    d.add_at(reduced_index[k - 1][f], reduced_index[k][s], (i % 2 == 0) ? 1 : -1);
                }
            }
        c.boundaries.push_back(std::move(d));
    }
    return c;
}

PointedSemiSimplicialSet half_smash_construction(const SemiSimplicialSet& x) {
    require_valid(x, "half_smash_construction");
    // Level m is the basepoint together with X_{m-1} x {0..m}, where the
    // input is read as augmented by a single (-1)-simplex.  Level 0 therefore
    // carries one vertex besides the basepoint, and the level-1 faces that
    // take an i-th face of a 0-simplex land on it.  (This also makes the
    // construction the levelwise cofibre of a join with a point, which is
    // where it is applied.)
    PointedSemiSimplicialSet out;
    const std::size_t out_levels = x.level_sizes.size() + 1;
    auto pair_index = [&](std::size_t m, std::size_t sigma, std::size_t j) {
        return 1 + sigma * (m + 1) + j;  // basepoint is index 0 in level m
    };
    const std::size_t aug_vertex = pair_index(0, 0, 0);  // the (-1)-simplex paired with 0
    out.space.level_sizes.resize(out_levels);
    out.space.faces.resize(out_levels);
    out.space.labels.resize(out_levels);
    out.basepoints.assign(out_levels, 0);
    for (std::size_t m = 0; m < out_levels; ++m) {
        const std::size_t below = m == 0 ? 1 : x.level_size(m - 1);  // |X_{m-1}|, with |X_{-1}| = 1
        out.space.level_sizes[m] = 1 + below * (m + 1);
        auto& lab = out.space.labels[m];
        lab.push_back("*");
        for (std::size_t sigma = 0; sigma < below; ++sigma)
            for (std::size_t j = 0; j <= m; ++j)
                lab.push_back((m == 0 ? std::string("()") : x.label(m - 1, sigma)) + "|" + std::to_string(j));
        if (m == 0) continue;
        out.space.faces[m].assign(m + 1, std::vector<std::size_t>(out.space.level_sizes[m], 0));
        for (std::size_t i = 0; i <= m; ++i) {
            auto& fm = out.space.faces[m][i];
            fm[0] = 0;  // basepoint to basepoint
            for (std::size_t sigma = 0; sigma < below; ++sigma)
                for (std::size_t j = 0; j <= m; ++j) {
                    std::size_t& dst = fm[pair_index(m, sigma, j)];
                    if (i == j) {
                        dst = 0;
                    } else if (m == 1) {
                        dst = aug_vertex;  // any face of a 0-simplex is the augmentation
                    } else if (i < j) {
                        dst = pair_index(m - 1, x.face(m - 1, i, sigma), j - 1);
                    } else {
                        dst = pair_index(m - 1, x.face(m - 1, i - 1, sigma), j);
                    }
                }
        }
    }
    return out;
}

FilteredComplex skeletal_filtration(const SemiSimplicialSet& x) {
    FilteredComplex fc;
    fc.ambient = chain_complex_of(x);
    fc.levels.resize(x.level_sizes.size());
    for (std::size_t k = 0; k < x.level_sizes.size(); ++k)
        fc.levels[k].assign(x.level_sizes[k], static_cast<unsigned>(k));
    return fc;
}

std::optional<std::string> validate_simplicial_map(const SimplicialMap& f) {
    if (auto d = validate(f.source)) return "source: " + d->what;
    if (auto d = validate(f.target)) return "target: " + d->what;
    if (f.map.size() != f.source.level_sizes.size()) return std::string("one index map per source level required");
    for (std::size_t k = 0; k < f.map.size(); ++k) {
        if (f.map[k].size() != f.source.level_sizes[k]) return std::string("index map size mismatch");
        for (std::size_t s = 0; s < f.map[k].size(); ++s)
            if (f.map[k][s] >= f.target.level_size(k))
                return "image out of range at level " + std::to_string(k);
    }
    for (std::size_t k = 1; k < f.map.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t s = 0; s < f.source.level_sizes[k]; ++s)
                if (f.map[k - 1][f.source.face(k, i, s)] != f.target.face(k, i, f.map[k][s]))
                    return "does not commute with d_" + std::to_string(i) + " at level " + std::to_string(k);
    return std::nullopt;
}

ChainMap chain_map_of(const SimplicialMap& f) {
    if (auto e = validate_simplicial_map(f)) throw std::invalid_argument("chain_map_of: " + *e);
    ChainMap out;
    out.source = chain_complex_of(f.source);
    out.target = chain_complex_of(f.target);
    out.bottom_degree = 0;
    for (std::size_t k = 0; k < f.source.level_sizes.size(); ++k) {
        IntegerMatrix b(f.target.level_size(k), f.source.level_sizes[k]);
        for (std::size_t s = 0; s < f.source.level_sizes[k]; ++s) b.add_at(f.map[k][s], s, 1);
        out.blocks.push_back(std::move(b));
    }
    return out;
}

std::optional<std::string> validate_covering(const SimplicialMap& p) {
    if (auto e = validate_simplicial_map(p)) return e;
    if (p.map.size() != p.target.level_sizes.size())
        return std::string("covering must be defined on every level of the base");
    // constant fiber cardinality across all simplices of all levels
    std::optional<std::size_t> sheets;
    std::vector<std::vector<std::vector<std::size_t>>> fibers(p.map.size());
    for (std::size_t k = 0; k < p.map.size(); ++k) {
        fibers[k].assign(p.target.level_size(k), {});
        for (std::size_t e = 0; e < p.map[k].size(); ++e) fibers[k][p.map[k][e]].push_back(e);
        for (std::size_t b = 0; b < fibers[k].size(); ++b) {
            if (!sheets) sheets = fibers[k][b].size();
            if (fibers[k][b].size() != *sheets)
                return "fiber size is not constant (level " + std::to_string(k) + ", simplex " + std::to_string(b) +
                       ")";
        }
    }
    // faces restrict to bijections between fibers
    for (std::size_t k = 1; k < p.map.size(); ++k)
        for (std::size_t b = 0; b < fibers[k].size(); ++b)
            for (std::size_t i = 0; i <= k; ++i) {
                std::set<std::size_t> images;
                for (std::size_t e : fibers[k][b]) images.insert(p.source.face(k, i, e));
                if (images.size() != fibers[k][b].size())
                    return "face d_" + std::to_string(i) + " is not injective on the fiber over simplex " +
                           std::to_string(b) + " of level " + std::to_string(k);
            }
    return std::nullopt;
}

std::size_t covering_degree(const SimplicialMap& p) {
    for (std::size_t k = 0; k < p.target.level_sizes.size(); ++k)
        if (p.target.level_sizes[k] > 0) {
            std::size_t count = 0;
            for (std::size_t e = 0; k < p.map.size() && e < p.map[k].size(); ++e)
                if (p.map[k][e] == 0) ++count;
            return count;
        }
    return 1;
}

ChainMap covering_transfer(const SimplicialMap& p) {
    if (auto e = validate_covering(p)) throw std::invalid_argument("covering_transfer: " + *e);
    ChainMap trf;
    trf.source = chain_complex_of(p.target);
    trf.target = chain_complex_of(p.source);
    trf.bottom_degree = 0;
    for (std::size_t k = 0; k < p.target.level_sizes.size(); ++k) {
        IntegerMatrix b(p.source.level_size(k), p.target.level_sizes[k]);
        if (k < p.map.size())
            for (std::size_t e = 0; e < p.map[k].size(); ++e) b.add_at(e, p.map[k][e], 1);
        trf.blocks.push_back(std::move(b));
    }
    return trf;
}

}  // namespace homstab
