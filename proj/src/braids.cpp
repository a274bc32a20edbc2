#include "homstab/braids.hpp"

#include "homstab/parallel.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace homstab {

std::size_t Composition::total() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

std::string Composition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

namespace {

void compositions_rec(std::size_t remaining, std::size_t parts_left, Composition& acc,
                      std::vector<Composition>& out) {
    if (parts_left == 1) {
        acc.parts.push_back(remaining);
        out.push_back(acc);
        acc.parts.pop_back();
        return;
    }
    for (std::size_t first = 1; first + (parts_left - 1) <= remaining; ++first) {
        acc.parts.push_back(first);
        compositions_rec(remaining - first, parts_left - 1, acc, out);
        acc.parts.pop_back();
    }
}

std::vector<Composition> compositions(std::size_t n, std::size_t k) {
    std::vector<Composition> out;
    if (k == 0 || k > n) return out;
    Composition acc;
    compositions_rec(n, k, acc, out);
    return out;
}

// binom(a+b, a) mod 2 = 1 exactly when the binary additions carry nowhere
bool binom_odd(std::size_t a, std::size_t b) { return (a & b) == 0; }

}  // namespace

FuksComplex build_fuks_complex(std::size_t n) {
    if (n == 0) throw std::invalid_argument("build_fuks_complex: n must be positive");
    FuksComplex fx;
    fx.n = n;
    fx.basis.resize(n);
    for (std::size_t i = 0; i < n; ++i) fx.basis[i] = compositions(n, n - i);

    std::vector<std::map<Composition, std::size_t>> index(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < fx.basis[i].size(); ++s) index[i][fx.basis[i][s]] = s;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        IntegerMatrix delta(fx.basis[i + 1].size(), fx.basis[i].size());
        for (std::size_t s = 0; s < fx.basis[i].size(); ++s) {
            const auto& parts = fx.basis[i][s].parts;
            for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
                if (!binom_odd(parts[j], parts[j + 1])) continue;
                Composition merged;
                merged.parts.reserve(parts.size() - 1);
                for (std::size_t t = 0; t < parts.size(); ++t) {
                    if (t == j) {
                        merged.parts.push_back(parts[j] + parts[j + 1]);
                        ++t;
                    } else {
                        merged.parts.push_back(parts[t]);
                    }
                }
                delta.set(index[i + 1].at(merged), s, 1);
            }
        }
        fx.deltas.push_back(std::move(delta));
    }
    return fx;
}

std::vector<std::size_t> fuks_mod2_dims(std::size_t n) {
    const FuksComplex fx = build_fuks_complex(n);
    std::vector<std::size_t> delta_ranks(n + 1, 0);  // delta_ranks[i] = rank of delta out of degree i-1
    for (std::size_t i = 0; i + 1 < n; ++i) delta_ranks[i + 1] = rank_over_field(fx.deltas[i], 2);
    std::vector<std::size_t> dims(n, 0);
    for (std::size_t i = 0; i < n; ++i) dims[i] = fx.dim(i) - delta_ranks[i + 1] - delta_ranks[i];
    return dims;
}

StabilityTable stability_table_mod2(std::size_t n_max, std::size_t i_max) {
    return stability_table_mod2(n_max, i_max, 1);
}

StabilityTable stability_table_mod2(std::size_t n_max, std::size_t i_max, std::size_t jobs) {
    StabilityTable t;
    t.n_start = 1;
    t.provenance = "fuks-mod2";
    t.dims.assign(i_max + 1, std::vector<std::size_t>(n_max, 0));
    std::vector<std::vector<std::size_t>> columns(n_max);
    parallel_for(n_max, jobs, [&](std::size_t idx) { columns[idx] = fuks_mod2_dims(idx + 1); });
    for (std::size_t idx = 0; idx < n_max; ++idx)
        for (std::size_t i = 0; i <= i_max && i < columns[idx].size(); ++i) t.dims[i][idx] = columns[idx][i];
    return t;
}

GroupPresentation artin_presentation(std::size_t n) {
    if (n == 0) throw std::invalid_argument("artin_presentation: n must be positive");
    GroupPresentation p;
    p.generators = n - 1;
    for (std::size_t i = 1; i + 1 <= n - 1; ++i) {
        const int a = static_cast<int>(i), b = static_cast<int>(i + 1);
        p.relators.push_back({a, b, a, -b, -a, -b});
    }
    for (std::size_t i = 1; i <= n - 1; ++i)
        for (std::size_t j = i + 2; j <= n - 1; ++j) {
            const int a = static_cast<int>(i), b = static_cast<int>(j);
            p.relators.push_back({a, b, -a, -b});
        }
    return p;
}

GroupPresentation spherical_presentation(std::size_t n) {
    if (n < 2) throw std::invalid_argument("spherical_presentation: n must be at least 2");
    GroupPresentation p = artin_presentation(n);
    std::vector<int> surface;
    for (std::size_t i = 1; i <= n - 1; ++i) surface.push_back(static_cast<int>(i));
    for (std::size_t i = n - 1; i >= 1; --i) surface.push_back(static_cast<int>(i));
    p.relators.push_back(std::move(surface));
    return p;
}

IntegerMatrix exponent_sum_matrix(const GroupPresentation& p) {
    IntegerMatrix m(p.generators, p.relators.size());
    for (std::size_t c = 0; c < p.relators.size(); ++c)
        for (int letter : p.relators[c]) {
            const std::size_t g = static_cast<std::size_t>(letter < 0 ? -letter : letter);
            if (g == 0 || g > p.generators) throw std::invalid_argument("relator letter out of range");
            m.add_at(g - 1, c, letter < 0 ? -1 : 1);
        }
    return m;
}

AbelianGroupInvariants abelianization(const GroupPresentation& p) {
    return cokernel_invariants(exponent_sum_matrix(p));
}

std::size_t h1_mod_p(const GroupPresentation& p, std::int64_t characteristic) {
    if (!is_prime(characteristic)) throw std::invalid_argument("h1_mod_p: characteristic must be prime");
    return p.generators - rank_over_field(exponent_sum_matrix(p), characteristic);
}

}  // namespace homstab
