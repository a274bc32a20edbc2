#include "homstab/injective_words.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace homstab {

namespace {

using Word = std::vector<unsigned>;

std::string word_label(const Word& w, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && n > 9) s += '.';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace

InjectiveWordsComplex build_injective_words(std::size_t n) {
    InjectiveWordsComplex out;
    out.alphabet_size = n;
    if (n == 0) return out;

    // level k holds the injective (k+1)-tuples in lexicographic order;
    // appending unused letters in increasing order preserves that order
    std::vector<std::vector<Word>> levels(n);
    levels[0].reserve(n);
    for (unsigned a = 1; a <= n; ++a) levels[0].push_back({a});
    for (std::size_t k = 1; k < n; ++k) {
        for (const Word& w : levels[k - 1]) {
            std::vector<bool> used(n + 1, false);
            for (unsigned a : w) used[a] = true;
            for (unsigned a = 1; a <= n; ++a)
                if (!used[a]) {
                    Word next = w;
                    next.push_back(a);
                    levels[k].push_back(std::move(next));
                }
        }
    }

    std::vector<std::map<Word, std::size_t>> index(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 0; s < levels[k].size(); ++s) index[k][levels[k][s]] = s;

    auto& space = out.space;
    space.level_sizes.resize(n);
    space.faces.resize(n);
    space.labels.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        space.level_sizes[k] = levels[k].size();
        space.labels[k].reserve(levels[k].size());
        for (const Word& w : levels[k]) space.labels[k].push_back(word_label(w, n));
        if (k == 0) continue;
        space.faces[k].assign(k + 1, std::vector<std::size_t>(levels[k].size(), 0));
        for (std::size_t s = 0; s < levels[k].size(); ++s) {
            const Word& w = levels[k][s];
            for (std::size_t i = 0; i <= k; ++i) {
                Word sub;
                sub.reserve(k);
                for (std::size_t t = 0; t < w.size(); ++t)
                    if (t != i) sub.push_back(w[t]);
                space.faces[k][i][s] = index[k - 1].at(sub);
            }
        }
    }
    return out;
}

WedgeCertificate certify_wedge(std::size_t n) {
    if (n < 1) throw std::invalid_argument("certify_wedge: n must be at least 1");
    const InjectiveWordsComplex fx = build_injective_words(n);
    const ChainComplex reduced = augmented_complex(chain_complex_of(fx.space));
    const auto homology = homology_integral_all(reduced);

    WedgeCertificate cert;
    cert.n = n;
    cert.reduced_betti.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        auto it = homology.find(static_cast<int>(k));
        const AbelianGroupInvariants h = it == homology.end() ? AbelianGroupInvariants{} : it->second;
        cert.reduced_betti[k] = h.free_rank;
        if (!h.torsion_free()) {
            cert.torsion_free = false;
            throw std::runtime_error("certify_wedge: torsion in reduced H_" + std::to_string(k) + " of F(" +
                                     std::to_string(n) + ")");
        }
        if (k + 1 < n && !h.trivial())
            throw std::runtime_error("certify_wedge: reduced H_" + std::to_string(k) + " of F(" + std::to_string(n) +
                                     ") does not vanish");
    }
    cert.top_rank = cert.reduced_betti[n - 1];
    return cert;
}

Int expected_top_rank(std::size_t n) {
    // reduced Euler characteristic from the count n!/(n-k-1)! of k-simplices
    Int chi = -1;
    Int count = 1;
    for (std::size_t k = 0; k < n; ++k) {
        count *= static_cast<unsigned long>(n - k);  // falling factorial n(n-1)...(n-k)
        if (k % 2 == 0)
            chi += count;
        else
            chi -= count;
    }
    return chi < 0 ? Int(-chi) : chi;
}

}  // namespace homstab
