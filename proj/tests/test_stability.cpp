#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homstab/braids.hpp"
#include "homstab/stability.hpp"

#include <random>

using namespace homstab;

namespace {

// unconjugated canonical model: A_n = B_0 + ... + B_n, inclusion and
// scalar (n - m) transfers
DoldSystem canonical_system(const std::vector<std::size_t>& b) {
    const std::size_t N = b.size() - 1;
    DoldSystem s;
    std::size_t acc = 0;
    for (std::size_t n = 0; n <= N; ++n) {
        acc += b[n];
        s.dims.push_back(acc);
    }
    for (std::size_t n = 0; n < N; ++n) {
        RationalMatrix i_n(s.dims[n + 1], s.dims[n]);
        for (std::size_t k = 0; k < s.dims[n]; ++k) i_n.at(k, k) = 1;
        s.stab.push_back(std::move(i_n));
        RationalMatrix t_n1(s.dims[n], s.dims[n + 1]);
        std::size_t off = 0;
        for (std::size_t m = 0; m <= n; ++m) {
            for (std::size_t k = 0; k < b[m]; ++k) t_n1.at(off + k, off + k) = Rational(static_cast<long>(n + 1 - m));
            off += b[m];
        }
        s.trans.push_back(std::move(t_n1));
    }
    return s;
}

Int binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int b = 1;
    for (std::size_t i = 0; i < k; ++i) {
        b *= static_cast<unsigned long>(n - i);
        b /= static_cast<unsigned long>(i + 1);
    }
    return b;
}

}  // namespace

TEST_CASE("relations hold for the rank-one tower") {
    // a_n = 1, i_n = (1), t_n = (n): n*1 = (n-1)*1 + 1
    DoldSystem h0;
    const std::size_t N = 6;
    h0.dims.assign(N + 1, 1);
    for (std::size_t n = 0; n < N; ++n) {
        h0.stab.push_back(RationalMatrix::identity(1));
        RationalMatrix t(1, 1);
        t.at(0, 0) = static_cast<long>(n + 1);
        h0.trans.push_back(std::move(t));
    }
    CHECK(!verify_dold_relations(h0));
    // t_{n,0} = n!/n! = 1
    for (std::size_t n = 0; n <= N; ++n) {
        const RationalMatrix t_n0 = iterated_transfer(h0, n, 0);
        CHECK(t_n0.at(0, 0) == 1);
    }
    const DoldDecomposition dec = dold_decompose(h0);
    CHECK(dec.iso);
    CHECK(dec.composites_invertible);
    CHECK(dec.b_dims[0] == 1);
    for (std::size_t n = 1; n <= N; ++n) CHECK(dec.b_dims[n] == 0);
    // t_{n+1} i_n is multiplication by n+1
    for (std::size_t n = 0; n < N; ++n) CHECK((h0.t(n + 1) * h0.i(n)).at(0, 0) == static_cast<long>(n + 1));
}

TEST_CASE("canonical model satisfies the relations and detects perturbation") {
    const DoldSystem sys = canonical_system({1, 2, 0, 3, 1});
    CHECK(!verify_dold_relations(sys));

    DoldSystem bad = sys;
    bad.trans[2].at(0, 0) += 1;  // perturb one entry of t_3
    const auto failing = verify_dold_relations(bad);
    REQUIRE(failing.has_value());
    CHECK((*failing == 3 || *failing == 4));
}

TEST_CASE("iterated transfers act on canonical summands by binomials") {
    const std::vector<std::size_t> b = {1, 2, 0, 3};
    const DoldSystem sys = canonical_system(b);
    const std::size_t N = b.size() - 1;
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t m = 0; m <= n; ++m) {
            const RationalMatrix t = iterated_transfer(sys, n, m);
            // block diagonal with scalar binom(n-j, n-m) on the B_j summand
            std::size_t off = 0;
            for (std::size_t j = 0; j <= m; ++j) {
                for (std::size_t k = 0; k < b[j]; ++k)
                    CHECK(t.at(off + k, off + k) == Rational(binom(n - j, n - m)));
                off += b[j];
            }
        }
    CHECK_THROWS_AS(iterated_transfer(sys, 1, 2), std::invalid_argument);
}

TEST_CASE("iterated transfer composition identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t N = 2 + rng() % 4;
        std::vector<std::size_t> b(N + 1);
        for (auto& v : b) v = rng() % 4;
        const DoldSystem sys = random_dold_system(trial + 100, N, b);
        // composing normalised transfers overcounts by the ways of splitting
        // the forgotten points: t_{m,k} t_{n,m} = binom(n-k, n-m) t_{n,k}
        for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t m = 0; m <= n; ++m)
                for (std::size_t k = 0; k <= m; ++k) {
                    const RationalMatrix lhs = iterated_transfer(sys, m, k) * iterated_transfer(sys, n, m);
                    const RationalMatrix rhs =
                        iterated_transfer(sys, n, k).scaled(Rational(binom(n - k, n - m)));
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("t_{n,n} is the identity") {
    const DoldSystem sys = random_dold_system(5, 4, {1, 2, 1});
    for (std::size_t n = 0; n <= 4; ++n) CHECK(iterated_transfer(sys, n, n) == RationalMatrix::identity(sys.dims[n]));
}

TEST_CASE("random systems are deterministic, relation-satisfying and decomposable") {
    const DoldSystem a = random_dold_system(42, 5, {1, 2, 0, 3});
    const DoldSystem b = random_dold_system(42, 5, {1, 2, 0, 3});
    CHECK(a.dims == b.dims);
    for (std::size_t n = 0; n < 5; ++n) {
        CHECK(a.stab[n] == b.stab[n]);
        CHECK(a.trans[n] == b.trans[n]);
    }

    std::mt19937_64 rng(37);
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        const std::size_t N = 1 + rng() % 6;
        std::vector<std::size_t> dims(N + 1);
        for (auto& v : dims) v = rng() % 5;
        const DoldSystem sys = random_dold_system(trial, N, dims);
        CHECK(!verify_dold_relations(sys));
        const DoldDecomposition dec = dold_decompose(sys);
        CHECK(dec.iso);
        CHECK(dec.composites_invertible);
        for (std::size_t m = 0; m <= N; ++m) CHECK(dec.b_dims[m] == dims[m]);
        for (std::size_t n = 0; n <= N; ++n) {
            CHECK(dec.phi[n].rows() == sys.dims[n]);
            CHECK(dec.phi[n].cols() == sys.dims[n]);
        }
    }
}

TEST_CASE("decompose refuses systems that fail the relations") {
    DoldSystem broken = canonical_system({1, 1});
    broken.trans[0].at(0, 0) += 1;
    CHECK(verify_dold_relations(broken).has_value());
    CHECK_THROWS_AS(dold_decompose(broken), std::invalid_argument);
}

TEST_CASE("shape validation") {
    DoldSystem sys = canonical_system({1, 1});
    sys.trans[0] = RationalMatrix(2, 2);
    CHECK_THROWS_AS(verify_dold_relations(sys), std::invalid_argument);
}

TEST_CASE("stability onset of tables") {
    StabilityTable constant;
    constant.n_start = 1;
    constant.dims = {{3, 3, 3, 3}};
    const auto rep = stability_range(constant);
    REQUIRE(rep[0].onset.has_value());
    CHECK(*rep[0].onset == 1);
    CHECK(rep[0].within_2i_bound);

    StabilityTable mod3;
    mod3.n_start = 2;
    mod3.dims.emplace_back();
    for (std::size_t n = 2; n <= 20; ++n) mod3.dims[0].push_back(h1_mod_p(spherical_presentation(n), 3));
    const auto osc = stability_range(mod3);
    CHECK(!osc[0].onset.has_value());
    CHECK(!osc[0].within_2i_bound);

    // the braid table stabilises within the 2i bound
    const StabilityTable braid = stability_table_mod2(12, 4);
    const auto onsets = stability_range(braid);
    for (std::size_t i = 0; i <= 4; ++i) {
        REQUIRE(onsets[i].onset.has_value());
        CHECK(*onsets[i].onset <= std::max<std::size_t>(2 * i, 1));
        CHECK(onsets[i].within_2i_bound);
    }
}

TEST_CASE("sphere and projective space chain models") {
    for (std::size_t d = 2; d <= 8; ++d) {
        const ChainComplex sphere = sphere_equivariant_model(d);
        const ChainComplex proj = projective_space_model(d);
        REQUIRE(!validate_complex(sphere));
        REQUIRE(!validate_complex(proj));
        REQUIRE(!validate_chain_map(sphere_quotient_map(d)));

        AbelianGroupInvariants z;
        z.free_rank = 1;
        CHECK(homology_integral(sphere, 0) == z);
        CHECK(homology_integral(sphere, static_cast<int>(d) - 1) == z);
        for (int k = 1; k + 1 < static_cast<int>(d); ++k) CHECK(homology_integral(sphere, k).trivial());

        CHECK(homology_integral(proj, 0) == z);
        for (int k = 1; k < static_cast<int>(d) - 1; ++k) {
            const auto h = homology_integral(proj, k);
            if (k % 2 == 1) {
                CHECK(h.free_rank == 0);
                CHECK(h.torsion == std::vector<Int>{2});
            } else {
                CHECK(h.trivial());
            }
        }
    }
}

TEST_CASE("tau dichotomy") {
    const TauExperimentResult d2 = tau_experiment(2);
    CHECK(d2.target_group.free_rank == 1);
    REQUIRE(d2.image_index.has_value());
    CHECK(*d2.image_index == 2);

    const TauExperimentResult d3 = tau_experiment(3);
    CHECK(d3.target_group.trivial());
    CHECK(!d3.image_index.has_value());

    const TauExperimentResult d4 = tau_experiment(4);
    CHECK(d4.target_group.free_rank == 1);
    REQUIRE(d4.image_index.has_value());
    CHECK(*d4.image_index == 2);

    for (std::size_t d = 3; d <= 9; d += 2) CHECK(!tau_experiment(d).image_index.has_value());
    for (std::size_t d = 2; d <= 10; d += 2) {
        const auto res = tau_experiment(d);
        REQUIRE(res.image_index.has_value());
        CHECK(*res.image_index == 2);
    }
    CHECK_THROWS_AS(tau_experiment(1), std::invalid_argument);
}
