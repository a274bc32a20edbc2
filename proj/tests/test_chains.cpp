#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homstab/chain_complex.hpp"
#include "homstab/generators.hpp"

#include <random>

using namespace homstab;

namespace {

ChainComplex circle_complex() {
    ChainComplex c;
    c.bottom_degree = 0;
    c.ranks = {1, 1};
    c.boundaries = {IntegerMatrix(0, 1), IntegerMatrix(1, 1)};
    return c;
}

ChainComplex projective_plane_complex() {
    ChainComplex c;
    c.bottom_degree = 0;
    c.ranks = {1, 1, 1};
    c.boundaries = {IntegerMatrix(0, 1), IntegerMatrix(1, 1), IntegerMatrix::from_rows({{2}})};
    return c;
}

ChainComplex degree_zero_line() {
    ChainComplex c;
    c.bottom_degree = 0;
    c.ranks = {1};
    c.boundaries = {IntegerMatrix(0, 1)};
    return c;
}

AbelianGroupInvariants free_of_rank(std::size_t r) {
    AbelianGroupInvariants g;
    g.free_rank = r;
    return g;
}

int euler(const std::vector<std::size_t>& dims) {
    int chi = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<int>(dims[i]);
    return chi;
}

}  // namespace

TEST_CASE("validation accepts the circle and the empty complex") {
    CHECK(!validate_complex(circle_complex()));
    CHECK(!validate_complex(ChainComplex{}));
}

TEST_CASE("validation reports the first degree with dd != 0") {
    ChainComplex c;
    c.bottom_degree = 0;
    c.ranks = {1, 1, 1};
    c.boundaries = {IntegerMatrix(0, 1), IntegerMatrix::from_rows({{1}}), IntegerMatrix::from_rows({{1}})};
    const auto defect = validate_complex(c);
    REQUIRE(defect.has_value());
    CHECK(defect->degree == 2);
    CHECK_THROWS_AS(homology_integral(c, 1), std::invalid_argument);
}

TEST_CASE("homology of the pinned examples") {
    const ChainComplex circle = circle_complex();
    CHECK(homology_integral(circle, 0) == free_of_rank(1));
    CHECK(homology_integral(circle, 1) == free_of_rank(1));
    CHECK(homology_integral(circle, 2).trivial());

    const ChainComplex rp2 = projective_plane_complex();
    CHECK(homology_integral(rp2, 0) == free_of_rank(1));
    const auto h1 = homology_integral(rp2, 1);
    CHECK(h1.free_rank == 0);
    CHECK(h1.torsion == std::vector<Int>{2});
    CHECK(homology_integral(rp2, 2).trivial());

    CHECK(homology_field_dims(rp2, 2) == std::vector<std::size_t>{1, 1, 1});
    CHECK(homology_field_dims(rp2, 0) == std::vector<std::size_t>{1, 0, 0});
    CHECK(homology_field_dims(circle, 5) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("mapping cones") {
    // multiplication by 2 concentrated in degree 0
    ChainMap times2;
    times2.source = degree_zero_line();
    times2.target = degree_zero_line();
    times2.bottom_degree = 0;
    times2.blocks = {IntegerMatrix::from_rows({{2}})};
    const ChainComplex cone2 = mapping_cone(times2);
    const auto h0 = homology_integral(cone2, 0);
    CHECK(h0.free_rank == 0);
    CHECK(h0.torsion == std::vector<Int>{2});
    CHECK(homology_integral(cone2, 1).trivial());

    const ChainComplex circle = circle_complex();
    const ChainComplex cone_id = mapping_cone(identity_chain_map(circle));
    for (int k = cone_id.bottom_degree; k <= cone_id.top_degree(); ++k)
        CHECK(homology_integral(cone_id, k).trivial());

    const ChainComplex cone_zero = mapping_cone(zero_chain_map(circle, circle));
    CHECK(homology_field_dims(cone_zero, 0) == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("mapping cone rejects non-commuting data") {
    ChainMap bad;
    bad.source = projective_plane_complex();
    bad.target = projective_plane_complex();
    bad.bottom_degree = 0;
    bad.blocks = {IntegerMatrix::from_rows({{1}}), IntegerMatrix::from_rows({{1}}),
                  IntegerMatrix::from_rows({{2}})};  // d f_2 = 4 but f_1 d = 2
    CHECK(validate_chain_map(bad).has_value());
    CHECK_THROWS_AS(mapping_cone(bad), std::invalid_argument);
}

TEST_CASE("suspension shifts reduced homology") {
    const ChainComplex sc = suspension(circle_complex());
    CHECK(!validate_complex(sc));
    CHECK(homology_field_dims(sc, 0) == std::vector<std::size_t>{0, 0, 1});

    const ChainComplex sp = suspension(degree_zero_line());
    for (auto d : homology_field_dims(sp, 0)) CHECK(d == 0);

    // total reduced dimension is preserved for simplicial complexes
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const SemiSimplicialSet x = random_semi_simplicial_set(rng, 5, 4);
        const ChainComplex c = chain_complex_of(x);
        const auto before = homology_field_dims(augmented_complex(c), 3);
        const auto after = homology_field_dims(suspension(c), 3);
        std::size_t total_before = 0, total_after = 0;
        for (auto d : before) total_before += d;
        for (auto d : after) total_after += d;
        CHECK(total_before == total_after);
    }
}

TEST_CASE("suspension rejects complexes without the simplicial augmentation") {
    ChainComplex c;
    c.bottom_degree = 0;
    c.ranks = {1, 1};
    c.boundaries = {IntegerMatrix(0, 1), IntegerMatrix::from_rows({{1}})};
    REQUIRE(!validate_complex(c));
    CHECK_THROWS_AS(suspension(c), std::invalid_argument);
}

TEST_CASE("cone Euler characteristic identity on random chain maps") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const ChainMap f = random_chain_map(rng, 4, 4, 2);
        REQUIRE(!validate_chain_map(f));
        const ChainComplex cone = mapping_cone(f);
        const std::int64_t p = (trial % 2 == 0) ? 2 : 5;
        const auto hs = homology_field_dims(f.source, p);
        const auto ht = homology_field_dims(f.target, p);
        const auto hc = homology_field_dims(cone, p);
        // source sits shifted by one inside the cone
        int chi_source = euler(hs);
        if (f.source.bottom_degree % 2 != 0) chi_source = -chi_source;
        int chi_target = euler(ht);
        if (f.target.bottom_degree % 2 != 0) chi_target = -chi_target;
        int chi_cone = euler(hc);
        if (cone.bottom_degree % 2 != 0) chi_cone = -chi_cone;
        CHECK(chi_cone == chi_target - chi_source);
    }
}

TEST_CASE("homology of random complexes agrees across integral and field routes") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
        const ChainComplex c = random_chain_complex(rng, 4, 4, 3);
        REQUIRE(!validate_complex(c));
        const auto all = homology_integral_all(c);
        const auto qdims = homology_field_dims(c, 0);
        for (int k = c.bottom_degree; k <= c.top_degree(); ++k) {
            const auto h = all.at(k);
            CHECK(h.free_rank == qdims[static_cast<std::size_t>(k - c.bottom_degree)]);
            CHECK(homology_integral(c, k) == h);
        }
    }
}
