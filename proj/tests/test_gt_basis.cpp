#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "stablechar/characters.hpp"
#include "stablechar/gt_basis.hpp"

using namespace stablechar;

namespace {
YoungDiagram yd(const std::string& text) { return YoungDiagram::parse(text); }
}

TEST_CASE("generator matrices for the smallest shapes") {
    const auto trivial = build_rep(yd("2"));
    REQUIRE(trivial.dimension == 1);
    CHECK(trivial.generator_matrices[0](0, 0) == 1.0);

    const auto sign = build_rep(yd("1,1"));
    REQUIRE(sign.dimension == 1);
    CHECK(sign.generator_matrices[0](0, 0) == -1.0);

    const auto rep = build_rep(yd("2,1"));
    REQUIRE(rep.dimension == 2);
    // Basis order: the tableau with 2 in the first row comes first.
    CHECK(rep.tableau_order[0].row_of(2) == 0);
    const auto& m1 = rep.generator_matrices[0];
    CHECK(m1(0, 0) == 1.0);
    CHECK(m1(1, 1) == -1.0);
    CHECK(m1(0, 1) == 0.0);
    const auto& m2 = rep.generator_matrices[1];
    const double root3over2 = std::sqrt(3.0) / 2.0;
    CHECK_THAT(m2(0, 0), Catch::Matchers::WithinAbs(-0.5, 1e-12));
    CHECK_THAT(m2(1, 1), Catch::Matchers::WithinAbs(0.5, 1e-12));
    CHECK_THAT(m2(0, 1), Catch::Matchers::WithinAbs(root3over2, 1e-12));
    CHECK_THAT(m2(1, 0), Catch::Matchers::WithinAbs(root3over2, 1e-12));
}

TEST_CASE("braid and commutation relations hold for every shape up to size 8") {
    for (int size = 2; size <= 8; ++size)
        for (const auto& shape : partitions_of(size)) CHECK(braid_residual(build_rep(shape)) < 1e-9);
}

TEST_CASE("matrix traces reproduce the exact characters") {
    std::mt19937 rng(31337);
    for (int size = 3; size <= 6; ++size) {
        const auto group = enumerate_group(size);
        for (const auto& shape : partitions_of(size)) {
            const auto rep = build_rep(shape);
            for (int trial = 0; trial < 6; ++trial) {
                const auto& sigma = group[std::uniform_int_distribution<std::size_t>(0, group.size() - 1)(rng)];
                const double trace = rep_matrix(rep, sigma).trace();
                CHECK_THAT(trace,
                           Catch::Matchers::WithinAbs(static_cast<double>(character(shape, sigma)), 1e-8));
            }
        }
    }
}

TEST_CASE("doubling embedding") {
    CHECK(psi_embed(Permutation::identity(3)) == Permutation::identity(6));
    CHECK(psi_embed(Permutation::coxeter(1, 2)) == Permutation::parse("(1 3)(2 4)", 4));
    // Homomorphism, exhaustively at k = 3.
    for (const auto& a : enumerate_group(3))
        for (const auto& b : enumerate_group(3))
            CHECK(psi_embed(compose(a, b)) == compose(psi_embed(a), psi_embed(b)));
    // Generators map to the stated double transpositions.
    for (int k = 2; k <= 4; ++k)
        for (int i = 1; i < k; ++i) {
            const auto expected = compose(Permutation::transposition(2 * i - 1, 2 * i + 1, 2 * k),
                                          Permutation::transposition(2 * i, 2 * i + 2, 2 * k));
            CHECK(psi_embed(Permutation::coxeter(i, k)) == expected);
        }
    // Pairs travel together: {2i-1, 2i} lands on {2s(i)-1, 2s(i)}.
    for (int k = 1; k <= 3; ++k)
        for (const auto& sigma : enumerate_group(k)) {
            const auto embedded = psi_embed(sigma);
            for (int i = 1; i <= k; ++i) {
                CHECK(embedded(2 * i - 1) == 2 * sigma(i) - 1);
                CHECK(embedded(2 * i) == 2 * sigma(i));
            }
        }
}

TEST_CASE("sign-isotypic dimension of the doubled block matches d_lambda") {
    for (int k = 1; k <= 3; ++k) {
        for (const auto& lambda : partitions_of(k)) {
            const auto rec = sign_isotypic(lambda);
            CHECK(rec.padded == pad(lambda, 2 * k));
            CHECK(rec.computed_dim == rec.d_lambda);
            CHECK(rec.computed_dim == dim_irrep(lambda));
            CHECK(rec.margin > 1e-6);
            CHECK(rec.smallest_kept_sv > 0.1);  // projector singular values sit near 1
        }
    }
    CHECK(sign_isotypic_dim(yd("1")) == 1);
    CHECK(sign_isotypic_dim(yd("2")) == 1);
    CHECK(sign_isotypic_dim(yd("2,1")) == 2);
}

TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(build_rep(yd("5,4,3,2,1"), 100), resource_limit_error);
}
