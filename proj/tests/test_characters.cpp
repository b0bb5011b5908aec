#include <catch2/catch_amalgamated.hpp>

#include "stablechar/characters.hpp"
#include "stablechar/permutation.hpp"

using namespace stablechar;

namespace {
YoungDiagram yd(const std::string& text) { return YoungDiagram::parse(text); }
}

TEST_CASE("composition convention: (a o b)(x) = a(b(x))") {
    const auto s1 = Permutation::coxeter(1, 3);
    const auto s2 = Permutation::coxeter(2, 3);
    CHECK(compose(s1, s1) == Permutation::identity(3));
    // s_1 o s_2 sends 1 -> 2, 2 -> 3, 3 -> 1 under this convention; this
    // test pins the convention used everywhere (theta, rho_hat, iota).
    CHECK(compose(s1, s2).images() == std::vector<int>{2, 3, 1});
    const auto cycle = Permutation::parse("(1 2 3)", 3);
    CHECK(cycle.inverse() == Permutation::parse("(1 3 2)", 3));
}

TEST_CASE("cycle notation parse and print") {
    const auto g = Permutation::parse("(1 2)(3 4)", 5);
    CHECK(g(1) == 2);
    CHECK(g(3) == 4);
    CHECK(g(5) == 5);
    CHECK(g.cycle_string() == "(1 2)(3 4)");
    CHECK(Permutation::parse("()", 4) == Permutation::identity(4));
    CHECK(Permutation::identity(4).cycle_string() == "()");
    CHECK(Permutation::parse("( 1 2 3 )", 3).images() == std::vector<int>{2, 3, 1});
    CHECK_THROWS_AS(Permutation::parse("(1 2", 3), invalid_input_error);
    CHECK_THROWS_AS(Permutation::parse("(1 2)(2 3)", 3), invalid_input_error);
    CHECK_THROWS_AS(Permutation::parse("(1 9)", 3), invalid_input_error);
}

TEST_CASE("cycle types") {
    CHECK(cycle_type(Permutation::identity(4)) == yd("1,1,1,1"));
    CHECK(cycle_type(Permutation::parse("(1 2)(3 4)", 5)) == yd("2,2,1"));
    CHECK(cycle_type(Permutation::parse("(1 2 3)", 3)) == yd("3"));
}

TEST_CASE("enumerate_group") {
    CHECK(enumerate_group(1).size() == 1);
    CHECK(enumerate_group(3).size() == 6);
    CHECK(enumerate_group(4).size() == 24);
    CHECK_THROWS_AS(enumerate_group(9), resource_limit_error);
}

TEST_CASE("coxeter words reconstruct their permutation") {
    for (const auto& sigma : enumerate_group(4)) {
        auto product = Permutation::identity(4);
        for (int i : coxeter_word(sigma)) product = compose(product, Permutation::coxeter(i, 4));
        CHECK(product == sigma);
    }
    const auto sigma = Permutation::parse("(1 5 3)(2 6)", 6);
    auto product = Permutation::identity(6);
    for (int i : coxeter_word(sigma)) product = compose(product, Permutation::coxeter(i, 6));
    CHECK(product == sigma);
}

TEST_CASE("frozen character tables for S_3 and S_4") {
    // Classes in the column order (1^k), (2,1^..), ..., one row per shape.
    CHECK(character(yd("3"), yd("1,1,1")) == 1);
    CHECK(character(yd("3"), yd("2,1")) == 1);
    CHECK(character(yd("3"), yd("3")) == 1);
    CHECK(character(yd("2,1"), yd("1,1,1")) == 2);
    CHECK(character(yd("2,1"), yd("2,1")) == 0);
    CHECK(character(yd("2,1"), yd("3")) == -1);
    CHECK(character(yd("1,1,1"), yd("1,1,1")) == 1);
    CHECK(character(yd("1,1,1"), yd("2,1")) == -1);
    CHECK(character(yd("1,1,1"), yd("3")) == 1);

    const std::vector<YoungDiagram> classes4 = {yd("1,1,1,1"), yd("2,1,1"), yd("2,2"), yd("3,1"), yd("4")};
    const std::vector<std::pair<YoungDiagram, std::vector<long long>>> table4 = {
        {yd("4"), {1, 1, 1, 1, 1}},
        {yd("3,1"), {3, 1, -1, 0, -1}},
        {yd("2,2"), {2, 0, 2, -1, 0}},
        {yd("2,1,1"), {3, -1, -1, 0, 1}},
        {yd("1,1,1,1"), {1, -1, 1, 1, -1}},
    };
    for (const auto& [lambda, row] : table4)
        for (std::size_t c = 0; c < classes4.size(); ++c)
            CHECK(character(lambda, classes4[c]) == row[c]);
}

TEST_CASE("trivial and sign rows") {
    for (int k = 1; k <= 6; ++k) {
        for (const auto& mu : partitions_of(k)) {
            CHECK(character(yd(std::to_string(k)), mu) == 1);
            std::vector<int> column(k, 1);
            const long long sign = ((k - mu.length()) % 2 == 0) ? 1 : -1;
            CHECK(character(YoungDiagram(column), mu) == sign);
        }
    }
}

TEST_CASE("character at the identity is the dimension") {
    for (int k = 1; k <= 6; ++k) {
        std::vector<int> ones(k, 1);
        for (const auto& lambda : partitions_of(k))
            CHECK(character(lambda, YoungDiagram(ones)) == dim_irrep(lambda));
    }
}

TEST_CASE("character orthogonality, convolution form") {
    // (1/k!) sum_sigma chi(sigma) chi(sigma tau) = chi(tau) / d_lambda,
    // exactly, for all lambda |- k <= 5 and all tau.
    for (int k = 1; k <= 5; ++k) {
        const auto group = enumerate_group(k);
        Integer k_factorial = 1;
        for (int i = 2; i <= k; ++i) k_factorial *= i;
        for (const auto& lambda : partitions_of(k)) {
            const Rational d(static_cast<long>(dim_irrep(lambda)));
            for (const auto& tau : group) {
                Integer total = 0;
                for (const auto& sigma : group)
                    total += Integer(static_cast<long>(character(lambda, sigma))) *
                             Integer(static_cast<long>(character(lambda, compose(sigma, tau))));
                CHECK(rational(total, k_factorial) ==
                      Rational(static_cast<long>(character(lambda, tau))) / d);
            }
        }
    }
}

TEST_CASE("first orthogonality over classes") {
    for (int k = 1; k <= 6; ++k) {
        Integer k_factorial = 1;
        for (int i = 2; i <= k; ++i) k_factorial *= i;
        const auto shapes = partitions_of(k);
        for (const auto& lambda : shapes) {
            for (const auto& nu : shapes) {
                Rational total = 0;
                for (const auto& mu : partitions_of(k)) {
                    const Rational class_size = rational(k_factorial, centralizer_order(mu));
                    total += class_size * Rational(static_cast<long>(character(lambda, mu))) *
                             Rational(static_cast<long>(character(nu, mu)));
                }
                CHECK(total == (lambda == nu ? Rational(k_factorial) : Rational(0)));
            }
        }
    }
}

TEST_CASE("class sizes sum to the group order") {
    for (int k = 1; k <= 7; ++k) {
        Integer k_factorial = 1;
        for (int i = 2; i <= k; ++i) k_factorial *= i;
        Rational total = 0;
        for (const auto& mu : partitions_of(k)) {
            CHECK(cycle_type(class_representative(mu)) == mu);
            total += rational(k_factorial, centralizer_order(mu));
        }
        CHECK(total == Rational(k_factorial));
    }
}

TEST_CASE("idempotent coefficients") {
    CHECK(idempotent_coefficient(yd("1"), Permutation::identity(1)) == rational(1));
    CHECK(idempotent_coefficient(yd("2"), Permutation::coxeter(1, 2)) == rational(1, 2));
    CHECK(idempotent_coefficient(yd("1,1"), Permutation::coxeter(1, 2)) == rational(-1, 2));
    CHECK_THROWS_AS(idempotent_coefficient(yd("2"), Permutation::identity(3)), invalid_input_error);
}

TEST_CASE("character errors") {
    CHECK_THROWS_AS(character(yd("2,1"), yd("2,2")), invalid_input_error);
}
