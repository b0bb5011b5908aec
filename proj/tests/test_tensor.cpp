#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "stablechar/diagram.hpp"
#include "stablechar/tensor.hpp"

using namespace stablechar;

namespace {

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

SparseVector unit(std::vector<int> entries, int n) {
    SparseVector v(n, static_cast<int>(entries.size()));
    v.add(mi(std::move(entries)), 1);
    return v;
}

YoungDiagram yd(const std::string& text) { return YoungDiagram::parse(text); }

SparseOperator all_ones(int n) {
    SparseOperator op(n, 1);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) op.add_entry(mi({r}), mi({c}), 1);
    return op;
}

SparseRow as_row(const SparseVector& v) {
    SparseRow r;
    for (const auto& [code, c] : v.terms()) r.emplace_back(static_cast<int>(code), c);
    return r;
}

} // namespace

TEST_CASE("patterns") {
    CHECK(pattern(mi({3, 3, 5})) == SetPartition::parse("1,2|3"));
    CHECK(pattern(mi({4, 2, 7})) == SetPartition::singletons(3));
    CHECK(pattern(mi({2, 2, 2})) == SetPartition::one_block(3));
}

TEST_CASE("p_strict at k = 1") {
    CHECK(p_strict(SetPartition::parse("1,2"), 3) == SparseOperator::identity(3, 1));
    SparseOperator off(3, 1);
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c)
            if (r != c) off.add_entry(mi({r}), mi({c}), 1);
    CHECK(p_strict(SetPartition::parse("1|2"), 3) == off);
}

TEST_CASE("p_strict entry count is the falling factorial") {
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 5; ++n)
            for (const auto& pi : enumerate_partitions(2 * k)) {
                const auto op = p_strict(pi, n);
                const Integer expected = n >= pi.block_count() ? pochhammer(n, pi.block_count()) : Integer(0);
                CHECK(Integer(static_cast<long>(op.entry_count())) == expected);
            }
}

TEST_CASE("p_weak at k = 1 and the strict decomposition") {
    CHECK(p_weak(SetPartition::parse("1,2"), 3) == SparseOperator::identity(3, 1));
    CHECK(p_weak(SetPartition::parse("1|2"), 3) == all_ones(3));
    for (int k = 1; k <= 2; ++k)
        for (int n = 2; n <= 4; ++n)
            for (const auto& pi : enumerate_partitions(2 * k)) {
                SparseOperator total(n, k);
                for (const auto& coarser : coarsenings(pi)) total += p_strict(coarser, n);
                CHECK(p_weak(pi, n) == total);
            }
}

TEST_CASE("rho_hat") {
    CHECK(rho_hat(Permutation::identity(3), 2) == SparseOperator::identity(3, 2));
    SparseOperator swap2(2, 1);
    swap2.add_entry(mi({2}), mi({1}), 1);
    swap2.add_entry(mi({1}), mi({2}), 1);
    CHECK(rho_hat(Permutation::coxeter(1, 2), 1) == swap2);

    std::mt19937 rng(17);
    const auto group = enumerate_group(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto& g = group[std::uniform_int_distribution<std::size_t>(0, group.size() - 1)(rng)];
        const auto& h = group[std::uniform_int_distribution<std::size_t>(0, group.size() - 1)(rng)];
        CHECK(compose(rho_hat(g, 2), rho_hat(h, 2)) == rho_hat(compose(g, h), 2));
    }
}

TEST_CASE("theta is the left coordinate-permutation action") {
    CHECK(theta(Permutation::identity(2), 3) == SparseOperator::identity(3, 2));
    const auto s1 = Permutation::coxeter(1, 2);
    CHECK(theta(s1, 3).apply(unit({1, 2}, 3)) == unit({2, 1}, 3));
    for (const auto& sigma : enumerate_group(3))
        for (const auto& tau : enumerate_group(3))
            CHECK(compose(theta(sigma, 4), theta(tau, 4)) == theta(compose(sigma, tau), 4));
}

TEST_CASE("theta agrees with the weak action of the inverse matching") {
    for (int k = 1; k <= 3; ++k)
        for (const auto& sigma : enumerate_group(k))
            CHECK(theta(sigma, 4) == p_weak(iota(sigma.inverse()).partition, 4));
}

TEST_CASE("theta and rho_hat commute") {
    std::mt19937 rng(19);
    const auto gs = enumerate_group(4);
    const auto sigmas = enumerate_group(2);
    for (int trial = 0; trial < 8; ++trial) {
        const auto& g = gs[std::uniform_int_distribution<std::size_t>(0, gs.size() - 1)(rng)];
        const auto& s = sigmas[trial % sigmas.size()];
        CHECK(compose(theta(s, 4), rho_hat(g, 2)) == compose(rho_hat(g, 2), theta(s, 4)));
    }
}

TEST_CASE("contraction") {
    CHECK(contraction(1, unit({1, 2}, 4)) == unit({2}, 4));
    // T_2((e1 - e2) (x) (e3 - e4)) = 0: the deleted factor's coefficients cancel.
    SparseVector v(4, 2);
    v.add(mi({1, 3}), 1);
    v.add(mi({1, 4}), -1);
    v.add(mi({2, 3}), -1);
    v.add(mi({2, 4}), 1);
    CHECK(contraction(2, v).is_zero());
    CHECK_FALSE(contraction(1, unit({1, 2}, 4)).is_zero());
    CHECK_THROWS_AS(contraction(3, v), invalid_input_error);

    for (int k = 1; k <= 3; ++k) {
        const auto seed = xi(k, 2 * k);
        for (int j = 1; j <= k; ++j) CHECK(contraction(j, seed).is_zero());
    }
}

TEST_CASE("xi expansion") {
    CHECK(xi(1, 3) == unit({1}, 3) - unit({2}, 3));
    SparseVector expected(4, 2);
    expected.add(mi({1, 3}), 1);
    expected.add(mi({1, 4}), -1);
    expected.add(mi({2, 3}), -1);
    expected.add(mi({2, 4}), 1);
    CHECK(xi(2, 4) == expected);
    for (int k = 1; k <= 4; ++k) {
        const auto v = xi(k, 2 * k + 1);
        CHECK(v.support_size() == (1u << k));
        for (const auto& [code, c] : v.terms()) CHECK((c == 1 || c == -1));
    }
    CHECK_THROWS_AS(xi(2, 3), regime_error);
}

TEST_CASE("xi_lambda: seed projections") {
    CHECK(xi_lambda(yd("1"), 2) == xi(1, 2));

    // Exact norm: <xi_lambda, xi_lambda> = 2^k d^2 / k!.
    for (int k = 1; k <= 3; ++k) {
        Integer k_factorial = 1;
        for (int i = 2; i <= k; ++i) k_factorial *= i;
        for (const auto& lambda : partitions_of(k)) {
            const auto v = xi_lambda(lambda, 2 * k);
            CHECK_FALSE(v.is_zero());
            const long d = static_cast<long>(dim_irrep(lambda));
            CHECK(inner_product(v, v) == rational(Integer((1L << k) * d * d), k_factorial));
        }
    }
    // lambda = (2,1): 2^3 * 4 / 6 = 16/3.
    CHECK(inner_product(xi_lambda(yd("2,1"), 6), xi_lambda(yd("2,1"), 6)) == rational(16, 3));

    // The central idempotents sum to the identity, so the xi_lambda sum to xi.
    for (int k = 1; k <= 3; ++k) {
        SparseVector total(2 * k + 1, k);
        for (const auto& lambda : partitions_of(k)) total += xi_lambda(lambda, 2 * k + 1);
        CHECK(total == xi(k, 2 * k + 1));
    }
}

TEST_CASE("functional_strict basics") {
    CHECK(functional_strict(SetPartition::parse("1,2"), unit({1, 1}, 3)) == 1);
    CHECK(functional_strict(SetPartition::parse("1|2"), unit({1, 1}, 3)) == 0);
    SparseVector v(3, 2);
    v.add(mi({1, 2}), rational(1, 2));
    v.add(mi({2, 1}), rational(1, 3));
    v.add(mi({2, 2}), rational(7));
    CHECK(functional_strict(SetPartition::parse("1|2"), v) == rational(5, 6));
    CHECK(functional_strict(SetPartition::parse("1,2"), v) == rational(7));
    CHECK_THROWS_AS(functional_strict(SetPartition::parse("1,2,3"), v), invalid_input_error);
}

TEST_CASE("invariant subspace dimensions at small sizes") {
    CHECK(akn_basis(3, 1).size() == 2);
    CHECK(akn_basis(4, 2).size() == 5);
    CHECK(akn_basis(6, 3).size() == 47);
    CHECK(akn_dimension(3, 1) == 2);
    CHECK(akn_dimension(4, 2) == 5);
    CHECK(akn_dimension(6, 3) == 47);
    CHECK(akn_dimension(9, 0) == 1);
}

TEST_CASE("invariant subspace basis properties") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 2}, {6, 3}}) {
        const auto basis = akn_basis(n, k);
        RowEchelon span(1);
        // distinct coordinates and contraction kernel membership
        for (const auto& v : basis) {
            for (const auto& [code, c] : v.terms())
                CHECK(pattern(v.decode(code)) == SetPartition::singletons(k));
            for (int j = 1; j <= k; ++j) CHECK(contraction(j, v).is_zero());
        }
        // linear independence
        IndexCode dim = 1;
        for (int i = 0; i < k; ++i) dim *= static_cast<IndexCode>(n);
        RowEchelon ech(static_cast<int>(dim));
        for (const auto& v : basis) CHECK(ech.insert(as_row(v)));
        // stability under sampled permutation actions: rho_hat(g) v stays
        // in the span (exact membership test)
        std::mt19937 rng(101);
        const auto group = enumerate_group(n >= 5 ? 5 : n);
        for (int trial = 0; trial < 6; ++trial) {
            auto g = group[std::uniform_int_distribution<std::size_t>(0, group.size() - 1)(rng)];
            Permutation gn = [&] {
                if (g.degree() == n) return g;
                std::vector<int> images(n);
                for (int x = 1; x <= n; ++x) images[x - 1] = x <= g.degree() ? g(x) : x;
                return Permutation(images);
            }();
            for (const auto& v : basis) CHECK(ech.in_row_space(as_row(apply_rho(gn, v))));
        }
    }
}

TEST_CASE("dimension recursion") {
    // dim A_{k+1}(n) = n dim A_k(n-1) - dim A_k(n) on every computed pair.
    for (int k = 0; k <= 2; ++k)
        for (int n = 2 * (k + 1); n <= 2 * (k + 1) + 2; ++n)
            CHECK(akn_dimension(n, k + 1) ==
                  static_cast<long long>(n) * akn_dimension(n - 1, k) - akn_dimension(n, k));
}

TEST_CASE("ideal annihilates the invariant subspace") {
    for (int n : {4, 5}) {
        const auto basis = akn_basis(n, 2);
        for (const auto& pi : enumerate_partitions(4)) {
            if (propagating_number(Diagram(2, pi)) > 1) continue;
            const auto op = p_weak(pi, n);
            for (const auto& v : basis) CHECK(op.apply(v).is_zero());
        }
    }
    // sampled at k = 3, n = 6
    const auto basis = akn_basis(6, 3);
    const auto all = enumerate_partitions(6);
    for (std::size_t i = 0; i < all.size(); i += 9) {
        if (propagating_number(Diagram(3, all[i])) > 2) continue;
        const auto op = p_weak(all[i], 6);
        for (std::size_t j = 0; j < basis.size(); j += 11) CHECK(op.apply(basis[j]).is_zero());
    }
}

TEST_CASE("sparse export round trip and determinism") {
    const auto op = p_strict(SetPartition::parse("1,3|2|4"), 3);
    std::ostringstream first, second;
    op.export_text(first);
    op.export_text(second);
    CHECK(first.str() == second.str());
    std::istringstream in(first.str());
    CHECK(SparseOperator::parse_text(in) == op);

    // also for an operator with nontrivial rationals
    SparseOperator q(2, 1);
    q.add_entry(mi({1}), mi({1}), rational(1, 2));
    q.add_entry(mi({2}), mi({1}), rational(-1, 2));
    q.add_entry(mi({1}), mi({2}), rational(-1, 2));
    q.add_entry(mi({2}), mi({2}), rational(1, 2));
    std::ostringstream out;
    q.export_text(out);
    std::istringstream in2(out.str());
    CHECK(SparseOperator::parse_text(in2) == q);
    CHECK(out.str().substr(0, out.str().find('\n')) == "n=2 k=1 entries=4");
}

TEST_CASE("sparse import rejects malformed files") {
    {
        std::istringstream in("nonsense header\n");
        CHECK_THROWS_AS(SparseOperator::parse_text(in), invalid_input_error);
    }
    {
        std::istringstream in("n=2 k=1 entries=2\n1;1;1/2\n");  // count mismatch
        CHECK_THROWS_AS(SparseOperator::parse_text(in), invalid_input_error);
    }
    {
        std::istringstream in("n=2 k=1 entries=1\n1,2;1;1/2\n");  // wrong order
        CHECK_THROWS_AS(SparseOperator::parse_text(in), invalid_input_error);
    }
    {
        std::istringstream in("n=2 k=1 entries=1\n1;1\n");  // missing value
        CHECK_THROWS_AS(SparseOperator::parse_text(in), invalid_input_error);
    }
}

TEST_CASE("tensor_product and inner_product") {
    const auto a = xi(1, 4);
    const auto b = unit({3}, 4) - unit({4}, 4);
    const auto prod = tensor_product(a, b);
    CHECK(prod == xi(2, 4));
    CHECK(inner_product(xi(2, 4), xi(2, 4)) == rational(4));
    CHECK(inner_product(unit({1, 2}, 3), unit({2, 1}, 3)) == 0);
}

TEST_CASE("caps and regime errors") {
    CHECK_THROWS_AS(akn_basis(2, 3), invalid_input_error);   // n < k
    CHECK_THROWS_AS(akn_dimension(11, 5), resource_limit_error);
}
