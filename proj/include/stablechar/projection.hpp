#pragma once

#include <map>
#include <string>
#include <vector>

#include "stablechar/characters.hpp"
#include "stablechar/diagram.hpp"
#include "stablechar/exact_linalg.hpp"
#include "stablechar/permutation.hpp"
#include "stablechar/rational.hpp"
#include "stablechar/tensor.hpp"
#include "stablechar/weingarten.hpp"
#include "stablechar/young.hpp"

namespace stablechar {

namespace detail {

inline void check_regime(const char* op, int k, int n) {
    if (n < 2 * k)
        throw regime_error(std::string(op) + ": the regime n < 2k is unsupported (n = " + std::to_string(n) +
                           ", k = " + std::to_string(k) + ")");
    check_tensor_cap(n, k);
}

// Accumulates weight * sum over pi <= iota(tau) of
// (-1)^{|pi|}/(n)_{|pi|} P_pi^strict into op. The refinements of a
// matching are obtained by splitting or keeping each matched pair, 2^k of
// them in all.
inline void accumulate_matching_refinements(SparseOperator& op, const Permutation& tau, int n,
                                            const Rational& weight) {
    const int k = tau.degree();
    const Diagram matching = iota(tau);
    for (const auto& pi : refinements(matching.partition)) {
        const int blocks = pi.block_count();
        if (blocks > n) continue;
        Rational coeff =
            weight * rational(Integer((blocks % 2) ? -1 : 1), pochhammer(n, blocks));
        std::vector<int> values;
        for_each_injection(blocks, n, values, [&](const std::vector<int>& assignment) {
            auto [col, row] = split_codes(pi, assignment, n, k);
            op.add_entry_codes(row, col, coeff);
        });
    }
}

} // namespace detail

// The orthogonal projection from (C^n)^(x)k onto the irreducible block
// labeled by lambda (a partition of k), for n >= 2k:
//   d_{lambda+(n)} (-1)^k sum_{tau in S_k} chi^lambda(tau)
//     sum_{pi <= iota(tau)} (-1)^{|pi|} / (n)_{|pi|} P_pi^strict.
// All entries exact rationals. The k = 1 closed form I - J/n pins the
// sign and normalization conventions.
inline SparseOperator q_lambda(const YoungDiagram& lambda, int n) {
    const int k = lambda.size();
    if (k < 1) throw invalid_input_error("q_lambda: lambda must be nonempty");
    detail::check_regime("q_lambda", k, n);
    const Rational front = Rational((k % 2) ? -1 : 1) * Rational(integer(dim_irrep(pad(lambda, n))));
    SparseOperator op(n, k);
    for (const auto& tau : enumerate_group(k)) {
        const long long chi = character(lambda, cycle_type(tau));
        if (chi == 0) continue;
        detail::accumulate_matching_refinements(op, tau, n, front * Rational(integer(chi)));
    }
    return op;
}

// Sum of the projections over all lambda: the orthogonal projection onto
// the full distinct-coordinate, contraction-free subspace.
inline SparseOperator sum_q(int k, int n) {
    SparseOperator total(n, k);
    for (const auto& lambda : partitions_of(k)) total += q_lambda(lambda, n);
    return total;
}

// tr(rho_hat(g) o theta(sigma) o q) computed without materializing the
// permutation operators: both actions only relabel basis vectors, so the
// trace reads one entry of q per column.
inline Rational bitrace_of(const SparseOperator& q, const Permutation& g, const Permutation& sigma) {
    if (g.degree() != q.n() || sigma.degree() != q.order())
        throw invalid_input_error("bitrace_of: degree mismatch");
    const Permutation g_inv = g.inverse();
    const Permutation sigma_inv = sigma.inverse();
    Rational total = 0;
    for (const auto& [col, rows] : q.columns()) {
        MultiIndex I = q.decode(col);
        for (int& e : I.entries) e = g_inv(e);
        const MultiIndex r = permute_coordinates(sigma_inv, I);
        auto it = rows.find(encode_index(r, q.n()));
        if (it != rows.end()) total += it->second;
    }
    return total;
}

// chi^{lambda+(n)}(g) computed as (1/d_lambda) tr(rho_hat(g) o Q). The
// division is exact; a fractional result signals an implementation bug
// and is surfaced as such.
inline long long stable_character(const SparseOperator& q, const YoungDiagram& lambda, const Permutation& g) {
    const Rational t = bitrace_of(q, g, Permutation::identity(lambda.size()));
    return to_integer(t / Rational(integer(dim_irrep(lambda))), "stable_character");
}

inline long long stable_character(const YoungDiagram& lambda, int n, const Permutation& g) {
    if (g.degree() != n) throw invalid_input_error("stable_character: permutation degree must equal n");
    return stable_character(q_lambda(lambda, n), lambda, g);
}

// Joint trace of the two commuting actions against the projection:
// equals chi^{lambda+(n)}(g) chi^lambda(sigma), an exact integer.
inline long long bitrace(const Permutation& g, const Permutation& sigma, const YoungDiagram& lambda, int n) {
    if (g.degree() != n) throw invalid_input_error("bitrace: permutation degree must equal n");
    if (sigma.degree() != lambda.size()) throw invalid_input_error("bitrace: sigma degree must equal |lambda|");
    return to_integer(bitrace_of(q_lambda(lambda, n), g, sigma), "bitrace");
}

inline long long bitrace(const SparseOperator& q, const Permutation& g, const Permutation& sigma) {
    return to_integer(bitrace_of(q, g, sigma), "bitrace");
}

// Exact rank via row reduction of the columns.
inline int operator_rank(const SparseOperator& op) {
    IndexCode dim = 1;
    for (int i = 0; i < op.order(); ++i) dim *= static_cast<IndexCode>(op.n());
    RowEchelon ech(static_cast<int>(dim));
    for (const auto& [col, rows] : op.columns()) {
        SparseRow r;
        r.reserve(rows.size());
        for (const auto& [row, v] : rows) r.emplace_back(static_cast<int>(row), v);
        ech.insert(std::move(r));
    }
    return ech.rank();
}

// The averaged rank-one integral: the double-sum form
//   ((-1)^k / k!) sum_{sigma, sigma'} chi(sigma) chi(sigma')
//     sum_{pi <= iota(sigma^-1 sigma')} (-1)^{|pi|}/(n)_{|pi|} P_pi^strict,
// normalized so that d_lambda d_{lambda+(n)} integral_of_z = q_lambda
// exactly. Pairs are grouped by tau = sigma^-1 sigma' before the diagram
// sum; exact arithmetic makes the regrouping lossless.
inline SparseOperator integral_of_z(const YoungDiagram& lambda, int n) {
    const int k = lambda.size();
    if (k < 1) throw invalid_input_error("integral_of_z: lambda must be nonempty");
    detail::check_regime("integral_of_z", k, n);
    const auto group = enumerate_group(k);
    std::map<Permutation, Integer> tau_weight;
    for (const auto& sigma : group) {
        const Integer chi_sigma = integer(character(lambda, cycle_type(sigma)));
        if (chi_sigma == 0) continue;
        for (const auto& sigma_prime : group) {
            const Integer chi_prime = integer(character(lambda, cycle_type(sigma_prime)));
            if (chi_prime == 0) continue;
            tau_weight[compose(sigma.inverse(), sigma_prime)] += chi_sigma * chi_prime;
        }
    }
    Integer k_factorial = 1;
    for (int i = 2; i <= k; ++i) k_factorial *= i;
    const Rational front = Rational((k % 2) ? -1 : 1) / Rational(k_factorial);
    SparseOperator op(n, k);
    for (const auto& [tau, weight] : tau_weight) {
        if (weight == 0) continue;
        detail::accumulate_matching_refinements(op, tau, n, front * Rational(weight));
    }
    return op;
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string witness;  // nonempty only on failure
};

struct ProjectionReport {
    YoungDiagram lambda;
    int n = 0;
    int k = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// The full exact verification battery for one block: idempotence,
// symmetry, trace, rank, the seed vector identities, commutation with
// both group actions, and the fact that the summed projections fix the
// invariant subspace and kill the low-propagating-number images.
inline ProjectionReport verify_projection(const YoungDiagram& lambda, int n) {
    const int k = lambda.size();
    detail::check_regime("verify_projection", k, n);
    ProjectionReport report;
    report.lambda = lambda;
    report.n = n;
    report.k = k;
    auto record = [&](std::string name, bool pass, std::string witness = "") {
        report.checks.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
    };

    const SparseOperator q = q_lambda(lambda, n);
    const long long expected_rank = dim_irrep(lambda) * dim_irrep(pad(lambda, n));

    record("idempotent", compose(q, q) == q, "Q^2 != Q");
    record("symmetric", q.transpose() == q, "Q != Q^T");

    const Rational tr = q.trace();
    record("trace", tr == Rational(integer(expected_rank)),
           "trace = " + fraction_string(tr) + ", expected " + std::to_string(expected_rank));

    const int rank = operator_rank(q);
    record("rank", rank == expected_rank,
           "rank = " + std::to_string(rank) + ", expected " + std::to_string(expected_rank));

    const SparseVector seed = xi_lambda(lambda, n);
    record("fixes_xi_lambda", q.apply(seed) == seed, "Q xi_lambda != xi_lambda");

    {
        bool ok = true;
        std::string witness;
        for (const auto& mu : partitions_of(k)) {
            if (mu == lambda) continue;
            if (!q.apply(xi_lambda(mu, n)).is_zero()) {
                ok = false;
                witness = "Q xi_mu != 0 at mu = " + mu.str();
                break;
            }
        }
        record("annihilates_other_xi", ok, witness);
    }

    {
        // Commutation with both actions on a fixed deterministic sample:
        // all Coxeter generators plus the full cycle on each side.
        bool ok = true;
        std::string witness;
        std::vector<Permutation> gs;
        for (int i = 1; i < n && i <= 3; ++i) gs.push_back(Permutation::coxeter(i, n));
        gs.push_back(class_representative(YoungDiagram({n})));
        for (const auto& g : gs) {
            const SparseOperator r = rho_hat(g, k);
            if (compose(q, r) != compose(r, q)) {
                ok = false;
                witness = "Q does not commute with rho_hat(" + g.cycle_string() + ")";
                break;
            }
        }
        if (ok && k >= 2) {
            std::vector<Permutation> sigmas;
            for (int i = 1; i < k; ++i) sigmas.push_back(Permutation::coxeter(i, k));
            sigmas.push_back(class_representative(YoungDiagram({k})));
            for (const auto& sigma : sigmas) {
                const SparseOperator t = theta(sigma, n);
                if (compose(q, t) != compose(t, q)) {
                    ok = false;
                    witness = "Q does not commute with theta(" + sigma.cycle_string() + ")";
                    break;
                }
            }
        }
        record("commutes_with_actions", ok, witness);
    }

    {
        // Summed projections: identity on the invariant subspace, zero on
        // the images of the low-propagating-number diagram actions.
        // Exhaustive over diagrams and columns for k <= 2, sampled above.
        const SparseOperator total = sum_q(k, n);
        bool ok = true;
        std::string witness;
        const auto basis = akn_basis(n, k);
        for (const auto& v : basis) {
            if (total.apply(v) != v) {
                ok = false;
                witness = "sum_lambda Q does not fix an invariant-subspace basis vector";
                break;
            }
        }
        if (ok) {
            const auto all = enumerate_partitions(2 * k);
            const std::size_t diagram_stride = (k <= 2) ? 1 : 8;
            IndexCode dim = 1;
            for (int i = 0; i < k; ++i) dim *= static_cast<IndexCode>(n);
            const IndexCode column_stride = (k <= 2) ? 1 : dim / 7 + 1;
            for (std::size_t di = 0; ok && di < all.size(); di += diagram_stride) {
                const Diagram d(k, all[di]);
                if (propagating_number(d) > k - 1) continue;
                const SparseOperator action = p_weak(d.partition, n);
                for (IndexCode c = 0; c < dim; c += column_stride) {
                    if (!total.apply(action.column(c)).is_zero()) {
                        ok = false;
                        witness = "sum_lambda Q does not kill the image of " + d.str();
                        break;
                    }
                }
            }
        }
        record("sum_is_invariant_projection", ok, witness);
    }

    return report;
}

} // namespace stablechar
