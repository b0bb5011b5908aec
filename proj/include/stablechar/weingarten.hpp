#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "stablechar/rational.hpp"
#include "stablechar/set_partition.hpp"
#include "stablechar/tensor.hpp"

namespace stablechar {

// Haar average of e_{g(i_1)} (x) ... (x) e_{g(i_k)} over g in S_n: the
// result spreads uniformly over the multi-indices with the same pattern
// as I, with coefficient 1/(n)_{|pattern|}.
inline SparseVector integrate_monomial(const MultiIndex& I, int n) {
    const int k = I.order();
    const SetPartition p = pattern(I);
    if (n < p.block_count())
        throw invalid_input_error("integrate_monomial: need n >= number of distinct entries");
    const Rational weight = rational(Integer(1), pochhammer(n, p.block_count()));
    SparseVector out(n, k);
    std::vector<int> values;
    detail::for_each_injection(p.block_count(), n, values, [&](const std::vector<int>& assignment) {
        std::vector<int> J(k);
        for (int pos = 1; pos <= k; ++pos) J[pos - 1] = assignment[p.block_of(pos)];
        out.add(MultiIndex(std::move(J)), weight);
    });
    return out;
}

// Weingarten function for S_n on Part([k]):
//   Wg(pi1, pi2) = sum over pi <= pi1 /\ pi2 of
//                  mobius(pi, pi1) mobius(pi, pi2) / (n)_{|pi|}.
// Memoized on (pi1, pi2, n): the double sum over Part([k])^2 in the
// monomial-integral identity revisits the same pairs constantly.
inline Rational wg(const SetPartition& pi1, const SetPartition& pi2, long long n) {
    require_same_ground(pi1, pi2, "wg");
    if (n < pi1.ground_size())
        throw invalid_input_error("wg: need n >= ground size " + std::to_string(pi1.ground_size()) +
                                  " to keep every (n)_{|pi|} nonzero");

    using Key = std::tuple<std::vector<int>, std::vector<int>, long long>;
    static std::map<Key, Rational> cache;
    static std::mutex cache_mutex;
    Key key(pi1.rgs(), pi2.rgs(), n);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    Rational total = 0;
    for (const auto& pi : refinements(meet(pi1, pi2))) {
        Integer poch = pochhammer(n, pi.block_count());
        if (poch == 0)
            throw invalid_input_error("wg: (n)_{|pi|} vanishes at pi = " + pi.str());
        total += rational(Integer(static_cast<long>(mobius(pi, pi1))) * Integer(static_cast<long>(mobius(pi, pi2))), poch);
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::move(key), total);
    return total;
}

namespace detail {

inline void check_complete_table(const std::map<SetPartition, Rational>& table, const char* op) {
    if (table.empty()) throw invalid_input_error(std::string(op) + ": empty table");
    const int m = table.begin()->first.ground_size();
    const auto all = enumerate_partitions(m);
    if (table.size() != all.size())
        throw invalid_input_error(std::string(op) + ": table must cover all of Part([m])");
    for (const auto& pi : all)
        if (!table.count(pi)) throw invalid_input_error(std::string(op) + ": table missing " + pi.str());
}

} // namespace detail

// weak(pi) = sum over pi1 >= pi of strict(pi1).
inline std::map<SetPartition, Rational> weak_from_strict(const std::map<SetPartition, Rational>& strict) {
    detail::check_complete_table(strict, "weak_from_strict");
    std::map<SetPartition, Rational> weak;
    for (const auto& [pi, unused] : strict) {
        Rational total = 0;
        for (const auto& coarser : coarsenings(pi)) total += strict.at(coarser);
        weak.emplace(pi, total);
    }
    return weak;
}

// Mobius inversion of the above: strict(pi) = sum over pi1 >= pi of
// mobius(pi, pi1) weak(pi1).
inline std::map<SetPartition, Rational> strict_from_weak(const std::map<SetPartition, Rational>& weak) {
    detail::check_complete_table(weak, "strict_from_weak");
    std::map<SetPartition, Rational> strict;
    for (const auto& [pi, unused] : weak) {
        Rational total = 0;
        for (const auto& coarser : coarsenings(pi)) total += Rational(static_cast<long>(mobius(pi, coarser))) * weak.at(coarser);
        strict.emplace(pi, total);
    }
    return strict;
}

} // namespace stablechar
