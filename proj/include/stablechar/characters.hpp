#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "stablechar/permutation.hpp"
#include "stablechar/rational.hpp"
#include "stablechar/young.hpp"

namespace stablechar {

namespace detail {

// First-column hook lengths ("beta numbers"): beta[i] = row[i] + (L-1-i),
// strictly decreasing. Removing a border strip of length t corresponds to
// beta[i] -> beta[i] - t when the target value is free; the strip height
// is the number of beta values jumped over.
inline std::vector<int> beta_numbers(const std::vector<int>& rows) {
    const int L = static_cast<int>(rows.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = rows[i] + (L - 1 - i);
    return beta;
}

inline std::vector<int> rows_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int L = static_cast<int>(beta.size());
    std::vector<int> rows;
    for (int i = 0; i < L; ++i) {
        int r = beta[i] - (L - 1 - i);
        if (r > 0) rows.push_back(r);
    }
    return rows;
}

inline long long murnaghan_nakayama(const std::vector<int>& rows, const std::vector<int>& mu, std::size_t pos);

inline long long mn_cached(const std::vector<int>& rows, const std::vector<int>& mu, std::size_t pos) {
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    static std::map<Key, long long> cache;
    static std::mutex cache_mutex;
    Key key(rows, std::vector<int>(mu.begin() + pos, mu.end()));
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    long long value = murnaghan_nakayama(rows, mu, pos);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::move(key), value);
    return value;
}

inline long long murnaghan_nakayama(const std::vector<int>& rows, const std::vector<int>& mu, std::size_t pos) {
    if (pos == mu.size()) return 1;  // sizes matched, so rows is empty here
    const int t = mu[pos];
    const auto beta = beta_numbers(rows);
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - t;
        if (target < 0) continue;
        bool free = true;
        int height = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                free = false;
                break;
            }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (!free) continue;
        auto next_beta = beta;
        next_beta[i] = target;
        const long long sign = (height % 2 == 0) ? 1 : -1;
        total += sign * mn_cached(rows_from_beta(std::move(next_beta)), mu, pos + 1);
    }
    return total;
}

} // namespace detail

// Irreducible symmetric group character chi^lambda evaluated on the
// conjugacy class of cycle type mu, by the Murnaghan-Nakayama recursion.
// Memoized: projection assembly evaluates the same (lambda, mu) pairs
// k!/z_mu times over.
inline long long character(const YoungDiagram& lambda, const YoungDiagram& mu) {
    if (lambda.size() != mu.size())
        throw invalid_input_error("character: |lambda| = " + std::to_string(lambda.size()) +
                                  " but |mu| = " + std::to_string(mu.size()));
    return detail::mn_cached(lambda.rows(), mu.rows(), 0);
}

inline long long character(const YoungDiagram& lambda, const Permutation& sigma) {
    return character(lambda, cycle_type(sigma));
}

// Coefficient of sigma in the central idempotent projecting onto the
// lambda-isotypic component: (d_lambda / k!) chi^lambda(sigma). The
// characters are integer valued, so no conjugation is involved.
inline Rational idempotent_coefficient(const YoungDiagram& lambda, const Permutation& sigma) {
    if (lambda.size() != sigma.degree())
        throw invalid_input_error("idempotent_coefficient: |lambda| != degree of sigma");
    Integer num = Integer(static_cast<long>(dim_irrep(lambda))) *
                  Integer(static_cast<long>(character(lambda, sigma)));
    Integer den = 1;
    for (int i = 2; i <= lambda.size(); ++i) den *= i;
    return rational(num, den);
}

} // namespace stablechar
