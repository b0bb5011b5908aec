#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablechar/errors.hpp"
#include "stablechar/permutation.hpp"
#include "stablechar/rational.hpp"
#include "stablechar/set_partition.hpp"
#include "stablechar/union_find.hpp"

namespace stablechar {

// A partition algebra diagram on 2k vertices: a set partition of [2k]
// with 1..k read as the top row and k+1..2k as the bottom row.
struct Diagram {
    int k;
    SetPartition partition;

    Diagram(int k_, SetPartition partition_) : k(k_), partition(std::move(partition_)) {
        if (k < 1) throw invalid_input_error("Diagram: k must be positive");
        if (partition.ground_size() != 2 * k)
            throw invalid_input_error("Diagram: ground size " + std::to_string(partition.ground_size()) +
                                      " is not 2k = " + std::to_string(2 * k));
    }

    std::string str() const { return partition.str(); }

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;
};

inline Diagram identity_diagram(int k) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= k; ++i) blocks.push_back({i, k + i});
    return Diagram(k, SetPartition::from_blocks(2 * k, blocks));
}

// Number of blocks meeting both rows; pn = k exactly for the matchings
// iota(sigma).
inline int propagating_number(const Diagram& d) {
    int count = 0;
    for (const auto& block : d.partition.blocks()) {
        bool top = false, bottom = false;
        for (int v : block) (v <= d.k ? top : bottom) = true;
        if (top && bottom) ++count;
    }
    return count;
}

// The stacked product: d1 over d2 with d1's bottom row glued to d2's top
// row. gamma counts connected components confined to the glued middle
// row; the surviving partition on the outer 2k vertices is the product
// diagram.
struct DiagramProduct {
    long long gamma;
    Diagram diagram;
};

inline DiagramProduct diagram_product(const Diagram& d1, const Diagram& d2) {
    if (d1.k != d2.k) throw invalid_input_error("diagram_product: k mismatch");
    const int k = d1.k;
    // Vertices 0..k-1: top row (d1 top); k..2k-1: middle (d1 bottom = d2
    // top); 2k..3k-1: bottom row (d2 bottom).
    UnionFind uf(3 * k);
    for (const auto& block : d1.partition.blocks())
        for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0] - 1, block[i] - 1);
    for (const auto& block : d2.partition.blocks())
        for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0] - 1 + k, block[i] - 1 + k);

    std::map<int, std::vector<int>> components;
    for (int v = 0; v < 3 * k; ++v) components[uf.find(v)].push_back(v);

    long long gamma = 0;
    std::vector<std::vector<int>> outer_blocks;
    for (const auto& [root, members] : components) {
        std::vector<int> outer;
        for (int v : members) {
            if (v < k)
                outer.push_back(v + 1);  // top vertex i
            else if (v >= 2 * k)
                outer.push_back(v - k + 1);  // bottom vertex k+i
        }
        if (outer.empty())
            ++gamma;
        else
            outer_blocks.push_back(std::move(outer));
    }
    return {gamma, Diagram(k, SetPartition::from_blocks(2 * k, outer_blocks))};
}

// Embedding of a permutation as a perfect-matching diagram:
// iota(sigma) = {{1, k+sigma^-1(1)}, ..., {k, k+sigma^-1(k)}}.
inline Diagram iota(const Permutation& sigma) {
    const int k = sigma.degree();
    const Permutation inv = sigma.inverse();
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= k; ++i) blocks.push_back({i, k + inv(i)});
    return Diagram(k, SetPartition::from_blocks(2 * k, blocks));
}

// Retraction onto the group algebra: the inverse of iota on matchings,
// zero (nullopt) on every diagram with propagating number < k.
inline std::optional<Permutation> restrict_R(const Diagram& d) {
    if (propagating_number(d) != d.k) return std::nullopt;
    std::vector<int> images(d.k);
    for (const auto& block : d.partition.blocks()) {
        // pn = k on 2k vertices forces blocks of the form {i, k+j}.
        int top = block[0], bottom = block[1] - d.k;
        images[bottom - 1] = top;  // block {i, k+sigma^-1(i)} means sigma(j) = i
    }
    return Permutation(std::move(images));
}

// Generating set: the identity, the transposition matchings S_ij, the
// singleton-pair diagrams A_i and the merged diagrams A_ij.
inline std::vector<Diagram> generators(int k) {
    std::vector<Diagram> result;
    result.push_back(identity_diagram(k));
    auto matching_blocks = [&] {
        std::vector<std::vector<int>> blocks;
        for (int i = 1; i <= k; ++i) blocks.push_back({i, k + i});
        return blocks;
    };
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            auto blocks = matching_blocks();
            blocks[i - 1] = {i, k + j};
            blocks[j - 1] = {j, k + i};
            result.push_back(Diagram(k, SetPartition::from_blocks(2 * k, blocks)));
        }
    for (int i = 1; i <= k; ++i) {
        auto blocks = matching_blocks();
        blocks[i - 1] = {i};
        blocks.push_back({k + i});
        result.push_back(Diagram(k, SetPartition::from_blocks(2 * k, blocks)));
    }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            auto blocks = matching_blocks();
            blocks[i - 1] = {i, j, k + i, k + j};
            blocks.erase(blocks.begin() + (j - 1));
            result.push_back(Diagram(k, SetPartition::from_blocks(2 * k, blocks)));
        }
    return result;
}

// A formal rational combination of diagrams with the indeterminate
// specialized to a fixed rational n. No zero coefficients are stored.
class AlgebraElement {
public:
    AlgebraElement(int k, Rational n) : k_(k), n_(std::move(n)) {}

    static AlgebraElement unit(int k, const Rational& n) {
        AlgebraElement e(k, n);
        e.add_term(identity_diagram(k), 1);
        return e;
    }

    static AlgebraElement from_diagram(const Diagram& d, const Rational& n, const Rational& coeff = 1) {
        AlgebraElement e(d.k, n);
        e.add_term(d, coeff);
        return e;
    }

    int k() const { return k_; }
    const Rational& n() const { return n_; }
    const std::map<Diagram, Rational>& terms() const { return terms_; }

    void add_term(const Diagram& d, const Rational& coeff) {
        if (d.k != k_) throw invalid_input_error("AlgebraElement: diagram k mismatch");
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(d, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int k_;
    Rational n_;
    std::map<Diagram, Rational> terms_;
};

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.k() != b.k() || a.n() != b.n()) throw invalid_input_error("add: algebra parameters differ");
    AlgebraElement out = a;
    for (const auto& [d, c] : b.terms()) out.add_term(d, c);
    return out;
}

// Bilinear extension of the diagram product, with coefficient n^gamma
// per contracted middle component.
inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.k() != b.k() || a.n() != b.n()) throw invalid_input_error("multiply: algebra parameters differ");
    AlgebraElement out(a.k(), a.n());
    for (const auto& [d1, c1] : a.terms())
        for (const auto& [d2, c2] : b.terms()) {
            auto [gamma, d3] = diagram_product(d1, d2);
            Rational scale = c1 * c2;
            for (long long g = 0; g < gamma; ++g) scale *= a.n();
            out.add_term(d3, scale);
        }
    return out;
}

} // namespace stablechar
