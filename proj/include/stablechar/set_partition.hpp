#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "stablechar/errors.hpp"
#include "stablechar/union_find.hpp"

namespace stablechar {

// A set partition of [m], stored as a restricted growth string: rgs[i]
// is the block id of element i+1, blocks numbered 0,1,2,... in order of
// first appearance. This makes the encoding canonical, so equality and
// ordering are plain vector comparisons, and block minima automatically
// increase with the block id.
class SetPartition {
public:
    static SetPartition from_rgs(std::vector<int> rgs) {
        int next = 0;
        for (int v : rgs) {
            if (v < 0 || v > next) throw invalid_input_error("SetPartition: not a restricted growth string");
            if (v == next) ++next;
        }
        if (rgs.empty()) throw invalid_input_error("SetPartition: empty ground set");
        return SetPartition(std::move(rgs));
    }

    // Blocks may arrive in any order; they must be nonempty, disjoint and
    // cover [ground_size] exactly.
    static SetPartition from_blocks(int ground_size, const std::vector<std::vector<int>>& blocks) {
        if (ground_size <= 0) throw invalid_input_error("SetPartition: ground size must be positive");
        std::vector<int> owner(ground_size, -1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty()) throw invalid_input_error("SetPartition: empty block");
            for (int e : blocks[b]) {
                if (e < 1 || e > ground_size)
                    throw invalid_input_error("SetPartition: element " + std::to_string(e) + " outside ground set");
                if (owner[e - 1] != -1)
                    throw invalid_input_error("SetPartition: element " + std::to_string(e) + " in two blocks");
                owner[e - 1] = static_cast<int>(b);
            }
        }
        for (int i = 0; i < ground_size; ++i)
            if (owner[i] == -1)
                throw invalid_input_error("SetPartition: element " + std::to_string(i + 1) + " not covered");
        // Relabel block ids by first appearance.
        std::vector<int> relabel(blocks.size(), -1);
        std::vector<int> rgs(ground_size);
        int next = 0;
        for (int i = 0; i < ground_size; ++i) {
            if (relabel[owner[i]] == -1) relabel[owner[i]] = next++;
            rgs[i] = relabel[owner[i]];
        }
        return SetPartition(std::move(rgs));
    }

    static SetPartition singletons(int m) {
        std::vector<int> rgs(m);
        for (int i = 0; i < m; ++i) rgs[i] = i;
        return SetPartition(std::move(rgs));
    }

    static SetPartition one_block(int m) {
        if (m <= 0) throw invalid_input_error("SetPartition: ground size must be positive");
        return SetPartition(std::vector<int>(m, 0));
    }

    // Text format: blocks separated by '|', elements by ',', whitespace
    // ignored. "1,2|3,5,6|4" is the partition {{1,2},{3,5,6},{4}} of [6].
    static SetPartition parse(const std::string& text) {
        std::string cleaned;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
        if (cleaned.empty()) throw invalid_input_error("SetPartition: empty text");
        std::vector<std::vector<int>> blocks;
        std::stringstream blocks_in(cleaned);
        std::string block_text;
        int max_element = 0, count = 0;
        while (std::getline(blocks_in, block_text, '|')) {
            std::vector<int> block;
            std::stringstream elems_in(block_text);
            std::string elem;
            while (std::getline(elems_in, elem, ',')) {
                std::size_t used = 0;
                int value = 0;
                try {
                    value = std::stoi(elem, &used);
                } catch (const std::exception&) {
                    throw invalid_input_error("SetPartition: bad element '" + elem + "'");
                }
                if (used != elem.size() || value < 1)
                    throw invalid_input_error("SetPartition: bad element '" + elem + "'");
                block.push_back(value);
                max_element = std::max(max_element, value);
                ++count;
            }
            if (block.empty()) throw invalid_input_error("SetPartition: empty block in '" + text + "'");
            blocks.push_back(std::move(block));
        }
        if (count != max_element)
            throw invalid_input_error("SetPartition: elements of '" + text + "' do not cover [" +
                                      std::to_string(max_element) + "]");
        return from_blocks(max_element, blocks);
    }

    int ground_size() const { return static_cast<int>(rgs_.size()); }

    int block_count() const {
        return rgs_.empty() ? 0 : *std::max_element(rgs_.begin(), rgs_.end()) + 1;
    }

    // 1-based element -> 0-based block id.
    int block_of(int element) const { return rgs_[element - 1]; }

    bool same_block(int i, int j) const { return rgs_[i - 1] == rgs_[j - 1]; }

    // Blocks in canonical order (minima increasing, elements ascending).
    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> result(block_count());
        for (int i = 0; i < ground_size(); ++i) result[rgs_[i]].push_back(i + 1);
        return result;
    }

    std::string str() const {
        std::string out;
        auto bs = blocks();
        for (std::size_t b = 0; b < bs.size(); ++b) {
            if (b) out.push_back('|');
            for (std::size_t i = 0; i < bs[b].size(); ++i) {
                if (i) out.push_back(',');
                out += std::to_string(bs[b][i]);
            }
        }
        return out;
    }

    const std::vector<int>& rgs() const { return rgs_; }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    explicit SetPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {}
    std::vector<int> rgs_;
};

inline void require_same_ground(const SetPartition& p, const SetPartition& q, const char* op) {
    if (p.ground_size() != q.ground_size())
        throw invalid_input_error(std::string(op) + ": ground sizes " + std::to_string(p.ground_size()) +
                                  " and " + std::to_string(q.ground_size()) + " differ");
}

// p <= q in the refinement order: every block of p lies inside a block of q.
inline bool refines(const SetPartition& p, const SetPartition& q) {
    require_same_ground(p, q, "refines");
    const int m = p.ground_size();
    // p refines q iff the map (p-block -> q-block of any member) is well defined.
    std::vector<int> image(p.block_count(), -1);
    for (int e = 1; e <= m; ++e) {
        int pb = p.block_of(e), qb = q.block_of(e);
        if (image[pb] == -1)
            image[pb] = qb;
        else if (image[pb] != qb)
            return false;
    }
    return true;
}

// Common refinement: blocks are the nonempty pairwise intersections.
inline SetPartition meet(const SetPartition& p, const SetPartition& q) {
    require_same_ground(p, q, "meet");
    const int m = p.ground_size();
    std::map<std::pair<int, int>, int> label;
    std::vector<int> rgs(m);
    for (int e = 1; e <= m; ++e) {
        auto key = std::make_pair(p.block_of(e), q.block_of(e));
        auto [it, inserted] = label.emplace(key, static_cast<int>(label.size()));
        rgs[e - 1] = it->second;
    }
    // Relabel by first appearance.
    std::vector<std::vector<int>> blocks(label.size());
    for (int e = 1; e <= m; ++e) blocks[rgs[e - 1]].push_back(e);
    return SetPartition::from_blocks(m, blocks);
}

// Finest common coarsening: transitive closure of the union of the two
// same-block relations.
inline SetPartition join(const SetPartition& p, const SetPartition& q) {
    require_same_ground(p, q, "join");
    const int m = p.ground_size();
    UnionFind uf(m);
    for (const auto& partition : {p, q})
        for (const auto& block : partition.blocks())
            for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0] - 1, block[i] - 1);
    std::map<int, std::vector<int>> groups;
    for (int e = 1; e <= m; ++e) groups[uf.find(e - 1)].push_back(e);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : groups) blocks.push_back(std::move(members));
    return SetPartition::from_blocks(m, blocks);
}

// Mobius function of the partition lattice on the segment [p, q]:
// (-1)^(m-l) * prod_i (m_i - 1)! where p has m blocks, q has l blocks and
// the i-th block of q contains m_i blocks of p. Returns 0 when p does not
// refine q, matching how Mobius sums over the lattice are usually written.
inline long long mobius(const SetPartition& p, const SetPartition& q) {
    require_same_ground(p, q, "mobius");
    if (!refines(p, q)) return 0;
    std::vector<int> image(p.block_count(), -1);
    for (int e = 1; e <= p.ground_size(); ++e) image[p.block_of(e)] = q.block_of(e);
    std::vector<int> pieces(q.block_count(), 0);
    for (int qb : image) ++pieces[qb];
    long long value = ((p.block_count() - q.block_count()) % 2 == 0) ? 1 : -1;
    for (int mi : pieces)
        for (int f = 2; f < mi; ++f) value *= f;  // (m_i - 1)!
    return value;
}

// All partitions of [m] in restricted-growth-string lexicographic order.
// Count is the m-th Bell number.
inline std::vector<SetPartition> enumerate_partitions(int m, int cap = 12) {
    if (m < 1) throw invalid_input_error("enumerate_partitions: ground size must be positive");
    if (m > cap)
        throw resource_limit_error("enumerate_partitions: ground size " + std::to_string(m) +
                                   " exceeds cap " + std::to_string(cap));
    std::vector<SetPartition> result;
    std::vector<int> rgs(m, 0);
    while (true) {
        result.push_back(SetPartition::from_rgs(rgs));
        // Advance to the next restricted growth string.
        int i = m - 1;
        for (; i > 0; --i) {
            int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= prefix_max) break;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return result;
}

// All q with p <= q, i.e. every way of merging the blocks of p.
// Deterministic fine-to-coarse order (p itself first, the one-block
// coarsening last).
inline std::vector<SetPartition> coarsenings(const SetPartition& p) {
    const int b = p.block_count();
    const int m = p.ground_size();
    auto merges = enumerate_partitions(b);
    std::reverse(merges.begin(), merges.end());
    std::vector<SetPartition> result;
    for (const auto& merge : merges) {
        std::vector<std::vector<int>> merged(merge.block_count());
        for (int e = 1; e <= m; ++e) merged[merge.block_of(p.block_of(e) + 1)].push_back(e);
        result.push_back(SetPartition::from_blocks(m, merged));
    }
    return result;
}

// All q with q <= p: the product over blocks of the partitions of each
// block. Deterministic order: odometer over per-block choices, last block
// fastest, each block's choices in enumerate_partitions order.
inline std::vector<SetPartition> refinements(const SetPartition& p) {
    const int m = p.ground_size();
    const auto blocks = p.blocks();
    std::vector<std::vector<SetPartition>> choices;
    choices.reserve(blocks.size());
    for (const auto& block : blocks) choices.push_back(enumerate_partitions(static_cast<int>(block.size())));

    std::vector<std::size_t> pick(blocks.size(), 0);
    std::vector<SetPartition> result;
    while (true) {
        std::vector<std::vector<int>> fine_blocks;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (const auto& sub : choices[b][pick[b]].blocks()) {
                std::vector<int> translated;
                translated.reserve(sub.size());
                for (int local : sub) translated.push_back(blocks[b][local - 1]);
                fine_blocks.push_back(std::move(translated));
            }
        }
        result.push_back(SetPartition::from_blocks(m, fine_blocks));
        int b = static_cast<int>(blocks.size()) - 1;
        while (b >= 0 && ++pick[b] == choices[b].size()) pick[b--] = 0;
        if (b < 0) break;
    }
    return result;
}

} // namespace stablechar
