#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "stablechar/errors.hpp"
#include "stablechar/rational.hpp"

namespace stablechar {

// A sparse row vector: (column, coefficient) pairs sorted by column, no
// explicit zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

// target += c * source, merging sorted supports.
inline void row_axpy(SparseRow& target, const Rational& c, const SparseRow& source) {
    if (c == 0 || source.empty()) return;
    SparseRow merged;
    merged.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    Rational tmp;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
            merged.push_back(std::move(target[i++]));
        } else if (i == target.size() || source[j].first < target[i].first) {
            merged.emplace_back(source[j].first, c * source[j].second);
            ++j;
        } else {
            tmp = target[i].second + c * source[j].second;
            if (tmp != 0) merged.emplace_back(target[i].first, tmp);
            ++i;
            ++j;
        }
    }
    target = std::move(merged);
}

inline void row_scale(SparseRow& row, const Rational& c) {
    for (auto& [col, value] : row) value *= c;
}

// Incremental row echelon form over the rationals. Pivot rows are keyed
// by pivot column and normalized to leading coefficient 1; the reduced
// (RREF) form is produced on demand. RREF is unique, so results do not
// depend on insertion order beyond the fixed column order.
class RowEchelon {
public:
    explicit RowEchelon(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

    // Reduce row against the current pivots; leaves only unpivoted
    // leading columns.
    void reduce(SparseRow& row) const {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) return;
            Rational c = -row.front().second;
            row_axpy(row, c, it->second);
        }
    }

    // Returns true if the row was independent (rank grew).
    bool insert(SparseRow row) {
        reduce(row);
        if (row.empty()) return false;
        Rational lead = row.front().second;
        row_scale(row, Rational(1) / lead);
        reduced_ = false;
        pivots_.emplace(row.front().first, std::move(row));
        return true;
    }

    bool in_row_space(SparseRow row) const {
        reduce(row);
        return row.empty();
    }

    // Clears every pivot column from every other row (full RREF).
    void back_reduce() {
        if (reduced_) return;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            SparseRow& row = it->second;
            // Entries past the pivot that sit in later pivot columns.
            SparseRow tail;
            for (std::size_t i = 1; i < row.size(); ++i)
                if (pivots_.count(row[i].first)) tail.push_back(row[i]);
            for (const auto& [col, value] : tail) row_axpy(row, -value, pivots_.at(col));
        }
        reduced_ = true;
    }

    const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

    std::vector<int> free_columns() const {
        std::vector<int> free;
        for (int c = 0; c < ncols_; ++c)
            if (!pivots_.count(c)) free.push_back(c);
        return free;
    }

    // Kernel of the matrix whose rows were inserted: one basis vector per
    // free column, x[free] = 1 and x[pivot] = -coefficient. Deterministic:
    // free columns in increasing order.
    std::vector<SparseRow> kernel_basis() {
        back_reduce();
        std::vector<SparseRow> basis;
        for (int f : free_columns()) {
            SparseRow v;
            for (const auto& [pivot_col, row] : pivots_) {
                auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(f, Rational()),
                                           [](const auto& a, const auto& b) { return a.first < b.first; });
                if (it != row.end() && it->first == f) v.emplace_back(pivot_col, -it->second);
            }
            v.emplace_back(f, 1);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    int ncols_;
    bool reduced_ = true;
    std::map<int, SparseRow> pivots_;
};

// Rank of a rational matrix given as sparse rows.
inline int sparse_rank(const std::vector<SparseRow>& rows, int ncols) {
    RowEchelon ech(ncols);
    for (const auto& row : rows) ech.insert(row);
    return ech.rank();
}

} // namespace stablechar
