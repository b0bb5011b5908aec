#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "stablechar/errors.hpp"
#include "stablechar/rational.hpp"

namespace stablechar {

// A Young diagram: weakly decreasing positive row lengths. The empty
// diagram (no rows) is valid and has size 0.
class YoungDiagram {
public:
    YoungDiagram() = default;

    explicit YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] <= 0) throw invalid_input_error("YoungDiagram: rows must be positive");
            if (i && rows_[i] > rows_[i - 1])
                throw invalid_input_error("YoungDiagram: rows must be weakly decreasing");
        }
    }

    // Text format: comma-separated row lengths, "2,1". Empty diagram is
    // "" or "0".
    static YoungDiagram parse(const std::string& text) {
        std::string cleaned;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
        if (cleaned.empty() || cleaned == "0") return YoungDiagram();
        std::vector<int> rows;
        std::stringstream in(cleaned);
        std::string part;
        while (std::getline(in, part, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(part, &used);
            } catch (const std::exception&) {
                throw invalid_input_error("YoungDiagram: bad row '" + part + "'");
            }
            if (used != part.size()) throw invalid_input_error("YoungDiagram: bad row '" + part + "'");
            rows.push_back(value);
        }
        return YoungDiagram(std::move(rows));
    }

    int size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }
    int length() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    const std::vector<int>& rows() const { return rows_; }
    int row(int i) const { return rows_[i]; }  // 0-based

    std::string str() const {
        if (rows_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(rows_[i]);
        }
        return out;
    }

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> rows_;
};

inline std::vector<int> column_lengths(const YoungDiagram& shape) {
    std::vector<int> cols(shape.empty() ? 0 : shape.row(0), 0);
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape.row(r); ++c) ++cols[c];
    return cols;
}

// Dimension of the irreducible representation labeled by the shape, via
// the hook length formula |shape|! / prod(hooks). Enumeration of standard
// tableaux is kept separately as the test oracle for this.
inline long long dim_irrep(const YoungDiagram& shape) {
    if (shape.empty()) return 1;
    const auto cols = column_lengths(shape);
    Integer hooks = 1;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape.row(r); ++c) {
            int arm = shape.row(r) - c - 1;
            int leg = cols[c] - r - 1;
            hooks *= Integer(arm + leg + 1);
        }
    Integer numerator = 1;
    for (int i = 2; i <= shape.size(); ++i) numerator *= i;
    Integer d = numerator / hooks;
    if (d * hooks != numerator) throw internal_consistency_error("dim_irrep: hook product does not divide n!");
    if (!d.fits_slong_p()) throw resource_limit_error("dim_irrep: dimension out of machine range");
    return d.get_si();
}

// lambda -> (n - |lambda|, lambda), a partition of n. Requires
// n - |lambda| >= lambda_1 so the result is a valid diagram.
inline YoungDiagram pad(const YoungDiagram& shape, int n) {
    const int first = n - shape.size();
    const int minimum = shape.empty() ? 0 : shape.row(0);
    if (first < minimum)
        throw invalid_input_error("pad: need n >= |lambda| + lambda_1 = " +
                                  std::to_string(shape.size() + minimum) + ", got n = " + std::to_string(n) +
                                  " for lambda = " + shape.str());
    std::vector<int> rows;
    if (first > 0) rows.push_back(first);
    for (int r : shape.rows()) rows.push_back(r);
    return YoungDiagram(std::move(rows));
}

// Removes the first row; inverse of pad on padded diagrams.
inline YoungDiagram strip_first_row(const YoungDiagram& shape) {
    if (shape.empty()) return shape;
    std::vector<int> rows(shape.rows().begin() + 1, shape.rows().end());
    return YoungDiagram(std::move(rows));
}

// All partitions of k in reverse-lexicographic order: (k), (k-1,1), ...,
// (1,...,1).
inline std::vector<YoungDiagram> partitions_of(int k) {
    if (k < 0) throw invalid_input_error("partitions_of: negative size");
    std::vector<YoungDiagram> result;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            result.push_back(YoungDiagram(current));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    recurse(recurse, k, k);
    return result;
}

// A standard filling of a shape: 1..size, strictly increasing along rows
// and down columns.
class StandardTableau {
public:
    StandardTableau(YoungDiagram shape, std::vector<std::vector<int>> entries)
        : shape_(std::move(shape)), entries_(std::move(entries)) {
        const int size = shape_.size();
        row_of_.assign(size + 1, -1);
        col_of_.assign(size + 1, -1);
        if (static_cast<int>(entries_.size()) != shape_.length())
            throw invalid_input_error("StandardTableau: wrong number of rows");
        for (int r = 0; r < shape_.length(); ++r) {
            if (static_cast<int>(entries_[r].size()) != shape_.row(r))
                throw invalid_input_error("StandardTableau: row length mismatch");
            for (int c = 0; c < shape_.row(r); ++c) {
                int label = entries_[r][c];
                if (label < 1 || label > size || row_of_[label] != -1)
                    throw invalid_input_error("StandardTableau: labels must be a bijection with 1..size");
                row_of_[label] = r;
                col_of_[label] = c;
                if (c > 0 && entries_[r][c - 1] >= label)
                    throw invalid_input_error("StandardTableau: rows must increase");
                if (r > 0 && entries_[r - 1][c] >= label)
                    throw invalid_input_error("StandardTableau: columns must increase");
            }
        }
    }

    const YoungDiagram& shape() const { return shape_; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }
    int row_of(int label) const { return row_of_[label]; }
    int col_of(int label) const { return col_of_[label]; }

    // Content of the box holding each label: column index - row index.
    std::vector<int> content_vector() const {
        std::vector<int> contents(shape_.size());
        for (int label = 1; label <= shape_.size(); ++label)
            contents[label - 1] = col_of_[label] - row_of_[label];
        return contents;
    }

    // Swap labels i and i+1; caller must ensure the result is standard
    // (the labels sit in different rows and columns).
    StandardTableau with_swapped(int label) const {
        auto entries = entries_;
        entries[row_of_[label]][col_of_[label]] = label + 1;
        entries[row_of_[label + 1]][col_of_[label + 1]] = label;
        return StandardTableau(shape_, std::move(entries));
    }

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.entries_ == b.entries_;
    }

private:
    YoungDiagram shape_;
    std::vector<std::vector<int>> entries_;
    std::vector<int> row_of_, col_of_;
};

// All standard tableaux of the shape. Deterministic order: labels are
// placed 1,2,... in turn, trying rows top to bottom.
inline std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape, int cap = 12) {
    if (shape.size() > cap)
        throw resource_limit_error("enumerate_syt: |shape| = " + std::to_string(shape.size()) +
                                   " exceeds cap " + std::to_string(cap));
    std::vector<StandardTableau> result;
    if (shape.empty()) {
        result.emplace_back(shape, std::vector<std::vector<int>>{});
        return result;
    }
    std::vector<std::vector<int>> entries(shape.length());
    for (int r = 0; r < shape.length(); ++r) entries[r].assign(shape.row(r), 0);
    std::vector<int> filled(shape.length(), 0);

    auto recurse = [&](auto&& self, int label) -> void {
        if (label > shape.size()) {
            result.emplace_back(shape, entries);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            if (filled[r] >= shape.row(r)) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            entries[r][filled[r]] = label;
            ++filled[r];
            self(self, label + 1);
            --filled[r];
        }
    };
    recurse(recurse, 1);
    return result;
}

} // namespace stablechar
