#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "stablechar/characters.hpp"
#include "stablechar/errors.hpp"
#include "stablechar/exact_linalg.hpp"
#include "stablechar/permutation.hpp"
#include "stablechar/rational.hpp"
#include "stablechar/set_partition.hpp"

namespace stablechar {

// A basis vector label for (C^n)^(x)k: a length-k tuple over [n].
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {}

    int order() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries[i]; }  // 0-based

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(entries[i]);
        }
        return out;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

// Multi-indices are keyed internally by their rank in lexicographic
// order (mixed-radix code, base n); ranks compare the same way the
// tuples do.
using IndexCode = std::uint64_t;

inline IndexCode encode_index(const MultiIndex& I, int n) {
    IndexCode code = 0;
    for (int e : I.entries) {
        if (e < 1 || e > n) throw invalid_input_error("MultiIndex: entry out of [n]");
        code = code * static_cast<IndexCode>(n) + static_cast<IndexCode>(e - 1);
    }
    return code;
}

inline MultiIndex decode_index(IndexCode code, int n, int k) {
    std::vector<int> entries(k);
    for (int i = k - 1; i >= 0; --i) {
        entries[i] = static_cast<int>(code % n) + 1;
        code /= n;
    }
    return MultiIndex(std::move(entries));
}

// The pattern of a multi-index: positions fall in one block iff their
// coordinates are equal.
inline SetPartition pattern(const MultiIndex& I) {
    std::map<int, int> block_of_value;
    std::vector<int> rgs(I.entries.size());
    for (std::size_t i = 0; i < I.entries.size(); ++i) {
        auto [it, inserted] = block_of_value.emplace(I.entries[i], static_cast<int>(block_of_value.size()));
        rgs[i] = it->second;
    }
    return SetPartition::from_rgs(std::move(rgs));
}

// An exact-rational vector in (C^n)^(x)k with finite support.
class SparseVector {
public:
    SparseVector(int n, int k) : n_(n), k_(k) {
        if (n < 1 || k < 0) throw invalid_input_error("SparseVector: bad dimensions");
    }

    int n() const { return n_; }
    int order() const { return k_; }
    std::size_t support_size() const { return terms_.size(); }
    const std::map<IndexCode, Rational>& terms() const { return terms_; }
    MultiIndex decode(IndexCode code) const { return decode_index(code, n_, k_); }

    Rational coeff(const MultiIndex& I) const {
        auto it = terms_.find(encode_index(I, n_));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const MultiIndex& I, const Rational& c) { add_code(encode_index(I, n_), c); }

    void add_code(IndexCode code, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(code, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparseVector& operator+=(const SparseVector& other) {
        check_shape(other, "+=");
        for (const auto& [code, c] : other.terms_) add_code(code, c);
        return *this;
    }

    SparseVector& operator-=(const SparseVector& other) {
        check_shape(other, "-=");
        for (const auto& [code, c] : other.terms_) add_code(code, -c);
        return *this;
    }

    SparseVector& scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [code, value] : terms_) value *= c;
        return *this;
    }

    bool is_zero() const { return terms_.empty(); }

    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.terms_ == b.terms_;
    }

private:
    void check_shape(const SparseVector& other, const char* op) const {
        if (n_ != other.n_ || k_ != other.k_)
            throw invalid_input_error(std::string("SparseVector ") + op + ": shape mismatch");
    }

    int n_, k_;
    std::map<IndexCode, Rational> terms_;
};

// Standard real inner product in the monomial basis.
inline Rational inner_product(const SparseVector& a, const SparseVector& b) {
    if (a.n() != b.n() || a.order() != b.order())
        throw invalid_input_error("inner_product: shape mismatch");
    const auto& small = a.support_size() <= b.support_size() ? a : b;
    const auto& large = a.support_size() <= b.support_size() ? b : a;
    Rational total = 0;
    for (const auto& [code, c] : small.terms()) {
        auto it = large.terms().find(code);
        if (it != large.terms().end()) total += c * it->second;
    }
    return total;
}

inline SparseVector tensor_product(const SparseVector& a, const SparseVector& b) {
    if (a.n() != b.n()) throw invalid_input_error("tensor_product: base dimensions differ");
    SparseVector out(a.n(), a.order() + b.order());
    const IndexCode shift = [&] {
        IndexCode s = 1;
        for (int i = 0; i < b.order(); ++i) s *= static_cast<IndexCode>(a.n());
        return s;
    }();
    for (const auto& [ca, va] : a.terms())
        for (const auto& [cb, vb] : b.terms()) out.add_code(ca * shift + cb, va * vb);
    return out;
}

// An exact-rational endomorphism of (C^n)^(x)k, stored column-sparse:
// columns are input multi-indices, rows output multi-indices.
class SparseOperator {
public:
    SparseOperator(int n, int k) : n_(n), k_(k) {
        if (n < 1 || k < 0) throw invalid_input_error("SparseOperator: bad dimensions");
    }

    static SparseOperator identity(int n, int k) {
        SparseOperator op(n, k);
        IndexCode total = 1;
        for (int i = 0; i < k; ++i) total *= static_cast<IndexCode>(n);
        for (IndexCode c = 0; c < total; ++c) op.cols_[c][c] = 1;
        return op;
    }

    int n() const { return n_; }
    int order() const { return k_; }
    const std::map<IndexCode, std::map<IndexCode, Rational>>& columns() const { return cols_; }
    MultiIndex decode(IndexCode code) const { return decode_index(code, n_, k_); }

    std::size_t entry_count() const {
        std::size_t total = 0;
        for (const auto& [col, rows] : cols_) total += rows.size();
        return total;
    }

    void add_entry(const MultiIndex& row, const MultiIndex& col, const Rational& c) {
        add_entry_codes(encode_index(row, n_), encode_index(col, n_), c);
    }

    void add_entry_codes(IndexCode row, IndexCode col, const Rational& c) {
        if (c == 0) return;
        auto& column = cols_[col];
        auto [it, inserted] = column.emplace(row, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                column.erase(it);
                if (column.empty()) cols_.erase(col);
            }
        }
    }

    Rational entry(const MultiIndex& row, const MultiIndex& col) const {
        return entry_codes(encode_index(row, n_), encode_index(col, n_));
    }

    Rational entry_codes(IndexCode row, IndexCode col) const {
        auto cit = cols_.find(col);
        if (cit == cols_.end()) return Rational(0);
        auto rit = cit->second.find(row);
        return rit == cit->second.end() ? Rational(0) : rit->second;
    }

    SparseVector apply(const SparseVector& v) const {
        if (v.n() != n_ || v.order() != k_) throw invalid_input_error("apply: shape mismatch");
        SparseVector out(n_, k_);
        for (const auto& [col, c] : v.terms()) {
            auto cit = cols_.find(col);
            if (cit == cols_.end()) continue;
            for (const auto& [row, a] : cit->second) out.add_code(row, c * a);
        }
        return out;
    }

    SparseVector column(IndexCode col) const {
        SparseVector out(n_, k_);
        auto cit = cols_.find(col);
        if (cit != cols_.end())
            for (const auto& [row, a] : cit->second) out.add_code(row, a);
        return out;
    }

    SparseOperator transpose() const {
        SparseOperator out(n_, k_);
        for (const auto& [col, rows] : cols_)
            for (const auto& [row, a] : rows) out.cols_[row][col] = a;
        return out;
    }

    Rational trace() const {
        Rational total = 0;
        for (const auto& [col, rows] : cols_) {
            auto it = rows.find(col);
            if (it != rows.end()) total += it->second;
        }
        return total;
    }

    SparseOperator& operator+=(const SparseOperator& other) {
        if (n_ != other.n_ || k_ != other.k_) throw invalid_input_error("operator+=: shape mismatch");
        for (const auto& [col, rows] : other.cols_)
            for (const auto& [row, a] : rows) add_entry_codes(row, col, a);
        return *this;
    }

    SparseOperator& scale(const Rational& c) {
        if (c == 0) {
            cols_.clear();
            return *this;
        }
        for (auto& [col, rows] : cols_)
            for (auto& [row, a] : rows) a *= c;
        return *this;
    }

    bool is_zero() const { return cols_.empty(); }

    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.cols_ == b.cols_;
    }

    // One line per entry "row;col;num/den" (multi-indices comma
    // separated), preceded by a header with n, k and the entry count.
    // Entries are emitted column-major in index order, so the bytes are
    // deterministic for a given operator.
    void export_text(std::ostream& out) const {
        out << "n=" << n_ << " k=" << k_ << " entries=" << entry_count() << "\n";
        for (const auto& [col, rows] : cols_)
            for (const auto& [row, a] : rows)
                out << decode(row).str() << ";" << decode(col).str() << ";" << fraction_string(a) << "\n";
    }

    static SparseOperator parse_text(std::istream& in) {
        std::string header;
        if (!std::getline(in, header)) throw invalid_input_error("SparseOperator: missing header");
        int n = 0, k = -1;
        std::size_t entries = 0;
        if (std::sscanf(header.c_str(), "n=%d k=%d entries=%zu", &n, &k, &entries) != 3)
            throw invalid_input_error("SparseOperator: bad header '" + header + "'");
        SparseOperator op(n, k);
        std::string line;
        std::size_t seen = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto first = line.find(';');
            auto second = line.find(';', first + 1);
            if (first == std::string::npos || second == std::string::npos)
                throw invalid_input_error("SparseOperator: bad entry '" + line + "'");
            MultiIndex row = parse_multi_index(line.substr(0, first), k);
            MultiIndex col = parse_multi_index(line.substr(first + 1, second - first - 1), k);
            op.add_entry(row, col, parse_fraction(line.substr(second + 1)));
            ++seen;
        }
        if (seen != entries)
            throw invalid_input_error("SparseOperator: header promised " + std::to_string(entries) +
                                      " entries, found " + std::to_string(seen));
        return op;
    }

    static MultiIndex parse_multi_index(const std::string& text, int k) {
        std::vector<int> entries;
        std::stringstream in(text);
        std::string part;
        while (std::getline(in, part, ',')) entries.push_back(std::stoi(part));
        if (static_cast<int>(entries.size()) != k)
            throw invalid_input_error("SparseOperator: multi-index '" + text + "' has wrong order");
        return MultiIndex(std::move(entries));
    }

private:
    int n_, k_;
    std::map<IndexCode, std::map<IndexCode, Rational>> cols_;
};

inline SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
    if (a.n() != b.n() || a.order() != b.order()) throw invalid_input_error("compose: shape mismatch");
    SparseOperator out(a.n(), a.order());
    for (const auto& [col, rows] : b.columns()) {
        std::map<IndexCode, Rational> acc;
        for (const auto& [mid, bv] : rows) {
            auto mit = a.columns().find(mid);
            if (mit == a.columns().end()) continue;
            for (const auto& [row, av] : mit->second) {
                auto [it, inserted] = acc.emplace(row, av * bv);
                if (!inserted) it->second += av * bv;
            }
        }
        for (const auto& [row, v] : acc)
            if (v != 0) out.add_entry_codes(row, col, v);
    }
    return out;
}

namespace detail {

// Visit every injection of the blocks of pi (canonical order) into [n];
// callback receives the value assigned to each block.
inline void for_each_injection(int blocks, int n, std::vector<int>& values,
                               const std::function<void(const std::vector<int>&)>& visit) {
    if (static_cast<int>(values.size()) == blocks) {
        visit(values);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (std::find(values.begin(), values.end(), v) != values.end()) continue;
        values.push_back(v);
        for_each_injection(blocks, n, values, visit);
        values.pop_back();
    }
}

inline std::pair<IndexCode, IndexCode> split_codes(const SetPartition& pi, const std::vector<int>& block_values,
                                                   int n, int k) {
    IndexCode col = 0, row = 0;
    for (int pos = 1; pos <= k; ++pos)
        col = col * n + static_cast<IndexCode>(block_values[pi.block_of(pos)] - 1);
    for (int pos = k + 1; pos <= 2 * k; ++pos)
        row = row * n + static_cast<IndexCode>(block_values[pi.block_of(pos)] - 1);
    return {col, row};
}

} // namespace detail

// Operator with entry (row = output, col = input) equal to 1 exactly when
// the concatenated 2k-index (input then output) realizes pi as its
// pattern. Stored entry count is (n)_{|pi|}.
inline SparseOperator p_strict(const SetPartition& pi, int n) {
    if (pi.ground_size() % 2 != 0) throw invalid_input_error("p_strict: ground size must be even");
    const int k = pi.ground_size() / 2;
    SparseOperator op(n, k);
    const int blocks = pi.block_count();
    if (blocks > n) return op;  // no injective assignment exists
    std::vector<int> values;
    detail::for_each_injection(blocks, n, values, [&](const std::vector<int>& assignment) {
        auto [col, row] = detail::split_codes(pi, assignment, n, k);
        op.add_entry_codes(row, col, 1);
    });
    return op;
}

// Weak variant: entry is 1 when the concatenated pattern merely coarsens
// pi (pi-equal positions share a value; accidental extra equalities are
// allowed). Equals the sum of p_strict over all coarsenings of pi.
inline SparseOperator p_weak(const SetPartition& pi, int n) {
    if (pi.ground_size() % 2 != 0) throw invalid_input_error("p_weak: ground size must be even");
    const int k = pi.ground_size() / 2;
    const int blocks = pi.block_count();
    double assignments = 1;
    for (int b = 0; b < blocks; ++b) assignments *= n;
    if (assignments > 5e6) throw resource_limit_error("p_weak: n^|pi| too large");
    SparseOperator op(n, k);
    std::vector<int> values(blocks, 1);
    while (true) {
        auto [col, row] = detail::split_codes(pi, values, n, k);
        op.add_entry_codes(row, col, 1);
        int b = blocks - 1;
        while (b >= 0 && ++values[b] > n) values[b--] = 1;
        if (b < 0) break;
    }
    return op;
}

// Diagonal action of g in S_n on (C^n)^(x)k: e_I -> e_{g(I)} coordinatewise.
inline SparseOperator rho_hat(const Permutation& g, int k) {
    const int n = g.degree();
    SparseOperator op(n, k);
    std::vector<int> I(k, 1);
    while (true) {
        std::vector<int> gI(k);
        for (int i = 0; i < k; ++i) gI[i] = g(I[i]);
        op.add_entry(MultiIndex(gI), MultiIndex(I), 1);
        int i = k - 1;
        while (i >= 0 && ++I[i] > n) I[i--] = 1;
        if (i < 0) break;
    }
    return op;
}

// Coordinate permutation: theta(sigma)(w_1 (x) ... (x) w_k) =
// w_{sigma^-1(1)} (x) ... (x) w_{sigma^-1(k)}. A left action.
inline SparseOperator theta(const Permutation& sigma, int n) {
    const int k = sigma.degree();
    const Permutation inv = sigma.inverse();
    SparseOperator op(n, k);
    std::vector<int> I(k, 1);
    while (true) {
        std::vector<int> J(k);
        for (int j = 1; j <= k; ++j) J[j - 1] = I[inv(j) - 1];
        op.add_entry(MultiIndex(J), MultiIndex(I), 1);
        int i = k - 1;
        while (i >= 0 && ++I[i] > n) I[i--] = 1;
        if (i < 0) break;
    }
    return op;
}

inline MultiIndex permute_coordinates(const Permutation& sigma, const MultiIndex& I) {
    const Permutation inv = sigma.inverse();
    std::vector<int> J(I.order());
    for (int j = 1; j <= I.order(); ++j) J[j - 1] = I.entries[inv(j) - 1];
    return MultiIndex(std::move(J));
}

inline SparseVector apply_theta(const Permutation& sigma, const SparseVector& v) {
    if (sigma.degree() != v.order()) throw invalid_input_error("apply_theta: order mismatch");
    SparseVector out(v.n(), v.order());
    for (const auto& [code, c] : v.terms())
        out.add(permute_coordinates(sigma, v.decode(code)), c);
    return out;
}

inline SparseVector apply_rho(const Permutation& g, const SparseVector& v) {
    if (g.degree() != v.n()) throw invalid_input_error("apply_rho: degree mismatch");
    SparseVector out(v.n(), v.order());
    for (const auto& [code, c] : v.terms()) {
        MultiIndex I = v.decode(code);
        for (int& e : I.entries) e = g(e);
        out.add(I, c);
    }
    return out;
}

// Deletes the j-th tensor coordinate (1-based), extended linearly.
inline SparseVector contraction(int j, const SparseVector& v) {
    if (j < 1 || j > v.order()) throw invalid_input_error("contraction: coordinate out of range");
    SparseVector out(v.n(), v.order() - 1);
    for (const auto& [code, c] : v.terms()) {
        MultiIndex I = v.decode(code);
        I.entries.erase(I.entries.begin() + (j - 1));
        out.add(I, c);
    }
    return out;
}

// The alternating seed (e_1 - e_2) (x) ... (x) (e_{2k-1} - e_{2k}):
// 2^k terms with coefficients +-1.
inline SparseVector xi(int k, int n) {
    if (n < 2 * k) throw regime_error("xi: requires n >= 2k");
    SparseVector out(n, k);
    std::vector<int> choice(k, 0);
    while (true) {
        std::vector<int> I(k);
        int sign = 1;
        for (int i = 0; i < k; ++i) {
            I[i] = 2 * i + 1 + choice[i];
            if (choice[i]) sign = -sign;
        }
        out.add(MultiIndex(I), sign);
        int i = k - 1;
        while (i >= 0 && ++choice[i] > 1) choice[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

// Projection of xi onto the lambda-isotypic component of the coordinate
// permutation action: (d_lambda/k!) sum_sigma chi^lambda(sigma)
// theta(sigma)(xi). Kept unnormalized; the exact norm identity
// <xi_lambda, xi_lambda> = 2^k d_lambda^2 / k! replaces the irrational
// unit normalization everywhere downstream.
inline SparseVector xi_lambda(const YoungDiagram& lambda, int n) {
    const int k = lambda.size();
    if (k < 1) throw invalid_input_error("xi_lambda: lambda must be nonempty");
    if (n < 2 * k) throw regime_error("xi_lambda: requires n >= 2k");
    const SparseVector seed = xi(k, n);
    SparseVector out(n, k);
    for (const auto& sigma : enumerate_group(k)) {
        Rational c = idempotent_coefficient(lambda, sigma);
        if (c == 0) continue;
        SparseVector term = apply_theta(sigma, seed);
        term.scale(c);
        out += term;
    }
    return out;
}

// Sum of v[I] over the multi-indices realizing pi exactly.
inline Rational functional_strict(const SetPartition& pi, const SparseVector& v) {
    if (pi.ground_size() != v.order())
        throw invalid_input_error("functional_strict: ground size does not match vector order");
    Rational total = 0;
    for (const auto& [code, c] : v.terms())
        if (pattern(v.decode(code)) == pi) total += c;
    return total;
}

namespace detail {

inline void for_each_distinct_index(int n, int k, std::vector<int>& I,
                                    const std::function<void(const std::vector<int>&)>& visit) {
    if (static_cast<int>(I.size()) == k) {
        visit(I);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (std::find(I.begin(), I.end(), v) != I.end()) continue;
        I.push_back(v);
        for_each_distinct_index(n, k, I, visit);
        I.pop_back();
    }
}

inline void check_tensor_cap(int n, int k) {
    double size = 1;
    for (int i = 0; i < k; ++i) size *= n;
    if (size > 1e5)
        throw resource_limit_error("tensor space cap exceeded: n^k = " + std::to_string(size) + " > 1e5");
}

// The constraint matrix whose kernel is A_k(n): columns are the distinct
// multi-indices in lex order, rows the contraction conditions (delete
// coordinate j, match a distinct (k-1)-index). Feeds rows straight into
// the echelon engine.
inline RowEchelon akn_echelon(int n, int k, std::vector<IndexCode>* column_codes) {
    check_tensor_cap(n, k);
    if (n < k) throw invalid_input_error("akn: requires n >= k (distinct coordinates)");

    std::vector<IndexCode> codes;
    std::vector<int> scratch;
    for_each_distinct_index(n, k, scratch, [&](const std::vector<int>& I) {
        codes.push_back(encode_index(MultiIndex(I), n));
    });
    // Lex generation order matches code order.
    std::map<IndexCode, int> col_of;
    for (std::size_t i = 0; i < codes.size(); ++i) col_of[codes[i]] = static_cast<int>(i);

    RowEchelon ech(static_cast<int>(codes.size()));
    for (int j = 1; j <= k; ++j) {
        std::vector<int> K;
        for_each_distinct_index(n, k - 1, K, [&](const std::vector<int>& key) {
            SparseRow row;
            for (int v = 1; v <= n; ++v) {
                if (std::find(key.begin(), key.end(), v) != key.end()) continue;
                std::vector<int> I(key);
                I.insert(I.begin() + (j - 1), v);
                row.emplace_back(col_of.at(encode_index(MultiIndex(I), n)), Rational(1));
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            ech.insert(std::move(row));
        });
    }
    if (column_codes) *column_codes = std::move(codes);
    return ech;
}

} // namespace detail

// Dimension of A_k(n) = D_k(n) /\ the joint kernel of the contractions,
// as the nullity of the stacked contraction matrix.
inline long long akn_dimension(int n, int k) {
    if (k == 0) return 1;
    auto ech = detail::akn_echelon(n, k, nullptr);
    return static_cast<long long>(ech.ncols()) - ech.rank();
}

// Exact-rational basis of A_k(n), read off the reduced echelon form with
// the fixed lexicographic column order: deterministic across runs.
inline std::vector<SparseVector> akn_basis(int n, int k) {
    if (k < 1) throw invalid_input_error("akn_basis: k must be positive");
    std::vector<IndexCode> codes;
    auto ech = detail::akn_echelon(n, k, &codes);
    std::vector<SparseVector> basis;
    for (const auto& kernel_row : ech.kernel_basis()) {
        SparseVector v(n, k);
        for (const auto& [col, c] : kernel_row) v.add_code(codes[col], c);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace stablechar
