#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "stablechar/errors.hpp"
#include "stablechar/young.hpp"

namespace stablechar {

// A permutation of [degree], stored by images: images[i-1] is the image
// of i. Composition convention throughout: (a o b)(x) = a(b(x)).
class Permutation {
public:
    static Permutation identity(int degree) {
        std::vector<int> images(degree);
        std::iota(images.begin(), images.end(), 1);
        return Permutation(std::move(images));
    }

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        if (images_.empty()) throw invalid_input_error("Permutation: degree must be positive");
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
                throw invalid_input_error("Permutation: images are not a bijection");
            seen[v - 1] = true;
        }
    }

    // Coxeter generator s_i = (i i+1).
    static Permutation coxeter(int i, int degree) {
        if (i < 1 || i >= degree) throw invalid_input_error("coxeter: index out of range");
        return transposition(i, i + 1, degree);
    }

    static Permutation transposition(int a, int b, int degree) {
        auto p = identity(degree);
        std::swap(p.images_[a - 1], p.images_[b - 1]);
        return p;
    }

    // Disjoint cycle notation with fixed points omitted: "(1 2)(3 4)".
    // "()" is the identity. The degree is supplied separately.
    static Permutation parse(const std::string& text, int degree) {
        if (degree < 1) throw invalid_input_error("Permutation: degree must be positive");
        std::vector<int> images(degree);
        std::iota(images.begin(), images.end(), 1);
        std::size_t pos = 0;
        auto skip_space = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        skip_space();
        if (pos == text.size()) throw invalid_input_error("Permutation: empty text");
        std::vector<bool> used(degree, false);
        while (pos < text.size()) {
            skip_space();
            if (pos == text.size()) break;
            if (text[pos] != '(') throw invalid_input_error("Permutation: expected '(' in '" + text + "'");
            ++pos;
            std::vector<int> cycle;
            while (true) {
                skip_space();
                if (pos == text.size()) throw invalid_input_error("Permutation: unterminated cycle");
                if (text[pos] == ')') {
                    ++pos;
                    break;
                }
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (start == pos) throw invalid_input_error("Permutation: expected number in cycle");
                int value = std::stoi(text.substr(start, pos - start));
                if (value < 1 || value > degree)
                    throw invalid_input_error("Permutation: element " + std::to_string(value) +
                                              " outside degree " + std::to_string(degree));
                if (used[value - 1])
                    throw invalid_input_error("Permutation: element " + std::to_string(value) + " repeated");
                used[value - 1] = true;
                cycle.push_back(value);
            }
            for (std::size_t i = 0; i < cycle.size(); ++i)
                images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
        }
        return Permutation(std::move(images));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int x = 1; x <= degree(); ++x) inv[images_[x - 1] - 1] = x;
        return Permutation(std::move(inv));
    }

    bool is_identity() const {
        for (int x = 1; x <= degree(); ++x)
            if (images_[x - 1] != x) return false;
        return true;
    }

    int fixed_points() const {
        int count = 0;
        for (int x = 1; x <= degree(); ++x)
            if (images_[x - 1] == x) ++count;
        return count;
    }

    std::string cycle_string() const {
        std::string out;
        std::vector<bool> seen(images_.size(), false);
        for (int x = 1; x <= degree(); ++x) {
            if (seen[x - 1] || images_[x - 1] == x) continue;
            out.push_back('(');
            int y = x;
            bool leading = true;
            do {
                if (!leading) out.push_back(' ');
                out += std::to_string(y);
                seen[y - 1] = true;
                y = images_[y - 1];
                leading = false;
            } while (y != x);
            out.push_back(')');
        }
        return out.empty() ? "()" : out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw invalid_input_error("compose: degrees differ");
    std::vector<int> images(a.degree());
    for (int x = 1; x <= a.degree(); ++x) images[x - 1] = a(b(x));
    return Permutation(std::move(images));
}

// Cycle lengths, fixed points included, sorted decreasing: a partition of
// the degree.
inline YoungDiagram cycle_type(const Permutation& g) {
    std::vector<bool> seen(g.degree(), false);
    std::vector<int> lengths;
    for (int x = 1; x <= g.degree(); ++x) {
        if (seen[x - 1]) continue;
        int len = 0, y = x;
        do {
            seen[y - 1] = true;
            y = g(y);
            ++len;
        } while (y != x);
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return YoungDiagram(std::move(lengths));
}

// All k! permutations in lexicographic order of their image tuples.
inline std::vector<Permutation> enumerate_group(int k, int cap = 8) {
    if (k < 1) throw invalid_input_error("enumerate_group: degree must be positive");
    if (k > cap)
        throw resource_limit_error("enumerate_group: degree " + std::to_string(k) + " exceeds cap " +
                                   std::to_string(cap));
    std::vector<int> images(k);
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> result;
    do {
        result.push_back(Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
}

// Writes sigma as a product of Coxeter generators: sigma =
// s_{w[0]} o s_{w[1]} o ... o s_{w.back()}. Empty word for the identity.
inline std::vector<int> coxeter_word(const Permutation& sigma) {
    std::vector<int> line = sigma.images();
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < static_cast<int>(line.size()); ++i) {
            if (line[i] > line[i + 1]) {
                std::swap(line[i], line[i + 1]);
                swaps.push_back(i + 1);  // sorting one-line form right-multiplies by s_{i+1}
                changed = true;
            }
        }
    }
    // sigma * s_{w1} * ... * s_{wm} = id, so sigma = s_{wm} o ... o s_{w1}.
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

// Representative of the conjugacy class with the given cycle type:
// consecutive cycles (1 2 .. mu_1)(mu_1+1 ..)...
inline Permutation class_representative(const YoungDiagram& mu) {
    const int n = mu.size();
    std::vector<int> images(n);
    int start = 1;
    for (int part : mu.rows()) {
        for (int i = 0; i < part; ++i) images[start - 1 + i] = (i + 1 < part) ? start + i + 1 : start;
        start += part;
    }
    return Permutation(std::move(images));
}

// Order of the centralizer of a permutation of cycle type mu:
// prod_i i^{m_i} m_i! over the distinct part sizes i with multiplicity m_i.
inline Integer centralizer_order(const YoungDiagram& mu) {
    Integer z = 1;
    int run = 0;
    const auto& rows = mu.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ++run;
        z *= Integer(rows[i]);
        if (i + 1 == rows.size() || rows[i + 1] != rows[i]) {
            for (int f = 2; f <= run; ++f) z *= Integer(f);
            run = 0;
        }
    }
    return z;
}

} // namespace stablechar
