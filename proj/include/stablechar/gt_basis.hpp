#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "stablechar/errors.hpp"
#include "stablechar/permutation.hpp"
#include "stablechar/young.hpp"

namespace stablechar {

// Floating point is confined to this header: the orthogonal-matrix model
// of the irreducible representations in the Gelfand-Tsetlin basis, used
// only for numerical verification. Everything else in the library is
// exact.

struct OrthogonalRep {
    YoungDiagram shape;
    int dimension = 0;
    std::vector<StandardTableau> tableau_order;     // fixed basis order
    std::vector<Eigen::MatrixXd> generator_matrices;  // s_1 .. s_{|shape|-1}
};

// The Coxeter generator s_i acts on the tableau basis by: +1 when i and
// i+1 share a row, -1 when they share a column, and otherwise by the
// 2x2 block [[1/r, sqrt(1-1/r^2)], [sqrt(1-1/r^2), -1/r]] on the span of
// v_T and v_{T'}, where T' swaps the labels and r = c_{i+1} - c_i is the
// content difference read in T.
inline OrthogonalRep build_rep(const YoungDiagram& shape, int dim_cap = 500) {
    OrthogonalRep rep;
    rep.shape = shape;
    const long long d = dim_irrep(shape);
    if (d > dim_cap)
        throw resource_limit_error("build_rep: dimension " + std::to_string(d) + " exceeds cap " +
                                   std::to_string(dim_cap));
    rep.dimension = static_cast<int>(d);
    rep.tableau_order = enumerate_syt(shape, /*cap=*/shape.size());
    if (static_cast<long long>(rep.tableau_order.size()) != d)
        throw internal_consistency_error("build_rep: tableau count disagrees with hook length dimension");

    std::map<std::vector<std::vector<int>>, int> index_of;
    for (std::size_t t = 0; t < rep.tableau_order.size(); ++t)
        index_of[rep.tableau_order[t].entries()] = static_cast<int>(t);

    const int size = shape.size();
    for (int i = 1; i < size; ++i) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep.dimension, rep.dimension);
        for (int t = 0; t < rep.dimension; ++t) {
            const auto& T = rep.tableau_order[t];
            const int row_i = T.row_of(i), row_j = T.row_of(i + 1);
            const int col_i = T.col_of(i), col_j = T.col_of(i + 1);
            if (row_i == row_j) {
                m(t, t) = 1.0;
            } else if (col_i == col_j) {
                m(t, t) = -1.0;
            } else {
                const int other = index_of.at(T.with_swapped(i).entries());
                if (other < t) continue;  // block already filled from the partner
                const double r = (col_j - row_j) - (col_i - row_i);
                const double inv = 1.0 / r;
                const double off = std::sqrt(1.0 - inv * inv);
                m(t, t) = inv;
                m(other, other) = -inv;
                m(t, other) = off;
                m(other, t) = off;
            }
        }
        const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(rep.dimension, rep.dimension);
        if ((m * m.transpose() - identity).cwiseAbs().maxCoeff() > 1e-10)
            throw internal_consistency_error("build_rep: generator matrix not orthogonal");
        if ((m * m - identity).cwiseAbs().maxCoeff() > 1e-10)
            throw internal_consistency_error("build_rep: generator matrix not an involution");
        rep.generator_matrices.push_back(std::move(m));
    }
    return rep;
}

// Matrix of an arbitrary permutation through a Coxeter factorization.
inline Eigen::MatrixXd rep_matrix(const OrthogonalRep& rep, const Permutation& sigma) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(rep.dimension, rep.dimension);
    for (int i : coxeter_word(sigma)) m *= rep.generator_matrices[i - 1];
    return m;
}

// The doubling embedding of S_k into S_2k that conjugates the coordinate
// action into the pairwise value action: s_i -> (2i-1 2i+1)(2i 2i+2).
// Closed form of the homomorphic extension: the pair {2i-1, 2i} is sent
// onto {2 sigma(i)-1, 2 sigma(i)} in order.
inline Permutation psi_embed(const Permutation& sigma) {
    const int k = sigma.degree();
    std::vector<int> images(2 * k);
    for (int i = 1; i <= k; ++i) {
        images[2 * i - 2] = 2 * sigma(i) - 1;
        images[2 * i - 1] = 2 * sigma(i);
    }
    return Permutation(std::move(images));
}

struct SignIsotypicRecord {
    YoungDiagram lambda;
    YoungDiagram padded;        // lambda+(2k)
    long long d_lambda = 0;     // the predicted dimension
    int computed_dim = 0;
    double smallest_kept_sv = 0.0;
    double smallest_discarded_sv = 0.0;
    double largest_discarded_sv = 0.0;
    double margin = 0.0;  // gap between the kept and discarded singular values
};

// Dimension of the joint (-1)-eigenspace of s_1, s_3, ..., s_{2k-1} in
// the representation of shape lambda+(2k), by sequential projection: the
// generators commute, so the composed eigenprojections project exactly
// onto the intersection. Rank read off the singular values with
// threshold 1e-9.
inline SignIsotypicRecord sign_isotypic(const YoungDiagram& lambda, int dim_cap = 500) {
    const int k = lambda.size();
    if (k < 1) throw invalid_input_error("sign_isotypic: lambda must be nonempty");
    SignIsotypicRecord rec;
    rec.lambda = lambda;
    rec.padded = pad(lambda, 2 * k);
    rec.d_lambda = dim_irrep(lambda);

    const OrthogonalRep rep = build_rep(rec.padded, dim_cap);
    const int d = rep.dimension;
    Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(d, d);
    for (int i = 1; i <= 2 * k - 1; i += 2) {
        const Eigen::MatrixXd& m = rep.generator_matrices[i - 1];
        basis = 0.5 * (basis - m * basis);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis);
    const auto& sv = svd.singularValues();
    const double threshold = 1e-9;
    rec.computed_dim = 0;
    rec.smallest_kept_sv = 0.0;
    rec.smallest_discarded_sv = 0.0;
    rec.largest_discarded_sv = 0.0;
    for (int i = 0; i < sv.size(); ++i) {
        // singular values arrive sorted decreasing
        if (sv(i) > threshold) {
            ++rec.computed_dim;
            rec.smallest_kept_sv = sv(i);
        } else {
            rec.largest_discarded_sv = std::max(rec.largest_discarded_sv, sv(i));
            rec.smallest_discarded_sv = sv(i);
        }
    }
    rec.margin = (rec.computed_dim > 0 ? rec.smallest_kept_sv : 1.0) - rec.largest_discarded_sv;
    return rec;
}

inline int sign_isotypic_dim(const YoungDiagram& lambda) { return sign_isotypic(lambda).computed_dim; }

// Largest braid / commutation residual across the generator matrices.
inline double braid_residual(const OrthogonalRep& rep) {
    double worst = 0.0;
    const auto& ms = rep.generator_matrices;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = 0; j < ms.size(); ++j) {
            if (i + 1 == j) {
                worst = std::max(worst,
                                 (ms[i] * ms[j] * ms[i] - ms[j] * ms[i] * ms[j]).cwiseAbs().maxCoeff());
            } else if (j > i + 1) {
                worst = std::max(worst, (ms[i] * ms[j] - ms[j] * ms[i]).cwiseAbs().maxCoeff());
            }
        }
    }
    return worst;
}

} // namespace stablechar
