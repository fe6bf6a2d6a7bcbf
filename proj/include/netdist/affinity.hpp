#pragma once

#include <optional>

#include "netdist/dense_matrix.hpp"
#include "netdist/graph.hpp"

namespace netdist {

/// Node affinities from fast belief propagation,
/// S = (I + eps^2 D - eps A)^{-1} with eps = 1 / (1 + max degree).
struct AffinityMatrix {
    double epsilon = 0.0;
    DenseMatrix entries;

    std::size_t order() const noexcept { return entries.rows(); }
};

double fbp_epsilon(const Graph& g);

/// Exact dense solve of the defining linear system.
AffinityMatrix fbp_matrix(const Graph& g);

/// Power series I + eps A + eps^2 (A^2 - D) + ... truncated after the term
/// of the given order. Each term is the Neumann series of
/// (I - (eps A - eps^2 D))^{-1}; the total is exact in the limit.
DenseMatrix fbp_series(const Graph& g, int order);

/// sqrt(sum_ij (sqrt S_ij - sqrt S'_ij)^2). Both matrices must share an order.
/// Entries in (-1e-9, 0) are treated as 0; anything lower throws NumericalError.
double root_euclidean_distance(const AffinityMatrix& s1, const AffinityMatrix& s2);
/// Pads the smaller graph with isolated nodes when orders differ.
double root_euclidean_distance(const Graph& g1, const Graph& g2);

inline double deltacon_from_distance(double root_ed) { return 1.0 / (1.0 + root_ed); }
double deltacon_similarity(const Graph& g1, const Graph& g2);

/// Number of node pairs adjacent in exactly one graph. Orders must match.
double edit_distance(const Graph& g1, const Graph& g2);

/// Hop-distance matrix with unreachable pairs replaced by `unreachable_value`.
DenseMatrix pairwise_distance_matrix(const Graph& g, double unreachable_value);

/// Frobenius norm of the difference of the two pairwise distance matrices.
/// `unreachable_value` defaults to the node count. Orders must match.
double shortest_path_matrix_distance(const Graph& g1, const Graph& g2,
                                     std::optional<double> unreachable_value = {});

}  // namespace netdist
