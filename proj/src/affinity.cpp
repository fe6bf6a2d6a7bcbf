#include "netdist/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "netdist/error.hpp"
#include "netdist/properties.hpp"
#include "netdist/spectral.hpp"

namespace netdist {
namespace {

constexpr double kNegativeSlack = 1e-9;

void require_same_order(const Graph& g1, const Graph& g2, const char* what) {
    if (g1.order() != g2.order())
        throw std::invalid_argument(std::string(what) + " needs equal node counts (" +
                                    std::to_string(g1.order()) + " vs " + std::to_string(g2.order()) + ")");
}

double affinity_root(double x) {
    if (x >= 0.0) return std::sqrt(x);
    if (x > -kNegativeSlack) return 0.0;
    throw NumericalError("negative affinity entry " + std::to_string(x));
}

}  // namespace

double fbp_epsilon(const Graph& g) {
    std::size_t max_degree = 0;
    for (NodeIndex v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
    return 1.0 / (1.0 + static_cast<double>(max_degree));
}

AffinityMatrix fbp_matrix(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) throw std::invalid_argument("affinity matrix of an empty graph");
    const double eps = fbp_epsilon(g);

    DenseMatrix system = DenseMatrix::identity(n);
    for (NodeIndex i = 0; i < n; ++i) system(i, i) += eps * eps * static_cast<double>(g.degree(i));
    for (const auto& e : g.edges()) system(e.u, e.v) = system(e.v, e.u) = -eps;

    return {eps, solve_linear(std::move(system), DenseMatrix::identity(n))};
}

DenseMatrix fbp_series(const Graph& g, int order) {
    if (order < 1) throw std::invalid_argument("series order must be at least 1");
    const std::size_t n = g.order();
    const double eps = fbp_epsilon(g);
    const DenseMatrix a = build_matrix(g, MatrixKind::Adjacency).entries;
    const DenseMatrix d = build_matrix(g, MatrixKind::Degree).entries;

    // S = sum_t P_t eps^t with P_0 = I, P_1 = A, P_t = A P_{t-1} - D P_{t-2};
    // this is the eps-expansion of (I - eps A + eps^2 D)^{-1}.
    DenseMatrix prev2 = DenseMatrix::identity(n);
    DenseMatrix prev1 = a;
    DenseMatrix sum = prev2 + eps * prev1;
    double scale = eps;
    for (int t = 2; t <= order; ++t) {
        DenseMatrix next = a * prev1 - d * prev2;
        scale *= eps;
        sum = sum + scale * next;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return sum;
}

double root_euclidean_distance(const AffinityMatrix& s1, const AffinityMatrix& s2) {
    if (s1.order() != s2.order())
        throw std::invalid_argument("affinity matrices differ in order");
    const auto a = s1.entries.data();
    const auto b = s2.entries.data();
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = affinity_root(a[i]) - affinity_root(b[i]);
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

double root_euclidean_distance(const Graph& g1, const Graph& g2) {
    const std::size_t n = std::max(g1.order(), g2.order());
    return root_euclidean_distance(fbp_matrix(g1.padded_to(n)), fbp_matrix(g2.padded_to(n)));
}

double deltacon_similarity(const Graph& g1, const Graph& g2) {
    return deltacon_from_distance(root_euclidean_distance(g1, g2));
}

double edit_distance(const Graph& g1, const Graph& g2) {
    require_same_order(g1, g2, "edit distance");
    const auto& a = g1.edges();
    const auto& b = g2.edges();
    std::size_t common = 0;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
        if (a[i] == b[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<double>(a.size() + b.size() - 2 * common);
}

DenseMatrix pairwise_distance_matrix(const Graph& g, double unreachable_value) {
    const auto hops = shortest_path_lengths(g);
    const std::size_t n = g.order();
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = hops.reachable(i, j) ? static_cast<double>(hops(i, j)) : unreachable_value;
    return m;
}

double shortest_path_matrix_distance(const Graph& g1, const Graph& g2, std::optional<double> unreachable_value) {
    require_same_order(g1, g2, "shortest-path matrix distance");
    const double fill = unreachable_value.value_or(static_cast<double>(g1.order()));
    if (!(fill > 0.0)) throw std::invalid_argument("unreachable value must be positive");
    const auto m1 = pairwise_distance_matrix(g1, fill);
    const auto m2 = pairwise_distance_matrix(g2, fill);
    double sum = 0.0;
    for (std::size_t i = 0; i < m1.data().size(); ++i) {
        const double diff = m1.data()[i] - m2.data()[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

}  // namespace netdist
