#include "doctest.h"
#include "netdist/eigensolver.hpp"
#include "netdist/spectral.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace netdist;

namespace {

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
    return gap;
}

DenseMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = u(rng);
    return m;
}

}  // namespace

TEST_CASE("small closed forms") {
    auto k2 = Graph::with_order(2, std::vector<Edge>{{0, 1}});
    CHECK(max_gap(symmetric_eigenvalues(build_matrix(k2, MatrixKind::Adjacency).entries), {-1.0, 1.0}) < 1e-14);

    auto p3 = Graph::with_order(3, std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(max_gap(symmetric_eigenvalues(build_matrix(p3, MatrixKind::Laplacian).entries), {0.0, 1.0, 3.0}) < 1e-14);
    CHECK(max_gap(symmetric_eigenvalues(build_matrix(p3, MatrixKind::NormalizedLaplacian).entries),
                  {0.0, 1.0, 2.0}) < 1e-14);

    DenseMatrix one(1, 1, 4.5);
    CHECK(symmetric_eigenvalues(one) == std::vector<double>{4.5});
    CHECK(symmetric_eigenvalues(DenseMatrix{}).empty());
    CHECK(symmetric_eigenvalues(DenseMatrix(3, 3)) == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(symmetric_eigenvalues(DenseMatrix(2, 3)), std::invalid_argument);
    DenseMatrix bad(2, 2);
    bad(0, 1) = bad(1, 0) = std::nan("");
    CHECK_THROWS_AS(symmetric_eigenvalues(bad), std::invalid_argument);
}

TEST_CASE("characteristic-polynomial oracle on every graph with n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& g : oracle::all_graphs(n)) {
            CAPTURE(g.name());
            CHECK(max_gap(symmetric_eigenvalues(build_matrix(g, MatrixKind::Adjacency).entries),
                          oracle::charpoly_adjacency(g)) <= 1e-8);
            CHECK(max_gap(symmetric_eigenvalues(build_matrix(g, MatrixKind::Laplacian).entries),
                          oracle::charpoly_laplacian(g)) <= 1e-8);
            CHECK(max_gap(symmetric_eigenvalues(build_matrix(g, MatrixKind::NormalizedLaplacian).entries),
                          oracle::charpoly_normalized_laplacian(g)) <= 1e-8);
        }
    }
}

TEST_CASE("Jacobi oracle on random graphs and dense matrices") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 2 + seed * 61 % 63;
        auto g = oracle::random_graph(n, 0.1 + 0.02 * (seed % 10), seed);
        for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian}) {
            const auto m = build_matrix(g, kind).entries;
            CHECK(max_gap(symmetric_eigenvalues(m), oracle::jacobi_eigenvalues(m)) <= 1e-8);
        }
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto m = random_symmetric(1 + seed * 7 % 50, seed);
        CHECK(max_gap(symmetric_eigenvalues(m), oracle::jacobi_eigenvalues(m)) <= 1e-8);
    }
}

TEST_CASE("eigensystem is orthonormal and diagonalizes the input") {
    for (std::size_t n : {1u, 2u, 5u, 17u, 64u, 128u, 256u}) {
        CAPTURE(n);
        const auto a = n % 2 ? random_symmetric(n, n) : build_matrix(oracle::random_graph(n, 0.05, n), MatrixKind::Laplacian).entries;
        const auto sys = symmetric_eigensystem(a);
        const auto& q = sys.vectors;
        CHECK(max_abs(transpose(q) * q - DenseMatrix::identity(n)) <= 1e-8);

        DenseMatrix lambda(n, n);
        for (std::size_t i = 0; i < n; ++i) lambda(i, i) = sys.values[i];
        CHECK(max_abs(a * q - q * lambda) <= 1e-9 * std::max(1.0, max_abs(a)) * n);
        CHECK(max_gap(sys.values, symmetric_eigenvalues(a)) <= 1e-10 * std::max(1.0, max_abs(a)) * n);
    }
}

TEST_CASE("repeated eigenvalues of complete graphs") {
    for (std::size_t n = 2; n <= 30; ++n) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
        auto kn = Graph::with_order(n, edges);
        auto values = symmetric_eigenvalues(build_matrix(kn, MatrixKind::Adjacency).entries);
        for (std::size_t i = 0; i + 1 < n; ++i) CHECK(values[i] == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(values.back() == doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-12));
    }
}
