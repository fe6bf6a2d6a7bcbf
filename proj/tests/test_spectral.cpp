#include "doctest.h"
#include "netdist/io.hpp"
#include "netdist/properties.hpp"
#include "netdist/spectral.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

using namespace netdist;
using netdist::testing::fixture;

namespace {

Graph p3() { return Graph::with_order(3, std::vector<Edge>{{0, 1}, {1, 2}}); }
Graph k2_iso() { return Graph::with_order(3, std::vector<Edge>{{0, 1}}); }

Spectrum make(MatrixKind kind, std::vector<double> values) { return {kind, spectrum_order(kind), std::move(values)}; }

}  // namespace

TEST_CASE("representation matrices") {
    auto k2 = Graph::with_order(2, std::vector<Edge>{{0, 1}});
    const auto l = build_matrix(k2, MatrixKind::Laplacian).entries;
    CHECK(l(0, 0) == 1.0);
    CHECK(l(0, 1) == -1.0);
    CHECK(l(1, 0) == -1.0);
    CHECK(l(1, 1) == 1.0);
    CHECK(build_matrix(k2, MatrixKind::NormalizedLaplacian).entries == l);

    const auto nl = build_matrix(k2_iso(), MatrixKind::NormalizedLaplacian).entries;
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(nl(2, j) == 0.0);
        CHECK(nl(j, 2) == 0.0);
    }
    const auto d = build_matrix(p3(), MatrixKind::Degree).entries;
    CHECK(d(1, 1) == 2.0);
    CHECK(d(0, 1) == 0.0);

    // weights never leak into the matrices
    std::istringstream in("a,b,5\nb,c,0.25\n");
    const auto a = build_matrix(read_edge_list(in), MatrixKind::Adjacency).entries;
    CHECK(a(0, 1) == 1.0);
    CHECK(a(1, 2) == 1.0);
}

TEST_CASE("matrix invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = oracle::random_graph(1 + seed * 3, 0.15, seed);
        for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian})
            CHECK(asymmetry(build_matrix(g, kind).entries) <= 1e-12);
        const auto l = build_matrix(g, MatrixKind::Laplacian).entries;
        for (std::size_t i = 0; i < g.order(); ++i) {
            const auto row = l.row(i);
            CHECK(std::accumulate(row.begin(), row.end(), 0.0) == 0.0);
        }
        const auto nl = build_matrix(g, MatrixKind::NormalizedLaplacian).entries;
        for (std::size_t i = 0; i < g.order(); ++i) CHECK(nl(i, i) == (g.degree(i) ? 1.0 : 0.0));
    }
}

TEST_CASE("spectrum ordering") {
    const auto a = spectrum(p3(), MatrixKind::Adjacency);
    CHECK(a.order == SortOrder::Descending);
    REQUIRE(a.values.size() == 3);
    CHECK(a.values[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(a.values[2] == doctest::Approx(-std::sqrt(2.0)));
    const auto l = spectrum(p3(), MatrixKind::Laplacian);
    CHECK(l.order == SortOrder::Ascending);
    CHECK(l.values[0] == 0.0);  // snapped
    CHECK(l.values[2] == doctest::Approx(3.0));
}

TEST_CASE("padding") {
    auto [a, b] = pad_spectra(make(MatrixKind::Adjacency, {1, -1}), make(MatrixKind::Adjacency, {1, 0, -1}));
    CHECK(a.values == std::vector<double>{1, 0, -1});
    CHECK(b.values == std::vector<double>{1, 0, -1});

    auto [c, d] = pad_spectra(make(MatrixKind::Laplacian, {0, 2}), make(MatrixKind::Laplacian, {0, 1, 3}));
    CHECK(c.values == std::vector<double>{0, 0, 2});
    CHECK(d.values == std::vector<double>{0, 1, 3});

    auto same = make(MatrixKind::Laplacian, {0, 1, 3});
    CHECK(pad_spectra(same, same).first.values == same.values);

    CHECK_THROWS_AS(pad_spectra(make(MatrixKind::Laplacian, {0}), make(MatrixKind::Adjacency, {0})),
                    std::invalid_argument);
}

TEST_CASE("spectral distance examples") {
    CHECK(spectral_distance(p3(), k2_iso(), MatrixKind::Laplacian) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(spectral_distance(p3(), k2_iso(), MatrixKind::Adjacency) ==
          doctest::Approx(std::sqrt(2.0) * (std::sqrt(2.0) - 1.0)).epsilon(1e-12));
    CHECK(spectral_distance(p3(), p3(), MatrixKind::Adjacency) == 0.0);

    // k largest adjacency / k smallest Laplacian
    CHECK(spectral_distance(p3(), k2_iso(), MatrixKind::Adjacency, 1) == doctest::Approx(std::sqrt(2.0) - 1.0));
    CHECK(spectral_distance(p3(), k2_iso(), MatrixKind::Laplacian, 2) == doctest::Approx(1.0));
    CHECK_THROWS_AS(spectral_distance(p3(), k2_iso(), MatrixKind::Laplacian, 0), std::invalid_argument);
    CHECK_THROWS_AS(spectral_distance(p3(), k2_iso(), MatrixKind::Laplacian, 4), std::invalid_argument);
    CHECK_THROWS_AS(spectral_distance(Graph{}, p3(), MatrixKind::Laplacian), std::invalid_argument);

    // different orders pad with zeros
    auto k2 = Graph::with_order(2, std::vector<Edge>{{0, 1}});
    CHECK(spectral_distance(k2, k2_iso(), MatrixKind::Laplacian) == 0.0);
    CHECK(spectral_distance(k2, k2_iso(), MatrixKind::Adjacency) == 0.0);
}

TEST_CASE("spectral invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 1 + seed * 13 % 64;
        auto g = oracle::random_graph(n, 2.5 / n, seed);
        const double tol = n * 1e-9;
        const auto a = spectrum(g, MatrixKind::Adjacency);
        const auto l = spectrum(g, MatrixKind::Laplacian);
        const auto nl = spectrum(g, MatrixKind::NormalizedLaplacian);

        CHECK(std::is_sorted(a.values.rbegin(), a.values.rend()));
        CHECK(std::is_sorted(l.values.begin(), l.values.end()));
        CHECK(std::abs(std::accumulate(a.values.begin(), a.values.end(), 0.0)) <= tol);
        CHECK(std::abs(std::accumulate(l.values.begin(), l.values.end(), 0.0) - 2.0 * g.size()) <= tol);
        CHECK(l.values.front() == 0.0);
        for (double x : l.values) CHECK(x >= -1e-9);
        for (double x : nl.values) {
            CHECK(x >= -1e-9);
            CHECK(x <= 2.0 + 1e-9);
        }
        if (connected_components(g).size() == 1 && g.size() > 0) {
            const auto p = graph_properties(g);
            CHECK(a.values.front() >= p.avg_degree - 1e-6);
            CHECK(a.values.front() <= static_cast<double>(p.max_degree) + 1e-6);
        }

        auto h = oracle::random_graph(n, 2.5 / n, seed + 1000);
        for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian}) {
            CHECK(spectral_distance(g, h, kind) == spectral_distance(h, g, kind));
            CHECK(spectral_distance(g, g, kind) == 0.0);
        }
    }
}

TEST_CASE("spectrum CSV export") {
    std::ostringstream out;
    write_spectrum_csv(spectrum(p3(), MatrixKind::Laplacian), out);
    CHECK(out.str() == "laplacian,0,1,3\n");
    std::ostringstream k3;
    write_spectrum_csv(spectrum(load_edge_list(fixture("k3.csv")), MatrixKind::NormalizedLaplacian), k3);
    CHECK(k3.str() == "normalized_laplacian,0,1.5,1.5\n");
}
