#include "netdist/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "netdist/eigensolver.hpp"
#include "netdist/format.hpp"

namespace netdist {
namespace {

constexpr double kZeroSnap = 1e-9;

void sort_spectrum(Spectrum& s) {
    if (s.order == SortOrder::Descending)
        std::sort(s.values.begin(), s.values.end(), std::greater<>{});
    else
        std::sort(s.values.begin(), s.values.end());
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Adjacency: return "adjacency";
        case MatrixKind::Laplacian: return "laplacian";
        case MatrixKind::NormalizedLaplacian: return "normalized_laplacian";
        case MatrixKind::Degree: return "degree";
    }
    return "?";
}

SortOrder spectrum_order(MatrixKind kind) {
    return kind == MatrixKind::Adjacency ? SortOrder::Descending : SortOrder::Ascending;
}

RepresentationMatrix build_matrix(const Graph& g, MatrixKind kind) {
    const std::size_t n = g.order();
    RepresentationMatrix out{kind, DenseMatrix(n, n)};
    DenseMatrix& m = out.entries;

    switch (kind) {
        case MatrixKind::Adjacency:
            for (const auto& e : g.edges()) m(e.u, e.v) = m(e.v, e.u) = 1.0;
            break;
        case MatrixKind::Degree:
            for (NodeIndex i = 0; i < n; ++i) m(i, i) = static_cast<double>(g.degree(i));
            break;
        case MatrixKind::Laplacian:
            for (NodeIndex i = 0; i < n; ++i) m(i, i) = static_cast<double>(g.degree(i));
            for (const auto& e : g.edges()) m(e.u, e.v) = m(e.v, e.u) = -1.0;
            break;
        case MatrixKind::NormalizedLaplacian: {
            std::vector<double> inv_sqrt(n, 0.0);
            for (NodeIndex i = 0; i < n; ++i)
                if (const auto k = g.degree(i); k > 0) {
                    inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(k));
                    m(i, i) = 1.0;
                }
            for (const auto& e : g.edges()) m(e.u, e.v) = m(e.v, e.u) = -inv_sqrt[e.u] * inv_sqrt[e.v];
            break;
        }
    }
    return out;
}

Spectrum eigenvalues_symmetric(const RepresentationMatrix& mat) {
    Spectrum s{mat.kind, spectrum_order(mat.kind), symmetric_eigenvalues(mat.entries)};
    if (mat.kind == MatrixKind::Laplacian || mat.kind == MatrixKind::NormalizedLaplacian)
        for (double& x : s.values)
            if (std::abs(x) < kZeroSnap) x = 0.0;
    sort_spectrum(s);
    return s;
}

std::pair<Spectrum, Spectrum> pad_spectra(const Spectrum& s1, const Spectrum& s2) {
    if (s1.kind != s2.kind) throw std::invalid_argument("cannot pad spectra of different matrix kinds");
    auto a = s1;
    auto b = s2;
    const std::size_t len = std::max(a.values.size(), b.values.size());
    for (Spectrum* s : {&a, &b}) {
        if (s->values.size() == len) continue;
        s->values.resize(len, 0.0);
        sort_spectrum(*s);
    }
    return {std::move(a), std::move(b)};
}

double spectral_distance(const Spectrum& s1, const Spectrum& s2, std::optional<std::size_t> k) {
    const auto [a, b] = pad_spectra(s1, s2);
    const std::size_t len = a.values.size();
    if (k && *k == 0) throw std::invalid_argument("k must be at least 1");
    if (k && *k > std::min(s1.values.size(), s2.values.size()))
        throw std::invalid_argument("k = " + std::to_string(*k) + " exceeds spectrum length " +
                                    std::to_string(std::min(s1.values.size(), s2.values.size())));
    const std::size_t count = k.value_or(len);
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double diff = a.values[i] - b.values[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

double spectral_distance(const Graph& g1, const Graph& g2, MatrixKind kind, std::optional<std::size_t> k) {
    if (g1.order() == 0 || g2.order() == 0) throw std::invalid_argument("spectral distance of an empty graph");
    return spectral_distance(spectrum(g1, kind), spectrum(g2, kind), k);
}

void write_spectrum_csv(const Spectrum& s, std::ostream& out) {
    out << to_string(s.kind);
    for (double x : s.values) out << ',' << format_significant(x, 12);
    out << '\n';
}

}  // namespace netdist
