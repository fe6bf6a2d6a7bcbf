#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "netdist/dense_matrix.hpp"
#include "netdist/graph.hpp"

namespace netdist {

enum class MatrixKind { Adjacency, Laplacian, NormalizedLaplacian, Degree };
enum class SortOrder { Ascending, Descending };

std::string_view to_string(MatrixKind kind);
/// Adjacency spectra are read largest first; every other kind smallest first.
SortOrder spectrum_order(MatrixKind kind);

struct RepresentationMatrix {
    MatrixKind kind = MatrixKind::Adjacency;
    DenseMatrix entries;

    std::size_t order() const noexcept { return entries.rows(); }
};

struct Spectrum {
    MatrixKind kind = MatrixKind::Adjacency;
    SortOrder order = SortOrder::Descending;
    std::vector<double> values;
};

/// A, D, L = D - A, or D^{-1/2} L D^{-1/2} with zero rows for isolated nodes.
/// Rows follow `g.node_ids()`; weights are ignored.
RepresentationMatrix build_matrix(const Graph& g, MatrixKind kind);

/// Sorted eigenvalues in the kind's declared order. For the two Laplacians
/// values with |x| < 1e-9 are snapped to exactly 0.
Spectrum eigenvalues_symmetric(const RepresentationMatrix& mat);

inline Spectrum spectrum(const Graph& g, MatrixKind kind) {
    return eigenvalues_symmetric(build_matrix(g, kind));
}

/// Zero-pads the shorter spectrum to the longer length and re-sorts it.
std::pair<Spectrum, Spectrum> pad_spectra(const Spectrum& s1, const Spectrum& s2);

/// Euclidean distance between (padded) spectra, optionally limited to the
/// first `k` entries in declared order: the k largest adjacency eigenvalues,
/// the k smallest Laplacian ones.
double spectral_distance(const Spectrum& s1, const Spectrum& s2, std::optional<std::size_t> k = {});
double spectral_distance(const Graph& g1, const Graph& g2, MatrixKind kind,
                         std::optional<std::size_t> k = {});

/// One CSV row: kind name followed by the values, 12 significant digits.
void write_spectrum_csv(const Spectrum& s, std::ostream& out);

}  // namespace netdist
