#pragma once

#include <vector>

#include "netdist/dense_matrix.hpp"

namespace netdist {

struct SymmetricEigensystem {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector for values[k].
    DenseMatrix vectors;
};

/// Eigenvalues of a real symmetric matrix, ascending.
///
/// Householder reduction to tridiagonal form followed by QL iteration with
/// implicit Wilkinson-style shifts. Only the lower triangle is read.
/// Throws `NumericalError` if the QL phase needs more than 50*n sweeps.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& a);

/// Same as `symmetric_eigenvalues` but also accumulates the orthogonal basis.
SymmetricEigensystem symmetric_eigensystem(const DenseMatrix& a);

}  // namespace netdist
