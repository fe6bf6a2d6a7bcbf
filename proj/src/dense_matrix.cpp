#include "netdist/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netdist {

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
        }
    }
    return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
    DenseMatrix c = a;
    auto out = c.data();
    const auto in = b.data();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += in[i];
    return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return a + (-1.0) * b; }

DenseMatrix operator*(double s, const DenseMatrix& a) {
    DenseMatrix c = a;
    for (double& x : c.data()) x *= s;
    return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

double max_abs(const DenseMatrix& a) {
    double m = 0.0;
    for (double x : a.data()) m = std::max(m, std::abs(x));
    return m;
}

double asymmetry(const DenseMatrix& a) {
    if (!a.square()) throw std::invalid_argument("asymmetry of a non-square matrix");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - a(j, i)));
    return m;
}

}  // namespace netdist

#include "netdist/error.hpp"

namespace netdist {

DenseMatrix solve_linear(DenseMatrix a, DenseMatrix b) {
    const std::size_t n = a.rows();
    if (!a.square() || b.rows() != n) throw std::invalid_argument("solve_linear shape mismatch");
    const std::size_t nrhs = b.cols();
    const double tiny = 1e-14 * std::max(max_abs(a), 1.0);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) <= tiny) throw NumericalError("singular linear system");
        if (pivot != col) {
            std::swap_ranges(a.row(col).begin(), a.row(col).end(), a.row(pivot).begin());
            std::swap_ranges(b.row(col).begin(), b.row(col).end(), b.row(pivot).begin());
        }
        const double inv = 1.0 / a(col, col);
        const auto arow = a.row(col);
        const auto brow = b.row(col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a(r, col) * inv;
            if (factor == 0.0) continue;
            auto ar = a.row(r);
            auto br = b.row(r);
            for (std::size_t j = col; j < n; ++j) ar[j] -= factor * arow[j];
            for (std::size_t j = 0; j < nrhs; ++j) br[j] -= factor * brow[j];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        auto brow = b.row(col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double arc = a(col, r);
            if (arc == 0.0) continue;
            const auto bsolved = b.row(r);
            for (std::size_t j = 0; j < nrhs; ++j) brow[j] -= arc * bsolved[j];
        }
        const double inv = 1.0 / a(col, col);
        for (double& x : brow) x *= inv;
    }
    return b;
}

}  // namespace netdist
