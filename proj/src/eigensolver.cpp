#include "netdist/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "netdist/error.hpp"

namespace netdist {
namespace {

// Householder reduction of the symmetric matrix held in `v` to tridiagonal
// form. On return `d` holds the diagonal and `e[1..n-1]` the subdiagonal.
// With `accumulate`, `v` is overwritten by the orthogonal transform.
void tridiagonalize(DenseMatrix& v, std::vector<double>& d, std::vector<double>& e, bool accumulate) {
    const std::size_t n = v.rows();
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

    for (std::size_t i = n - 1; i > 0; --i) {
        double scale = 0.0;
        double h = 0.0;
        for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);

        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (std::size_t j = 0; j < i; ++j) {
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
                v(j, i) = 0.0;
            }
        } else {
            for (std::size_t k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0) g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

            // e <- A u, using the lower triangle only
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                v(j, i) = f;
                g = e[j] + v(j, j) * f;
                for (std::size_t k = j + 1; k < i; ++k) {
                    g += v(k, j) * d[k];
                    e[k] += v(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (std::size_t j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
            // rank-two update A <- A - u e^T - e u^T
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (std::size_t k = j; k < i; ++k) v(k, j) -= (f * e[k] + g * d[k]);
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    if (!accumulate) {
        for (std::size_t j = 0; j < n; ++j) d[j] = v(j, j);
        e[0] = 0.0;
        return;
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        v(n - 1, i) = v(i, i);
        v(i, i) = 1.0;
        const double h = d[i + 1];
        if (h != 0.0) {
            for (std::size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
            for (std::size_t j = 0; j <= i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
                for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
            }
        }
        for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = v(n - 1, j);
        v(n - 1, j) = 0.0;
    }
    v(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e). Rotations are applied to the
// columns of `v` when `vectors` is set.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, DenseMatrix* v) {
    const std::size_t n = d.size();
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    const double eps = std::numeric_limits<double>::epsilon();
    const std::size_t max_sweeps = 50 * n;
    std::size_t sweeps = 0;
    double shift_total = 0.0;
    double tst1 = 0.0;

    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t m = l;
        while (m < n && std::abs(e[m]) > eps * tst1) ++m;
        if (m == n) m = n - 1;

        if (m > l) {
            do {
                if (++sweeps > max_sweeps)
                    throw NumericalError("symmetric eigensolver did not converge within " +
                                         std::to_string(max_sweeps) + " sweeps");
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
                shift_total += h;

                p = d[m];
                double c = 1.0, c2 = 1.0, c3 = 1.0;
                const double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (std::size_t i = m; i-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = std::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if (v) {
                        for (std::size_t k = 0; k < n; ++k) {
                            double& vk1 = (*v)(k, i + 1);
                            double& vk = (*v)(k, i);
                            const double t = vk1;
                            vk1 = s * vk + c * t;
                            vk = c * vk - s * t;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += shift_total;
        e[l] = 0.0;
    }
}

void check_input(const DenseMatrix& a) {
    if (!a.square()) throw std::invalid_argument("eigensolver needs a square matrix");
    for (double x : a.data())
        if (!std::isfinite(x)) throw std::invalid_argument("eigensolver input has non-finite entries");
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const DenseMatrix& a) {
    check_input(a);
    if (a.rows() == 0) return {};
    DenseMatrix work = a;
    std::vector<double> d, e;
    tridiagonalize(work, d, e, false);
    tridiagonal_ql(d, e, nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

SymmetricEigensystem symmetric_eigensystem(const DenseMatrix& a) {
    check_input(a);
    const std::size_t n = a.rows();
    if (n == 0) return {};
    SymmetricEigensystem out{{}, a};
    std::vector<double> e;
    tridiagonalize(out.vectors, out.values, e, true);
    tridiagonal_ql(out.values, e, &out.vectors);

    // selection sort keeps columns paired with values
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t k = i;
        for (std::size_t j = i + 1; j < n; ++j)
            if (out.values[j] < out.values[k]) k = j;
        if (k == i) continue;
        std::swap(out.values[i], out.values[k]);
        for (std::size_t r = 0; r < n; ++r) std::swap(out.vectors(r, i), out.vectors(r, k));
    }
    return out;
}

}  // namespace netdist
