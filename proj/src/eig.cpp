#include "odat/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace odat {
namespace {

// Householder reduction to tridiagonal form; z accumulates the transform.
void tred2(Mat& z, std::vector<double>& d, std::vector<double>& e) {
    int n = z.rows;
    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k < i; ++k) scale += std::abs(z(i, k));
            if (scale == 0.0) {
                e[i] = z(i, l);
            } else {
                for (int k = 0; k < i; ++k) {
                    z(i, k) /= scale;
                    h += z(i, k) * z(i, k);
                }
                double f = z(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j < i; ++j) {
                    z(j, i) = z(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k < j + 1; ++k) g += z(j, k) * z(i, k);
                    for (int k = j + 1; k < i; ++k) g += z(k, j) * z(i, k);
                    e[j] = g / h;
                    f += e[j] * z(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j < i; ++j) {
                    f = z(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k < j + 1; ++k) z(j, k) -= f * e[k] + g * z(i, k);
                }
            }
        } else {
            e[i] = z(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        if (d[i] != 0.0) {
            for (int j = 0; j < i; ++j) {
                double g = 0.0;
                for (int k = 0; k < i; ++k) g += z(i, k) * z(k, j);
                for (int k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
            }
        }
        d[i] = z(i, i);
        z(i, i) = 1.0;
        for (int j = 0; j < i; ++j) z(j, i) = z(i, j) = 0.0;
    }
}

// Implicit-shift QL on the tridiagonal (d, e), rotating z's columns along.
void tql2(std::vector<double>& d, std::vector<double>& e, Mat& z) {
    int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw NumericalError("sym_eig: QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    e[i + 1] = r = std::hypot(f, g);
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * f;
                        z(k, i) = c * z(k, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

SymEig sym_eig(const Mat& h) {
    if (h.rows != h.cols || h.rows < 1) throw ConfigError("sym_eig: square matrix required");
    int n = h.rows;
    SymEig out;
    out.v = h;
    out.w.assign(n, 0.0);
    std::vector<double> e(n, 0.0);
    tred2(out.v, out.w, e);
    tql2(out.w, e, out.v);

    // ascending eigenvalues, columns permuted along
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return out.w[a] < out.w[b]; });
    SymEig sorted;
    sorted.w.resize(n);
    sorted.v = Mat(n, n);
    for (int k = 0; k < n; ++k) {
        sorted.w[k] = out.w[idx[k]];
        for (int i = 0; i < n; ++i) sorted.v(i, k) = out.v(i, idx[k]);
    }
    return sorted;
}

}  // namespace odat
