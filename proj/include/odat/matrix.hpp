#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "odat/errors.hpp"

namespace odat {

using cxd = std::complex<double>;

// Dense row-major matrices, just enough surface for this project.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

struct CMat {
    int rows = 0, cols = 0;
    std::vector<cxd> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, cxd(0.0, 0.0)) {}

    cxd& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    cxd operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

inline std::vector<cxd> matvec(const CMat& m, const std::vector<cxd>& x) {
    if (static_cast<int>(x.size()) != m.cols) throw ConfigError("matvec: size mismatch");
    std::vector<cxd> y(m.rows, cxd(0.0, 0.0));
    for (int i = 0; i < m.rows; ++i) {
        cxd acc(0.0, 0.0);
        const cxd* row = &m.a[static_cast<size_t>(i) * m.cols];
        for (int j = 0; j < m.cols; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

inline CMat matmul(const CMat& a, const CMat& b) {
    if (a.cols != b.rows) throw ConfigError("matmul: size mismatch");
    CMat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            cxd aik = a(i, k);
            if (aik == cxd(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline CMat adjoint(const CMat& m) {
    CMat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = std::conj(m(i, j));
    return t;
}

// max |M M^H - I|, the unitarity defect
inline double unitarity_defect(const CMat& m) {
    if (m.rows != m.cols) throw ConfigError("unitarity_defect: square matrix required");
    double worst = 0.0;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            cxd acc(0.0, 0.0);
            for (int k = 0; k < m.cols; ++k) acc += m(i, k) * std::conj(m(j, k));
            double d = std::abs(acc - (i == j ? cxd(1.0, 0.0) : cxd(0.0, 0.0)));
            if (d > worst) worst = d;
        }
    return worst;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.a.size(); ++i) worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
    return worst;
}

inline double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double norm2(const std::vector<cxd>& v) {
    double s = 0.0;
    for (const cxd& x : v) s += std::norm(x);
    return std::sqrt(s);
}

}  // namespace odat
