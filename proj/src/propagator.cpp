#include "odat/propagator.hpp"

#include <cmath>

#include "odat/eig.hpp"

namespace odat {

Mat build_laplacian(int order) {
    if (order < 1) throw ConfigError("laplacian: order must be >= 1");
    Mat a(order, order);
    for (int k = 0; k < order; ++k) {
        a(k, k) = -2.0;
        if (k + 1 < order) {
            a(k, k + 1) = 1.0;
            a(k + 1, k) = 1.0;
        }
    }
    return a;
}

Mat build_hamiltonian(const PropagatorConfig& cfg, const Mat& a, const Mat& b) {
    // zero weights are allowed: they give the identity map, the degenerate
    // case the validation suite compares against plain DFT
    if (cfg.sigma1 < 0.0 || cfg.sigma2 < 0.0)
        throw ConfigError("hamiltonian: sigma weights must be nonnegative");
    if (a.rows != b.rows || a.cols != b.cols || a.rows != a.cols)
        throw ConfigError("hamiltonian: order mismatch");
    Mat h(a.rows, a.cols);
    for (size_t i = 0; i < h.a.size(); ++i) h.a[i] = cfg.sigma1 * a.a[i] + cfg.sigma2 * b.a[i];
    return h;
}

CMat time_one_map(const Mat& h) {
    SymEig eig = sym_eig(h);
    int n = h.rows;

    // gate: the decomposition must actually reproduce H
    double hmax = 0.0;
    for (double x : h.a) hmax = std::max(hmax, std::abs(x));
    double resid = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += eig.v(i, k) * eig.w[k] * eig.v(j, k);
            resid = std::max(resid, std::abs(acc - h(i, j)));
        }
    if (resid > 1e-10 * std::max(1.0, hmax))
        throw NumericalError("time_one_map: eigendecomposition residual too large");

    std::vector<cxd> phase(n);
    for (int k = 0; k < n; ++k) phase[k] = cxd(std::cos(eig.w[k]), std::sin(eig.w[k]));

    CMat t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cxd acc(0.0, 0.0);
            for (int k = 0; k < n; ++k) acc += eig.v(i, k) * phase[k] * eig.v(j, k);
            t(i, j) = acc;
        }
    return t;
}

std::vector<cxd> evolve_ode(const Mat& h, std::vector<cxd> u0, double t, double dt) {
    if (h.rows != h.cols) throw ConfigError("evolve_ode: square matrix required");
    if (static_cast<int>(u0.size()) != h.rows) throw ConfigError("evolve_ode: size mismatch");
    if (dt <= 0.0 || t < 0.0) throw ConfigError("evolve_ode: need dt > 0 and t >= 0");
    if (t == 0.0) return u0;
    if (dt >= t) throw ConfigError("evolve_ode: dt must be smaller than t");

    int n = h.rows;
    long steps = static_cast<long>(std::ceil(t / dt - 1e-12));
    double step = t / static_cast<double>(steps);

    auto deriv = [&](const std::vector<cxd>& u, std::vector<cxd>& out) {
        for (int i = 0; i < n; ++i) {
            double re = 0.0, im = 0.0;
            const double* row = &h.a[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) {
                re += row[j] * u[j].real();
                im += row[j] * u[j].imag();
            }
            out[i] = cxd(-im, re);  // i * (H u)
        }
    };

    std::vector<cxd> k1(n), k2(n), k3(n), k4(n), tmp(n);
    for (long s = 0; s < steps; ++s) {
        deriv(u0, k1);
        for (int i = 0; i < n; ++i) tmp[i] = u0[i] + 0.5 * step * k1[i];
        deriv(tmp, k2);
        for (int i = 0; i < n; ++i) tmp[i] = u0[i] + 0.5 * step * k2[i];
        deriv(tmp, k3);
        for (int i = 0; i < n; ++i) tmp[i] = u0[i] + step * k3[i];
        deriv(tmp, k4);
        for (int i = 0; i < n; ++i)
            u0[i] += (step / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return u0;
}

double spreading_metric(const CMat& t) {
    if (unitarity_defect(t) > 1e-8) throw ConfigError("spreading_metric: input not unitary");
    double acc = 0.0;
    for (int k = 0; k < t.cols; ++k) {
        double s4 = 0.0;
        for (int j = 0; j < t.rows; ++j) {
            double p = std::norm(t(j, k));
            s4 += p * p;
        }
        acc += 1.0 / s4;
    }
    return acc / t.cols;
}

}  // namespace odat
