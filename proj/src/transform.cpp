#include "odat/transform.hpp"

#include <cmath>
#include <numbers>

#include "odat/auditory.hpp"

namespace odat {
namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// iterative radix-2, sign = -1 forward / +1 inverse (unscaled)
void fft_inplace(std::vector<cxd>& a, int sign) {
    int n = static_cast<int>(a.size());
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / len;
        cxd wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            cxd w(1.0, 0.0);
            for (int k = 0; k < len / 2; ++k) {
                cxd u = a[i + k];
                cxd v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

std::vector<cxd> direct_dft(const std::vector<cxd>& in, int sign) {
    int n = static_cast<int>(in.size());
    std::vector<cxd> tw(n);
    for (int k = 0; k < n; ++k) {
        double ang = sign * 2.0 * std::numbers::pi * k / n;
        tw[k] = cxd(std::cos(ang), std::sin(ang));
    }
    std::vector<cxd> out(n);
    for (int k = 0; k < n; ++k) {
        cxd acc(0.0, 0.0);
        for (int m = 0; m < n; ++m) acc += in[m] * tw[static_cast<int>((static_cast<long>(m) * k) % n)];
        out[k] = acc;
    }
    return out;
}

std::vector<cxd> transform_any(std::vector<cxd> a, int sign) {
    if (a.size() % 2 != 0) throw ConfigError("dft: odd frame length");
    if (is_pow2(static_cast<int>(a.size()))) {
        fft_inplace(a, sign);
        return a;
    }
    return direct_dft(a, sign);
}

// y = J conj(M conj(J v)): the mirror block of X applied through M itself
std::vector<cxd> mirror_apply(const CMat& m, const std::vector<cxd>& v) {
    int nh = static_cast<int>(v.size());
    std::vector<cxd> r(nh);
    for (int i = 0; i < nh; ++i) r[i] = std::conj(v[nh - 1 - i]);
    std::vector<cxd> p = matvec(m, r);
    std::vector<cxd> y(nh);
    for (int i = 0; i < nh; ++i) y[i] = std::conj(p[nh - 1 - i]);
    return y;
}

std::vector<cxd> apply_x_blocks(const CMat& upper, const CMat& mirror_m,
                                const std::vector<cxd>& bins) {
    int n = static_cast<int>(bins.size());
    int nh = n / 2 - 1;
    std::vector<cxd> out(n);
    out[0] = bins[0];
    out[n / 2] = bins[n / 2];
    std::vector<cxd> v(nh);
    for (int k = 0; k < nh; ++k) v[k] = bins[1 + k];
    std::vector<cxd> u = matvec(upper, v);
    for (int k = 0; k < nh; ++k) out[1 + k] = u[k];
    for (int k = 0; k < nh; ++k) v[k] = bins[n / 2 + 1 + k];
    std::vector<cxd> w = mirror_apply(mirror_m, v);
    for (int k = 0; k < nh; ++k) out[n / 2 + 1 + k] = w[k];
    return out;
}

}  // namespace

Spectrum dft(const std::vector<double>& frame) {
    std::vector<cxd> a(frame.begin(), frame.end());
    return Spectrum{transform_any(std::move(a), -1), Domain::dft};
}

std::vector<double> idft(const Spectrum& spec, double* imag_residue) {
    int n = static_cast<int>(spec.bins.size());
    std::vector<cxd> a = transform_any(spec.bins, +1);
    double re2 = 0.0, im2 = 0.0;
    std::vector<double> out(n);
    for (int k = 0; k < n; ++k) {
        cxd v = a[k] / static_cast<double>(n);
        out[k] = v.real();
        re2 += std::norm(v);
        im2 += v.imag() * v.imag();
    }
    double rel = re2 > 0.0 ? std::sqrt(im2 / re2) : 0.0;
    if (imag_residue) *imag_residue = rel;
    if (rel > 1e-6) throw NumericalError("idft: non-Hermitian spectrum, imaginary residue " +
                                         std::to_string(rel));
    return out;
}

CMat assemble_x(const CMat& tw, int n) {
    if (n < 8 || n % 2 != 0) throw ConfigError("assemble_x: N must be even and >= 8");
    int nh = n / 2 - 1;
    if (tw.rows != nh || tw.cols != nh) throw ConfigError("assemble_x: T_w order must be N/2 - 1");
    CMat x(n, n);
    x(0, 0) = cxd(1.0, 0.0);
    x(n / 2, n / 2) = cxd(1.0, 0.0);
    for (int i = 0; i < nh; ++i)
        for (int j = 0; j < nh; ++j) {
            x(1 + i, 1 + j) = tw(i, j);
            // J conj(T_w) J: both index ranges reversed
            x(n / 2 + 1 + i, n / 2 + 1 + j) = std::conj(tw(nh - 1 - i, nh - 1 - j));
        }
    return x;
}

TransformPlan make_plan(int n, double fs, const PropagatorConfig& cfg) {
    TransformPlan plan;
    plan.n = n;
    plan.fs = fs;
    plan.cfg = cfg;
    BinGrid grid = make_bin_grid(fs, n);
    Mat b = build_spreading_matrix(grid);
    Mat a = build_laplacian(n / 2 - 1);
    Mat h = build_hamiltonian(cfg, a, b);
    plan.tw = time_one_map(h);
    plan.tw_adj = adjoint(plan.tw);
    plan.x = assemble_x(plan.tw, n);
    plan.metric = spreading_metric(plan.tw);
    return plan;
}

Spectrum forward(const TransformPlan& plan, const std::vector<double>& frame) {
    if (static_cast<int>(frame.size()) != plan.n) throw ConfigError("forward: frame length mismatch");
    Spectrum s = dft(frame);
    return Spectrum{apply_x_blocks(plan.tw, plan.tw, s.bins), Domain::odat};
}

std::vector<double> inverse(const TransformPlan& plan, const Spectrum& spec,
                            double* imag_residue) {
    if (static_cast<int>(spec.bins.size()) != plan.n)
        throw ConfigError("inverse: spectrum length mismatch");
    // X^H: upper block T_w^H, mirror block J T_w^T J = mirror form of T_w^H
    Spectrum back{apply_x_blocks(plan.tw_adj, plan.tw_adj, spec.bins), Domain::dft};
    return idft(back, imag_residue);
}

cxd compute_kernel(const TransformPlan& plan, int l, int m) {
    if (l < 0 || l >= plan.n || m < 0 || m >= plan.n)
        throw ConfigError("compute_kernel: index out of range");
    cxd acc(0.0, 0.0);
    for (int n = 0; n < plan.n; ++n) {
        double ang = 2.0 * std::numbers::pi * l * n / plan.n;
        acc += plan.x(m, n) * cxd(std::cos(ang), std::sin(ang));
    }
    return acc;
}

}  // namespace odat
