#pragma once

#include <string>
#include <vector>

#include "odat/matrix.hpp"
#include "odat/propagator.hpp"

namespace odat {

enum class Domain { dft, odat };

struct Spectrum {
    std::vector<cxd> bins;
    Domain domain = Domain::dft;
};

// Unnormalized forward transform, s_hat[k] = sum_n s[n] e^{-i 2 pi n k / N}.
// Power-of-two lengths take the radix-2 fast path, other even lengths the
// direct sum; odd lengths are rejected.
Spectrum dft(const std::vector<double>& frame);

// 1/N inverse. The output must be real up to rounding: the imaginary part is
// discarded, its relative norm is reported through imag_residue when given,
// and anything above 1e-6 is an error (non-Hermitian input).
std::vector<double> idft(const Spectrum& spec, double* imag_residue = nullptr);

// Bin layout: index 0 and N/2 pass through; 1..N/2-1 get T_w; the mirror
// half gets J conj(T_w) J so conjugate pairs stay conjugate pairs.
CMat assemble_x(const CMat& tw, int n);

struct TransformPlan {
    int n = 0;
    double fs = 0.0;
    PropagatorConfig cfg;
    CMat tw;          // order N/2 - 1
    CMat tw_adj;
    CMat x;           // full N x N block form, kept for dumps and validation
    double metric = 1.0;
    std::string sign_convention = "exp(+iH)";
};

TransformPlan make_plan(int n, double fs, const PropagatorConfig& cfg);

// S = X * dft(s), applied blockwise.
Spectrum forward(const TransformPlan& plan, const std::vector<double>& frame);

// idft(X^H S).
std::vector<double> inverse(const TransformPlan& plan, const Spectrum& spec,
                            double* imag_residue = nullptr);

// K[l][m] = sum_n X[m][n] e^{+i 2 pi l n / N}; inspection only, not on the
// signal path (note the raised exponent sign).
cxd compute_kernel(const TransformPlan& plan, int l, int m);

}  // namespace odat
