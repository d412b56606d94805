#pragma once

#include <vector>

#include "odat/matrix.hpp"

namespace odat {

// Interior bin centers: freqs[k] = (k+1) fs/N for k = 0..N/2-2.
// DC and Nyquist are excluded; they pass through the transform untouched.
struct BinGrid {
    double fs = 0.0;
    int n = 0;
    std::vector<double> freqs;
};

BinGrid make_bin_grid(double fs, int n);

// Zwicker map, monotone in f.
double hz_to_bark(double f);

// Schroeder spreading level in dB at b_to as seen from b_from.
// Asymmetric: decays faster toward lower frequencies.
double spreading_db(double b_from, double b_to);

// Symmetrized spreading matrix in linear power units:
// V[m][n] = (10^(L(b_n - b_m)/10) + 10^(L(b_m - b_n)/10)) / 2.
Mat build_spreading_matrix(const BinGrid& grid);

}  // namespace odat
