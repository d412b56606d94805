#pragma once

#include <vector>

#include "odat/matrix.hpp"

namespace odat {

// H v[:,k] = w[k] v[:,k]; w ascending, v orthogonal.
struct SymEig {
    std::vector<double> w;
    Mat v;
};

// Householder tridiagonalization followed by implicit-shift QL with
// eigenvector accumulation. Throws NumericalError if QL stalls.
SymEig sym_eig(const Mat& h);

}  // namespace odat
