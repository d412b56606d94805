#pragma once

#include <vector>

#include "odat/matrix.hpp"

namespace odat {

struct PropagatorConfig {
    double sigma1 = 0.6;
    double sigma2 = 0.04;
};

// Dirichlet lattice Laplacian: -2 on the diagonal, 1 on the off-diagonals.
Mat build_laplacian(int order);

// H = sigma1 * A + sigma2 * B, real symmetric.
Mat build_hamiltonian(const PropagatorConfig& cfg, const Mat& a, const Mat& b);

// T_w = exp(+iH) via symmetric eigendecomposition: Q e^{i diag(w)} Q^T.
// Sign follows the raised convention; see evolve_ode for the matching flow.
CMat time_one_map(const Mat& h);

// RK4 for u' = +iHu from 0 to t, uniform step t/ceil(t/dt).
// At t = 1 this is the independent oracle for time_one_map.
std::vector<cxd> evolve_ode(const Mat& h, std::vector<cxd> u0, double t, double dt);

// Mean participation ratio of the columns: 1 for permutation-times-phase,
// grows as columns delocalize. Input must be unitary within 1e-8.
double spreading_metric(const CMat& t);

}  // namespace odat
