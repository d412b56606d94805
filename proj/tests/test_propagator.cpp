#include <cmath>
#include <random>

#include "doctest.h"
#include "odat/auditory.hpp"
#include "odat/propagator.hpp"

using namespace odat;

namespace {

// independent oracle: scaling-and-squaring Taylor series for exp(+iH)
CMat expm_ih_taylor(const Mat& h) {
    int n = h.rows;
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += std::abs(h(i, j));
        norm = std::max(norm, row);
    }
    int s = 0;
    while (norm > 0.5) {
        norm *= 0.5;
        ++s;
    }
    double scale = std::ldexp(1.0, -s);
    CMat b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = cxd(0.0, h(i, j) * scale);

    CMat sum(n, n), term(n, n);
    for (int i = 0; i < n; ++i) {
        sum(i, i) = cxd(1.0, 0.0);
        term(i, i) = cxd(1.0, 0.0);
    }
    for (int k = 1; k <= 40; ++k) {
        term = matmul(term, b);
        double biggest = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                term(i, j) /= static_cast<double>(k);
                sum(i, j) += term(i, j);
                biggest = std::max(biggest, std::abs(term(i, j)));
            }
        if (biggest < 1e-25) break;
    }
    for (int q = 0; q < s; ++q) sum = matmul(sum, sum);
    return sum;
}

double cmat_max_diff(const CMat& a, const CMat& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.a.size(); ++i) worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
    return worst;
}

Mat operating_hamiltonian(int n, double sigma1, double sigma2) {
    BinGrid grid = make_bin_grid(16000.0, n);
    Mat b = build_spreading_matrix(grid);
    Mat a = build_laplacian(n / 2 - 1);
    return build_hamiltonian(PropagatorConfig{sigma1, sigma2}, a, b);
}

}  // namespace

TEST_CASE("lattice matrix has the Dirichlet stencil") {
    Mat a = build_laplacian(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double want = i == j ? -2.0 : (std::abs(i - j) == 1 ? 1.0 : 0.0);
            CHECK(a(i, j) == want);
        }
    CHECK_THROWS_AS(build_laplacian(0), ConfigError);
}

TEST_CASE("hamiltonian is the weighted sum of its two parts") {
    Mat a = build_laplacian(5);
    Mat b = build_spreading_matrix(make_bin_grid(16000.0, 12));
    Mat h = build_hamiltonian(PropagatorConfig{0.7, 0.2}, a, b);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(h(i, j) == doctest::Approx(0.7 * a(i, j) + 0.2 * b(i, j)).epsilon(1e-15));

    CHECK_THROWS_AS(build_hamiltonian(PropagatorConfig{-0.1, 0.0}, a, b), ConfigError);
    CHECK_THROWS_AS(build_hamiltonian(PropagatorConfig{0.0, -0.1}, a, b), ConfigError);
    Mat wrong = build_laplacian(4);
    CHECK_THROWS_AS(build_hamiltonian(PropagatorConfig{1.0, 1.0}, a, wrong), ConfigError);
}

TEST_CASE("zero weights give the identity map") {
    Mat a = build_laplacian(7);
    Mat b = build_spreading_matrix(make_bin_grid(16000.0, 16));
    CMat t = time_one_map(build_hamiltonian(PropagatorConfig{0.0, 0.0}, a, b));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            CHECK(std::abs(t(i, j) - (i == j ? cxd(1.0, 0.0) : cxd(0.0, 0.0))) < 1e-14);
}

TEST_CASE("time-one map of a diagonal matrix is a pure phase") {
    Mat h(3, 3);
    h(0, 0) = 0.25;
    h(1, 1) = -1.5;
    h(2, 2) = 2.0;
    CMat t = time_one_map(h);
    for (int k = 0; k < 3; ++k) {
        CHECK(t(k, k).real() == doctest::Approx(std::cos(h(k, k))).epsilon(1e-14));
        CHECK(t(k, k).imag() == doctest::Approx(std::sin(h(k, k))).epsilon(1e-14));
    }
    CHECK(std::abs(t(0, 1)) < 1e-14);
    CHECK(std::abs(t(1, 2)) < 1e-14);
}

TEST_CASE("time-one map matches a Taylor series oracle") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int rep = 0; rep < 4; ++rep) {
        int n = 5 + 3 * rep;
        Mat h(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                double x = u(rng);
                h(i, j) = x;
                h(j, i) = x;
            }
        CHECK(cmat_max_diff(time_one_map(h), expm_ih_taylor(h)) < 1e-12);
    }
}

TEST_CASE("time-one map is unitary at the operating point") {
    CMat t = time_one_map(operating_hamiltonian(64, 0.6, 0.04));
    CHECK(unitarity_defect(t) < 1e-12);
    // the oracle fixes the raised sign: conj(exp(+iH)) would fail this
    CHECK(cmat_max_diff(t, expm_ih_taylor(operating_hamiltonian(64, 0.6, 0.04))) < 1e-11);
}

TEST_CASE("integrated flow agrees with the map") {
    Mat h = operating_hamiltonian(16, 0.6, 0.04);
    CMat t = time_one_map(h);
    int n = h.rows;
    for (int col = 0; col < n; col += 3) {
        std::vector<cxd> e(n, cxd(0.0, 0.0));
        e[col] = cxd(1.0, 0.0);
        std::vector<cxd> u = evolve_ode(h, e, 1.0, 1e-3);
        double worst = 0.0;
        for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(u[i] - t(i, col)));
        CHECK(worst < 1e-9);
        CHECK(norm2(u) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("integrator honours its domain checks") {
    Mat h = build_laplacian(3);
    std::vector<cxd> u(3, cxd(1.0, 0.0));
    CHECK_THROWS_AS(evolve_ode(h, u, 1.0, 0.0), ConfigError);
    CHECK_THROWS_AS(evolve_ode(h, u, 1.0, -0.1), ConfigError);
    CHECK_THROWS_AS(evolve_ode(h, u, -1.0, 0.1), ConfigError);
    CHECK_THROWS_AS(evolve_ode(h, u, 0.5, 0.5), ConfigError);
    CHECK_THROWS_AS(evolve_ode(h, u, 0.5, 0.7), ConfigError);
    std::vector<cxd> wrong(2, cxd(1.0, 0.0));
    CHECK_THROWS_AS(evolve_ode(h, wrong, 1.0, 0.1), ConfigError);

    // t = 0 returns the input unchanged
    std::vector<cxd> same = evolve_ode(h, u, 0.0, 0.1);
    for (int i = 0; i < 3; ++i) CHECK(same[i] == u[i]);
}

TEST_CASE("spreading metric is 1 for phase maps and matches frozen values") {
    CMat eye(4, 4);
    for (int i = 0; i < 4; ++i) eye(i, i) = cxd(std::cos(0.3 * i), std::sin(0.3 * i));
    CHECK(spreading_metric(eye) == doctest::Approx(1.0).epsilon(1e-14));

    CMat bad(2, 2);
    bad(0, 0) = cxd(2.0, 0.0);
    bad(1, 1) = cxd(1.0, 0.0);
    CHECK_THROWS_AS(spreading_metric(bad), ConfigError);

    // frozen against an independent eigensolver at the same settings
    CMat t32 = time_one_map(operating_hamiltonian(32, 0.6, 0.04));
    CHECK(spreading_metric(t32) == doctest::Approx(2.966358547443005).epsilon(1e-9));

    double m02 = spreading_metric(time_one_map(operating_hamiltonian(256, 0.2, 0.04)));
    double m06 = spreading_metric(time_one_map(operating_hamiltonian(256, 0.6, 0.04)));
    double m10 = spreading_metric(time_one_map(operating_hamiltonian(256, 1.0, 0.04)));
    CHECK(m02 == doctest::Approx(1.273988286204696).epsilon(1e-9));
    CHECK(m06 == doctest::Approx(3.3565954157813818).epsilon(1e-9));
    CHECK(m10 == doctest::Approx(4.17844594640043).epsilon(1e-9));
    // stronger kinetic weight spreads the columns further
    CHECK(m02 < m06);
    CHECK(m06 < m10);
}
