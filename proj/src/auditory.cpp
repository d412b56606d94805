#include "odat/auditory.hpp"

#include <cmath>

namespace odat {

BinGrid make_bin_grid(double fs, int n) {
    if (fs <= 0.0) throw ConfigError("bin grid: fs must be positive");
    if (n < 8 || n % 2 != 0) throw ConfigError("bin grid: N must be even and >= 8");
    BinGrid g;
    g.fs = fs;
    g.n = n;
    int nh = n / 2 - 1;
    g.freqs.resize(nh);
    for (int k = 0; k < nh; ++k) g.freqs[k] = (k + 1) * fs / n;
    return g;
}

double hz_to_bark(double f) {
    if (f < 0.0) throw ConfigError("hz_to_bark: negative frequency");
    return 13.0 * std::atan(0.00076 * f) + 3.5 * std::atan((f / 7500.0) * (f / 7500.0));
}

double spreading_db(double b_from, double b_to) {
    if (!std::isfinite(b_from) || !std::isfinite(b_to))
        throw ConfigError("spreading_db: non-finite bark value");
    double db = b_to - b_from;
    double u = db + 0.474;
    return 15.81 + 7.5 * u - 17.5 * std::sqrt(1.0 + u * u);
}

Mat build_spreading_matrix(const BinGrid& grid) {
    int nh = static_cast<int>(grid.freqs.size());
    std::vector<double> bark(nh);
    for (int k = 0; k < nh; ++k) bark[k] = hz_to_bark(grid.freqs[k]);

    Mat v(nh, nh);
    for (int m = 0; m < nh; ++m) {
        for (int n = m; n < nh; ++n) {
            double up = std::pow(10.0, spreading_db(bark[m], bark[n]) / 10.0);
            double down = std::pow(10.0, spreading_db(bark[n], bark[m]) / 10.0);
            double w = 0.5 * (up + down);
            v(m, n) = w;
            v(n, m) = w;  // symmetric by construction
        }
    }
    return v;
}

}  // namespace odat
