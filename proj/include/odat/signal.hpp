#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "odat/errors.hpp"

namespace odat {

// Reproducibility contract: Gaussian variates come from mt19937_64 through
// Box-Muller exactly as below, never from std::normal_distribution (which is
// not bit-portable across standard libraries). Artifacts record this id.
inline constexpr const char* kGeneratorId = "mt19937_64-boxmuller-v1";

uint64_t splitmix64(uint64_t x);

// Cell seed for a sweep cell: order-independent mix of the user seed and the
// level code (level in millidecibels, two's complement).
uint64_t mix_seed(uint64_t seed, int64_t level_code);

class GaussStream {
  public:
    explicit GaussStream(uint64_t seed) : rng_(seed) {}
    double next();

  private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::vector<double> gaussians(uint64_t seed, int n);

struct SignalRecipe {
    enum class Kind { two_tone, harmonic, noise_burst, wav_slice, csv_slice };
    Kind kind = Kind::two_tone;
    double fs = 16000.0;
    int n = 256;

    // two_tone
    double f1 = 3000.0, f2 = 4300.0, a1 = 1.0, a2 = 1.0;

    // harmonic: partial k has amplitude decay^(k-1) and phase phase_step*k;
    // optional Gaussian amplitude envelope tiled with period env_period
    // (0 = whole frame), disabled when env_width == 0
    double f0 = 137.5;
    int partials = 8;
    double decay = 0.8;
    double phase_step = 0.0;
    double env_center = 0.0, env_width = 0.0;
    int env_period = 0;

    // noise_burst: white noise -> single-pole high-pass (pole hp_alpha) ->
    // sin^2 window on [onset, onset+duration) tiled with period env_period
    double hp_alpha = 0.9;
    int onset = 32, duration = 192;
    uint64_t burst_seed = 11;

    // wav_slice / csv_slice
    std::string path;
    int offset = 0;
};

std::vector<double> gen_two_tone(double fs, double f1, double f2, double a1, double a2, int n);
std::vector<double> gen_harmonic(double fs, double f0, int partials, double decay, int n);

// wav_slice / csv_slice ingestion with offset, no zero padding
std::vector<double> load_signal(const SignalRecipe& recipe);

// full dispatch over every recipe kind
std::vector<double> render(const SignalRecipe& recipe);

// Tuned denoising surrogates. The envelope puts the energy in the first half
// of each transform frame, where the dispersive map translates structure
// instead of smearing it; see README for the measured margins.
SignalRecipe vowel_surrogate(double fs, int segment);
SignalRecipe consonant_surrogate(double fs, int segment);

}  // namespace odat
