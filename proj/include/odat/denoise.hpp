#pragma once

#include <cstdint>
#include <vector>

#include "odat/transform.hpp"

namespace odat {

struct NoiseSpec {
    double target_snr_db = 0.0;
    uint64_t seed = 0;
};

// clean + white Gaussian noise scaled by the realized noise norm, so the
// requested SNR holds exactly for this draw, not just in expectation.
std::vector<double> add_noise(const std::vector<double>& clean, const NoiseSpec& spec);

// mean DFT magnitude of the frame; one rule for both branches
double compute_threshold(const std::vector<double>& noisy_frame);

// hard threshold, strict < so ties survive
Spectrum threshold_spectrum(const Spectrum& spec, double tau);
int count_kept(const Spectrum& spec, double tau);

enum class Branch { dft, odat };

struct DenoiseOptions {
    bool per_branch_threshold = false;  // tau from each branch's own spectrum
    bool whole_segment = false;         // single transform instead of N-sized frames
};

// transform -> threshold at compute_threshold(frame) -> inverse, one frame
std::vector<double> denoise(const std::vector<double>& noisy, const TransformPlan& plan,
                            Branch branch);

struct SegmentStats {
    double tau_mean = 0.0;  // per-frame thresholds averaged
    int bins_kept = 0;      // summed over frames
};

// splits the segment into plan-sized frames (or runs one whole-segment
// transform), denoises each, concatenates
std::vector<double> denoise_segment(const std::vector<double>& noisy, const TransformPlan& plan,
                                    Branch branch, const DenoiseOptions& opts,
                                    SegmentStats* stats = nullptr);

// 10 log10(|ref|^2 / |ref - est|^2); +inf when est == ref exactly
double snr_db(const std::vector<double>& reference, const std::vector<double>& estimate);

struct DenoiseReport {
    double input_snr_db = 0.0;
    double output_snr_db_odat = 0.0;
    double output_snr_db_dft = 0.0;
    double threshold_value = 0.0;  // odat-branch tau (equals dft's unless per-branch)
    int bins_kept_odat = 0;
    int bins_kept_dft = 0;
    uint64_t seed = 0;
};

// full (snr, seed) cross product; each cell's noise comes from
// mix_seed(seed, round(snr*1000)), so results are iteration-order free
std::vector<DenoiseReport> sweep(const std::vector<double>& clean, const TransformPlan& plan,
                                 const std::vector<double>& snrs_db,
                                 const std::vector<uint64_t>& seeds,
                                 const DenoiseOptions& opts = {});

}  // namespace odat
