#include "odat/denoise.hpp"

#include <cmath>
#include <limits>

#include "odat/signal.hpp"

namespace odat {

std::vector<double> add_noise(const std::vector<double>& clean, const NoiseSpec& spec) {
    double clean_norm = norm2(clean);
    if (clean_norm == 0.0) throw ConfigError("add_noise: clean frame has zero energy");
    std::vector<double> g = gaussians(spec.seed, static_cast<int>(clean.size()));
    double g_norm = norm2(g);
    if (g_norm == 0.0) throw NumericalError("add_noise: degenerate noise draw");
    double scale = clean_norm * std::pow(10.0, -spec.target_snr_db / 20.0) / g_norm;
    std::vector<double> out(clean.size());
    for (size_t i = 0; i < clean.size(); ++i) out[i] = clean[i] + scale * g[i];
    return out;
}

double compute_threshold(const std::vector<double>& noisy_frame) {
    Spectrum s = dft(noisy_frame);
    double acc = 0.0;
    for (const cxd& b : s.bins) acc += std::abs(b);
    return acc / static_cast<double>(s.bins.size());
}

Spectrum threshold_spectrum(const Spectrum& spec, double tau) {
    if (tau < 0.0) throw ConfigError("threshold: tau must be nonnegative");
    Spectrum out = spec;
    for (cxd& b : out.bins)
        if (std::abs(b) < tau) b = cxd(0.0, 0.0);
    return out;
}

int count_kept(const Spectrum& spec, double tau) {
    int kept = 0;
    for (const cxd& b : spec.bins)
        if (std::abs(b) >= tau) ++kept;
    return kept;
}

namespace {

std::vector<double> denoise_frame(const std::vector<double>& noisy, const TransformPlan& plan,
                                  Branch branch, bool per_branch_tau, double* tau_out,
                                  int* kept_out) {
    Spectrum base = dft(noisy);
    double tau;
    Spectrum spec;
    if (branch == Branch::odat) {
        spec = forward(plan, noisy);
        if (per_branch_tau) {
            double acc = 0.0;
            for (const cxd& b : spec.bins) acc += std::abs(b);
            tau = acc / static_cast<double>(spec.bins.size());
        } else {
            double acc = 0.0;
            for (const cxd& b : base.bins) acc += std::abs(b);
            tau = acc / static_cast<double>(base.bins.size());
        }
    } else {
        spec = base;
        double acc = 0.0;
        for (const cxd& b : base.bins) acc += std::abs(b);
        tau = acc / static_cast<double>(base.bins.size());
    }
    if (tau_out) *tau_out = tau;
    if (kept_out) *kept_out = count_kept(spec, tau);
    Spectrum kept = threshold_spectrum(spec, tau);
    return branch == Branch::odat ? inverse(plan, kept) : idft(kept);
}

}  // namespace

std::vector<double> denoise(const std::vector<double>& noisy, const TransformPlan& plan,
                            Branch branch) {
    if (static_cast<int>(noisy.size()) != plan.n) throw ConfigError("denoise: frame length mismatch");
    return denoise_frame(noisy, plan, branch, false, nullptr, nullptr);
}

std::vector<double> denoise_segment(const std::vector<double>& noisy, const TransformPlan& plan,
                                    Branch branch, const DenoiseOptions& opts,
                                    SegmentStats* stats) {
    int len = static_cast<int>(noisy.size());
    if (opts.whole_segment && len != plan.n)
        throw ConfigError("denoise: whole-segment mode needs a plan of the segment length");
    if (len % plan.n != 0)
        throw ConfigError("denoise: segment length must be a multiple of the frame length");

    int frames = len / plan.n;
    std::vector<double> out(len);
    double tau_acc = 0.0;
    int kept_acc = 0;
    for (int f = 0; f < frames; ++f) {
        std::vector<double> fr(noisy.begin() + f * plan.n, noisy.begin() + (f + 1) * plan.n);
        double tau = 0.0;
        int kept = 0;
        std::vector<double> rec =
            denoise_frame(fr, plan, branch, opts.per_branch_threshold, &tau, &kept);
        std::copy(rec.begin(), rec.end(), out.begin() + f * plan.n);
        tau_acc += tau;
        kept_acc += kept;
    }
    if (stats) {
        stats->tau_mean = tau_acc / frames;
        stats->bins_kept = kept_acc;
    }
    return out;
}

double snr_db(const std::vector<double>& reference, const std::vector<double>& estimate) {
    if (reference.size() != estimate.size()) throw ConfigError("snr_db: length mismatch");
    double ref2 = 0.0, err2 = 0.0;
    for (size_t i = 0; i < reference.size(); ++i) {
        ref2 += reference[i] * reference[i];
        double d = reference[i] - estimate[i];
        err2 += d * d;
    }
    if (ref2 == 0.0) throw ConfigError("snr_db: zero reference");
    if (err2 == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(ref2 / err2);
}

std::vector<DenoiseReport> sweep(const std::vector<double>& clean, const TransformPlan& plan,
                                 const std::vector<double>& snrs_db,
                                 const std::vector<uint64_t>& seeds,
                                 const DenoiseOptions& opts) {
    if (snrs_db.empty() || seeds.empty()) throw ConfigError("sweep: empty level or seed list");
    std::vector<DenoiseReport> reports;
    reports.reserve(snrs_db.size() * seeds.size());
    for (double level : snrs_db) {
        int64_t level_code = static_cast<int64_t>(std::llround(level * 1000.0));
        for (uint64_t seed : seeds) {
            std::vector<double> noisy =
                add_noise(clean, NoiseSpec{level, mix_seed(seed, level_code)});
            DenoiseReport r;
            r.input_snr_db = level;
            r.seed = seed;
            SegmentStats st_odat, st_dft;
            std::vector<double> est_odat =
                denoise_segment(noisy, plan, Branch::odat, opts, &st_odat);
            std::vector<double> est_dft = denoise_segment(noisy, plan, Branch::dft, opts, &st_dft);
            r.output_snr_db_odat = snr_db(clean, est_odat);
            r.output_snr_db_dft = snr_db(clean, est_dft);
            r.threshold_value = st_odat.tau_mean;
            r.bins_kept_odat = st_odat.bins_kept;
            r.bins_kept_dft = st_dft.bins_kept;
            reports.push_back(r);
        }
    }
    return reports;
}

}  // namespace odat
