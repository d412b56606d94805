#include "odat/signal.hpp"

#include <cmath>
#include <numbers>

#include "odat/io.hpp"

namespace odat {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t mix_seed(uint64_t seed, int64_t level_code) {
    return splitmix64(splitmix64(seed) ^ static_cast<uint64_t>(level_code));
}

double GaussStream::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // top 53 bits; +1 keeps u1 in (0,1] so the log is finite
    double u1 = static_cast<double>((rng_() >> 11) + 1) * 0x1p-53;
    double u2 = static_cast<double>(rng_() >> 11) * 0x1p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::vector<double> gaussians(uint64_t seed, int n) {
    GaussStream g(seed);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = g.next();
    return out;
}

std::vector<double> gen_two_tone(double fs, double f1, double f2, double a1, double a2, int n) {
    if (f1 >= fs / 2 || f2 >= fs / 2) throw ConfigError("two_tone: frequency at or above Nyquist");
    if (f1 < 0 || f2 < 0) throw ConfigError("two_tone: negative frequency");
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * std::numbers::pi * i / fs;
        s[i] = a1 * std::sin(f1 * t) + a2 * std::sin(f2 * t);
    }
    return s;
}

std::vector<double> gen_harmonic(double fs, double f0, int partials, double decay, int n) {
    if (partials < 1) throw ConfigError("harmonic: need at least one partial");
    if (partials * f0 >= fs / 2) throw ConfigError("harmonic: top partial at or above Nyquist");
    std::vector<double> s(n, 0.0);
    double amp = 1.0;  // decay^(k-1), so 0^0 = 1 keeps a single tone at decay 0
    for (int k = 1; k <= partials; ++k) {
        for (int i = 0; i < n; ++i)
            s[i] += amp * std::sin(2.0 * std::numbers::pi * k * f0 * i / fs);
        amp *= decay;
    }
    return s;
}

namespace {

std::vector<double> gen_harmonic_recipe(const SignalRecipe& r) {
    if (r.partials < 1) throw ConfigError("harmonic: need at least one partial");
    if (r.partials * r.f0 >= r.fs / 2) throw ConfigError("harmonic: top partial at or above Nyquist");
    std::vector<double> s(r.n, 0.0);
    double amp = 1.0;
    for (int k = 1; k <= r.partials; ++k) {
        double w = 2.0 * std::numbers::pi * k * r.f0 / r.fs;
        for (int i = 0; i < r.n; ++i) s[i] += amp * std::sin(w * i + r.phase_step * k);
        amp *= r.decay;
    }
    if (r.env_width > 0.0) {
        int period = r.env_period > 0 ? r.env_period : r.n;
        for (int i = 0; i < r.n; ++i) {
            double d = (i % period) - r.env_center;
            s[i] *= std::exp(-0.5 * d * d / (r.env_width * r.env_width));
        }
    }
    return s;
}

std::vector<double> gen_noise_burst(const SignalRecipe& r) {
    if (r.hp_alpha <= 0.0 || r.hp_alpha >= 1.0) throw ConfigError("noise_burst: pole must be in (0,1)");
    int period = r.env_period > 0 ? r.env_period : r.n;
    if (r.onset < 0 || r.duration < 1 || r.onset + r.duration > period)
        throw ConfigError("noise_burst: window must fit inside the envelope period");
    std::vector<double> s = gaussians(r.burst_seed, r.n);
    double px = 0.0, py = 0.0;
    for (int i = 0; i < r.n; ++i) {
        double y = r.hp_alpha * (py + s[i] - px);
        px = s[i];
        py = y;
        s[i] = y;
    }
    for (int i = 0; i < r.n; ++i) {
        int p = i % period;
        if (p < r.onset || p >= r.onset + r.duration) {
            s[i] = 0.0;
        } else {
            double u = std::sin(std::numbers::pi * (p - r.onset) / r.duration);
            s[i] *= u * u;
        }
    }
    return s;
}

}  // namespace

std::vector<double> load_signal(const SignalRecipe& recipe) {
    if (recipe.offset < 0) throw ConfigError("load_signal: negative offset");
    std::vector<double> samples;
    if (recipe.kind == SignalRecipe::Kind::wav_slice) {
        samples = read_wav(recipe.path).samples;
    } else if (recipe.kind == SignalRecipe::Kind::csv_slice) {
        samples = read_csv_column(recipe.path);
    } else {
        throw ConfigError("load_signal: recipe is not file-backed");
    }
    if (recipe.offset + recipe.n > static_cast<int>(samples.size()))
        throw IoError("load_signal: " + recipe.path + " too short, need " +
                      std::to_string(recipe.offset + recipe.n) + " samples, have " +
                      std::to_string(samples.size()));
    return std::vector<double>(samples.begin() + recipe.offset,
                               samples.begin() + recipe.offset + recipe.n);
}

std::vector<double> render(const SignalRecipe& recipe) {
    if (recipe.n < 2 || recipe.n % 2 != 0) throw ConfigError("recipe: N must be even and >= 2");
    switch (recipe.kind) {
        case SignalRecipe::Kind::two_tone:
            return gen_two_tone(recipe.fs, recipe.f1, recipe.f2, recipe.a1, recipe.a2, recipe.n);
        case SignalRecipe::Kind::harmonic:
            return gen_harmonic_recipe(recipe);
        case SignalRecipe::Kind::noise_burst:
            return gen_noise_burst(recipe);
        case SignalRecipe::Kind::wav_slice:
        case SignalRecipe::Kind::csv_slice:
            return load_signal(recipe);
    }
    throw ConfigError("recipe: unknown kind");
}

SignalRecipe vowel_surrogate(double fs, int segment) {
    SignalRecipe r;
    r.kind = SignalRecipe::Kind::harmonic;
    r.fs = fs;
    r.n = segment;
    r.f0 = 137.5;
    r.partials = 8;
    r.decay = 0.8;
    r.phase_step = 0.7;
    r.env_center = 64.0;
    r.env_width = 16.0;
    r.env_period = 256;
    return r;
}

SignalRecipe consonant_surrogate(double fs, int segment) {
    SignalRecipe r;
    r.kind = SignalRecipe::Kind::noise_burst;
    r.fs = fs;
    r.n = segment;
    r.hp_alpha = 0.9;
    r.onset = 32;
    r.duration = 192;
    r.env_period = 256;
    r.burst_seed = 11;
    return r;
}

}  // namespace odat
