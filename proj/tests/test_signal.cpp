#include <cmath>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "odat/io.hpp"
#include "odat/signal.hpp"
#include "odat/transform.hpp"

using namespace odat;

namespace {

std::filesystem::path scratch(const char* name) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "odat_signal_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("the engine behind the generator is the portable one") {
    std::mt19937_64 rng(5489);
    CHECK(rng() == 14514284786278117030ull);
}

TEST_CASE("seed mixing matches frozen values and separates cells") {
    CHECK(splitmix64(0) == 16294208416658607535ull);
    CHECK(splitmix64(1) == 10451216379200822465ull);
    CHECK(mix_seed(1, -12000) == 3226098613367645504ull);
    CHECK(mix_seed(7, 3000) == 9168475622019155636ull);
    CHECK(mix_seed(0, 0) == 12035550249420947055ull);

    // neighbouring sweep cells never share a stream
    CHECK(mix_seed(1, -12000) != mix_seed(2, -12000));
    CHECK(mix_seed(1, -12000) != mix_seed(1, -9000));
    CHECK(mix_seed(1, 0) != mix_seed(0, 1));
}

TEST_CASE("gaussian stream matches its frozen known answers") {
    std::vector<double> g = gaussians(42, 4);
    // frozen from a bit-faithful reimplementation of the documented generator
    CHECK(g[0] == doctest::Approx(-0.4812176998018449).epsilon(1e-13));
    CHECK(g[1] == doctest::Approx(-0.5745368738983057).epsilon(1e-13));
    CHECK(g[2] == doctest::Approx(0.49458385623521345).epsilon(1e-13));
    CHECK(g[3] == doctest::Approx(0.5701215522073739).epsilon(1e-13));

    // same seed, same stream; direct use of the class agrees with the helper
    GaussStream s(42);
    for (int i = 0; i < 4; ++i) CHECK(s.next() == g[i]);
}

TEST_CASE("gaussian stream has unit scale") {
    std::vector<double> g = gaussians(1, 20000);
    double mean = 0.0;
    for (double x : g) mean += x;
    mean /= g.size();
    double var = 0.0;
    for (double x : g) var += (x - mean) * (x - mean);
    var /= g.size();
    CHECK(std::abs(mean) < 0.03);
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("two tones land on their bins") {
    // both tones on exact bins: all energy in two conjugate pairs
    std::vector<double> s = gen_two_tone(16000.0, 1000.0, 3000.0, 1.0, 0.5, 16);
    Spectrum sp = dft(s);
    for (int k = 0; k < 16; ++k) {
        double mag = std::abs(sp.bins[k]);
        if (k == 1 || k == 15) CHECK(mag == doctest::Approx(8.0).epsilon(1e-9));
        else if (k == 3 || k == 13) CHECK(mag == doctest::Approx(4.0).epsilon(1e-9));
        else CHECK(mag < 1e-9);
    }

    std::vector<double> zero = gen_two_tone(16000.0, 1000.0, 3000.0, 0.0, 0.0, 16);
    for (double x : zero) CHECK(x == 0.0);

    CHECK_THROWS_AS(gen_two_tone(16000.0, 8000.0, 100.0, 1.0, 1.0, 16), ConfigError);
    CHECK_THROWS_AS(gen_two_tone(16000.0, 100.0, 9000.0, 1.0, 1.0, 16), ConfigError);
    CHECK_THROWS_AS(gen_two_tone(16000.0, -5.0, 100.0, 1.0, 1.0, 16), ConfigError);
}

TEST_CASE("reference two-tone frame shows two dominant conjugate peak regions") {
    std::vector<double> s = gen_two_tone(16000.0, 3000.0, 4300.0, 1.0, 1.0, 256);
    Spectrum sp = dft(s);
    // top two bins of the first half sit at the tone locations
    int best = 1, second = 1;
    double mb = -1.0, ms = -1.0;
    for (int k = 1; k < 128; ++k) {
        double mag = std::abs(sp.bins[k]);
        if (mag > mb) {
            second = best;
            ms = mb;
            best = k;
            mb = mag;
        } else if (mag > ms) {
            second = k;
            ms = mag;
        }
    }
    int lo = std::min(best, second), hi = std::max(best, second);
    CHECK(std::abs(lo - 48) <= 1);   // 3000 Hz: bin 48 exactly
    CHECK(std::abs(hi - 69) <= 1);   // 4300 Hz: between bins 68 and 69
    // conjugate mirrors carry the same magnitude
    CHECK(std::abs(sp.bins[256 - best]) == doctest::Approx(mb).epsilon(1e-12));
    CHECK(std::abs(sp.bins[256 - second]) == doctest::Approx(ms).epsilon(1e-12));
}

TEST_CASE("harmonic stack puts decaying peaks on the partial bins") {
    // 125 Hz lands on bin 2 at this grid, partial k on bin 2k
    std::vector<double> s = gen_harmonic(16000.0, 125.0, 10, 0.8, 256);
    Spectrum sp = dft(s);
    for (int k = 1; k <= 10; ++k)
        CHECK(std::abs(sp.bins[2 * k]) ==
              doctest::Approx(128.0 * std::pow(0.8, k - 1)).epsilon(1e-9));
    CHECK(std::abs(sp.bins[3]) < 1e-9);
    CHECK(std::abs(sp.bins[25]) < 1e-9);

    // one partial is a plain tone; decay 0 keeps only the fundamental
    std::vector<double> one = gen_harmonic(16000.0, 440.0, 1, 0.5, 64);
    std::vector<double> tone = gen_two_tone(16000.0, 440.0, 0.0, 1.0, 0.0, 64);
    for (int i = 0; i < 64; ++i) CHECK(one[i] == doctest::Approx(tone[i]).epsilon(1e-15));
    std::vector<double> flat = gen_harmonic(16000.0, 440.0, 5, 0.0, 64);
    for (int i = 0; i < 64; ++i) CHECK(flat[i] == doctest::Approx(tone[i]).epsilon(1e-15));

    CHECK_THROWS_AS(gen_harmonic(16000.0, 125.0, 0, 0.8, 64), ConfigError);
    CHECK_THROWS_AS(gen_harmonic(16000.0, 2500.0, 4, 0.8, 64), ConfigError);
}

TEST_CASE("vowel surrogate is deterministic and lives in the envelope windows") {
    SignalRecipe r = vowel_surrogate(16000.0, 512);
    CHECK(r.kind == SignalRecipe::Kind::harmonic);
    CHECK(r.f0 == 137.5);
    CHECK(r.partials == 8);
    CHECK(r.decay == 0.8);
    CHECK(r.phase_step == 0.7);
    CHECK(r.env_center == 64.0);
    CHECK(r.env_width == 16.0);
    CHECK(r.env_period == 256);

    std::vector<double> a = render(r);
    std::vector<double> b = render(r);
    REQUIRE(a.size() == 512);
    for (int i = 0; i < 512; ++i) CHECK(a[i] == b[i]);

    // energy sits in the first half of each 256-frame
    double inside = 0.0, total = 0.0;
    for (int i = 0; i < 512; ++i) {
        total += a[i] * a[i];
        if (i % 256 < 128) inside += a[i] * a[i];
    }
    CHECK(total > 0.0);
    CHECK(inside / total > 0.95);
}

TEST_CASE("phase steps change the waveform but not the partial energies") {
    SignalRecipe r = vowel_surrogate(16000.0, 256);
    r.env_width = 0.0;  // bare harmonic stack
    SignalRecipe r0 = r;
    r0.phase_step = 0.0;
    std::vector<double> with = render(r);
    std::vector<double> without = render(r0);
    double diff = 0.0;
    for (int i = 0; i < 256; ++i) diff = std::max(diff, std::abs(with[i] - without[i]));
    CHECK(diff > 0.1);

    // zero phase step reduces to the five-argument generator
    std::vector<double> plain = gen_harmonic(16000.0, r.f0, r.partials, r.decay, 256);
    for (int i = 0; i < 256; ++i) CHECK(without[i] == doctest::Approx(plain[i]).epsilon(1e-12));
}

TEST_CASE("noise burst is deterministic, windowed and high-passed") {
    SignalRecipe r = consonant_surrogate(16000.0, 512);
    CHECK(r.kind == SignalRecipe::Kind::noise_burst);
    CHECK(r.hp_alpha == 0.9);
    CHECK(r.onset == 32);
    CHECK(r.duration == 192);
    CHECK(r.env_period == 256);
    CHECK(r.burst_seed == 11);

    std::vector<double> a = render(r);
    std::vector<double> b = render(r);
    for (int i = 0; i < 512; ++i) CHECK(a[i] == b[i]);
    for (int i = 0; i < 512; ++i) {
        int p = i % 256;
        if (p < 32 || p >= 224) CHECK(a[i] == 0.0);
    }
    double peak = 0.0;
    for (double x : a) peak = std::max(peak, std::abs(x));
    CHECK(peak > 0.1);

    // the single-pole high-pass suppresses the lowest bins
    Spectrum sp = dft(a);
    double low = std::abs(sp.bins[1]) + std::abs(sp.bins[2]);
    double high = std::abs(sp.bins[200]) + std::abs(sp.bins[220]);
    CHECK(low < high);

    SignalRecipe bad = r;
    bad.hp_alpha = 1.0;
    CHECK_THROWS_AS(render(bad), ConfigError);
    bad = r;
    bad.onset = 128;
    bad.duration = 192;
    CHECK_THROWS_AS(render(bad), ConfigError);
    bad = r;
    bad.duration = 0;
    CHECK_THROWS_AS(render(bad), ConfigError);
}

TEST_CASE("file-backed recipes slice at the offset and refuse padding") {
    std::string csv = scratch("slice.csv").string();
    std::string body;
    for (int i = 0; i < 10; ++i) body += format_g17(i * 0.5) + "\n";
    atomic_write(csv, body);

    SignalRecipe r;
    r.kind = SignalRecipe::Kind::csv_slice;
    r.path = csv;
    r.n = 4;
    r.offset = 2;
    std::vector<double> s = render(r);
    REQUIRE(s.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(s[i] == doctest::Approx((i + 2) * 0.5).epsilon(1e-15));

    r.offset = 7;
    CHECK_THROWS_AS(render(r), IoError);  // 7 + 4 > 10, no zero padding
    r.offset = -1;
    CHECK_THROWS_AS(render(r), ConfigError);

    Wav w;
    w.fs = 16000.0;
    w.samples = {0.0, 0.25, -0.25, 0.5, -0.5, 0.75};
    std::string wav = scratch("slice.wav").string();
    write_wav(wav, w);
    SignalRecipe rw;
    rw.kind = SignalRecipe::Kind::wav_slice;
    rw.path = wav;
    rw.n = 4;
    rw.offset = 1;
    std::vector<double> sw = render(rw);
    REQUIRE(sw.size() == 4);
    CHECK(sw[0] == doctest::Approx(0.25).epsilon(1e-4));
    CHECK(sw[3] == doctest::Approx(-0.5).epsilon(1e-4));

    SignalRecipe not_file;
    not_file.kind = SignalRecipe::Kind::two_tone;
    CHECK_THROWS_AS(load_signal(not_file), ConfigError);
}

TEST_CASE("rendering rejects odd or tiny frame counts") {
    SignalRecipe r;
    r.n = 5;
    CHECK_THROWS_AS(render(r), ConfigError);
    r.n = 0;
    CHECK_THROWS_AS(render(r), ConfigError);
}
