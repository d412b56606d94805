#include "odat/harness.hpp"

#include <cerrno>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "odat/auditory.hpp"
#include "odat/io.hpp"

namespace odat {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& val) {
    const char* s = val.c_str();
    char* end = nullptr;
    errno = 0;
    double x = std::strtod(s, &end);
    if (end == s || *end != '\0' || errno == ERANGE)
        throw ConfigError("config: bad number for " + key + ": '" + val + "'");
    return x;
}

int parse_int(const std::string& key, const std::string& val) {
    const char* s = val.c_str();
    char* end = nullptr;
    errno = 0;
    long long x = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0' || errno == ERANGE || x < INT_MIN || x > INT_MAX)
        throw ConfigError("config: bad integer for " + key + ": '" + val + "'");
    return static_cast<int>(x);
}

uint64_t parse_u64(const std::string& key, const std::string& val) {
    const char* s = val.c_str();
    if (*s == '-') throw ConfigError("config: " + key + " must be nonnegative: '" + val + "'");
    char* end = nullptr;
    errno = 0;
    unsigned long long x = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || errno == ERANGE)
        throw ConfigError("config: bad integer for " + key + ": '" + val + "'");
    return static_cast<uint64_t>(x);
}

const char* kind_name(SignalRecipe::Kind kind) {
    switch (kind) {
        case SignalRecipe::Kind::two_tone: return "two_tone";
        case SignalRecipe::Kind::harmonic: return "harmonic";
        case SignalRecipe::Kind::noise_burst: return "noise_burst";
        case SignalRecipe::Kind::wav_slice: return "wav_slice";
        case SignalRecipe::Kind::csv_slice: return "csv_slice";
    }
    return "?";
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

// JSON has no infinities; the +inf SNR sentinel becomes null
std::string jnum(double x) {
    return std::isfinite(x) ? format_g17(x) : std::string("null");
}

std::string jstr(const std::string& s) { return '"' + json_escape(s) + '"'; }

// Fixed key order and 17-significant-digit numbers keep sidecars byte-stable
// across runs; this writer exists because the artifact contract pins the
// number format, which generic serializers do not.
std::string sidecar_json(Mode mode, const RunConfig& cfg) {
    const SignalRecipe& r = cfg.recipe;
    std::ostringstream os;
    os << "{\n";
    auto put = [&os](const char* key, const std::string& val, bool last = false) {
        os << "  \"" << key << "\": " << val << (last ? "\n" : ",\n");
    };
    put("version", jstr(kVersion));
    put("generator", jstr(kGeneratorId));
    put("sign_convention", jstr("exp(+iH)"));
    put("mode", jstr(mode_name(mode)));
    put("out", jstr(cfg.out_dir));
    put("branch", jstr(branch_name(cfg.branch)));
    put("fs", jnum(cfg.fs));
    put("n", std::to_string(cfg.n));
    put("sigma1", jnum(cfg.prop.sigma1));
    put("sigma2", jnum(cfg.prop.sigma2));
    put("sweep_start", jnum(cfg.sweep_start));
    put("sweep_stop", jnum(cfg.sweep_stop));
    put("sweep_step", jnum(cfg.sweep_step));
    put("seeds", std::to_string(cfg.seeds));
    put("seed", std::to_string(cfg.seed));
    put("segment", std::to_string(cfg.segment));
    put("frame", jstr(cfg.whole_segment ? "whole" : "split"));
    put("threshold", jstr(cfg.per_branch_threshold ? "per_branch" : "shared"));
    put("signal", jstr(cfg.signal));
    put("kind", jstr(kind_name(r.kind)));
    put("f1", jnum(r.f1));
    put("f2", jnum(r.f2));
    put("a1", jnum(r.a1));
    put("a2", jnum(r.a2));
    put("f0", jnum(r.f0));
    put("partials", std::to_string(r.partials));
    put("decay", jnum(r.decay));
    put("phase_step", jnum(r.phase_step));
    put("env_center", jnum(r.env_center));
    put("env_width", jnum(r.env_width));
    put("env_period", std::to_string(r.env_period));
    put("hp_alpha", jnum(r.hp_alpha));
    put("onset", std::to_string(r.onset));
    put("duration", std::to_string(r.duration));
    put("burst_seed", std::to_string(r.burst_seed));
    put("path", jstr(r.path));
    put("offset", std::to_string(r.offset));
    put("note", jstr("sampling rate and surrogate recipes are repository defaults, "
                     "not reference material"),
        true);
    os << "}\n";
    return os.str();
}

struct Emitter {
    Mode mode;
    const RunConfig& cfg;
    std::ostream& log;

    void write(const std::string& path, const std::string& contents,
               const std::string& summary) const {
        atomic_write(path, contents);
        atomic_write(path + ".meta.json", sidecar_json(mode, cfg));
        log << "wrote " << path << " (" << summary << ")\n";
    }

    void write_audio(const std::string& path, const Wav& wav) const {
        write_wav(path, wav);
        atomic_write(path + ".meta.json", sidecar_json(mode, cfg));
        log << "wrote " << path << " (" << wav.samples.size() << " samples)\n";
    }
};

std::string spectrum_csv(const Spectrum& spec, double fs) {
    std::ostringstream os;
    os << "bin_index,freq_hz,re,im,magnitude,log10_magnitude\n";
    int n = static_cast<int>(spec.bins.size());
    for (int k = 0; k < n; ++k) {
        double mag = std::abs(spec.bins[k]);
        os << k << ',' << format_g17(k * fs / n) << ',' << format_g17(spec.bins[k].real()) << ','
           << format_g17(spec.bins[k].imag()) << ',' << format_g17(mag) << ','
           << format_g17(std::log10(mag)) << '\n';
    }
    return os.str();
}

std::string matrix_csv(int rows, int cols, const std::function<double(int, int)>& at) {
    std::ostringstream os;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c) os << ',';
            os << format_e17(at(r, c));
        }
        os << '\n';
    }
    return os.str();
}

std::vector<double> sweep_levels(const RunConfig& cfg) {
    if (cfg.sweep_step <= 0.0) throw ConfigError("config: sweep_step must be positive");
    if (cfg.sweep_stop < cfg.sweep_start)
        throw ConfigError("config: sweep_stop is below sweep_start");
    int count =
        static_cast<int>(std::floor((cfg.sweep_stop - cfg.sweep_start) / cfg.sweep_step + 1e-9)) +
        1;
    std::vector<double> levels(count);
    for (int i = 0; i < count; ++i) levels[i] = cfg.sweep_start + i * cfg.sweep_step;
    return levels;
}

std::string report_json(const DenoiseReport& r) {
    std::ostringstream os;
    os << "{\"input_snr_db\": " << jnum(r.input_snr_db)
       << ", \"output_snr_db_odat\": " << jnum(r.output_snr_db_odat)
       << ", \"output_snr_db_dft\": " << jnum(r.output_snr_db_dft)
       << ", \"threshold_value\": " << jnum(r.threshold_value)
       << ", \"bins_kept_odat\": " << r.bins_kept_odat
       << ", \"bins_kept_dft\": " << r.bins_kept_dft << ", \"seed\": " << r.seed << "}";
    return os.str();
}

std::string report_csv_row(const DenoiseReport& r) {
    std::ostringstream os;
    os << format_g17(r.input_snr_db) << ',' << format_g17(r.output_snr_db_odat) << ','
       << format_g17(r.output_snr_db_dft) << ',' << format_g17(r.threshold_value) << ','
       << r.bins_kept_odat << ',' << r.bins_kept_dft << ',' << r.seed << '\n';
    return os.str();
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("config: cannot open " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) + ": empty key");
        if (!kv.emplace(key, val).second)
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) + ": duplicate key '" +
                              key + "'");
    }
    return kv;
}

RunConfig parse_config(const std::map<std::string, std::string>& kv) {
    static const char* known[] = {
        "fs",         "n",          "sigma1",     "sigma2",    "sweep_start", "sweep_stop",
        "sweep_step", "seeds",      "seed",       "segment",   "frame",       "threshold",
        "out",        "branch",     "signal",     "f1",        "f2",          "a1",
        "a2",         "f0",         "partials",   "decay",     "phase_step",  "env_center",
        "env_width",  "env_period", "hp_alpha",   "onset",     "duration",    "burst_seed",
        "path",       "offset"};
    for (const auto& [key, val] : kv) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError("config: unknown key '" + key + "'");
    }

    RunConfig cfg;
    auto get = [&kv](const char* key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };

    if (auto* v = get("fs")) cfg.fs = parse_double("fs", *v);
    if (auto* v = get("n")) cfg.n = parse_int("n", *v);
    if (auto* v = get("sigma1")) cfg.prop.sigma1 = parse_double("sigma1", *v);
    if (auto* v = get("sigma2")) cfg.prop.sigma2 = parse_double("sigma2", *v);
    if (auto* v = get("sweep_start")) cfg.sweep_start = parse_double("sweep_start", *v);
    if (auto* v = get("sweep_stop")) cfg.sweep_stop = parse_double("sweep_stop", *v);
    if (auto* v = get("sweep_step")) cfg.sweep_step = parse_double("sweep_step", *v);
    if (auto* v = get("seeds")) cfg.seeds = parse_int("seeds", *v);
    if (auto* v = get("seed")) cfg.seed = parse_u64("seed", *v);
    if (auto* v = get("segment")) cfg.segment = parse_int("segment", *v);
    if (auto* v = get("out")) cfg.out_dir = *v;

    if (cfg.fs <= 0.0) throw ConfigError("config: fs must be positive");
    if (cfg.n < 2 || cfg.n % 2) throw ConfigError("config: n must be even and at least 2");
    if (cfg.seeds < 1) throw ConfigError("config: seeds must be at least 1");
    if (cfg.segment < 2 || cfg.segment % 2)
        throw ConfigError("config: segment must be even and at least 2");
    if (cfg.out_dir.empty()) throw ConfigError("config: out must not be empty");

    if (auto* v = get("frame")) {
        if (*v == "split") cfg.whole_segment = false;
        else if (*v == "whole") cfg.whole_segment = true;
        else throw ConfigError("config: frame must be split or whole, got '" + *v + "'");
    }
    if (auto* v = get("threshold")) {
        if (*v == "shared") cfg.per_branch_threshold = false;
        else if (*v == "per_branch") cfg.per_branch_threshold = true;
        else throw ConfigError("config: threshold must be shared or per_branch, got '" + *v + "'");
    }
    if (auto* v = get("branch")) {
        if (*v == "dft") cfg.branch = BranchSelect::dft;
        else if (*v == "odat") cfg.branch = BranchSelect::odat;
        else if (*v == "both") cfg.branch = BranchSelect::both;
        else throw ConfigError("config: branch must be dft, odat or both, got '" + *v + "'");
    }

    // presets first, explicit parameter keys second, whatever the file order
    if (auto* v = get("signal")) cfg.signal = *v;
    if (cfg.signal == "vowel") {
        cfg.recipe = vowel_surrogate(cfg.fs, cfg.segment);
    } else if (cfg.signal == "consonant") {
        cfg.recipe = consonant_surrogate(cfg.fs, cfg.segment);
    } else if (cfg.signal == "two_tone") {
        cfg.recipe.kind = SignalRecipe::Kind::two_tone;
    } else if (cfg.signal == "harmonic") {
        cfg.recipe.kind = SignalRecipe::Kind::harmonic;
    } else if (cfg.signal == "noise_burst") {
        cfg.recipe.kind = SignalRecipe::Kind::noise_burst;
    } else if (cfg.signal == "wav_slice") {
        cfg.recipe.kind = SignalRecipe::Kind::wav_slice;
    } else if (cfg.signal == "csv_slice") {
        cfg.recipe.kind = SignalRecipe::Kind::csv_slice;
    } else {
        throw ConfigError("config: unknown signal '" + cfg.signal + "'");
    }

    if (auto* v = get("f1")) cfg.recipe.f1 = parse_double("f1", *v);
    if (auto* v = get("f2")) cfg.recipe.f2 = parse_double("f2", *v);
    if (auto* v = get("a1")) cfg.recipe.a1 = parse_double("a1", *v);
    if (auto* v = get("a2")) cfg.recipe.a2 = parse_double("a2", *v);
    if (auto* v = get("f0")) cfg.recipe.f0 = parse_double("f0", *v);
    if (auto* v = get("partials")) cfg.recipe.partials = parse_int("partials", *v);
    if (auto* v = get("decay")) cfg.recipe.decay = parse_double("decay", *v);
    if (auto* v = get("phase_step")) cfg.recipe.phase_step = parse_double("phase_step", *v);
    if (auto* v = get("env_center")) cfg.recipe.env_center = parse_double("env_center", *v);
    if (auto* v = get("env_width")) cfg.recipe.env_width = parse_double("env_width", *v);
    if (auto* v = get("env_period")) cfg.recipe.env_period = parse_int("env_period", *v);
    if (auto* v = get("hp_alpha")) cfg.recipe.hp_alpha = parse_double("hp_alpha", *v);
    if (auto* v = get("onset")) cfg.recipe.onset = parse_int("onset", *v);
    if (auto* v = get("duration")) cfg.recipe.duration = parse_int("duration", *v);
    if (auto* v = get("burst_seed")) cfg.recipe.burst_seed = parse_u64("burst_seed", *v);
    if (auto* v = get("path")) cfg.recipe.path = *v;
    if (auto* v = get("offset")) cfg.recipe.offset = parse_int("offset", *v);

    if ((cfg.recipe.kind == SignalRecipe::Kind::wav_slice ||
         cfg.recipe.kind == SignalRecipe::Kind::csv_slice) &&
        cfg.recipe.path.empty())
        throw ConfigError("config: " + cfg.signal + " needs path=");

    return cfg;
}

SignalRecipe resolved_recipe(const RunConfig& cfg, int length) {
    SignalRecipe r = cfg.recipe;
    r.fs = cfg.fs;
    r.n = length;
    return r;
}

const char* mode_name(Mode mode) {
    switch (mode) {
        case Mode::spectrum: return "spectrum";
        case Mode::denoise_sweep: return "denoise-sweep";
        case Mode::dump_matrices: return "dump-matrices";
        case Mode::gen: return "gen";
    }
    return "?";
}

const char* branch_name(BranchSelect branch) {
    switch (branch) {
        case BranchSelect::dft: return "dft";
        case BranchSelect::odat: return "odat";
        case BranchSelect::both: return "both";
    }
    return "?";
}

void run(Mode mode, const RunConfig& cfg, std::ostream& log) {
    namespace sfs = std::filesystem;
    Emitter emit{mode, cfg, log};
    auto out = [&cfg](const char* name) { return (sfs::path(cfg.out_dir) / name).string(); };

    switch (mode) {
        case Mode::spectrum: {
            std::vector<double> frame = render(resolved_recipe(cfg, cfg.n));
            std::string rows = std::to_string(cfg.n) + " rows";
            if (cfg.branch != BranchSelect::odat)
                emit.write(out("spectrum_dft.csv"), spectrum_csv(dft(frame), cfg.fs), rows);
            if (cfg.branch != BranchSelect::dft) {
                TransformPlan plan = make_plan(cfg.n, cfg.fs, cfg.prop);
                emit.write(out("spectrum_odat.csv"), spectrum_csv(forward(plan, frame), cfg.fs),
                           rows);
            }
            break;
        }

        case Mode::denoise_sweep: {
            std::vector<double> levels = sweep_levels(cfg);  // cheap checks first
            std::vector<uint64_t> seed_list(cfg.seeds);
            std::iota(seed_list.begin(), seed_list.end(), cfg.seed);
            TransformPlan plan =
                make_plan(cfg.whole_segment ? cfg.segment : cfg.n, cfg.fs, cfg.prop);
            std::vector<double> clean = render(resolved_recipe(cfg, cfg.segment));
            DenoiseOptions opts;
            opts.per_branch_threshold = cfg.per_branch_threshold;
            opts.whole_segment = cfg.whole_segment;
            std::vector<DenoiseReport> reports = sweep(clean, plan, levels, seed_list, opts);

            std::ostringstream js;
            js << "[\n";
            for (size_t i = 0; i < reports.size(); ++i)
                js << "  " << report_json(reports[i]) << (i + 1 < reports.size() ? ",\n" : "\n");
            js << "]\n";

            std::ostringstream cs;
            cs << "input_snr_db,output_snr_db_odat,output_snr_db_dft,threshold_value,"
                  "bins_kept_odat,bins_kept_dft,seed\n";
            for (const DenoiseReport& r : reports) cs << report_csv_row(r);

            std::string count = std::to_string(reports.size()) + " reports";
            emit.write(out("sweep_reports.json"), js.str(), count);
            emit.write(out("sweep_table.csv"), cs.str(), count);
            break;
        }

        case Mode::dump_matrices: {
            TransformPlan plan = make_plan(cfg.n, cfg.fs, cfg.prop);
            int nh = cfg.n / 2 - 1;
            Mat a = build_laplacian(nh);
            Mat b = build_spreading_matrix(make_bin_grid(cfg.fs, cfg.n));
            std::string shape = std::to_string(nh) + "x" + std::to_string(nh);
            emit.write(out("laplacian_a.csv"),
                       matrix_csv(nh, nh, [&a](int r, int c) { return a(r, c); }), shape);
            emit.write(out("spreading_b.csv"),
                       matrix_csv(nh, nh, [&b](int r, int c) { return b(r, c); }), shape);
            emit.write(out("tw_re.csv"),
                       matrix_csv(nh, nh, [&plan](int r, int c) { return plan.tw(r, c).real(); }),
                       shape);
            emit.write(out("tw_im.csv"),
                       matrix_csv(nh, nh, [&plan](int r, int c) { return plan.tw(r, c).imag(); }),
                       shape);
            break;
        }

        case Mode::gen: {
            std::vector<double> frame = render(resolved_recipe(cfg, cfg.n));
            std::ostringstream cs;
            for (double x : frame) cs << format_g17(x) << '\n';
            emit.write(out("gen_signal.csv"), cs.str(),
                       std::to_string(frame.size()) + " samples");
            emit.write_audio(out("gen_signal.wav"), Wav{cfg.fs, frame});
            break;
        }
    }
}

}  // namespace odat
