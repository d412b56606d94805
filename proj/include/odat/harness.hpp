#pragma once

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "odat/denoise.hpp"
#include "odat/signal.hpp"
#include "odat/transform.hpp"

namespace odat {

inline constexpr const char* kVersion = "0.1.0";

enum class Mode { spectrum, denoise_sweep, dump_matrices, gen };

enum class BranchSelect { dft, odat, both };

// Fully resolved run description. Defaults are the reference operating point:
// fs 16 kHz, N = 256, (sigma1, sigma2) = (0.6, 0.04), sweep -12:3:+12, 20 seeds.
struct RunConfig {
    double fs = 16000.0;
    int n = 256;
    PropagatorConfig prop;

    double sweep_start = -12.0;
    double sweep_stop = 12.0;
    double sweep_step = 3.0;
    int seeds = 20;
    uint64_t seed = 1;

    // The sweep denoises `segment` samples; frame=split cuts it into
    // length-n frames, frame=whole builds the plan at the segment length.
    int segment = 512;
    bool whole_segment = false;
    bool per_branch_threshold = false;

    std::string out_dir = "out";
    BranchSelect branch = BranchSelect::both;

    // signal names a recipe kind or a tuned preset (vowel, consonant);
    // presets fill recipe's parameters, explicit keys override them.
    std::string signal = "vowel";
    SignalRecipe recipe;
};

// key=value lines, '#' comment lines, blank lines. Duplicate keys and lines
// without '=' are config errors; an unreadable file is an I/O error.
std::map<std::string, std::string> read_config_file(const std::string& path);

// Validates every key, applies `signal` presets before explicit parameter
// keys regardless of file order. Unknown keys and unparseable values are
// config errors.
RunConfig parse_config(const std::map<std::string, std::string>& kv);

// recipe with fs and the mode's frame length stamped in
SignalRecipe resolved_recipe(const RunConfig& cfg, int length);

// Executes one mode, writes artifacts under cfg.out_dir (write-then-rename,
// one summary line each), and pairs every artifact with a .meta.json sidecar
// holding the resolved config. No timestamps anywhere: identical configs
// give byte-identical files.
void run(Mode mode, const RunConfig& cfg, std::ostream& log = std::cout);

const char* mode_name(Mode mode);
const char* branch_name(BranchSelect branch);

}  // namespace odat
