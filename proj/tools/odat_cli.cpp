#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "odat/harness.hpp"

namespace {

// raw strings on purpose: parse_config owns all value validation, so file
// keys and flag overrides fail with identical messages
struct CommonFlags {
    std::string config, fs, n, sigma1, sigma2, seed, out, branch;
};

void add_common(CLI::App* sub, CommonFlags& c) {
    sub->add_option("--config", c.config, "key=value config file, '#' comments");
    sub->add_option("--fs", c.fs, "sampling rate in Hz");
    sub->add_option("--n", c.n, "transform frame length (even)");
    sub->add_option("--sigma1", c.sigma1, "kinetic weight of the propagator");
    sub->add_option("--sigma2", c.sigma2, "spreading-potential weight");
    sub->add_option("--seed", c.seed, "base seed for the sweep");
    sub->add_option("--out", c.out, "artifact directory");
    sub->add_option("--branch", c.branch, "dft, odat or both");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal auditory transform workbench"};
    app.require_subcommand(1);
    CommonFlags c;
    CLI::App* s_spectrum =
        app.add_subcommand("spectrum", "write dft and transform spectra of the configured signal");
    CLI::App* s_sweep =
        app.add_subcommand("denoise-sweep", "threshold denoising across noise levels and seeds");
    CLI::App* s_dump =
        app.add_subcommand("dump-matrices", "write the spreading matrix and the time-one map");
    CLI::App* s_gen = app.add_subcommand("gen", "write the configured signal to csv and wav");
    for (CLI::App* s : {s_spectrum, s_sweep, s_dump, s_gen}) add_common(s, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : odat::kExitConfig;
    }

    CLI::App* sub = app.get_subcommands().front();
    odat::Mode mode = odat::Mode::spectrum;
    if (sub == s_sweep) mode = odat::Mode::denoise_sweep;
    if (sub == s_dump) mode = odat::Mode::dump_matrices;
    if (sub == s_gen) mode = odat::Mode::gen;

    try {
        std::map<std::string, std::string> kv;
        if (sub->count("--config")) kv = odat::read_config_file(c.config);
        auto override_key = [&](const char* flag, const char* key, const std::string& val) {
            if (sub->count(flag)) kv[key] = val;
        };
        override_key("--fs", "fs", c.fs);
        override_key("--n", "n", c.n);
        override_key("--sigma1", "sigma1", c.sigma1);
        override_key("--sigma2", "sigma2", c.sigma2);
        override_key("--seed", "seed", c.seed);
        override_key("--out", "out", c.out);
        override_key("--branch", "branch", c.branch);

        odat::run(mode, odat::parse_config(kv));
        return 0;
    } catch (const odat::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return odat::kExitConfig;
    } catch (const odat::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return odat::kExitIo;
    } catch (const odat::NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return odat::kExitNumerical;
    }
}
