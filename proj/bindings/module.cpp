// Python bindings for the core operations. Matrices cross the boundary as
// copies (numpy arrays); spectra as 1-D complex arrays.
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "odat/auditory.hpp"
#include "odat/denoise.hpp"
#include "odat/eig.hpp"
#include "odat/errors.hpp"
#include "odat/harness.hpp"
#include "odat/propagator.hpp"
#include "odat/signal.hpp"
#include "odat/transform.hpp"

namespace py = pybind11;
using namespace odat;

namespace {

py::array_t<double> mat_to_array(const Mat& m) {
    py::array_t<double> out({m.rows, m.cols});
    std::copy(m.a.begin(), m.a.end(), out.mutable_data());
    return out;
}

py::array_t<cxd> cmat_to_array(const CMat& m) {
    py::array_t<cxd> out({m.rows, m.cols});
    std::copy(m.a.begin(), m.a.end(), out.mutable_data());
    return out;
}

Mat array_to_mat(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw ConfigError("expected a 2-D real array");
    Mat m(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)));
    std::copy(a.data(), a.data() + a.size(), m.a.begin());
    return m;
}

CMat array_to_cmat(const py::array_t<cxd, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw ConfigError("expected a 2-D complex array");
    CMat m(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)));
    std::copy(a.data(), a.data() + a.size(), m.a.begin());
    return m;
}

std::vector<double> to_vec(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw ConfigError("expected a 1-D real array");
    return std::vector<double>(a.data(), a.data() + a.size());
}

std::vector<cxd> to_cvec(const py::array_t<cxd, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw ConfigError("expected a 1-D complex array");
    return std::vector<cxd>(a.data(), a.data() + a.size());
}

py::array_t<double> vec_to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::array_t<cxd> cvec_to_array(const std::vector<cxd>& v) {
    py::array_t<cxd> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

Branch parse_branch(const std::string& name) {
    if (name == "dft") return Branch::dft;
    if (name == "odat") return Branch::odat;
    throw ConfigError("branch must be 'dft' or 'odat', got '" + name + "'");
}

const char* kind_name(SignalRecipe::Kind k) {
    switch (k) {
        case SignalRecipe::Kind::two_tone: return "two_tone";
        case SignalRecipe::Kind::harmonic: return "harmonic";
        case SignalRecipe::Kind::noise_burst: return "noise_burst";
        case SignalRecipe::Kind::wav_slice: return "wav_slice";
        case SignalRecipe::Kind::csv_slice: return "csv_slice";
    }
    return "two_tone";
}

SignalRecipe::Kind parse_kind(const std::string& name) {
    if (name == "two_tone") return SignalRecipe::Kind::two_tone;
    if (name == "harmonic") return SignalRecipe::Kind::harmonic;
    if (name == "noise_burst") return SignalRecipe::Kind::noise_burst;
    if (name == "wav_slice") return SignalRecipe::Kind::wav_slice;
    if (name == "csv_slice") return SignalRecipe::Kind::csv_slice;
    throw ConfigError("unknown signal kind '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "orthogonal auditory transform core";
    m.attr("__version__") = kVersion;
    m.attr("generator_id") = kGeneratorId;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<BinGrid>(m, "BinGrid")
        .def_readonly("fs", &BinGrid::fs)
        .def_readonly("n", &BinGrid::n)
        .def_property_readonly("freqs", [](const BinGrid& g) { return vec_to_array(g.freqs); });

    m.def("make_bin_grid", &make_bin_grid, py::arg("fs"), py::arg("n"));
    m.def("hz_to_bark", &hz_to_bark, py::arg("f"));
    m.def("spreading_db", &spreading_db, py::arg("b_from"), py::arg("b_to"));
    m.def("build_spreading_matrix",
          [](const BinGrid& g) { return mat_to_array(build_spreading_matrix(g)); },
          py::arg("grid"));
    m.def("build_laplacian", [](int order) { return mat_to_array(build_laplacian(order)); },
          py::arg("order"));
    m.def("build_hamiltonian",
          [](double sigma1, double sigma2, const py::array_t<double>& a,
             const py::array_t<double>& b) {
              return mat_to_array(
                  build_hamiltonian(PropagatorConfig{sigma1, sigma2}, array_to_mat(a),
                                    array_to_mat(b)));
          },
          py::arg("sigma1"), py::arg("sigma2"), py::arg("a"), py::arg("b"));

    m.def("sym_eig",
          [](const py::array_t<double>& h) {
              SymEig e = sym_eig(array_to_mat(h));
              return py::make_tuple(vec_to_array(e.w), mat_to_array(e.v));
          },
          py::arg("h"), "eigenvalues ascending, eigenvectors as columns");

    m.def("time_one_map",
          [](const py::array_t<double>& h) { return cmat_to_array(time_one_map(array_to_mat(h))); },
          py::arg("h"));
    m.def("evolve_ode",
          [](const py::array_t<double>& h, const py::array_t<cxd>& u0, double t, double dt) {
              return cvec_to_array(evolve_ode(array_to_mat(h), to_cvec(u0), t, dt));
          },
          py::arg("h"), py::arg("u0"), py::arg("t"), py::arg("dt"));
    m.def("spreading_metric",
          [](const py::array_t<cxd>& t) { return spreading_metric(array_to_cmat(t)); },
          py::arg("t"));
    m.def("unitarity_defect",
          [](const py::array_t<cxd>& t) { return unitarity_defect(array_to_cmat(t)); },
          py::arg("t"));

    py::class_<TransformPlan>(m, "TransformPlan")
        .def_readonly("n", &TransformPlan::n)
        .def_readonly("fs", &TransformPlan::fs)
        .def_readonly("metric", &TransformPlan::metric)
        .def_readonly("sign_convention", &TransformPlan::sign_convention)
        .def_property_readonly("sigma1",
                               [](const TransformPlan& p) { return p.cfg.sigma1; })
        .def_property_readonly("sigma2",
                               [](const TransformPlan& p) { return p.cfg.sigma2; })
        .def_property_readonly("tw", [](const TransformPlan& p) { return cmat_to_array(p.tw); })
        .def_property_readonly("x", [](const TransformPlan& p) { return cmat_to_array(p.x); });

    m.def("make_plan",
          [](int n, double fs, double sigma1, double sigma2) {
              return make_plan(n, fs, PropagatorConfig{sigma1, sigma2});
          },
          py::arg("n") = 256, py::arg("fs") = 16000.0, py::arg("sigma1") = 0.6,
          py::arg("sigma2") = 0.04);

    m.def("dft", [](const py::array_t<double>& s) { return cvec_to_array(dft(to_vec(s)).bins); },
          py::arg("frame"));
    m.def("idft",
          [](const py::array_t<cxd>& bins) {
              return vec_to_array(idft(Spectrum{to_cvec(bins), Domain::dft}));
          },
          py::arg("bins"));
    m.def("forward",
          [](const TransformPlan& plan, const py::array_t<double>& s) {
              return cvec_to_array(forward(plan, to_vec(s)).bins);
          },
          py::arg("plan"), py::arg("frame"));
    m.def("inverse",
          [](const TransformPlan& plan, const py::array_t<cxd>& bins) {
              return vec_to_array(inverse(plan, Spectrum{to_cvec(bins), Domain::odat}));
          },
          py::arg("plan"), py::arg("bins"));
    m.def("compute_kernel", &compute_kernel, py::arg("plan"), py::arg("l"), py::arg("m"));

    py::class_<SignalRecipe>(m, "SignalRecipe")
        .def(py::init<>())
        .def_property("kind",
                      [](const SignalRecipe& r) { return std::string(kind_name(r.kind)); },
                      [](SignalRecipe& r, const std::string& k) { r.kind = parse_kind(k); })
        .def_readwrite("fs", &SignalRecipe::fs)
        .def_readwrite("n", &SignalRecipe::n)
        .def_readwrite("f1", &SignalRecipe::f1)
        .def_readwrite("f2", &SignalRecipe::f2)
        .def_readwrite("a1", &SignalRecipe::a1)
        .def_readwrite("a2", &SignalRecipe::a2)
        .def_readwrite("f0", &SignalRecipe::f0)
        .def_readwrite("partials", &SignalRecipe::partials)
        .def_readwrite("decay", &SignalRecipe::decay)
        .def_readwrite("phase_step", &SignalRecipe::phase_step)
        .def_readwrite("env_center", &SignalRecipe::env_center)
        .def_readwrite("env_width", &SignalRecipe::env_width)
        .def_readwrite("env_period", &SignalRecipe::env_period)
        .def_readwrite("hp_alpha", &SignalRecipe::hp_alpha)
        .def_readwrite("onset", &SignalRecipe::onset)
        .def_readwrite("duration", &SignalRecipe::duration)
        .def_readwrite("burst_seed", &SignalRecipe::burst_seed)
        .def_readwrite("path", &SignalRecipe::path)
        .def_readwrite("offset", &SignalRecipe::offset);

    m.def("gen_two_tone",
          [](double fs, double f1, double f2, double a1, double a2, int n) {
              return vec_to_array(gen_two_tone(fs, f1, f2, a1, a2, n));
          },
          py::arg("fs"), py::arg("f1"), py::arg("f2"), py::arg("a1"), py::arg("a2"), py::arg("n"));
    m.def("gen_harmonic",
          [](double fs, double f0, int partials, double decay, int n) {
              return vec_to_array(gen_harmonic(fs, f0, partials, decay, n));
          },
          py::arg("fs"), py::arg("f0"), py::arg("partials"), py::arg("decay"), py::arg("n"));
    m.def("render", [](const SignalRecipe& r) { return vec_to_array(render(r)); },
          py::arg("recipe"));
    m.def("vowel_surrogate", &vowel_surrogate, py::arg("fs"), py::arg("segment"));
    m.def("consonant_surrogate", &consonant_surrogate, py::arg("fs"), py::arg("segment"));

    m.def("splitmix64", &splitmix64, py::arg("x"));
    m.def("mix_seed", &mix_seed, py::arg("seed"), py::arg("level_code"));
    m.def("gaussians", [](uint64_t seed, int n) { return vec_to_array(gaussians(seed, n)); },
          py::arg("seed"), py::arg("n"));

    m.def("add_noise",
          [](const py::array_t<double>& clean, double target_snr_db, uint64_t seed) {
              return vec_to_array(add_noise(to_vec(clean), NoiseSpec{target_snr_db, seed}));
          },
          py::arg("clean"), py::arg("target_snr_db"), py::arg("seed"));
    m.def("compute_threshold",
          [](const py::array_t<double>& frame) { return compute_threshold(to_vec(frame)); },
          py::arg("frame"));
    m.def("snr_db",
          [](const py::array_t<double>& ref, const py::array_t<double>& est) {
              return snr_db(to_vec(ref), to_vec(est));
          },
          py::arg("reference"), py::arg("estimate"));
    m.def("denoise",
          [](const py::array_t<double>& noisy, const TransformPlan& plan,
             const std::string& branch) {
              return vec_to_array(denoise(to_vec(noisy), plan, parse_branch(branch)));
          },
          py::arg("noisy"), py::arg("plan"), py::arg("branch"));
    m.def("denoise_segment",
          [](const py::array_t<double>& noisy, const TransformPlan& plan,
             const std::string& branch, bool per_branch_threshold, bool whole_segment) {
              SegmentStats stats;
              std::vector<double> est =
                  denoise_segment(to_vec(noisy), plan, parse_branch(branch),
                                  DenoiseOptions{per_branch_threshold, whole_segment}, &stats);
              return py::make_tuple(vec_to_array(est), stats.tau_mean, stats.bins_kept);
          },
          py::arg("noisy"), py::arg("plan"), py::arg("branch"),
          py::arg("per_branch_threshold") = false, py::arg("whole_segment") = false,
          "returns (estimate, tau_mean, bins_kept)");

    py::class_<DenoiseReport>(m, "DenoiseReport")
        .def_readonly("input_snr_db", &DenoiseReport::input_snr_db)
        .def_readonly("output_snr_db_odat", &DenoiseReport::output_snr_db_odat)
        .def_readonly("output_snr_db_dft", &DenoiseReport::output_snr_db_dft)
        .def_readonly("threshold_value", &DenoiseReport::threshold_value)
        .def_readonly("bins_kept_odat", &DenoiseReport::bins_kept_odat)
        .def_readonly("bins_kept_dft", &DenoiseReport::bins_kept_dft)
        .def_readonly("seed", &DenoiseReport::seed)
        .def("__repr__", [](const DenoiseReport& r) {
            return "DenoiseReport(input_snr_db=" + std::to_string(r.input_snr_db) +
                   ", seed=" + std::to_string(r.seed) + ")";
        });

    m.def("sweep",
          [](const py::array_t<double>& clean, const TransformPlan& plan,
             const std::vector<double>& snrs_db, const std::vector<uint64_t>& seeds,
             bool per_branch_threshold, bool whole_segment) {
              return sweep(to_vec(clean), plan, snrs_db, seeds,
                           DenoiseOptions{per_branch_threshold, whole_segment});
          },
          py::arg("clean"), py::arg("plan"), py::arg("snrs_db"), py::arg("seeds"),
          py::arg("per_branch_threshold") = false, py::arg("whole_segment") = false);
}
