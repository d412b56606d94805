"""Orthogonal auditory transform: unitary spectral analysis with a
dispersive propagator on the interior frequency bins, plus a matched
threshold denoiser for comparing it against the plain transform."""

from odat._core import (
    BinGrid,
    ConfigError,
    DenoiseReport,
    IoError,
    NumericalError,
    SignalRecipe,
    TransformPlan,
    __version__,
    add_noise,
    build_hamiltonian,
    build_laplacian,
    build_spreading_matrix,
    compute_kernel,
    compute_threshold,
    consonant_surrogate,
    denoise,
    denoise_segment,
    dft,
    evolve_ode,
    forward,
    gaussians,
    gen_harmonic,
    gen_two_tone,
    generator_id,
    hz_to_bark,
    idft,
    inverse,
    make_bin_grid,
    make_plan,
    mix_seed,
    render,
    snr_db,
    splitmix64,
    spreading_db,
    spreading_metric,
    sweep,
    sym_eig,
    time_one_map,
    unitarity_defect,
    vowel_surrogate,
)

__all__ = [
    "BinGrid",
    "ConfigError",
    "DenoiseReport",
    "IoError",
    "NumericalError",
    "SignalRecipe",
    "TransformPlan",
    "__version__",
    "add_noise",
    "build_hamiltonian",
    "build_laplacian",
    "build_spreading_matrix",
    "compute_kernel",
    "compute_threshold",
    "consonant_surrogate",
    "denoise",
    "denoise_segment",
    "dft",
    "evolve_ode",
    "forward",
    "gaussians",
    "gen_harmonic",
    "gen_two_tone",
    "generator_id",
    "hz_to_bark",
    "idft",
    "inverse",
    "make_bin_grid",
    "make_plan",
    "mix_seed",
    "render",
    "snr_db",
    "splitmix64",
    "spreading_db",
    "spreading_metric",
    "sweep",
    "sym_eig",
    "time_one_map",
    "unitarity_defect",
    "vowel_surrogate",
]
