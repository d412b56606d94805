import numpy as np
import pytest

import odat


def test_version_and_generator():
    assert odat.__version__
    assert odat.generator_id == "mt19937_64-boxmuller-v1"


def test_dft_matches_numpy():
    rng = np.random.default_rng(3)
    s = rng.standard_normal(64)
    got = odat.dft(s)
    want = np.fft.fft(s)
    assert np.max(np.abs(got - want)) < 1e-10
    back = odat.idft(got)
    assert np.max(np.abs(back - s)) < 1e-12


def test_plan_is_unitary_and_invertible():
    plan = odat.make_plan(n=64)
    assert plan.sign_convention == "exp(+iH)"
    assert odat.unitarity_defect(plan.x) < 1e-12
    rng = np.random.default_rng(4)
    s = rng.standard_normal(64)
    bins = odat.forward(plan, s)
    assert np.max(np.abs(odat.inverse(plan, bins) - s)) < 1e-10
    # real input keeps the conjugate mirror structure
    k = np.arange(1, 32)
    assert np.max(np.abs(bins[64 - k] - np.conj(bins[k]))) < 1e-10


def test_propagator_against_numpy_expm():
    h = odat.build_hamiltonian(0.6, 0.04, odat.build_laplacian(7), np.eye(7))
    t = odat.time_one_map(h)
    w, v = np.linalg.eigh(h)
    want = (v * np.exp(1j * w)) @ v.T
    assert np.max(np.abs(t - want)) < 1e-12


def test_sym_eig_matches_numpy():
    a = odat.build_laplacian(12)
    w, v = odat.sym_eig(a)
    assert np.max(np.abs(w - np.linalg.eigvalsh(a))) < 1e-12
    assert np.max(np.abs(v @ np.diag(w) @ v.T - a)) < 1e-11


def test_auditory_curves():
    assert odat.hz_to_bark(1000.0) == pytest.approx(8.510531510721993, abs=1e-14)
    grid = odat.make_bin_grid(16000.0, 64)
    assert grid.freqs[0] == pytest.approx(250.0)
    vmat = odat.build_spreading_matrix(grid)
    assert np.max(np.abs(vmat - vmat.T)) == 0.0


def test_signal_recipes():
    s = odat.gen_two_tone(16000.0, 1000.0, 3000.0, 1.0, 0.5, 16)
    mags = np.abs(np.fft.fft(s))
    assert mags[1] == pytest.approx(8.0, abs=1e-9)
    assert mags[3] == pytest.approx(4.0, abs=1e-9)

    r = odat.SignalRecipe()
    r.kind = "harmonic"
    r.n = 64
    assert odat.render(r).shape == (64,)
    with pytest.raises(ValueError):
        r.kind = "whale_song"

    vowel = odat.vowel_surrogate(16000.0, 512)
    assert vowel.kind == "harmonic"
    assert odat.render(vowel).shape == (512,)


def test_noise_is_reproducible_and_exact():
    clean = odat.gen_harmonic(16000.0, 500.0, 3, 0.7, 256)
    a = odat.add_noise(clean, -6.0, 42)
    b = odat.add_noise(clean, -6.0, 42)
    assert np.array_equal(a, b)
    realized = odat.snr_db(clean, a)
    assert realized == pytest.approx(-6.0, abs=1e-12)


def test_denoise_and_sweep():
    plan = odat.make_plan(n=64)
    clean = np.asarray(odat.render(odat.vowel_surrogate(16000.0, 128)))
    noisy = odat.add_noise(clean, 0.0, 7)
    est, tau, kept = odat.denoise_segment(noisy, plan, "odat")
    assert est.shape == (128,)
    assert tau > 0.0 and 0 < kept < 128
    reports = odat.sweep(clean, plan, [-6.0, 0.0], [1, 2, 3])
    assert len(reports) == 6
    assert reports[0].input_snr_db == -6.0
    assert np.isfinite(reports[0].output_snr_db_odat)


def test_error_taxonomy():
    with pytest.raises(ValueError):
        odat.make_plan(n=7)
    with pytest.raises(ValueError):
        odat.gen_two_tone(16000.0, 9000.0, 1000.0, 1.0, 1.0, 64)
    with pytest.raises(ValueError):
        odat.snr_db(np.zeros(4), np.zeros(4))
