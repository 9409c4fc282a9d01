import numpy as np
import pytest

from qcg8.constructions import exponent_matrix, select_construction
from qcg8.errors import DimensionMismatch, InvalidConfig
from qcg8.pcm import expand
from qcg8.sim import SimConfig, design_rate, minsum_decode, noise_sigma, run_ber


@pytest.fixture(scope="module")
def code_559():
    return expand(exponent_matrix(select_construction(7, 12)), 559)


@pytest.fixture(scope="module")
def small_code():
    # (3, 6)-regular, girth 8 at P = 31
    return expand(np.outer([0, 1, 3], np.arange(6)), 31)


@pytest.mark.parametrize("kwargs", [
    dict(snr_points=[]),
    dict(snr_points=[float("nan")]),
    dict(snr_points=[1.0], max_iterations=0),
    dict(snr_points=[1.0], normalization_factor=0.0),
    dict(snr_points=[1.0], normalization_factor=1.5),
    dict(snr_points=[1.0], target_frame_errors=0),
    dict(snr_points=[1.0], max_frames=0),
    dict(snr_points=[1.0], seed=-1),
])
def test_config_validation(kwargs):
    with pytest.raises(InvalidConfig):
        SimConfig(**kwargs)


def test_noiseless_frame_converges_immediately(code_559):
    cfg = SimConfig([5.0])
    res = minsum_decode(code_559, np.full(code_559.num_cols, 20.0), cfg)
    assert res.converged
    assert res.iterations <= 1
    assert not res.hard.any()


def test_single_flipped_sign_is_corrected(code_559):
    llr = np.full(code_559.num_cols, 8.0)
    llr[1234] = -8.0
    res = minsum_decode(code_559, llr, SimConfig([5.0]))
    assert res.converged
    assert not res.hard.any()
    assert res.iterations >= 1


def test_llr_length_checked(small_code):
    with pytest.raises(DimensionMismatch):
        minsum_decode(small_code, np.ones(5), SimConfig([1.0]))


def test_converged_frames_satisfy_all_checks(small_code):
    rng = np.random.default_rng(3)
    cfg = SimConfig([1.0], max_iterations=30)
    sigma = noise_sigma(1.5, design_rate(small_code))
    seen = 0
    for _ in range(300):
        y = 1.0 + sigma * rng.standard_normal(small_code.num_cols)
        res = minsum_decode(small_code, 2 * y / sigma**2, cfg)
        if res.converged:
            seen += 1
            assert not small_code.syndrome(res.hard).any()
        else:
            assert small_code.syndrome(res.hard).any()
    assert seen > 0


def test_design_rate_and_sigma(code_559):
    assert design_rate(code_559) == pytest.approx(5 / 12)
    assert noise_sigma(0.0, 0.5) == pytest.approx(1.0)


def test_runs_are_reproducible(small_code):
    cfg = SimConfig([1.0, 2.0], target_frame_errors=20, max_frames=300, seed=11)
    a = run_ber(small_code, cfg)
    b = run_ber(small_code, cfg)
    c = run_ber(small_code, cfg, jobs=3)
    assert a == b == c
    assert a.to_csv() == c.to_csv()


def test_different_seed_changes_noise(small_code):
    a = run_ber(small_code, SimConfig([1.0], target_frame_errors=30, seed=1))
    b = run_ber(small_code, SimConfig([1.0], target_frame_errors=30, seed=2))
    assert a.points != b.points


def test_stop_rules(small_code):
    res = run_ber(small_code, SimConfig([0.0, 8.0], target_frame_errors=7, max_frames=200))
    low, high = res.points
    assert low.frame_errors == 7
    assert low.frames <= 200
    assert high.frames == 200 and high.bit_errors == 0
    assert high.ber == 0.0


def test_rates_are_exact_ratios(small_code):
    p = run_ber(small_code, SimConfig([1.0], target_frame_errors=10)).points[0]
    assert p.ber == p.bit_errors / (p.frames * small_code.num_cols)
    assert p.fer == p.frame_errors / p.frames


def test_very_high_snr_is_error_free(code_559):
    res = run_ber(code_559, SimConfig([12.0], max_frames=30))
    assert res.points[0].bit_errors == 0


def test_metadata_and_exports(code_559):
    res = run_ber(code_559, SimConfig([9.0], max_frames=5))
    assert res.metadata["rate_convention"].startswith("design rate")
    assert res.metadata["circulant_size"] == 559
    assert res.metadata["family"] == "J7-024"
    assert res.to_csv().splitlines()[0] == "snr_db,frames,bit_errors,frame_errors,ber,fer"
    assert res.to_gnuplot().startswith("# ")


@pytest.mark.slow
def test_error_rate_drops_with_snr_on_small_size_code():
    H = expand(exponent_matrix(select_construction(7, 12)), 221)
    res = run_ber(H, SimConfig([1.0, 3.0], target_frame_errors=100, max_frames=100_000, seed=5),
                  jobs=4)
    lo, hi = res.points
    assert lo.frame_errors >= 100 and hi.frame_errors >= 100
    assert hi.ber < lo.ber
