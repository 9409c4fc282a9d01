"""Monte-Carlo BER/FER of a parity-check matrix over BPSK + AWGN.

The all-zero codeword is sent (bit 0 -> +1).  Min-sum decoding is symmetric in
the channel output, so no encoder is needed.  Frame ``f`` at SNR index ``s``
draws its noise from ``default_rng([seed, s, f])``; results therefore do not
depend on how many worker threads process the frames.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import DimensionMismatch, InvalidConfig

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SimConfig:
    snr_points: tuple
    max_iterations: int = 50
    normalization_factor: float = 0.75
    target_frame_errors: int = 100
    max_frames: int = 10_000
    seed: int = 0

    def __post_init__(self):
        pts = tuple(float(x) for x in self.snr_points)
        if not pts or not all(math.isfinite(x) for x in pts):
            raise InvalidConfig("snr_points must be a non-empty list of finite values")
        object.__setattr__(self, "snr_points", pts)
        if int(self.max_iterations) < 1:
            raise InvalidConfig(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not 0 < self.normalization_factor <= 1:
            raise InvalidConfig("normalization_factor must lie in (0, 1]")
        if self.target_frame_errors < 1 or self.max_frames < 1:
            raise InvalidConfig("target_frame_errors and max_frames must be positive")
        if not 0 <= int(self.seed) < 2**64:
            raise InvalidConfig("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SimPoint:
    snr_db: float
    frames: int
    bit_errors: int
    frame_errors: int
    converged_frames: int
    undetected_frames: int
    total_iterations: int
    bits_per_frame: int

    @property
    def ber(self):
        return self.bit_errors / (self.frames * self.bits_per_frame)

    @property
    def fer(self):
        return self.frame_errors / self.frames

    @property
    def mean_iterations(self):
        return self.total_iterations / self.frames


@dataclass(frozen=True)
class SimResult:
    points: tuple
    metadata: dict = field(default_factory=dict)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["snr_db", "frames", "bit_errors", "frame_errors", "ber", "fer"])
        for p in self.points:
            w.writerow([p.snr_db, p.frames, p.bit_errors, p.frame_errors,
                        repr(p.ber), repr(p.fer)])
        return buf.getvalue()

    def to_gnuplot(self):
        lines = ["# " + " ".join(f"{k}={v}" for k, v in sorted(self.metadata.items())),
                 "# snr_db ber fer mean_iterations"]
        lines += [f"{p.snr_db} {p.ber!r} {p.fer!r} {p.mean_iterations!r}" for p in self.points]
        return "\n".join(lines) + "\n"


class _Graph:
    """Edge arrays for the decoder; edges numbered column by column."""

    def __init__(self, H):
        self.n = H.num_cols
        self.m = H.num_rows
        weights = H.column_weights()
        self.edge_var = np.repeat(np.arange(self.n, dtype=np.int64), weights)
        edge_check = np.concatenate(H.col_rows).astype(np.int64)
        self.check_edges = np.argsort(edge_check, kind="stable").astype(np.int64)
        counts = np.bincount(edge_check, minlength=self.m)
        self.check_ptr = np.zeros(self.m + 1, dtype=np.int64)
        self.check_ptr[1:] = np.cumsum(counts)

    def decode(self, llr, max_iterations, alpha):
        hard = np.zeros(self.n, dtype=np.int64)
        ok, it = _kernels.minsum(self.check_ptr, self.check_edges, self.edge_var, self.n,
                                 llr, max_iterations, alpha, hard)
        return hard, bool(ok), int(it)


@dataclass(frozen=True)
class DecodeResult:
    hard: np.ndarray
    converged: bool
    iterations: int


def minsum_decode(H, channel_llrs, cfg):
    """Normalized min-sum with early exit on a zero syndrome."""
    llr = np.ascontiguousarray(channel_llrs, dtype=np.float64)
    if llr.shape != (H.num_cols,):
        raise DimensionMismatch(f"expected {H.num_cols} LLRs, got shape {llr.shape}")
    if cfg.max_iterations < 1:
        raise InvalidConfig("max_iterations must be >= 1")
    hard, ok, it = _Graph(H).decode(llr, cfg.max_iterations, cfg.normalization_factor)
    return DecodeResult(hard, ok, it)


def design_rate(H):
    return 1.0 - H.num_rows / H.num_cols


def noise_sigma(snr_db, rate):
    return math.sqrt(1.0 / (2.0 * rate * 10.0 ** (snr_db / 10.0)))


def _frame(graph, cfg, snr_index, frame, sigma):
    rng = np.random.default_rng([int(cfg.seed), snr_index, frame])
    y = 1.0 + sigma * rng.standard_normal(graph.n)
    hard, ok, it = graph.decode(2.0 * y / sigma**2, cfg.max_iterations,
                                cfg.normalization_factor)
    errors = int(hard.sum())
    return errors, ok, it


def run_ber(H, cfg, jobs=1):
    """Simulate every SNR point until the frame-error target or frame cap is hit."""
    graph = _Graph(H)
    rate = design_rate(H)
    batch = max(1, int(jobs)) * 4
    pool = ThreadPoolExecutor(max_workers=jobs) if jobs > 1 else None
    points = []
    try:
        for si, snr in enumerate(cfg.snr_points):
            sigma = noise_sigma(snr, rate)
            frames = bit_errors = frame_errors = conv = undetected = iters = 0
            next_frame = 0
            while frames < cfg.max_frames and frame_errors < cfg.target_frame_errors:
                ids = range(next_frame, min(next_frame + batch, cfg.max_frames))
                next_frame = ids.stop
                if pool is None:
                    outs = [_frame(graph, cfg, si, f, sigma) for f in ids]
                else:
                    outs = list(pool.map(lambda f: _frame(graph, cfg, si, f, sigma), ids))
                for errors, ok, it in outs:
                    if frames >= cfg.max_frames or frame_errors >= cfg.target_frame_errors:
                        break
                    frames += 1
                    iters += it
                    conv += ok
                    bit_errors += errors
                    if errors:
                        frame_errors += 1
                        undetected += ok
            points.append(SimPoint(snr, frames, bit_errors, frame_errors, conv,
                                   undetected, iters, graph.n))
    finally:
        if pool is not None:
            pool.shutdown()
    meta = {
        "schema_version": SCHEMA_VERSION,
        "rate": rate,
        "rate_convention": "design rate 1 - rows/columns",
        "modulation": "BPSK, bit 0 -> +1, all-zero codeword",
        "decoder": "normalized min-sum, flooding",
        "normalization_factor": cfg.normalization_factor,
        "max_iterations": cfg.max_iterations,
        "target_frame_errors": cfg.target_frame_errors,
        "max_frames": cfg.max_frames,
        "seed": int(cfg.seed),
    }
    if H.exponents is not None:
        meta.update(family=H.exponents.family, circulant_size=H.circulant_size)
    return SimResult(tuple(points), meta)
