"""Randomized scaling benchmark for the pseudo-HNF pipeline.

Square ``n x n`` matrices over a ring are drawn with integer coordinates
either uniform in ``[-2^B, 2^B]`` or rounded normal with standard deviation
``2^B``. Every result is checked against the Z-lattice oracle before its
timing is reported.
"""

import csv
import io
import random
import time
from dataclasses import dataclass
from math import log

from .errors import QuotringError
from .numring import preset
from .pseudo import PseudoMatrix, find_modulus, pseudo_hnf, span_hash, span_zlattice
from .split import zsplit

DISTRIBUTIONS = ("uniform", "normal")
CSV_FIELDS = [
    "n", "B", "dist", "trial", "seconds", "modulus_norm_bits", "split_fraction",
    "certificate",
]


class VerificationError(QuotringError, AssertionError):
    """The computed form does not span the input module."""


@dataclass
class BenchConfig:
    ring: object
    n: int
    bits: int
    dist: str = "uniform"
    trials: int = 1
    seed: int = 0
    zsplit: bool = True

    def __post_init__(self):
        if isinstance(self.ring, str):
            self.ring = preset(self.ring)
        if self.n < 1 or self.bits < 1 or self.trials < 1:
            raise ValueError("n, bits and trials must be positive")
        if self.dist not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.dist!r}")


def sample_integer(rng, bits, dist):
    if dist == "uniform":
        return rng.randint(-(2**bits), 2**bits)
    # a double has 53 significant bits; fill the rest with uniform noise
    x = rng.gauss(0.0, 1.0)
    if bits <= 53:
        return round(x * 2**bits)
    shift = bits - 53
    return (round(x * 2**53) << shift) + rng.randrange(2**shift)


def random_matrix(ring, n, bits, dist, rng):
    return [
        [[sample_integer(rng, bits, dist) for _ in range(ring.degree)] for _ in range(n)]
        for _ in range(n)
    ]


def run_trial(cfg, rng, verify=True):
    """One verified run; returns the CSV row as a dict."""
    A = random_matrix(cfg.ring, cfg.n, cfg.bits, cfg.dist, rng)
    P = PseudoMatrix.from_integral(cfg.ring, A)
    seed = rng.randrange(2**32)
    t0 = time.perf_counter()
    m = find_modulus(P, random.Random(seed))
    H = pseudo_hnf(P, modulus=m, zsplit=cfg.zsplit, seed=seed)
    elapsed = time.perf_counter() - t0
    out = span_zlattice(H.as_pseudomatrix())
    if verify and (not H.is_triangular_unit() or span_zlattice(P) != out):
        raise VerificationError(f"bench run n={cfg.n} B={cfg.bits} {cfg.dist} failed verification")
    a_norm = zsplit(m).a.norm
    frac = log(a_norm) / log(m.norm) if m.norm > 1 else 0.0
    return {
        "n": cfg.n,
        "B": cfg.bits,
        "dist": cfg.dist,
        "seconds": f"{elapsed:.3f}",
        "modulus_norm_bits": m.norm.bit_length(),
        "split_fraction": f"{frac:.4f}",
        "certificate": span_hash(out)[:16],
    }


def run_bench(cfg, verify=True):
    rng = random.Random(cfg.seed)
    rows = []
    for t in range(cfg.trials):
        row = run_trial(cfg, rng, verify)
        row["trial"] = t
        rows.append(row)
    return rows


def to_csv(rows):
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
