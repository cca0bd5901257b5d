"""Built-in invariant suites, runnable without pytest (``quotring selftest``).

The quick suite checks the Euclidean contract, the xgcd certificate and the
echelon engine exhaustively on tiny residue rings plus a few end-to-end
pseudo-HNF runs. The full suite adds the sweep over all 1296 ``2 x 2``
matrices over Z/6Z and the statistical check on sampling rounds.
"""

import itertools
import random
from math import sqrt

from .echelon import CrtSplit, howell_normalize, is_strong_echelon_shape, split_strong_echelon, strong_echelon
from .ideals import Ideal
from .numring import integers, preset
from .pseudo import PseudoMatrix, pseudo_hnf, span_zlattice
from .quotient import QuotientRing
from .residue import ResidueRingZ


def small_rings():
    """Small rings for exhaustive checks, including the Z/NZ fast path."""
    Z = integers()
    Zs = preset("Zsqrt10")
    return [
        ResidueRingZ(30),
        QuotientRing(Z, Ideal.principal(Z, 6)),
        QuotientRing(Z, Ideal.principal(Z, 30)),
        QuotientRing(Zs, Ideal.principal(Zs, 2)),
    ]


def check_euclid(R, pairs, rng):
    fails = []
    for a, b in pairs:
        if R.is_zero(b):
            continue
        q, r = R.eudiv(a, b, rng)
        if R.add(R.mul(q, b), r) != a or not (R.is_zero(r) or R.phi(r) < R.phi(b)):
            fails.append(f"eudiv {R}: a={a} b={b} -> q={q} r={r}")
    return fails


def check_xgcd(R, pairs, rng):
    fails = []
    for a, b in pairs:
        g, s, t, u, v = R.xgcd(a, b, rng)
        ok = (
            R.add(R.mul(s, a), R.mul(t, b)) == g
            and R.is_zero(R.add(R.mul(u, a), R.mul(v, b)))
            and R.sub(R.mul(s, v), R.mul(t, u)) == R.one
            and R.module_lattice([[g]]) == R.module_lattice([[a], [b]])
        )
        if not ok:
            fails.append(f"xgcd {R}: a={a} b={b} -> {(g, s, t, u, v)}")
    return fails


def _span(R, rows):
    return R.module_lattice([list(r) for r in rows])


def check_echelon(R, A, rng, split=None):
    """Echelon shape, prefix spans by enumeration, span equality and uniqueness of the Howell form."""
    fails = []
    m = len(A[0])
    H = strong_echelon(R, A, m, rng)
    if not is_strong_echelon_shape(R, H):
        fails.append(f"shape {R}: {A} -> {H}")
    if _span(R, H) != _span(R, A):
        fails.append(f"span {R}: {A} -> {H}")
    # prefix spans: every span element supported on columns 0..j lies in the span of rows 0..j
    elems = list(R.elements())
    for coeffs in itertools.product(elems, repeat=len(H)):
        v = [R.zero] * m
        for c, row in zip(coeffs, H):
            v = [R.add(x, R.mul(c, y)) for x, y in zip(v, row)]
        support = [k for k, x in enumerate(v) if not R.is_zero(x)]
        if support:
            j = support[-1]
            if _span(R, H[: j + 1] + [v]) != _span(R, H[: j + 1]):
                fails.append(f"prefix span {R}: {A} -> {H} misses {v}")
                break
    if split is not None:
        S = split_strong_echelon(split, A, m, rng)
        if _span(R, S) != _span(R, A):
            fails.append(f"crt {R}: {A} -> {S}")
    return fails


def z6_matrices():
    return [[[a, b], [c, d]] for a, b, c, d in itertools.product(range(6), repeat=4)]


def z6_split():
    """Z/6 = Z/2 x Z/3 via the residue ring engine."""
    R = ResidueRingZ(6)
    R2, R3 = ResidueRingZ(2), ResidueRingZ(3)
    return CrtSplit(R, R2, R3, lambda x: x % 2, lambda x: x, lambda x: x % 3, lambda x: x,
                    a=2, b=3, e=2, f=1)


def check_z6(matrices, rng):
    R = ResidueRingZ(6)
    split = z6_split()
    fails = []
    forms = {}
    for A in matrices:
        fails += check_echelon(R, A, rng, split)
        span = tuple(map(tuple, R.module_lattice(A)))
        H = tuple(map(tuple, howell_normalize(R, strong_echelon(R, A, 2, rng))))
        if forms.setdefault(span, H) != H:
            fails.append(f"howell form not unique for {A}")
    return fails


def check_pipeline(rng, trials=3):
    fails = []
    for name in ("Z", "Zsqrt10", "Zi"):
        ring = preset(name)
        for _ in range(trials):
            k = rng.randint(1, 3)
            n = k + rng.randint(0, 2)
            A = [[[rng.randint(-9, 9) for _ in range(ring.degree)] for _ in range(k)] for _ in range(n)]
            P = PseudoMatrix.from_integral(ring, A)
            try:
                H = pseudo_hnf(P, seed=rng.randrange(2**32))
            except ValueError:
                continue  # rank deficient sample
            if not H.is_triangular_unit() or span_zlattice(H.as_pseudomatrix()) != span_zlattice(P):
                fails.append(f"pseudo_hnf over {name}: {A}")
    return fails


def check_gen_rounds(rng, samples=2000):
    """Rounds of the generator search are geometric with mean ``1/p``, ``p`` the density of units in O/m.

    The targets sit strictly between the modulus and O so that no shortcut
    applies: the prime over 2 in Z[sqrt10]/(2) and (5) in Z[i]/(25).
    """
    fails = []
    Zs = preset("Zsqrt10")
    Zi = preset("Zi")
    p2 = Ideal.from_generators(Zs, [2, [0, 1]])
    cases = [
        (QuotientRing(Zs, Ideal.principal(Zs, 2)), p2, 0.5),
        (QuotientRing(Zi, Ideal.principal(Zi, 25)), Ideal.principal(Zi, 5), 0.64),
    ]
    for R, target, p in cases:
        counts = [R.gen_rounds(target, rng, first_guess=False)[1] for _ in range(samples)]
        mean = sum(counts) / samples
        sigma = sqrt((1 - p) / p**2 / samples)
        if abs(mean - 1 / p) > 4 * sigma:
            fails.append(f"gen rounds {R}: mean {mean:.3f}, expected {1 / p:.3f}")
    return fails


def run_selftest(suite="quick", seed=0, out=print):
    """Run a suite; prints failing cases and returns the process exit code."""
    if suite not in ("quick", "full"):
        raise ValueError("suite must be 'quick' or 'full'")
    rng = random.Random(seed)
    checks = []
    for R in small_rings():
        elems = list(R.elements())
        pairs = list(itertools.product(elems, repeat=2))
        checks.append((f"euclid {R}", lambda R=R, p=pairs: check_euclid(R, p, rng)))
        checks.append((f"xgcd {R}", lambda R=R, p=pairs: check_xgcd(R, p, rng)))
    z6 = z6_matrices()
    sample = z6 if suite == "full" else z6[::37]
    checks.append((f"echelon Z/6 ({len(sample)} matrices)", lambda: check_z6(sample, rng)))
    checks.append(("pseudo-HNF pipeline", lambda: check_pipeline(rng)))
    if suite == "full":
        checks.append(("generator sampling rounds", lambda: check_gen_rounds(rng)))
    failed = 0
    for name, fn in checks:
        fails = fn()
        status = "ok" if not fails else "FAIL"
        out(f"{status:4} {name}")
        for f in fails[:5]:
            out(f"     {f}")
        failed += bool(fails)
    out(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0
