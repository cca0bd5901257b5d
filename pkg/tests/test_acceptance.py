"""Acceptance criteria 1 to 10, each at its stated sample size and tolerance.

Every test records one ``CRITERION k: PASS|FAIL ...`` line; the lines are
printed as they happen and again in the pytest terminal summary.
"""

import itertools
import random
import time
from fractions import Fraction
from math import sqrt

import pytest

import conftest
from quotring.bench import CSV_FIELDS, BenchConfig, run_bench, sample_integer, to_csv
from quotring.echelon import CrtSplit, is_strong_echelon_shape, split_strong_echelon, strong_echelon
from quotring.errors import RankDeficientError
from quotring.ideals import Ideal
from quotring.linalg import hnf
from quotring.numring import integers, preset
from quotring.pseudo import PseudoMatrix, pseudo_hnf, span_zlattice
from quotring.quotient import QuotientRing, quotient_ring
from quotring.residue import ResidueRingZ
from quotring.selftest import z6_split
from quotring.split import zsplit

SEED = 424242


def record(k, ok, detail):
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'} {detail}"
    conftest.ACCEPTANCE.append(line)
    print(line)
    assert ok, line


def euclid_samples():
    """The shared sample of criteria 1 and 2: (ring, list of pairs)."""
    Zs, Zi = preset("Zsqrt10"), preset("Zi")
    rng = random.Random(SEED)
    out = []
    for R in (quotient_ring(integers(), 30), quotient_ring(Zs, 2)):
        out.append((R, list(itertools.product(list(R.elements()), repeat=2))))
    for R in (quotient_ring(Zs, 6), quotient_ring(Zi, 5)):
        out.append((R, [(R.random_element(rng), R.random_element(rng)) for _ in range(10_000)]))
    return out


@pytest.fixture(scope="module")
def samples():
    return euclid_samples()


def test_criterion_1_euclidean_division(samples):
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    checked = fails = 0
    for R, pairs in samples:
        for a, b in pairs:
            if R.is_zero(b):
                continue
            q, r = R.eudiv(a, b, rng)
            checked += 1
            if R.add(R.mul(q, b), r) != a or not (R.is_zero(r) or R.phi(r) < R.phi(b)):
                fails += 1
    elapsed = time.perf_counter() - t0
    record(1, fails == 0 and elapsed < 60, f"{checked} divisions, {fails} failures, {elapsed:.1f}s (< 60s)")


def test_criterion_2_xgcd_unimodular(samples):
    rng = random.Random(SEED)
    checked = fails = 0
    for R, pairs in samples:
        for a, b in pairs:
            g, s, t, u, v = R.xgcd(a, b, rng)
            checked += 1
            ok = (
                R.add(R.mul(s, a), R.mul(t, b)) == g
                and R.is_zero(R.add(R.mul(u, a), R.mul(v, b)))
                and R.sub(R.mul(s, v), R.mul(t, u)) == R.one
                # the inverse transform recovers a and b from g
                and R.mul(v, g) == a
                and R.neg(R.mul(u, g)) == b
                and R.ideal_lattice([g]) == R.ideal_lattice([a, b])
            )
            fails += not ok
    record(2, fails == 0, f"{checked} xgcd tuples, {fails} failures")


def test_criterion_3_division_law():
    Z = integers()
    m = Ideal.principal(Z, 30)
    R = QuotientRing(Z, m)
    elems = list(R.elements())
    fails = 0
    for a, b in itertools.product(elems, repeat=2):
        A = Ideal.from_generators(Z, [R.lift(a)]) + m if not R.is_zero(a) else m
        B = Ideal.from_generators(Z, [R.lift(b)]) + m if not R.is_zero(b) else m
        integral = (A.as_frac() * B.inverse()).den == 1
        by_enum = any(R.mul(b, c) == a for c in elems)
        if not (R.divides(b, a) == integral == by_enum):
            fails += 1
            continue
        if by_enum:
            c = R.min_quotient(a, b)
            if R.mul(b, c) != a or R.phi(c) * R.phi(b) != R.phi(a):
                fails += 1
        g = R.xgcd(a, b, random.Random(SEED))[0]
        if not R.is_zero(g):
            ca, cb = R.min_quotient(a, g), R.min_quotient(b, g)
            if R.ideal_lattice([ca, cb]) != R.ideal_lattice([R.one]):
                fails += 1
    c6, c10 = R.min_quotient((6,), (2,)), R.min_quotient((10,), (2,))
    instance = (
        (R.phi(c6), R.phi(c10)) == (3, 5)
        and R.ideal_lattice([c6, c10]) == R.ideal_lattice([R.one])
    )
    record(3, fails == 0 and instance,
           f"900 pairs over Z/30, {fails} failures; (6,10): quotients {c6[0]},{c10[0]} phi 3,5 coprime={instance}")


def span_set(R, rows):
    out = set()
    for coeffs in itertools.product(range(R.N), repeat=len(rows)):
        out.add(tuple(sum(c * x for c, x in zip(coeffs, col)) % R.N for col in zip(*rows)))
    return out


def prefix_spans_closed(R, H):
    for v in span_set(R, H):
        support = [k for k, x in enumerate(v) if x % R.N]
        if support and v not in span_set(R, H[: support[-1] + 1]):
            return False
    return True


Z6_MATRICES = [[[a, b], [c, d]] for a, b, c, d in itertools.product(range(6), repeat=4)]


def test_criterion_4_strong_echelon():
    R = ResidueRingZ(6)
    t0 = time.perf_counter()
    fails = 0
    for A in Z6_MATRICES:
        H = strong_echelon(R, A)
        ok = is_strong_echelon_shape(R, H) and span_set(R, H) == span_set(R, A) and prefix_spans_closed(R, H)
        fails += not ok
    H = strong_echelon(R, [[0, 0], [1, 3]])
    example = span_set(R, H) == span_set(R, [[2, 0], [5, 3]])
    elapsed = time.perf_counter() - t0
    record(4, fails == 0 and example and elapsed < 60,
           f"1296 matrices over Z/6, {fails} failures; [[0,0],[1,3]] -> {H} span-equal to B: {example}; "
           f"{elapsed:.1f}s (< 60s)")


def test_criterion_5_crt_recombination():
    R = ResidueRingZ(6)
    split = z6_split()
    fails6 = sum(span_set(R, split_strong_echelon(split, A)) != span_set(R, strong_echelon(R, A))
                 for A in Z6_MATRICES)
    Zs = preset("Zsqrt10")
    Q = quotient_ring(Zs, 6)
    sp = CrtSplit.from_ideals(Q, Ideal.principal(Zs, 2), Ideal.principal(Zs, 3))
    rng = random.Random(SEED)
    fails_q = 0
    for _ in range(200):
        A = [[Q.random_element(rng) for _ in range(3)] for _ in range(3)]
        direct = Q.module_lattice(strong_echelon(Q, A, 3, rng))
        via_crt = Q.module_lattice(split_strong_echelon(sp, A, 3, rng))
        fails_q += direct != via_crt or len(direct) != 6
    record(5, fails6 == 0 and fails_q == 0,
           f"Z/6: 1296 matrices, {fails6} failures; Z[sqrt10]/(6): 200 matrices, {fails_q} failures")


def random_pseudomatrix(R, rng):
    m = rng.randint(1, 8)
    n = rng.choice([m, m + 2])
    bits = rng.randint(1, 16)
    dist = rng.choice(["uniform", "normal"])
    A = [[[sample_integer(rng, bits, dist) for _ in range(R.degree)] for _ in range(m)] for _ in range(n)]
    ideals = []
    for _ in range(n):
        if rng.random() < 0.3:
            gens = [[rng.randint(-9, 9) for _ in range(R.degree)] for _ in range(2)]
            gens[0][0] = gens[0][0] or 1
            ideals.append(Ideal.from_generators(R, gens))
        else:
            ideals.append(Ideal.unit(R))
    return PseudoMatrix.from_integral(R, A, ideals)


def test_criterion_6_pseudo_hnf_end_to_end():
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    runs = fails = 0
    for name in ("Z", "Zsqrt10", "Zi"):
        R = preset(name)
        done = 0
        while done < 100:
            P = random_pseudomatrix(R, rng)
            seed = rng.randrange(2**32)
            try:
                on = pseudo_hnf(P, seed=seed)
            except RankDeficientError:
                continue
            off = pseudo_hnf(P, zsplit=False, seed=seed)
            L = span_zlattice(P)
            ok = all(H.is_triangular_unit() and span_zlattice(H.as_pseudomatrix()) == L for H in (on, off))
            fails += not ok
            done += 1
            runs += 1
    elapsed = time.perf_counter() - t0
    record(6, fails == 0 and elapsed < 600,
           f"{runs} pseudomatrices over Z, Z[sqrt10], Z[i], zsplit on/off; {fails} failures; "
           f"{elapsed:.1f}s (< 600s)")


def test_criterion_7_z_specialization():
    Z = integers()
    rng = random.Random(SEED)
    done = fails = 0
    while done < 100:
        k = rng.randint(1, 6)
        A = [[rng.randint(-50, 50) for _ in range(k)] for _ in range(k + rng.randint(0, 2))]
        H = hnf(A, ncols=k)
        if len(H) < k:
            continue
        done += 1
        out = pseudo_hnf(PseudoMatrix.from_integral(Z, [[[x] for x in r] for r in A]), seed=done)
        pivots = [a.minimum for a in out.ideals]
        rows = []
        for h, row in zip(pivots, out.matrix):
            scaled = [Fraction(x.num.coords[0], x.den) * h for x in row]
            rows.append([int(v) for v in scaled] if all(v.denominator == 1 for v in scaled) else None)
        ok = pivots == [H[i][i] for i in range(k)] and None not in rows and hnf(rows, ncols=k) == H
        fails += not ok
    record(7, fails == 0, f"100 integer matrices, pseudo-HNF rows reproduce the integer HNF; {fails} failures")


def test_criterion_8_zsplit():
    Zs = preset("Zsqrt10")
    deg1 = Ideal.from_generators(Zs, [3, [-1, 1]])
    inert = Ideal.principal(Zs, 7)
    primes = [Ideal.from_generators(Zs, g) for g in ([3, [-1, 1]], [3, [1, 1]], [13, [-6, 1]], [13, [6, 1]])]
    prod = primes[0] * primes[1] * primes[2] * primes[3]
    examples = zsplit(deg1).a == deg1 and zsplit(inert).a.is_unit() and zsplit(prod).a.is_unit()
    rng = random.Random(SEED)
    fails = done = 0
    while done < 500:
        gens = [[rng.randint(-60, 60), rng.randint(-60, 60)] for _ in range(rng.randint(1, 2))]
        if not any(any(g) for g in gens):
            continue
        m = Ideal.from_generators(Zs, gens)
        sp = zsplit(m)
        fails += not (sp.a * sp.b == m and (sp.a + sp.b).is_unit() and sp.a.norm == sp.a.minimum)
        done += 1
    record(8, examples and fails == 0, f"examples reproduced: {examples}; 500 random moduli, {fails} failures")


def mean_eudiv_rounds(Q, rng, wanted, max_draws):
    """Mean rounds over nontrivial divisions (b nonzero and not dividing a)."""
    rounds = []
    for _ in range(max_draws):
        a, b = Q.random_element(rng), Q.random_element(rng)
        if Q.is_zero(b) or Q.divides(b, a):
            continue
        rounds.append(Q.eudiv_rounds(a, b, rng)[2])
        if len(rounds) == wanted:
            break
    return len(rounds), (sum(rounds) / len(rounds) if rounds else float("nan"))


def test_criterion_9_expected_trials():
    Zs, Zi = preset("Zsqrt10"), preset("Zi")
    rng = random.Random(SEED)
    Qp = QuotientRing(Zs, Ideal.from_generators(Zs, [2, [0, 1]]))
    n_p, mean_p = mean_eudiv_rounds(Qp, rng, 1000, 200_000)
    Q5 = QuotientRing(Zi, Ideal.principal(Zi, 5))
    n_5, mean_5 = mean_eudiv_rounds(Q5, rng, 1000, 200_000)
    ok_p = n_p >= 1000 and 1.6 <= mean_p <= 2.4
    ok_5 = n_5 >= 1000 and 1.3 <= mean_5 <= 1.9
    # supplementary: generator sampling without the first guess is geometric in the unit density p of O/m
    Q2 = QuotientRing(Zs, Ideal.principal(Zs, 2))
    Q25 = QuotientRing(Zi, Ideal.principal(Zi, 25))
    g2 = sum(Q2.gen_rounds(Qp.modulus, rng, first_guess=False)[1] for _ in range(1000)) / 1000
    g5 = sum(Q25.gen_rounds(Q5.modulus, rng, first_guess=False)[1] for _ in range(1000)) / 1000
    record(9, ok_p and ok_5,
           f"eudiv rounds: O/p2 {n_p} nontrivial divisions found (need >= 1000), mean {mean_p:.4f} "
           f"(want [1.6, 2.4]); Z[i]/(5) n={n_5} mean {mean_5:.4f} (want [1.3, 1.9]); "
           f"gen rounds for comparison: p2 mod (2) {g2:.3f} (1/p = 2), (5) mod (25) {g5:.3f} (1/p = 1.5625)")


def test_criterion_10_benchmark_grid():
    rows = []
    t0 = time.perf_counter()
    for n in (10, 20, 30):
        for bits in (10, 100):
            for dist in ("uniform", "normal"):
                rows.extend(run_bench(BenchConfig("Zsqrt10", n, bits, dist, trials=1, seed=SEED)))
    text = to_csv(rows)
    print(text)
    header_ok = text.splitlines()[0].split(",") == CSV_FIELDS
    ok = len(rows) == 12 and header_ok and all(len(r["certificate"]) == 16 for r in rows)
    record(10, ok, f"{len(rows)} verified bench runs over Z[sqrt10], CSV schema ok: {header_ok}; "
                   f"{time.perf_counter() - t0:.1f}s total (not asserted)")


def test_supplementary_gen_rounds_within_4_sigma():
    # not a numbered criterion: the 1/p law holds for generator sampling
    Zs, Zi = preset("Zsqrt10"), preset("Zi")
    rng = random.Random(SEED + 1)
    cases = [
        (QuotientRing(Zs, Ideal.principal(Zs, 2)), Ideal.from_generators(Zs, [2, [0, 1]]), 0.5),
        (QuotientRing(Zi, Ideal.principal(Zi, 25)), Ideal.principal(Zi, 5), 0.64),
    ]
    for Q, target, p in cases:
        xs = [Q.gen_rounds(target, rng, first_guess=False)[1] for _ in range(2000)]
        mean = sum(xs) / len(xs)
        sigma = sqrt((1 - p) / p**2 / len(xs))
        assert abs(mean - 1 / p) < 4 * sigma
