"""Modular pseudo-Hermite normal forms of modules over a number ring.

Pipeline: find an ideal ``m`` with ``m O^k`` inside the module, reduce the
pseudomatrix to a matrix over ``O/m``, compute a strong echelon form there
(optionally splitting off a Z/mZ part), and lift back to a triangular
pseudomatrix with unit diagonal.

A pseudomatrix is a list of coefficient ideals and a matrix of
:class:`~quotring.numring.FieldElement` entries; its span is
``sum_i a_i * A_i``.
"""

import hashlib
import json
import random
from dataclasses import dataclass, field
from math import lcm, prod

from .echelon import CrtSplit, split_strong_echelon, strong_echelon, triangularize
from .errors import NotIntegralError, RankDeficientError, SamplingBudgetExhausted
from .ideals import FracIdeal, Ideal, idempotent_split
from .linalg import crt_reconstruct, lattice_hnf, rank_profile_mod_p
from .numring import FieldElement, RingElement
from .quotient import MAX_TRIALS, QuotientRing
from .residue import ResidueRingZ
from .split import rational_quotient_map
from .split import zsplit as split_modulus


def _fe(ring, x):
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, RingElement):
        return FieldElement(x)
    if isinstance(x, int):
        return FieldElement(RingElement(ring, ring.scalar(x)))
    return FieldElement(RingElement(ring, x))


@dataclass
class PseudoMatrix:
    """Coefficient ideals ``ideals[i]`` attached to the rows of ``matrix``."""

    ring: object
    ideals: list
    matrix: list

    def __post_init__(self):
        self.ideals = [FracIdeal.of(a) for a in self.ideals]
        self.matrix = [[_fe(self.ring, x) for x in row] for row in self.matrix]
        if not self.matrix or not self.matrix[0]:
            raise ValueError("pseudomatrix needs at least one row and one column")
        if len(self.ideals) != len(self.matrix):
            raise ValueError("one coefficient ideal per row required")
        if any(len(r) != len(self.matrix[0]) for r in self.matrix):
            raise ValueError("matrix rows must have equal length")

    @property
    def nrows(self):
        return len(self.matrix)

    @property
    def ncols(self):
        return len(self.matrix[0])

    @classmethod
    def from_integral(cls, ring, matrix, ideals=None):
        """Pseudomatrix with coordinate-list entries and (default) unit ideals."""
        if ideals is None:
            ideals = [Ideal.unit(ring)] * len(matrix)
        return cls(ring, ideals, matrix)


@dataclass
class PseudoHNF:
    """Triangular pseudomatrix with unit diagonal, plus how it was computed."""

    ring: object
    ideals: list
    matrix: list
    modulus: Ideal = None
    split: dict = field(default_factory=dict)

    def as_pseudomatrix(self):
        return PseudoMatrix(self.ring, list(self.ideals), [list(r) for r in self.matrix])

    def is_triangular_unit(self):
        one = _fe(self.ring, 1)
        zero = _fe(self.ring, 0)
        for i, row in enumerate(self.matrix):
            if row[i] != one or any(x != zero for x in row[i + 1:]):
                return False
        return True


# ------------------------------------------------------------------ oracle


def _row_generators(ring, ideal, row):
    """Integer generators (with a common denominator) of ``ideal * row``."""
    d = ring.degree
    den = 1
    for x in row:
        den = lcm(den, x.den * ideal.den)
    gens = []
    for beta in ideal.num.basis:
        vec = []
        for x in row:
            scale = den // (x.den * ideal.den)
            vec.extend(c * scale for c in ring.mul(list(beta), list(x.num.coords)))
        gens.append(vec)
    assert all(len(v) == d * len(row) for v in gens)
    return gens, den


def span_zlattice(P, rng=None):
    """HNF basis of the span of ``P`` as a sublattice of Z^(d*k)."""
    ring = P.ring
    blocks = [_row_generators(ring, a, row) for a, row in zip(P.ideals, P.matrix)]
    D = 1
    for _, den in blocks:
        D = lcm(D, den)
    rows = [[x * (D // den) for x in g] for gens, den in blocks for g in gens]
    H = lattice_hnf(rows, ring.degree * P.ncols, rng or random.Random(0))
    if D > 1:
        if any(x % D for r in H for x in r):
            raise NotIntegralError("span is not contained in O^k")
        H = [[x // D for x in r] for r in H]
    return H


def span_hash(H):
    return hashlib.sha256(json.dumps(H, separators=(",", ":")).encode()).hexdigest()


# ----------------------------------------------------------- modulus finding

PRIME_START = 2**62


def _det_bound(ring, A):
    d = ring.degree
    k = len(A)
    row_sums = [sum(sum(abs(c) for c in x) for x in row) for row in A]
    return (d * ring.gamma_max) ** max(k - 1, 0) * prod(row_sums)


def _det_mod_prime(ring, A, p):
    Q = QuotientRing(ring, Ideal.principal(ring, p))
    T = triangularize(Q, [[Q.project(x) for x in row] for row in A], len(A))
    det = Q.one
    for i in range(len(A)):
        det = Q.mul(det, T[i][i])
    return [c % p for c in Q.lift(det)]


def modular_det(ring, A, workers=None):
    """Exact determinant of a square matrix over O (entries as coordinate lists).

    Determinants modulo several large primes ``p`` are computed by unimodular
    triangularization over ``O/pO`` and combined coordinatewise by CRT.
    ``workers`` > 1 evaluates the primes in a process pool.
    """
    from sympy import prevprime

    k = len(A)
    if k == 0:
        return ring.one()
    A = [[list(x) for x in row] for row in A]
    bound = _det_bound(ring, A)
    primes = []
    P = 1
    p = PRIME_START
    while P <= 2 * bound:
        p = prevprime(p)
        primes.append(p)
        P *= p
    if workers and workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as ex:
            residues = list(ex.map(_det_mod_prime, [ring] * len(primes), [A] * len(primes), primes))
    else:
        residues = [_det_mod_prime(ring, A, q) for q in primes]
    return [
        crt_reconstruct([r[i] for r in residues], primes, bound) for i in range(ring.degree)
    ]


def _clear_row(row):
    """Integral row ``L * row`` for the least common denominator ``L``."""
    L = 1
    for x in row:
        L = lcm(L, x.den)
    return [[c * (L // x.den) for c in x.num.coords] for x in row], L


def _expanded_rows(ring, row):
    reps = [ring.rep_matrix(x) for x in row]
    return [[v for M in reps for v in M[i]] for i in range(ring.degree)]


def select_full_rank_rows(ring, rows, k, rng, attempts=4):
    """Indices of ``k`` rows of full rank over K, certified modulo a random prime."""
    from sympy import prevprime

    for _ in range(attempts):
        p = prevprime(rng.randrange(2**61, 2**62))
        chosen = []
        current = []
        for i, row in enumerate(rows):
            cand = current + _expanded_rows(ring, row)
            if len(rank_profile_mod_p(cand, p)) == len(cand):
                chosen.append(i)
                current = cand
                if len(chosen) == k:
                    return chosen
    raise RankDeficientError("module not of full rank")


def find_modulus(P, rng=None, workers=None):
    """Integral ideal ``m`` with ``m O^k`` contained in the span of ``P``."""
    rng = rng or random.Random(0)
    ring = P.ring
    k = P.ncols
    if P.nrows < k:
        raise RankDeficientError("module not of full rank")
    cleared = [_clear_row(r) for r in P.matrix]
    for _ in range(4):
        idx = list(range(k)) if P.nrows == k else select_full_rank_rows(
            ring, [c for c, _ in cleared], k, rng
        )
        A = [cleared[i][0] for i in idx]
        det = modular_det(ring, A, workers)
        if any(det):
            break
        if P.nrows == k:
            raise RankDeficientError("module not of full rank")
        # the rank profile modulo the sampled prime was wrong; draw another
    else:
        raise RankDeficientError("no nonzero maximal minor found")
    num = Ideal.principal(ring, det)
    den = 1
    for i in idx:
        num = num * P.ideals[i].num
        den *= P.ideals[i].den * cleared[i][1]
    d = FracIdeal(num, den)
    if not d.is_integral():
        raise NotIntegralError("span is not contained in O^k")
    return d.num


# -------------------------------------------------------------- reduction


def _coprime_element(ideal, modulus, rng):
    """Some ``w`` in ``ideal`` with ``(w) + ideal*modulus = ideal``."""
    ring = ideal.ring
    if ideal.is_unit():
        return ring.one()
    sub = ideal * modulus
    basis = ideal.basis
    # the first HNF row is the ideal's minimum, a good first guess
    w = list(basis[0])
    if Ideal.principal(ring, w) + sub == ideal:
        return w
    box = 1
    for t in range(MAX_TRIALS):
        coeffs = [rng.randint(-box, box) for _ in basis]
        w = [sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(ring.degree)]
        if any(w) and Ideal.principal(ring, w) + sub == ideal:
            return w
        if t % 8 == 7:
            box *= 2
    raise SamplingBudgetExhausted("sampling budget exhausted in reduce_mod")


def reduce_mod(P, modulus, Q=None, rng=None):
    """Matrix over ``O/modulus`` whose row span is the image of the span of ``P``.

    Row ``i`` with coefficient ideal ``I/delta`` is replaced by the integral
    row ``(w/delta) * A_i`` for an element ``w`` of ``I`` that generates ``I``
    locally at every prime of the modulus; the image of ``(I/delta) * A_i``
    is then the cyclic module generated by that row.
    """
    rng = rng or random.Random(0)
    ring = P.ring
    Q = Q or QuotientRing(ring, modulus)
    out = []
    for a, row in zip(P.ideals, P.matrix):
        w = _coprime_element(a.num, modulus, rng)
        scale = FieldElement(RingElement(ring, w), a.den)
        new = []
        for x in row:
            y = x * scale
            if y.den != 1:
                raise NotIntegralError("span is not contained in O^k")
            new.append(Q.project(list(y.num.coords)))
        out.append(new)
    return out


# ----------------------------------------------------------- lifting back


def demodularize(C, modulus):
    """Pseudo-HNF from a lift ``C`` (coordinate lists) of a strong echelon form mod ``modulus``.

    For a nonzero diagonal entry ``c`` the coefficient ideal is
    ``g = (c) + modulus`` and the row is ``x*C_i/c + y*e_i`` where ``x + y = 1``,
    ``x`` in ``(c):modulus`` and ``y`` in ``modulus:(c)``. A diagonal entry in
    the modulus means the row vanishes mod ``modulus``; it becomes
    ``(modulus, e_i)``.
    """
    ring = modulus.ring
    k = len(C)
    one = _fe(ring, 1)
    zero = _fe(ring, 0)
    ideals = []
    B = []
    for i in range(k):
        c = list(C[i][i])
        if modulus.contains(c):
            ideals.append(modulus)
            B.append([one if j == i else zero for j in range(k)])
            continue
        cid = Ideal.principal(ring, c)
        g = cid + modulus
        X = cid.colon(modulus)
        Y = modulus.colon(cid)
        x, _ = idempotent_split(X, Y)
        factor = FieldElement(RingElement(ring, x)) / FieldElement(RingElement(ring, c))
        row = [factor * _fe(ring, C[i][j]) for j in range(i)]
        ideals.append(g)
        B.append(row + [one] + [zero] * (k - i - 1))
    return PseudoHNF(ring, ideals, B, modulus=modulus)


# ---------------------------------------------------------------- pipeline


def _zsplit_echelon(Q, Bbar, k, rng):
    """Echelon form over ``Q`` using the Z/mZ fast path where possible."""
    sp = split_modulus(Q.modulus)
    info = {"z_norm": sp.a.norm, "rest_norm": sp.b.norm, "mz": sp.m}
    if sp.m == 1:
        return strong_echelon(Q, Bbar, k, rng), info
    c = rational_quotient_map(sp.a, sp.m)
    Zm = ResidueRingZ(sp.m)

    def to_z(z):
        return sum(x * y for x, y in zip(Q.lift(z), c)) % sp.m

    def from_z(t):
        return Q.project(t)

    if sp.b.is_unit():
        H = strong_echelon(Zm, [[to_z(x) for x in r] for r in Bbar], k, rng)
        return [[from_z(x) for x in r] for r in H], info
    split = CrtSplit.from_ideals(Q, sp.a, sp.b, ring_a=Zm, to_a=to_z, from_a=from_z)
    return split_strong_echelon(split, Bbar, k, rng), info


def pseudo_hnf(P, modulus=None, zsplit=True, seed=0, rng=None, workers=None):
    """Pseudo-HNF of the span of ``P``; the span must have full rank inside O^k."""
    rng = rng or random.Random(seed)
    ring = P.ring
    k = P.ncols
    if P.nrows < k:
        raise RankDeficientError("module not of full rank")
    m = modulus if modulus is not None else find_modulus(P, rng, workers)
    Q = QuotientRing(ring, m, seed=rng.randrange(2**32))
    Bbar = reduce_mod(P, m, Q, rng)
    if zsplit:
        H, info = _zsplit_echelon(Q, Bbar, k, rng)
    else:
        H = strong_echelon(Q, Bbar, k, rng)
        info = {"z_norm": 1, "rest_norm": m.norm, "mz": 1}
    C = [[Q.lift(x) for x in row] for row in H]
    out = demodularize(C, m)
    out.split = info
    return out
