import itertools
import random

import pytest
import sympy

from quotring.echelon import (
    CrtSplit, diagonal_adjust, echelon_crt_combine, howell_normalize, is_strong_echelon_shape,
    split_strong_echelon, strong_echelon, triangularize,
)
from quotring.ideals import Ideal
from quotring.quotient import quotient_ring
from quotring.residue import ResidueRingZ
from quotring.selftest import z6_split

R6 = ResidueRingZ(6)
ALL_Z6 = [[[a, b], [c, d]] for a, b, c, d in itertools.product(range(6), repeat=4)]


def span_set(R, rows, m=2):
    """All R-linear combinations of ``rows``, by enumeration."""
    out = set()
    for coeffs in itertools.product(list(R.elements()), repeat=len(rows)):
        v = [R.zero] * m
        for c, r in zip(coeffs, rows):
            v = [R.add(x, R.mul(c, y)) for x, y in zip(v, r)]
        out.add(tuple(v))
    return out


def prefix_spans_closed(R, H):
    S = span_set(R, H)
    for v in S:
        support = [k for k, x in enumerate(v) if not R.is_zero(x)]
        if support and v not in span_set(R, H[: support[-1] + 1]):
            return False
    return True


def test_worked_example_z6():
    A = [[0, 0], [1, 3]]
    H = strong_echelon(R6, A)
    assert span_set(R6, H) == span_set(R6, [[2, 0], [5, 3]]) == span_set(R6, A)
    assert is_strong_echelon_shape(R6, H) and prefix_spans_closed(R6, H)
    assert H == [[2, 0], [1, 3]]


def test_identity_and_zero():
    assert strong_echelon(R6, [[1, 0], [0, 1]]) == [[1, 0], [0, 1]]
    assert howell_normalize(R6, [[1, 0], [0, 1]]) == [[1, 0], [0, 1]]
    assert howell_normalize(R6, [[0, 0], [0, 0]]) == [[0, 0], [0, 0]]


def test_b_matrix_is_preserved_in_span():
    B = [[2, 0], [5, 3]]
    H = strong_echelon(R6, B)
    assert span_set(R6, H) == span_set(R6, B) and prefix_spans_closed(R6, H)


def test_all_z6_matrices():
    split = z6_split()
    forms = {}
    for A in ALL_Z6:
        H = strong_echelon(R6, A)
        S = span_set(R6, A)
        assert is_strong_echelon_shape(R6, H), A
        assert span_set(R6, H) == S, A
        assert prefix_spans_closed(R6, H), A
        assert span_set(R6, split_strong_echelon(split, A)) == S, A
        N = howell_normalize(R6, H)
        assert howell_normalize(R6, N) == N
        assert forms.setdefault(frozenset(S), N) == N, A


def test_howell_constant_under_unit_rescaling():
    H = strong_echelon(R6, [[2, 0], [5, 3]])
    base = howell_normalize(R6, H)
    for u, w in itertools.product([1, 5], repeat=2):
        scaled = [[u * x % 6 for x in H[0]], [w * x % 6 for x in H[1]]]
        assert howell_normalize(R6, scaled) == base


def test_triangularize_preserves_determinant():
    R = ResidueRingZ(101)
    rng = random.Random(0)
    for _ in range(20):
        A = [[rng.randrange(101) for _ in range(4)] for _ in range(4)]
        T = triangularize(R, A)
        det_t = 1
        for i in range(4):
            det_t = det_t * T[i][i] % 101
        assert det_t == sympy.Matrix(A).det() % 101
        assert all(T[i][j] == 0 for i in range(4) for j in range(i + 1, 4))


def test_diagonal_adjust_examples():
    A = [[4, 1], [0, 2]]
    assert diagonal_adjust(R6, A, 0, 1) == A
    out = diagonal_adjust(R6, [[1, 0], [0, 0]], 3, 2)
    assert all(R6.div(3, out[i][i]) is not None for i in range(2))
    for d in range(6):
        (x,), = diagonal_adjust(R6, [[d]], 3, 2)
        assert R6.div(3, x) is not None


def test_crt_combine_examples():
    # M = S([[1, 3]]) over Z/6 with a = 3, b = 2, e = 1, f = 2
    M = [[1, 3]]
    R2, R3 = ResidueRingZ(2), ResidueRingZ(3)
    # A spans M + 3R^2, so it is computed mod 3; B spans M + 2R^2
    A = strong_echelon(R3, [[x % 3 for x in r] for r in M], 2)
    B = strong_echelon(R2, [[x % 2 for x in r] for r in M], 2)
    A = diagonal_adjust(R6, A, 3, 2)
    B = diagonal_adjust(R6, B, 2, 3)
    C = echelon_crt_combine(R6, A, B, 3, 2, 1, 2)
    assert span_set(R6, C) == span_set(R6, M)
    I = [[1, 0], [0, 1]]
    assert span_set(R6, echelon_crt_combine(R6, I, I, 3, 2, 1, 2)) == span_set(R6, I)


@pytest.fixture(scope="module")
def split6(Zs):
    Q = quotient_ring(Zs, 6)
    s = CrtSplit.from_ideals(Q, Ideal.principal(Zs, 2), Ideal.principal(Zs, 3))
    s.check()
    return s


def test_split_over_zsqrt10_mod_6(split6):
    Q = split6.ring
    rng = random.Random(1)
    for _ in range(40):
        A = [[Q.random_element(rng) for _ in range(3)] for _ in range(3)]
        H = strong_echelon(Q, A, 3, rng)
        S = split_strong_echelon(split6, A, 3, rng)
        assert is_strong_echelon_shape(Q, H)
        assert Q.module_lattice(H) == Q.module_lattice(A) == Q.module_lattice(S)


def test_howell_unique_over_quotient(Zs):
    Q = quotient_ring(Zs, 2)
    rng = random.Random(2)
    forms = {}
    for A in itertools.product(list(Q.elements()), repeat=4):
        A = [list(A[:2]), list(A[2:])]
        N = howell_normalize(Q, strong_echelon(Q, A, 2, rng))
        key = tuple(map(tuple, Q.module_lattice(A)))
        assert forms.setdefault(key, N) == N
