"""Strong echelon forms over principal ideal rings with effective basic operations.

The engine is ring-generic: it only calls ``zero``, ``one``, ``add``, ``sub``,
``mul``, ``is_zero``, ``xgcd`` and ``ann`` on the ring object (plus
``unit_normalize`` and ``reduce_coset`` for Howell normalization), so the same
code runs over :class:`~quotring.residue.ResidueRingZ` and
:class:`~quotring.quotient.QuotientRing`.

Orientation is pivot-last: in a strong echelon form ``H`` (square, ``m x m``)
row ``i`` is zero or has its last nonzero entry in column ``i``, and rows
``0..i`` span every module element supported on columns ``0..i``.
"""

from dataclasses import dataclass
from typing import Any, Callable

from .ideals import idempotent_split


def _comb(R, s, x, t, y):
    """Row ``s*x + t*y``."""
    return [R.add(R.mul(s, a), R.mul(t, b)) for a, b in zip(x, y)]


def _scale(R, c, x):
    return [R.mul(c, a) for a in x]


def _is_zero_row(R, x):
    return all(R.is_zero(a) for a in x)


def _pair(R, rows, j, i, col, rng):
    """Apply the unimodular xgcd transform that clears ``rows[i][col]`` into ``rows[j]``."""
    g, s, t, u, v = R.xgcd(rows[j][col], rows[i][col], rng)
    rj, ri = rows[j], rows[i]
    rows[j] = _comb(R, s, rj, t, ri)
    rows[i] = _comb(R, u, rj, v, ri)


def triangularize(R, A, ncols=None, rng=None):
    """Bring ``A`` to pivot-last triangular shape by determinant-one row operations.

    Returns the transformed rows (padded to at least ``ncols`` rows). Row ``j``
    for ``j < ncols`` has no nonzero entries right of column ``j``; every row
    beyond ``ncols`` is zero. Only ``2 x 2`` transforms of determinant 1 are
    used, so for a square input the determinant is the product of the diagonal.
    """
    m = ncols if ncols is not None else len(A[0])
    rows = [list(r) for r in A]
    while len(rows) < m:
        rows.append([R.zero] * m)
    n = len(rows)
    for j in range(m - 1, -1, -1):
        for i in list(range(j)) + list(range(m, n)):
            if not R.is_zero(rows[i][j]):
                _pair(R, rows, j, i, j, rng)
    return rows


def strong_echelon(R, A, ncols=None, rng=None):
    """Strong echelon form (``m x m``, zero rows kept) of the row span of ``A``."""
    m = ncols if ncols is not None else len(A[0])
    T = triangularize(R, A, m, rng)
    H = T[:m]
    zero_row = [R.zero] * m
    for j in range(m - 1, -1, -1):
        if R.is_zero(H[j][j]):
            # a row without pivot is moved out entirely and re-absorbed below
            extra, H[j] = H[j], list(zero_row)
        else:
            extra = _scale(R, R.ann(H[j][j], rng), H[j])
        for i in range(j - 1, -1, -1):
            if _is_zero_row(R, extra):
                break
            if R.is_zero(extra[i]):
                continue
            rows = [H[i], extra]
            _pair(R, rows, 0, 1, i, rng)
            H[i], extra = rows
    return H


def howell_normalize(R, H, rng=None):
    """Canonical form of a strong echelon form: unit-normalized pivots, reduced entries.

    Two strong echelon forms with the same span normalize to the same matrix.
    """
    m = len(H)
    H = [list(r) for r in H]
    for k in range(m):
        if R.is_zero(H[k][k]):
            continue
        u, _ = R.unit_normalize(H[k][k])
        H[k] = _scale(R, u, H[k])
        for i in range(k - 1, -1, -1):
            if R.is_zero(H[i][i]) and R.is_zero(H[k][i]):
                continue
            q, _ = R.reduce_coset(H[k][i], H[i][i])
            if not R.is_zero(q):
                H[k] = [R.sub(a, R.mul(q, b)) for a, b in zip(H[k], H[i])]
    return H


def diagonal_adjust(R, A, a, b):
    """Rows ``b*A_i + a*e_i``; makes every nonzero diagonal entry a divisor of ``a``."""
    out = []
    for i, row in enumerate(A):
        new = _scale(R, b, row)
        if i < len(new):
            new[i] = R.add(new[i], a)
        out.append(new)
    return out


def echelon_crt_combine(R, A, B, a, b, e, f):
    """``f*b*A + e*a*B`` for strong echelon forms of ``M + aR^m`` and ``M + bR^m``."""
    fb = R.mul(f, b)
    ea = R.mul(e, a)
    width = len(A[0]) if A else len(B[0])
    zero = [R.zero] * width
    n = max(len(A), len(B))
    A = list(A) + [zero] * (n - len(A))
    B = list(B) + [zero] * (n - len(B))
    return [_comb(R, fb, x, ea, y) for x, y in zip(A, B)]


@dataclass
class CrtSplit:
    """A ring ``R`` with ``ab = 0`` and ``ea + fb = 1`` and its two factor rings.

    ``to_a`` maps an element of ``R`` to ``R/(a)`` and ``from_a`` lifts back any
    preimage; likewise for ``b``.
    """

    ring: Any
    ring_a: Any
    ring_b: Any
    to_a: Callable
    from_a: Callable
    to_b: Callable
    from_b: Callable
    a: Any
    b: Any
    e: Any
    f: Any

    @classmethod
    def from_ideals(cls, Q, ideal_a, ideal_b, ring_a=None, to_a=None, from_a=None):
        """Split ``Q = O/(ab)`` along coprime ideals using orthogonal idempotents.

        With ``x + y = 1``, ``x`` in ``ideal_a`` and ``y`` in ``ideal_b``, the
        images of ``x`` and ``y`` generate the two ideals in ``Q``, multiply to
        zero and sum to one, so ``e = f = 1``. ``ring_a`` may be supplied
        together with its own maps (the Z/mZ fast path does this).
        """
        from .quotient import QuotientRing

        x, y = idempotent_split(ideal_a, ideal_b)
        if ring_a is None:
            ring_a = QuotientRing(Q.ring, ideal_a)
            to_a = lambda z: ring_a.project(Q.lift(z))  # noqa: E731
            from_a = lambda z: Q.project(ring_a.lift(z))  # noqa: E731
        ring_b = QuotientRing(Q.ring, ideal_b)
        return cls(
            ring=Q,
            ring_a=ring_a,
            ring_b=ring_b,
            to_a=to_a,
            from_a=from_a,
            to_b=lambda z: ring_b.project(Q.lift(z)),
            from_b=lambda z: Q.project(ring_b.lift(z)),
            a=Q.project(x),
            b=Q.project(y),
            e=Q.one,
            f=Q.one,
        )

    def check(self):
        R = self.ring
        assert R.is_zero(R.mul(self.a, self.b))
        assert R.add(R.mul(self.e, self.a), R.mul(self.f, self.b)) == R.one


def split_strong_echelon(split, A, ncols=None, rng=None):
    """Strong echelon form over ``split.ring`` computed in the two factor rings."""
    R = split.ring
    m = ncols if ncols is not None else len(A[0])
    Ha = strong_echelon(split.ring_a, [[split.to_a(x) for x in r] for r in A], m, rng)
    Hb = strong_echelon(split.ring_b, [[split.to_b(x) for x in r] for r in A], m, rng)
    Ha = diagonal_adjust(R, [[split.from_a(x) for x in r] for r in Ha], split.a, split.b)
    Hb = diagonal_adjust(R, [[split.from_b(x) for x in r] for r in Hb], split.b, split.a)
    return echelon_crt_combine(R, Ha, Hb, split.a, split.b, split.e, split.f)


def is_strong_echelon_shape(R, H):
    """Echelon shape: row ``i`` is zero or its last nonzero entry is in column ``i``."""
    m = len(H[0]) if H else 0
    for i, row in enumerate(H):
        nz = [k for k, x in enumerate(row) if not R.is_zero(x)]
        if nz and (i >= m or nz[-1] != i):
            return False
    return True
