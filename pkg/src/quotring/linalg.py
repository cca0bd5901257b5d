"""Exact integer matrix kernels.

Matrices are lists of rows of Python ints and act on row vectors from the
right. Hermite forms use the pivot-last orientation throughout: the pivot of a
row is its last nonzero entry, pivot columns strictly increase down the rows,
pivots are positive, and the entries of later rows in a pivot column are
reduced into ``[0, pivot)``.
"""

import random
from math import gcd, prod

from .errors import BoundTooSmallError, SingularMatrixError
from .residue import int_xgcd


def identity(n, scale=1):
    return [[scale if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    cols = list(zip(*B))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in A]


def vecmat(v, M):
    """Row vector times matrix."""
    if not M:
        return []
    out = [0] * len(M[0])
    for c, row in zip(v, M):
        if c:
            for k, x in enumerate(row):
                if x:
                    out[k] += c * x
    return out


def _axpy(r, q, p, stop):
    """Return ``r - q*p`` on the first ``stop`` entries, ``r`` unchanged beyond."""
    return [x - q * y for x, y in zip(r[:stop], p[:stop])] + r[stop:]


def pivot_of(row):
    for k in range(len(row) - 1, -1, -1):
        if row[k]:
            return k
    return -1


def hnf(M, modulus=None, ncols=None):
    """Row Hermite normal form in pivot-last orientation; zero rows dropped.

    With ``modulus = D`` the result spans ``rowspan(M) + D*Z^n`` and all
    intermediate entries stay below ``D`` in absolute value.

    >>> hnf([[2, 0], [0, 2], [1, 1]])
    [[2, 0], [1, 1]]
    """
    if ncols is None:
        if not M:
            raise ValueError("cannot infer the column count of an empty matrix")
        ncols = len(M[0])
    D = abs(modulus) if modulus else 0
    if D:
        pool = [[x % D for x in r] for r in M]
    else:
        pool = [list(r) for r in M]
    pool = [r for r in pool if any(r)]
    pivot_rows = []
    for j in range(ncols - 1, -1, -1):
        stop = j + 1
        cand = [r for r in pool if r[j]]
        rest = [r for r in pool if not r[j]]
        if D:
            e = [0] * ncols
            e[j] = D
            cand.append(e)
        if not cand:
            pool = rest
            continue
        while len(cand) > 1:
            k = min(range(len(cand)), key=lambda i: abs(cand[i][j]))
            p = cand[k]
            pj = p[j]
            nxt = [p]
            for i, r in enumerate(cand):
                if i == k:
                    continue
                r = _axpy(r, r[j] // pj, p, stop)
                if D:
                    r = [x % D for x in r[:j]] + r[j:]
                if r[j]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            cand = nxt
        p = cand[0]
        if p[j] < 0:
            p = [-x for x in p]
        if D:
            p = [x % D for x in p[:j]] + p[j:]
        pivot_rows.append((j, p))
        pool = [r for r in rest if any(r)]
    pivot_rows.reverse()
    rows = [p for _, p in pivot_rows]
    cols = [j for j, _ in pivot_rows]
    for a in range(len(rows)):
        r = rows[a]
        for b in range(a - 1, -1, -1):
            c = cols[b]
            q = r[c] // rows[b][c]
            if q:
                r = _axpy(r, q, rows[b], c + 1)
        rows[a] = r
    return rows


def hnf_det(M, D, ncols):
    """Pivot-last HNF of a full-rank lattice, given a multiple ``D`` of its determinant.

    Each column is merged into one pivot row with integer xgcd steps and the
    pivot is then combined with ``R*e_j`` for the current modulus ``R``. The
    lattice of the remaining columns has determinant dividing ``R / pivot``, so
    the modulus shrinks as the elimination proceeds.
    """
    R = abs(D)
    if R == 0:
        raise ValueError("hnf_det needs a nonzero determinant multiple")
    pool = [[x % R for x in r] for r in M]
    pool = [r for r in pool if any(r)]
    pivots = [None] * ncols
    for j in range(ncols - 1, -1, -1):
        p = None
        rest = []
        for r in pool:
            if not r[j]:
                rest.append(r)
                continue
            if p is None:
                p = r
                continue
            g, s, t, u, v = int_xgcd(p[j], r[j])
            p, r = (
                [(s * x + t * y) % R for x, y in zip(p[:j], r[:j])] + [g],
                [(u * x + v * y) % R for x, y in zip(p[:j], r[:j])],
            )
            if any(r):
                rest.append(r + [0])
        g, s, _, _, _ = int_xgcd(p[j] if p is not None else 0, R)
        if p is None:
            p = [0] * j + [R]
        else:
            p = [s * x % R for x in p[:j]] + [g]
        pivots[j] = p
        R //= g
        if R == 1:
            # the remaining columns form the full lattice
            for i in range(j):
                pivots[i] = [0] * i + [1]
            break
        pool = [[x % R for x in r[:j]] for r in rest]
        pool = [r for r in pool if any(r)]
    rows = [r + [0] * (ncols - len(r)) for r in pivots]
    for a in range(ncols):
        r = rows[a]
        for b in range(a - 1, -1, -1):
            q = r[b] // rows[b][b]
            if q:
                r = _axpy(r, q, rows[b], b + 1)
        rows[a] = r
    return rows


def hnf_with_transform(M):
    """Return ``(H, U, K)`` with ``H`` the pivot-last HNF of ``M``.

    ``U`` has one row per row of ``H`` and ``U*M = H``; the rows of ``K`` form a
    basis of the integer left kernel ``{x : x*M = 0}``.
    """
    n = len(M)
    if n == 0:
        return [], [], []
    ncols = len(M[0])
    aug = [list(r) + [1 if i == k else 0 for k in range(n)] for i, r in enumerate(M)]
    pool = aug
    pivots = []
    kernel = []
    for j in range(ncols - 1, -1, -1):
        cand = [r for r in pool if r[j]]
        rest = [r for r in pool if not r[j]]
        if not cand:
            continue
        while len(cand) > 1:
            k = min(range(len(cand)), key=lambda i: abs(cand[i][j]))
            p = cand[k]
            pj = p[j]
            nxt = [p]
            for i, r in enumerate(cand):
                if i == k:
                    continue
                q = r[j] // pj
                r = [x - q * y for x, y in zip(r, p)]
                (nxt if r[j] else rest).append(r)
            cand = nxt
        p = cand[0]
        if p[j] < 0:
            p = [-x for x in p]
        pivots.append((j, p))
        pool = rest
    kernel = [r[ncols:] for r in pool]
    pivots.reverse()
    rows = [p for _, p in pivots]
    cols = [j for j, _ in pivots]
    for a in range(len(rows)):
        r = rows[a]
        for b in range(a - 1, -1, -1):
            c = cols[b]
            q = r[c] // rows[b][c]
            if q:
                r = [x - q * y for x, y in zip(r, rows[b])]
        rows[a] = r
    H = [r[:ncols] for r in rows]
    U = [r[ncols:] for r in rows]
    return H, U, kernel


def reduce_vector(H, v):
    """Reduce ``v`` modulo the lattice with pivot-last HNF basis ``H``.

    The result is the canonical representative of ``v + rowspan(H)``; it is the
    zero vector exactly when ``v`` lies in the lattice. Returns the reduced
    vector together with the coefficients used.
    """
    v = list(v)
    coeffs = [0] * len(H)
    for idx in range(len(H) - 1, -1, -1):
        row = H[idx]
        c = pivot_of(row)
        q = v[c] // row[c]
        if q:
            coeffs[idx] = q
            v = _axpy(v, q, row, c + 1)
    return v, coeffs


def lattice_contains(H, v):
    for idx in range(len(H) - 1, -1, -1):
        row = H[idx]
        c = pivot_of(row)
        if any(v[c + 1:]):
            return False
        q, rem = divmod(v[c], row[c])
        if rem:
            return False
        if q:
            v = _axpy(v, q, row, c + 1)
    return not any(v)


def solve_z(M, b):
    """Return an integer ``x`` with ``x*M = b``, or ``None`` when there is none."""
    H, U, _ = hnf_with_transform(M)
    v = list(b)
    coeffs = [0] * len(H)
    for idx in range(len(H) - 1, -1, -1):
        row = H[idx]
        c = pivot_of(row)
        if any(v[c + 1:]):
            return None
        q, rem = divmod(v[c], row[c])
        if rem:
            return None
        coeffs[idx] = q
        if q:
            v = _axpy(v, q, row, c + 1)
    if any(v):
        return None
    return vecmat(coeffs, U) if U else [0] * len(M)


def solve_mod(A, b, N):
    """Solve ``x*A = b (mod N)``.

    Returns ``(x, K)`` where ``x`` is a particular solution with entries in
    ``[0, N)`` and ``K`` is the pivot-last HNF basis of the full solution
    lattice of the homogeneous system (it always contains ``N*Z^k``). Returns
    ``None`` if the system has no solution.
    """
    k = len(A)
    ncols = len(A[0]) if A else len(b)
    S = [list(r) for r in A] + identity(ncols, N)
    H, U, kernel = hnf_with_transform(S)
    v = [x % N for x in b]
    coeffs = [0] * len(H)
    for idx in range(len(H) - 1, -1, -1):
        row = H[idx]
        c = pivot_of(row)
        if any(v[c + 1:]):
            return None
        q, rem = divmod(v[c], row[c])
        if rem:
            return None
        coeffs[idx] = q
        if q:
            v = _axpy(v, q, row, c + 1)
    if any(v):
        return None
    full = vecmat(coeffs, U)
    x = [c % N for c in full[:k]]
    K = hnf([r[:k] for r in kernel] + identity(k, N), modulus=N, ncols=k) if k else []
    return x, K


def snf(M):
    """Smith normal form of a nonsingular square matrix.

    Returns ``(U, D, V)`` with ``U*M*V = D`` diagonal, positive, each diagonal
    entry dividing the next, and ``U``, ``V`` unimodular.
    """
    n = len(M)
    A = [list(r) for r in M]
    U = identity(n)
    V = identity(n)
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                raise SingularMatrixError("singular matrix")
            i, j = best
            if i != t:
                A[t], A[i] = A[i], A[t]
                U[t], U[i] = U[i], U[t]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
                for row in V:
                    row[t], row[j] = row[j], row[t]
            p = A[t][t]
            dirty = False
            for i in range(t + 1, n):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
            U[t] = [x + y for x, y in zip(U[t], U[bad])]
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V


def det_bareiss(M):
    """Exact determinant by fraction-free elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        akk = A[k][k]
        rk = A[k]
        for i in range(k + 1, n):
            ri = A[i]
            aik = ri[k]
            ri[k] = 0
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def matrix_inverse_unimodular(M):
    """Inverse of a unimodular integer matrix."""
    n = len(M)
    cols = []
    for k in range(n):
        e = [1 if i == k else 0 for i in range(n)]
        x = solve_z([list(c) for c in zip(*M)], e)
        if x is None:
            raise SingularMatrixError("matrix is not unimodular")
        cols.append(x)
    return [list(r) for r in zip(*cols)]


def lattice_intersect(A, B):
    """Intersection of two full-rank lattices given by basis rows."""
    n = len(A[0]) if A else 0
    if len(B[0]) != n or len(A) != n or len(B) != n:
        raise ValueError("lattice_intersect needs two full-rank bases of equal dimension")
    S = [list(r) for r in A] + [[-x for x in r] for r in B]
    _, _, kernel = hnf_with_transform(S)
    rows = [vecmat(k[:n], A) for k in kernel]
    D = abs(det_bareiss(A) * det_bareiss(B)) // gcd(det_bareiss(A), det_bareiss(B))
    return hnf(rows, modulus=D, ncols=n)


def crt_reconstruct(residues, moduli, bound):
    """Symmetric CRT: the unique ``x`` with ``|x| <= bound`` in the given classes.

    >>> crt_reconstruct([4, 6], [5, 7], 3)
    -1
    """
    P = prod(moduli)
    if P <= 2 * bound:
        raise BoundTooSmallError(f"product of moduli {P} does not exceed 2*{bound}")
    x = 0
    for r, m in zip(residues, moduli):
        Pm = P // m
        x += r * Pm * pow(Pm, -1, m)
    x %= P
    if x > P // 2:
        x -= P
    if abs(x) > bound:
        raise BoundTooSmallError(f"no representative within bound {bound}")
    return x


def rank_profile_mod_p(rows, p):
    """Indices of a maximal set of rows independent modulo the prime ``p``."""
    basis = {}  # pivot column -> reduced row
    chosen = []
    for idx, r in enumerate(rows):
        v = [x % p for x in r]
        for c in sorted(basis, reverse=True):
            if v[c]:
                b = basis[c]
                f = v[c]
                v = [(x - f * y) % p for x, y in zip(v, b)]
        c = pivot_of(v)
        if c >= 0:
            inv = pow(v[c], -1, p)
            basis[c] = [x * inv % p for x in v]
            chosen.append(idx)
    return chosen


def lattice_hnf(rows, ncols, rng=None):
    """HNF of an arbitrary generating set, reduced modulo a lattice determinant.

    A full-rank subset is located modulo a random prime and its exact
    determinant (Bareiss) serves as the modulus; rank-deficient inputs fall back
    to the plain algorithm.
    """
    rows = [list(r) for r in rows if any(r)]
    if len(rows) < ncols:
        return hnf(rows, ncols=ncols) if rows else []
    rng = rng or random.Random(len(rows))
    from sympy import prevprime

    for _ in range(3):
        p = prevprime(rng.randrange(2**60, 2**61))
        chosen = rank_profile_mod_p(rows, p)
        if len(chosen) == ncols:
            D = det_bareiss([rows[i] for i in chosen])
            if D:
                return hnf_det(rows, D, ncols)
    return hnf(rows, ncols=ncols)
