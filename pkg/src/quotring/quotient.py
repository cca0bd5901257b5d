"""The residue ring O/m as an effective Euclidean ring.

The modulus is diagonalized once with a Smith normal form: there is a Z-basis
``w'`` of O with ``m = n_0 w'_0 Z + ... + n_{d-1} w'_{d-1} Z``. Residues are
stored as adapted coordinate tuples with ``0 <= a_k < n_k``, so projecting is
``d`` independent remainders and the ring is ``Z/n_0 x ... x Z/n_{d-1}`` as an
abelian group.

The Euclidean function is ``phi(a) = N((a) + m)``. Every randomized loop takes
an explicit ``random.Random`` (falling back to one owned by the ring) and is
capped at :data:`MAX_TRIALS` attempts.
"""

import hashlib
import itertools
import random
from math import prod

from .errors import SamplingBudgetExhausted, ZeroIdealError
from .ideals import Ideal
from .linalg import hnf, identity, matrix_inverse_unimodular, reduce_vector, snf, solve_mod, vecmat

MAX_TRIALS = 10**6


class QuotientRing:
    """``O/m`` for a nonzero integral ideal ``m`` of a number ring ``O``."""

    def __init__(self, ring, modulus, seed=0):
        if not isinstance(modulus, Ideal):
            raise TypeError("modulus must be an Ideal")
        if modulus.ring != ring:
            raise ValueError("modulus belongs to a different ring")
        self.ring = ring
        self.modulus = modulus
        d = self.degree = ring.degree
        _, D, V = snf([list(r) for r in modulus.basis])
        W = matrix_inverse_unimodular(V)
        self.n = tuple(D[i][i] for i in range(d))
        self.N = prod(self.n)
        self.E = self.n[-1]  # exponent of O/m; every n_k divides it
        self.to_adapted = V
        self.from_adapted = W
        # structure constants in the adapted basis, reduced per output coordinate
        # (the copy reduced mod N is exact modulo N*Z^d, as the gen certificate needs)
        g = [[None] * d for _ in range(d)]
        gN = [[None] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                c = vecmat(ring.mul(W[i], W[j]), V)
                g[i][j] = g[j][i] = [x % nk for x, nk in zip(c, self.n)]
                gN[i][j] = gN[j][i] = [x % self.N for x in c]
        self.gamma = g
        self._gamma_N = gN
        self._scale = [self.E // nk for nk in self.n]
        self._diag = [[self.n[i] if i == j else 0 for j in range(d)] for i in range(d)]
        self.zero = (0,) * d
        self.one = self.project(ring.one())
        self.rng = random.Random(seed)

    def __repr__(self):
        return f"QuotientRing({self.ring!r}, n={list(self.n)})"

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("QuotientRing", self.modulus))

    def _rng(self, rng):
        return self.rng if rng is None else rng

    # representation and arithmetic -----------------------------------
    def project(self, x):
        """Canonical image of a ring element given by basis coordinates."""
        if isinstance(x, int):
            x = self.ring.scalar(x)
        elif hasattr(x, "coords"):
            x = x.coords
        return tuple(c % nk for c, nk in zip(vecmat(x, self.to_adapted), self.n))

    __call__ = project

    def lift(self, a):
        """Ring element (basis coordinates) with adapted coordinates in ``[0, n_k)``."""
        return vecmat(a, self.from_adapted)

    def add(self, a, b):
        return tuple((x + y) % nk for x, y, nk in zip(a, b, self.n))

    def sub(self, a, b):
        return tuple((x - y) % nk for x, y, nk in zip(a, b, self.n))

    def neg(self, a):
        return tuple(-x % nk for x, nk in zip(a, self.n))

    def mul(self, a, b):
        d = self.degree
        out = [0] * d
        g = self.gamma
        for i, ai in enumerate(a):
            if not ai:
                continue
            gi = g[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                c = ai * bj
                for k, x in enumerate(gi[j]):
                    if x:
                        out[k] += c * x
        return tuple(x % nk for x, nk in zip(out, self.n))

    def scalar_mul(self, c, a):
        return tuple(c * x % nk for x, nk in zip(a, self.n))

    def is_zero(self, a):
        return not any(a)

    def elements(self):
        return itertools.product(*(range(nk) for nk in self.n))

    def random_element(self, rng=None):
        rng = self._rng(rng)
        return tuple(rng.randrange(nk) for nk in self.n)

    def rep_matrix(self, a, _gamma=None):
        """Adapted coordinates of ``w'_i * a`` as row ``i``."""
        d = self.degree
        g = _gamma or self.gamma
        rows = []
        for i in range(d):
            out = [0] * d
            for j, aj in enumerate(a):
                if aj:
                    for k, x in enumerate(g[i][j]):
                        out[k] += aj * x
            rows.append(out)
        return rows

    # ideals of O/m, as HNF lattices in adapted coordinates containing m
    def ideal_lattice(self, gens):
        rows = [r for a in gens for r in self.rep_matrix(a)] + self._diag
        return hnf(rows, modulus=self.E, ncols=self.degree)

    def lattice_to_ideal(self, L):
        """Integral ideal of O whose image in O/m is the lattice ``L``."""
        rows = [vecmat(r, self.from_adapted) for r in L]
        return Ideal(self.ring, hnf(rows, modulus=self.E, ncols=self.degree))

    def ideal_to_lattice(self, a):
        rows = [vecmat(r, self.to_adapted) for r in a.basis] + self._diag
        return hnf(rows, modulus=self.E, ncols=self.degree)

    def phi(self, a):
        """``N((a) + m)``; equals ``N`` for the zero class and 1 for units."""
        L = self.ideal_lattice([a])
        return prod(L[i][i] for i in range(self.degree))

    def is_unit(self, a):
        return self.phi(a) == 1

    # exact division -------------------------------------------------------------------
    def _scaled(self, rows):
        return [[x * s for x, s in zip(r, self._scale)] for r in rows]

    def div_with_kernel(self, a, b):
        """Solve ``b*c = a``.

        Returns ``(c, K)`` where ``K`` is the HNF lattice (adapted coordinates)
        of all ``y`` with ``y*b = 0``, i.e. the lift of ``Ann(b)``. Returns
        ``None`` when ``b`` does not divide ``a``.
        """
        M = self._scaled(self.rep_matrix(b))
        rhs = [x * s for x, s in zip(a, self._scale)]
        sol = solve_mod(M, rhs, self.E)
        if sol is None:
            return None
        x, K = sol
        return tuple(c % nk for c, nk in zip(x, self.n)), K

    def div(self, a, b, rng=None):
        sol = self.div_with_kernel(a, b)
        return None if sol is None else sol[0]

    def divides(self, b, a):
        return self.div_with_kernel(a, b) is not None

    # Euclidean division -------------------------------------------------------------------
    def eudiv_rounds(self, a, b, rng=None):
        """Euclidean division returning ``(q, r, rounds)``.

        Exact division is tried first; ``rounds`` counts the random quotients
        drawn afterwards and is 0 when ``b`` divides ``a``.
        """
        if self.is_zero(b):
            raise ZeroDivisionError("division by zero")
        c = self.div(a, b)
        if c is not None:
            return c, self.zero, 0
        rng = self._rng(rng)
        bound = self.phi(b)
        for t in range(1, MAX_TRIALS + 1):
            q = self.random_element(rng)
            r = self.sub(a, self.mul(q, b))
            if self.is_zero(r) or self.phi(r) < bound:
                return q, r, t
        raise SamplingBudgetExhausted("sampling budget exhausted in eudiv")

    def eudiv(self, a, b, rng=None):
        q, r, _ = self.eudiv_rounds(a, b, rng)
        return q, r

    # ideal generators -------------------------------------------------------------------
    def gen_rounds(self, ideal, rng=None, first_guess=True):
        """Generator of the image of ``ideal`` plus the number of candidates tried.

        ``ideal`` is an :class:`Ideal` of O or a lattice from
        :meth:`ideal_lattice`. The candidate ``c`` is a combination of a basis
        of ``ideal + m`` with coefficients uniform in ``[0, N^2)`` and is
        accepted once ``(N, c) = ideal + m``. With ``first_guess`` the sum of
        the basis rows is tried before any random candidate; for principal
        lattices in Z/NZ that is the gcd itself.
        """
        target = self.ideal_to_lattice(ideal) if isinstance(ideal, Ideal) else [list(r) for r in ideal]
        d = self.degree
        N = self.N
        if all(target[i][i] == 1 for i in range(d)):
            return self.one, 0
        if all(target[i][i] == self.n[i] for i in range(d)):
            return self.zero, 0
        # (N) is contained in m, so compare lattices that already contain N*Z^d
        rng = self._rng(rng)
        span = N * N
        want = hnf(target, modulus=N, ncols=d)
        NI = identity(d, N)
        if first_guess:
            c = [sum(col) for col in zip(*target)]
            if hnf(self.rep_matrix(c, self._gamma_N) + NI, modulus=N, ncols=d) == want:
                return tuple(x % nk for x, nk in zip(c, self.n)), 1
        for t in range(1 + first_guess, MAX_TRIALS + 1):
            c = [0] * d
            for row in target:
                k = rng.randrange(span)
                if k:
                    for j, x in enumerate(row):
                        c[j] += k * x
            if hnf(self.rep_matrix(c, self._gamma_N) + NI, modulus=N, ncols=d) == want:
                return tuple(x % nk for x, nk in zip(c, self.n)), t
        raise SamplingBudgetExhausted("sampling budget exhausted in gen")

    def gen(self, ideal, rng=None):
        return self.gen_rounds(ideal, rng)[0]

    # annihilator -------------------------------------------------------------------
    def ann(self, b, rng=None):
        """Generator of the annihilator of ``b``."""
        _, K = self.div_with_kernel(self.zero, b)
        return self.gen(K, rng)

    def min_quotient(self, a, b, rng=None):
        """Return ``c`` with ``b*c = a`` and ``phi(c) = phi(a)/phi(b)``."""
        sol = self.div_with_kernel(a, b)
        if sol is None:
            raise ValueError("not divisible")
        c0, K = sol
        want = self.phi(a) // self.phi(b)
        if self.phi(c0) == want:
            return c0
        rng = self._rng(rng)
        E = self.E
        for _ in range(MAX_TRIALS):
            c = list(c0)
            for row in K:
                k = rng.randrange(E)
                if k:
                    for j, x in enumerate(row):
                        c[j] += k * x
            c = tuple(x % nk for x, nk in zip(c, self.n))
            if self.phi(c) == want:
                return c
        raise SamplingBudgetExhausted("sampling budget exhausted in min_quotient")

    def bezout_coprime(self, e, f, rng=None):
        """Return ``(u, v)`` with ``u*e + v*f = 1``, or ``None`` if not coprime."""
        M = self._scaled(self.rep_matrix(e) + self.rep_matrix(f))
        rhs = [x * s for x, s in zip(self.one, self._scale)]
        sol = solve_mod(M, rhs, self.E)
        if sol is None:
            return None
        x = sol[0]
        d = self.degree
        u = tuple(c % nk for c, nk in zip(x[:d], self.n))
        v = tuple(c % nk for c, nk in zip(x[d:], self.n))
        return u, v

    # extended gcd -------------------------------------------------------------------
    def xgcd(self, a, b, rng=None):
        """Return ``(g, s, t, u, v)`` with ``g = s*a + t*b``, ``u*a + v*b = 0``, ``s*v - t*u = 1``."""
        zero, one = self.zero, self.one
        if self.is_zero(a) and self.is_zero(b):
            return zero, one, zero, zero, one
        if self.is_zero(b):
            return a, one, zero, zero, one
        if self.is_zero(a):
            return b, zero, one, self.neg(one), zero
        if self.is_unit(a):
            return one, self.div(one, a), zero, self.neg(b), a
        if self.is_unit(b):
            return one, zero, self.div(one, b), self.neg(b), a
        g = self.gen(self.ideal_lattice([a, b]), rng)
        e = self.min_quotient(a, g, rng)
        f = self.min_quotient(b, g, rng)
        s, t = self.bezout_coprime(e, f)
        return g, s, t, self.neg(f), e

    # canonical forms for Howell normalization ----------------------------
    def canonical_generator(self, L):
        """Deterministic generator of the ideal with lattice ``L``."""
        key = repr((self.N, self.n, [list(r) for r in L])).encode()
        seed = int.from_bytes(hashlib.sha256(key).digest()[:8], "big")
        return self.gen(L, random.Random(seed))

    def unit_normalize(self, a, rng=None):
        """Return ``(u, g)`` with ``u`` a unit and ``u*a = g`` canonical for ``(a)``."""
        if self.is_zero(a):
            return self.one, self.zero
        g = self.canonical_generator(self.ideal_lattice([a]))
        u = self.min_quotient(g, a, random.Random(0))
        return u, g

    def reduce_coset(self, x, dv, rng=None):
        """Return ``(q, r)`` with ``x = q*dv + r`` and ``r`` canonical modulo ``(dv)``."""
        L = self.ideal_lattice([dv])
        r = tuple(c % nk for c, nk in zip(reduce_vector(L, x)[0], self.n))
        q = self.div(self.sub(x, r), dv)
        return q, r

    # modules -------------------------------------------------------------
    def module_lattice(self, rows):
        """Z-lattice (adapted coordinates, flattened) of the submodule of (O/m)^k spanned by ``rows``."""
        if not rows:
            raise ValueError("need at least one row to infer the width")
        d = self.degree
        k = len(rows[0])
        gens = []
        for row in rows:
            reps = [self.rep_matrix(x) for x in row]
            for i in range(d):
                gens.append([v for M in reps for v in M[i]])
        for j in range(k):
            for i in range(d):
                r = [0] * (k * d)
                r[j * d + i] = self.n[i]
                gens.append(r)
        return hnf(gens, modulus=self.E, ncols=k * d)


def quotient_ring(ring, modulus, seed=0):
    if isinstance(modulus, int):
        if modulus == 0:
            raise ZeroIdealError("zero ideal")
        modulus = Ideal.principal(ring, modulus)
    return QuotientRing(ring, modulus, seed)
