"""Integer extended gcd and the residue ring Z/NZ.

Elements of ``Z/NZ`` are plain Python ints in ``[0, N)``. Every operation is
deterministic; the ``rng`` keyword accepted by some methods exists only so
that ``ResidueRingZ`` and :class:`quotring.quotient.QuotientRing` can be
driven by the same generic echelon code.
"""

from math import gcd


def int_xgcd(a, b):
    """Extended gcd over Z with a unimodular certificate.

    Returns ``(g, s, t, u, v)`` with ``g = gcd(a, b) >= 0``, ``g = s*a + t*b``,
    ``u*a + v*b = 0`` and ``s*v - u*t = 1``. For ``g != 0`` the second column is
    ``(-b/g, a/g)``.

    >>> int_xgcd(6, 10)
    (2, 2, -1, -5, 3)
    """
    if a == 0 and b == 0:
        return 0, 1, 0, 0, 1
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0, -(b // r0), a // r0


def stab(x, m, n):
    """Return ``x + k*m`` coprime to ``n``, given ``gcd(x, m) == 1`` and ``m | n``.

    Deterministic: strip from ``n`` every prime shared with ``m`` and pick ``k``
    so the result is 1 modulo the remaining cofactor.
    """
    r = n
    h = gcd(r, m)
    while h > 1:
        r //= h
        h = gcd(r, m)
    if r == 1:
        return x % n
    k = (1 - x) * pow(m, -1, r) % r
    return (x + k * m) % n


class ResidueRingZ:
    """The ring Z/NZ with the basic operations of a Euclidean ring.

    The Euclidean function is ``phi(a) = gcd(a, N)`` with ``phi(0) = N``.
    """

    def __init__(self, N):
        N = int(N)
        if N < 1:
            raise ValueError(f"modulus must be positive, got {N}")
        self.N = N
        self.zero = 0
        self.one = 1 % N

    def __repr__(self):
        return f"ResidueRingZ({self.N})"

    def __eq__(self, other):
        return isinstance(other, ResidueRingZ) and other.N == self.N

    def __hash__(self):
        return hash(("ResidueRingZ", self.N))

    def __call__(self, x):
        return int(x) % self.N

    # ring arithmetic
    def add(self, a, b):
        return (a + b) % self.N

    def sub(self, a, b):
        return (a - b) % self.N

    def neg(self, a):
        return -a % self.N

    def mul(self, a, b):
        return a * b % self.N

    def is_zero(self, a):
        return a % self.N == 0

    def phi(self, a):
        return gcd(a, self.N)

    def is_unit(self, a):
        return gcd(a, self.N) == 1

    def elements(self):
        return range(self.N)

    def random_element(self, rng):
        return rng.randrange(self.N)

    # exact division
    def div(self, a, b, rng=None):
        """Return some ``c`` with ``b*c = a``, or ``None`` if ``b`` does not divide ``a``."""
        N = self.N
        g = gcd(b, N)
        if a % g:
            return None
        if g == N:
            return 0
        M = N // g
        return (a // g) * pow(b // g, -1, M) % M

    # Euclidean division
    def eudiv(self, a, b, rng=None):
        """Deterministic Euclidean division: the remainder is ``a mod gcd(b, N)``."""
        if b % self.N == 0:
            raise ZeroDivisionError("division by zero")
        g = gcd(b, self.N)
        r = a % g
        q = self.div((a - r) % self.N, b)
        return q, r

    # extended gcd
    def xgcd(self, a, b, rng=None):
        """Extended gcd whose cofactor column holds coprime minimal quotients.

        >>> ResidueRingZ(30).xgcd(6, 10)
        (2, 2, 29, 25, 3)
        """
        N = self.N
        a %= N
        b %= N
        if a == 0 and b == 0:
            return 0, 1 % N, 0, 0, 1 % N
        g = gcd(gcd(a, b), N)
        e = self.min_quotient(a, g)
        f = self.min_quotient(b, g)
        h, s, t, _, _ = int_xgcd(e, f)
        hinv = pow(h, -1, N) if N > 1 else 0
        return g, s * hinv % N, t * hinv % N, -f % N, e

    def min_quotient(self, a, b, rng=None):
        """Return ``c`` with ``b*c = a`` and ``phi(c) = phi(a) / phi(b)``."""
        N = self.N
        g = gcd(b, N)
        if a % g:
            raise ValueError(f"{b} does not divide {a} in Z/{N}Z")
        M = N // g
        c0 = (a // g) * pow(b // g, -1, M) % M if M > 1 else 0
        t = gcd(c0, M)
        if M == 1:
            # every c works; phi(a)/phi(b) = 1, so take a unit
            return 1 % N
        # c = t*c1 with gcd(c1, M/t) = 1; lift c1 to be coprime to N/t
        c1 = c0 // t
        return t * stab(c1, M // t, N // t) % N

    # annihilator
    def ann(self, a, rng=None):
        return self.N // gcd(a, self.N) % self.N

    # ideal generators; ideals of Z/NZ are handed around by an integer generator
    def gen(self, ideal, rng=None):
        return gcd(ideal, self.N) % self.N

    def unit_normalize(self, a, rng=None):
        """Return ``(u, g)`` with ``u`` a unit and ``u*a = g = gcd(a, N)``."""
        N = self.N
        a %= N
        if a == 0:
            return 1 % N, 0
        g = gcd(a, N)
        M = N // g
        return stab(pow(a // g, -1, M), M, N), g

    def reduce_coset(self, x, d, rng=None):
        """Return ``(q, r)`` with ``x = q*d + r`` and ``r`` canonical modulo ``(d)``."""
        g = gcd(d, self.N)
        r = x % g
        q = self.div((x - r) % self.N, d)
        return q, r

    def bezout_coprime(self, e, f, rng=None):
        h, s, t, _, _ = int_xgcd(e, f)
        if gcd(h, self.N) != 1:
            return None
        hinv = pow(h, -1, self.N) if self.N > 1 else 0
        return s * hinv % self.N, t * hinv % self.N

    def module_lattice(self, rows):
        """HNF of the lift of the submodule of (Z/NZ)^k spanned by ``rows``."""
        from .linalg import hnf, identity

        k = len(rows[0])
        return hnf([list(r) for r in rows] + identity(k, self.N), modulus=self.N, ncols=k)
