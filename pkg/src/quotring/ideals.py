"""Integral and fractional ideals stored as pivot-last HNF lattices.

An integral ideal is the row lattice of a ``d x d`` lower-triangular HNF basis
inside Z^d (coordinates with respect to the ring basis). Because row 0 is the
only basis row supported on the first coordinate, its pivot is the minimum of
the ideal.
"""

from math import gcd, lcm, prod

from .errors import NotCoprimeError, NotIntegralError, ZeroIdealError
from .linalg import hnf, hnf_with_transform, lattice_contains, reduce_vector, solve_z
from .numring import FieldElement, RingElement


def _coords(ring, x):
    if isinstance(x, RingElement):
        return list(x.coords)
    if isinstance(x, int):
        return ring.scalar(x)
    return list(x)


class Ideal:
    """A nonzero integral ideal of a :class:`~quotring.numring.NumberRing`."""

    __slots__ = ("ring", "basis", "norm", "minimum", "generator")

    def __init__(self, ring, basis, generator=None):
        d = ring.degree
        if len(basis) != d or any(r[i] <= 0 for i, r in enumerate(basis)):
            raise ZeroIdealError("zero ideal")
        self.ring = ring
        self.basis = tuple(tuple(r) for r in basis)
        self.norm = prod(r[i] for i, r in enumerate(self.basis))
        self.minimum = self.basis[0][0]
        # a known principal generator enables the cheap product path
        self.generator = tuple(generator) if generator is not None else None

    # construction ------------------------------------------------------
    @classmethod
    def from_generators(cls, ring, gens):
        """Smallest ideal containing ``gens`` (closed under the ring basis)."""
        gens = [_coords(ring, g) for g in gens]
        gens = [g for g in gens if any(g)]
        if not gens:
            raise ZeroIdealError("zero ideal")
        rows = [r for g in gens for r in ring.rep_matrix(g)]
        modulus = 0
        for g in gens:
            modulus = gcd(modulus, ring.norm(g))
        H = hnf(rows, modulus=modulus or None, ncols=ring.degree)
        if len(H) < ring.degree:
            raise ZeroIdealError("zero ideal")
        gen = gens[0] if len(gens) == 1 else None
        return cls(ring, H, generator=gen)

    @classmethod
    def principal(cls, ring, x):
        return cls.from_generators(ring, [x])

    @classmethod
    def unit(cls, ring):
        d = ring.degree
        return cls(ring, [[1 if i == j else 0 for j in range(d)] for i in range(d)], ring.one())

    @classmethod
    def from_basis(cls, ring, rows, check=True):
        """Ideal with the given Z-basis; with ``check`` the lattice must be an ideal."""
        H = hnf(rows, ncols=ring.degree)
        if len(H) < ring.degree:
            raise ZeroIdealError("zero ideal")
        I = cls(ring, H)
        if check:
            for row in I.basis:
                for i in range(ring.degree):
                    if not I.contains(ring.mul(ring.basis_vector(i), row)):
                        raise NotIntegralError("basis does not span an ideal")
        return I

    # comparison --------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Ideal({[list(r) for r in self.basis]})"

    def is_unit(self):
        return self.norm == 1

    def contains(self, x):
        return lattice_contains(self.basis, _coords(self.ring, x))

    def reduce(self, x):
        """Canonical representative of ``x`` modulo the ideal."""
        return reduce_vector(self.basis, _coords(self.ring, x))[0]

    def norm_min(self):
        return self.norm, self.minimum

    # arithmetic --------------------------------------------------------
    def _check(self, other):
        if other.ring != self.ring:
            raise ValueError("ideals belong to different rings")

    def __add__(self, other):
        self._check(other)
        mod = gcd(self.minimum, other.minimum)
        return Ideal(self.ring, hnf(list(self.basis) + list(other.basis), modulus=mod))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        ring = self.ring
        mod = self.minimum * other.minimum
        if self.generator is not None or other.generator is not None:
            # principal factor: multiply the other basis by the generator
            x, J = (self.generator, other) if self.generator is not None else (other.generator, self)
            rows = [ring.mul(b, x) for b in J.basis]
        else:
            rows = [ring.mul(a, b) for a in self.basis for b in other.basis]
        gen = None
        if self.generator is not None and other.generator is not None:
            gen = ring.mul(self.generator, other.generator)
        return Ideal(ring, hnf(rows, modulus=mod), generator=gen)

    __rmul__ = __mul__

    def scale(self, c):
        c = abs(int(c))
        if c == 0:
            raise ZeroIdealError("zero ideal")
        gen = [c * x for x in self.generator] if self.generator is not None else None
        return Ideal(self.ring, hnf([[c * x for x in r] for r in self.basis]), generator=gen)

    def intersect(self, other):
        self._check(other)
        d = self.ring.degree
        S = [list(r) for r in self.basis] + [[-x for x in r] for r in other.basis]
        _, _, K = hnf_with_transform(S)
        rows = [[sum(k[i] * self.basis[i][j] for i in range(d)) for j in range(d)] for k in K]
        mod = lcm(self.minimum, other.minimum)
        return Ideal(self.ring, hnf(rows, modulus=mod, ncols=d))

    def colon(self, other):
        """``(self : other) = {x in O : x * other is contained in self}``."""
        self._check(other)
        return colon_lattice(self.ring, self.basis, other.basis, self.minimum)

    def inverse(self):
        """The fractional ideal ``{x in K : x * self is contained in O}``."""
        mu = self.minimum
        num = colon_lattice(self.ring, [[mu * int(i == j) for j in range(self.ring.degree)]
                                        for i in range(self.ring.degree)], self.basis, mu)
        return FracIdeal(num, mu)

    def as_frac(self):
        return FracIdeal(self, 1)

    def __pow__(self, k):
        out = Ideal.unit(self.ring)
        for _ in range(k):
            out = out * self
        return out


def colon_lattice(ring, target, source, modulus):
    """Ideal ``{x in O : x * b in span(target) for every row b of source}``.

    ``modulus`` must be a positive integer in ``span(target)``; it bounds the
    computation and lies in the answer.
    """
    d = ring.degree
    k = len(source)
    cols = k * d
    # unknown x: x * [M_b1 | ... | M_bk] must land in target^k
    top = [[0] * cols for _ in range(d)]
    for j, b in enumerate(source):
        M = ring.rep_matrix(list(b))
        for i in range(d):
            top[i][j * d:(j + 1) * d] = M[i]
    block = []
    for j in range(k):
        for r in target:
            row = [0] * cols
            row[j * d:(j + 1) * d] = [x % modulus for x in r]
            block.append(row)
    block += [[modulus * int(c == t) for c in range(cols)] for t in range(cols)]
    S = [[x % modulus for x in r] for r in top] + block
    _, _, K = hnf_with_transform(S)
    rows = [kr[:d] for kr in K]
    rows += [[modulus * int(i == j) for j in range(d)] for i in range(d)]
    return Ideal(ring, hnf(rows, modulus=modulus, ncols=d))


class FracIdeal:
    """``numerator / denominator`` with an integral ideal and a positive integer."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        den = int(den)
        if den <= 0:
            raise ValueError("denominator must be positive")
        content = 0
        for r in num.basis:
            for x in r:
                content = gcd(content, x)
        g = gcd(content, den)
        if g > 1:
            gen = [x // g for x in num.generator] if num.generator is not None else None
            num = Ideal(num.ring, [[x // g for x in r] for r in num.basis], generator=gen)
            den //= g
        self.num = num
        self.den = den

    @classmethod
    def of(cls, x):
        return x if isinstance(x, FracIdeal) else cls(x, 1)

    @property
    def ring(self):
        return self.num.ring

    def is_integral(self):
        return self.den == 1

    def integral(self):
        if self.den != 1:
            raise NotIntegralError("fractional ideal is not integral")
        return self.num

    def __eq__(self, other):
        other = FracIdeal.of(other) if isinstance(other, Ideal) else other
        return isinstance(other, FracIdeal) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"FracIdeal({[list(r) for r in self.num.basis]}/{self.den})"

    def __mul__(self, other):
        other = FracIdeal.of(other)
        return FracIdeal(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __add__(self, other):
        other = FracIdeal.of(other)
        D = lcm(self.den, other.den)
        return FracIdeal(self.num.scale(D // self.den) + other.num.scale(D // other.den), D)

    def inverse(self):
        inv = self.num.inverse()
        return FracIdeal(inv.num.scale(self.den), inv.den)

    def contains(self, x):
        return ideal_membership(x, self)

    def norm(self):
        from fractions import Fraction

        return Fraction(self.num.norm, self.den ** self.ring.degree)


def ideal_membership(x, a):
    """Whether the field element ``x`` lies in the (fractional) ideal ``a``."""
    a = FracIdeal.of(a)
    if not isinstance(x, FieldElement):
        x = FieldElement(x if isinstance(x, RingElement) else RingElement(a.ring, _coords(a.ring, x)))
    # x in I/delta  <=>  delta * num / den is an element of I
    scaled = [a.den * c for c in x.num.coords]
    if any(c % x.den for c in scaled):
        return False
    return a.num.contains([c // x.den for c in scaled])


def idempotent_split(a, b):
    """Return ``(x, y)`` with ``x`` in ``a``, ``y`` in ``b`` and ``x + y = 1``.

    ``x`` is reduced to its canonical representative modulo ``a`` intersect ``b``,
    so the output depends only on the two ideals.
    """
    ring = a.ring
    d = ring.degree
    S = [list(r) for r in a.basis] + [list(r) for r in b.basis]
    c = solve_z(S, ring.one())
    if c is None:
        raise NotCoprimeError("ideals not coprime")
    x = [sum(c[i] * a.basis[i][j] for i in range(d)) for j in range(d)]
    x = reduce_vector(a.intersect(b).basis, x)[0]
    y = ring.sub(ring.one(), x)
    return x, y
