"""Rings of rank d over Z given by structure constants.

``gamma[i][j][k]`` is the coefficient of ``w_k`` in ``w_i * w_j``; ``w_0`` must be
the identity. Elements are coordinate tuples and matrices act on row vectors
from the right, so ``rep_matrix(x)`` has ``coords(w_i * x)`` as its row ``i``.
"""

import re
from math import gcd

from sympy import factorint

from .errors import InvalidRingError
from .linalg import det_bareiss


class NumberRing:
    """A commutative unital ring that is free of rank ``degree`` over Z.

    Maximality is not checked; the ideal-theoretic algorithms assume the
    input is the full ring of integers of its fraction field.
    """

    def __init__(self, structure_constants, labels=None, name=None, validate=True):
        gamma = tuple(
            tuple(tuple(int(c) for c in row) for row in plane) for plane in structure_constants
        )
        d = len(gamma)
        if d < 1:
            raise InvalidRingError("degree must be at least 1")
        for plane in gamma:
            if len(plane) != d or any(len(row) != d for row in plane):
                raise InvalidRingError("structure constants must have shape d x d x d")
        self.degree = d
        self.gamma = gamma
        self.labels = tuple(labels) if labels else tuple(
            ["1"] + [f"w{i}" for i in range(1, d)]
        )
        if len(self.labels) != d:
            raise InvalidRingError("one label per basis element required")
        self.name = name
        if validate:
            ring_validate(self)
        self.gamma_max = max(abs(c) for plane in gamma for row in plane for c in row)

    def __repr__(self):
        return f"NumberRing({self.name or self.degree})"

    def __eq__(self, other):
        return isinstance(other, NumberRing) and other.gamma == self.gamma

    def __hash__(self):
        return hash(self.gamma)

    def to_dict(self):
        return {
            "degree": self.degree,
            "structure_constants": [[list(r) for r in p] for p in self.gamma],
            "labels": list(self.labels),
        }

    # plain coordinate-list arithmetic; the element classes wrap these
    def one(self):
        return [1] + [0] * (self.degree - 1)

    def zero(self):
        return [0] * self.degree

    def scalar(self, c):
        return [c] + [0] * (self.degree - 1)

    def basis_vector(self, i):
        v = [0] * self.degree
        v[i] = 1
        return v

    def mul(self, x, y):
        d = self.degree
        out = [0] * d
        gamma = self.gamma
        for i, xi in enumerate(x):
            if not xi:
                continue
            gi = gamma[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, g in enumerate(gi[j]):
                    if g:
                        out[k] += c * g
        return out

    def add(self, x, y):
        return [a + b for a, b in zip(x, y)]

    def sub(self, x, y):
        return [a - b for a, b in zip(x, y)]

    def rep_matrix(self, x):
        """Row ``i`` holds the coordinates of ``w_i * x``."""
        return [self.mul(self.basis_vector(i), x) for i in range(self.degree)]

    def norm(self, x):
        return det_bareiss(self.rep_matrix(x))

    def adjugate_element(self, x):
        """Return ``y`` in the ring with ``x*y = norm(x)``.

        ``y`` is the first row of the adjugate of ``rep_matrix(x)`` because
        ``coords(1 * x) = e_0 * M`` and ``adj(M) * M = det(M) * I``.
        """
        M = self.rep_matrix(x)
        d = self.degree
        row = []
        for j in range(d):
            minor = [[M[r][c] for c in range(d) if c != 0] for r in range(d) if r != j]
            row.append((-1) ** j * det_bareiss(minor) if d > 1 else 1)
        return row

    def element(self, coords):
        return RingElement(self, coords)


def ring_validate(ring):
    """Check commutativity, associativity and the unit law on basis triples."""
    d = ring.degree
    e = [ring.basis_vector(i) for i in range(d)]
    for i in range(d):
        if ring.mul(e[0], e[i]) != e[i]:
            raise InvalidRingError(
                f"not a commutative unital ring: w0 is not the identity on w{i}"
            )
        for j in range(d):
            if ring.mul(e[i], e[j]) != ring.mul(e[j], e[i]):
                raise InvalidRingError(
                    f"not a commutative unital ring: (w{i}, w{j}) do not commute"
                )
            ij = ring.mul(e[i], e[j])
            for k in range(d):
                if ring.mul(ij, e[k]) != ring.mul(e[i], ring.mul(e[j], e[k])):
                    raise InvalidRingError(
                        f"not a commutative unital ring: associativity fails on (w{i}, w{j}, w{k})"
                    )
    return ring


class RingElement:
    """An element of a :class:`NumberRing` with integer coordinates."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != ring.degree:
            raise ValueError(f"expected {ring.degree} coordinates, got {len(coords)}")
        self.ring = ring
        self.coords = coords

    def _check(self, other):
        if isinstance(other, int):
            return RingElement(self.ring, self.ring.scalar(other))
        if other.ring != self.ring:
            raise ValueError("elements belong to different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.add(self.coords, other.coords))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.sub(self.coords, other.coords))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return RingElement(self.ring, [-c for c in self.coords])

    def __mul__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.mul(self.coords, other.coords))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = RingElement(self.ring, self.ring.scalar(other))
        return isinstance(other, RingElement) and self.ring == other.ring and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"RingElement({list(self.coords)})"

    def rep_matrix(self):
        return self.ring.rep_matrix(self.coords)

    def norm(self):
        return self.ring.norm(self.coords)


class FieldElement:
    """``numerator / denominator`` with a positive rational-integer denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if not isinstance(num, RingElement):
            raise TypeError("numerator must be a RingElement")
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(den, *num.coords)
        if g > 1:
            num = RingElement(num.ring, [c // g for c in num.coords])
            den //= g
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    def is_integral(self):
        return self.den == 1

    def __add__(self, other):
        other = _as_field(other, self.ring)
        return FieldElement(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_field(other, self.ring)
        return FieldElement(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return FieldElement(-self.num, self.den)

    def __mul__(self, other):
        other = _as_field(other, self.ring)
        return FieldElement(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        """Invert through the adjugate element: ``1/x = adj(x)/norm(x)``."""
        n = self.num.norm()
        if n == 0:
            raise ZeroDivisionError("element is not invertible")
        adj = RingElement(self.ring, self.ring.adjugate_element(self.num.coords))
        return FieldElement(adj * self.den, n)

    def __truediv__(self, other):
        return self * _as_field(other, self.ring).inverse()

    def __eq__(self, other):
        if isinstance(other, (int, RingElement)):
            other = _as_field(other, self.ring)
        return isinstance(other, FieldElement) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.coords, self.den))

    def __repr__(self):
        if self.den == 1:
            return f"FieldElement({list(self.num.coords)})"
        return f"FieldElement({list(self.num.coords)}/{self.den})"


def _as_field(x, ring):
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, RingElement):
        return FieldElement(x)
    if isinstance(x, int):
        return FieldElement(RingElement(ring, ring.scalar(x)))
    raise TypeError(f"cannot interpret {x!r} as a field element")


# ----------------------------------------------------------------- presets


def _quadratic_gamma(a, b):
    """Basis (1, w) with w^2 = a + b*w."""
    return [[[1, 0], [0, 1]], [[0, 1], [a, b]]]


def _is_squarefree(D):
    return D not in (0, 1) and all(e == 1 for e in factorint(abs(D)).values())


def quadratic_ring(D):
    """Ring of integers of Q(sqrt(D)) for squarefree ``D``."""
    D = int(D)
    if not _is_squarefree(D):
        raise InvalidRingError(f"{D} is not a squarefree integer different from 0 and 1")
    if D % 4 == 1:
        # w = (1 + sqrt(D))/2 satisfies w^2 = w + (D - 1)/4
        return NumberRing(_quadratic_gamma((D - 1) // 4, 1), ["1", f"(1+sqrt({D}))/2"], name=f"quad:{D}")
    if D == -1:
        return NumberRing(_quadratic_gamma(-1, 0), ["1", "i"], name="Zi")
    return NumberRing(_quadratic_gamma(D, 0), ["1", f"sqrt({D})"], name=f"Zsqrt{D}")


def integers():
    return NumberRing([[[1]]], ["1"], name="Z")


_PRESET = re.compile(r"^(?:Zsqrt|quad:)(-?\d+)$")


def preset(name):
    """Look up a built-in ring by name: ``Z``, ``Zi``, ``Zsqrt<D>`` or ``quad:<D>``.

    ``Zsqrt<D>`` is only accepted when Z[sqrt(D)] is the full ring of integers
    (``D`` squarefree and not 1 mod 4).

    >>> preset("Zsqrt10").gamma[1][1]
    (10, 0)
    """
    if name == "Z":
        return integers()
    if name == "Zi":
        return quadratic_ring(-1)
    m = _PRESET.match(name)
    if not m:
        raise InvalidRingError(f"unknown ring preset {name!r}")
    D = int(m.group(1))
    if name.startswith("Zsqrt") and D % 4 == 1:
        raise InvalidRingError(f"Z[sqrt({D})] is not maximal; use quad:{D}")
    return quadratic_ring(D)
