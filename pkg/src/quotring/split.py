"""Splitting a modulus into a part with cyclic quotient and a remainder.

``zsplit`` separates from ``m`` a factor ``a`` with ``O/a`` cyclic of order
``min(a)``, using only gcds of rational integers. On that factor the echelon
engine can run over Z/mZ instead of O/a.
"""

from dataclasses import dataclass
from math import gcd

from .errors import InvalidRingError
from .ideals import Ideal


@dataclass(frozen=True)
class ZSplit:
    a: Ideal
    b: Ideal
    m: int
    rounds: int


def zsplit(modulus):
    """Return coprime ``a, b`` with ``a*b = modulus`` and ``O/a`` cyclic of order ``m``.

    Both identities are checked with ideal arithmetic before returning.
    """
    ring = modulus.ring
    m = modulus.minimum
    b = modulus.norm // m
    rounds = 0
    while True:
        rounds += 1
        g = gcd(m, b)
        m //= g
        b = b * b % m
        if g == 1:
            break
    unit = Ideal.unit(ring)
    a = Ideal.from_generators(ring, [m]) + modulus if m > 1 else unit
    cof = modulus.norm // m
    b_ideal = Ideal.from_generators(ring, [cof]) + modulus if cof > 1 else unit
    if a * b_ideal != modulus or not (a + b_ideal).is_unit():
        raise ArithmeticError("zsplit produced an invalid factorization")
    if a.norm != m or a.minimum != m:
        raise ArithmeticError("zsplit factor is not cyclic")
    return ZSplit(a, b_ideal, m, rounds)


def rational_quotient_map(a, mz):
    """Coefficients ``c`` of the ring map ``O -> Z/mzZ``, ``sum x_i w_i -> sum x_i c_i``.

    Requires the HNF basis of ``a`` to have diagonal ``(mz, 1, ..., 1)``, which
    is exactly the situation certified by :func:`zsplit`.
    """
    ring = a.ring
    d = ring.degree
    H = a.basis
    if H[0][0] != mz or any(H[k][k] != 1 for k in range(1, d)):
        raise InvalidRingError("quotient is not cyclic of the given order")
    c = [1 % mz]
    for k in range(1, d):
        # w_k = -sum_{j<k} h_kj w_j modulo a
        c.append(-sum(H[k][j] * c[j] for j in range(k)) % mz)
    for i in range(d):
        for j in range(i, d):
            prod_ij = ring.mul(ring.basis_vector(i), ring.basis_vector(j))
            if sum(x * y for x, y in zip(prod_ij, c)) % mz != c[i] * c[j] % mz:
                raise InvalidRingError("rational quotient map is not multiplicative")
    return c
