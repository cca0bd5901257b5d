"""Arithmetic in Z[sqrt10]/(6), a residue ring with zero divisors that is still Euclidean.

Run: python3 demos/euclidean_residue_ring.py
"""

import random

from quotring import Ideal, preset, quotient_ring

R = preset("Zsqrt10")
Q = quotient_ring(R, 6)
rng = random.Random(1)

print(f"Z[sqrt10]/(6) has {Q.N} elements; invariant factors {Q.n}")

# phi(a) is the norm of (a) + (6): 1 on units, 36 on zero
for coords in ([1, 0], [2, 0], [3, 0], [0, 1], [2, 2], [0, 0]):
    x = Q.project(coords)
    print(f"phi({coords}) = {Q.phi(x)}  unit={Q.is_unit(x)}")

# division with remainder: random quotients until the remainder is smaller
a, b = Q.project([1, 1]), Q.project([2, 0])
q, r, rounds = Q.eudiv_rounds(a, b, rng)
print(f"\n{Q.lift(a)} = {Q.lift(q)} * {Q.lift(b)} + {Q.lift(r)}   "
      f"phi(r)={Q.phi(r)} < phi(b)={Q.phi(b)} after {rounds} round(s)")

# the extended gcd comes with a unimodular 2x2 transform
g, s, t, u, v = Q.xgcd(Q.project([2, 0]), Q.project([3, 0]), rng)
print(f"xgcd(2, 3) = {Q.lift(g)}; det of transform = {Q.lift(Q.sub(Q.mul(s, v), Q.mul(t, u)))}")

# a generator of the image of the prime over 2
p2 = Ideal.from_generators(R, [2, [0, 1]])
c = Q.gen(p2, rng)
print(f"image of (2, sqrt10) is generated by {Q.lift(c)}; phi = {Q.phi(c)} = norm(p2 + (6)) = {(p2 + Q.modulus).norm}")

# annihilator of a zero divisor
x = Q.project([3, 0])
print(f"ann({Q.lift(x)}) is generated by {Q.lift(Q.ann(x))}")
