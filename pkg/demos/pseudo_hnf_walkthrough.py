"""The modular pseudo-HNF pipeline, one stage at a time, over Z[sqrt10].

Run: python3 demos/pseudo_hnf_walkthrough.py
"""

import random
from math import prod

from quotring import (
    Ideal, PseudoMatrix, QuotientRing, demodularize, find_modulus, preset, pseudo_hnf,
    reduce_mod, span_zlattice, strong_echelon, zsplit,
)

R = preset("Zsqrt10")
rng = random.Random(7)

# three rows in O^2; the first is scaled by the non-principal prime over 2
p2 = Ideal.from_generators(R, [2, [0, 1]])
P = PseudoMatrix.from_integral(
    R,
    [[[3, 1], [4, 0]], [[1, 0], [5, 2]], [[2, -1], [0, 3]]],
    ideals=[p2, Ideal.unit(R), Ideal.unit(R)],
)

# 1. an ideal m with m * O^2 inside the module, from the maximal minors
m = find_modulus(P, rng)
print(f"modulus: basis {m.basis}, norm {m.norm}")

# 2. split off the part where O/a is cyclic, so Z/mZ arithmetic suffices there
sp = zsplit(m)
print(f"z-split: norm(a) = {sp.a.norm} (handled in Z/{sp.m}), norm(b) = {sp.b.norm}")

# 3. reduce into (O/m)^{3x2} and echelonize there
Q = QuotientRing(R, m, seed=1)
Bbar = reduce_mod(P, m, Q, rng)
H = strong_echelon(Q, Bbar, 2, rng)
print("strong echelon form mod m (lifted):", [[Q.lift(x) for x in row] for row in H])

# 4. lift back to coefficient ideals and unit-diagonal rows
out = demodularize([[Q.lift(x) for x in row] for row in H], m)
for a, row in zip(out.ideals, out.matrix):
    entries = [f"{list(x.num.coords)}/{x.den}" if x.den != 1 else str(list(x.num.coords)) for x in row]
    print(f"  ideal basis {a.basis}  row {entries}")

# the Z-lattice oracle confirms both describe the same module
L = span_zlattice(P)
assert span_zlattice(out.as_pseudomatrix()) == L
print("span check ok; index of the module in O^2:", prod(r[i] for i, r in enumerate(L)))

# the one-call version gives the same lattice
assert span_zlattice(pseudo_hnf(P, seed=3).as_pseudomatrix()) == span_zlattice(P)
