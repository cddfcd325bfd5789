"""The complete invariant for single-output systems.

For p = 1 the quotient is completely concrete: a nondegenerate 1 x (m+1)
system of degree n spans an (m+1)-plane of polynomial coefficient vectors,
and that subspace -- a point of Grass(m+1, n+1) -- classifies the feedback
orbit.  Two systems are feedback equivalent exactly when the subspaces agree.
"""

import random

from fbinv import (
    HomPoly,
    HomPolyMatrix,
    act_T,
    ambient_dimension_N,
    miso_equivalent,
    miso_invariant,
    validate,
)
from fbinv.sampling import random_invertible


def system(entries, degree, m=1):
    return validate(HomPolyMatrix.from_rows([entries]), (degree,), m=m, p=1)


s2 = HomPoly.monomial(1, 2, 0)
t2 = HomPoly.monomial(1, 0, 2)
plus = HomPoly.from_terms(2, [(1, 2, 0), (1, 0, 2)])
minus = HomPoly.from_terms(2, [(1, 2, 0), (-1, 0, 2)])

a = system([s2, t2], 2)
b = system([plus, minus], 2)

print("== the invariant is the span, not the entries ==")
pa = miso_invariant(a)
pb = miso_invariant(b)
print(f"(s^2, t^2)            -> basis {pa.canonical_basis}, pluecker {pa.pluecker}")
print(f"(s^2+t^2, s^2-t^2)    -> basis {pb.canonical_basis}, pluecker {pb.pluecker}")
print(f"equivalent: {miso_equivalent(a, b)}")

c = system([s2, HomPoly.monomial(1, 1, 1)], 2)
print(f"(s^2, st) has basis {miso_invariant(c).canonical_basis} -> equivalent to (s^2, t^2): {miso_equivalent(a, c)}")

print()
print("== invariance under the whole group ==")
rng = random.Random(7)
unchanged = all(
    miso_invariant(act_T(a, random_invertible(rng, 2))) == pa for _ in range(25)
)
print(f"25 random invertible actions leave the invariant unchanged: {unchanged}")

print()
print("== where these points live ==")
for m, n in ((1, 1), (1, 3), (2, 3)):
    print(f"m = {m}, n = {n}: systems form P^{ambient_dimension_N(m, n)}, invariant in Grass({m + 1}, {n + 1})")
