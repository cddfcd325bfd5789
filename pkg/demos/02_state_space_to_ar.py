"""From a state-space system to its homogeneous autoregressive form.

The pipeline: exact left coprime factorization, homogenization into a full
row rank polynomial matrix on the projective line, the minimal kernel basis,
and the Grassmannian invariant that the feedback group acts on.
"""

import random

from fbinv import (
    FeedbackTransform,
    RatMatrix,
    StateSpace,
    act_T,
    apply_full_feedback,
    compute_Q,
    extended_action_consistency,
    left_coprime_mfd,
    rho_embedding,
    to_hom_ar,
)

print("== a double integrator ==")
ss = StateSpace(
    A=RatMatrix.from_rows([[0, 1], [0, 0]]),
    B=RatMatrix.from_rows([[0], [1]]),
    C=RatMatrix.from_rows([[1, 0]]),
    D=RatMatrix.zeros(1, 1),
)
mfd = left_coprime_mfd(ss)
print(f"left coprime fraction: D = {mfd.Dmat[0][0]},  N = {mfd.Nmat[0][0]}")
print(f"row degrees (observability indices): {mfd.row_degrees}")

ar = to_hom_ar(mfd)
print(f"homogeneous AR row, columns (u; y): {[str(e) for e in ar.P.entries[0]]}")
print(f"McMillan degree n = {ar.n}")

syz = compute_Q(ar)
print(f"minimal kernel basis row degrees: {syz.row_degrees}")

point = rho_embedding(ar, ar.n)
print(f"rho invariant at ell = n: a {point.subspace_dim}-plane in Q^{point.ambient_dim}")
print(f"canonical basis:\n{point.canonical_basis}")

print()
print("== the feedback group acts through the same invariant ==")
g = FeedbackTransform(
    S=RatMatrix.identity(2),
    T1=RatMatrix.identity(1),
    T2=RatMatrix.identity(1),
    F=RatMatrix.from_rows([[3]]),
)
closed = apply_full_feedback(ss, g)
print(f"closed-loop A matrix:\n{closed.A}")

route1 = rho_embedding(to_hom_ar(left_coprime_mfd(closed)), ss.n)
route2 = rho_embedding(act_T(ar, g.external_matrix()), ss.n)
print(f"transform-then-factor == factor-then-act: {route1 == route2}")

rng = random.Random(0)
print("consistency on a few random simple systems:", end=" ")
from fbinv.sampling import random_feedback_transform, random_state_space

checks = []
while len(checks) < 5:
    candidate = random_state_space(rng, 2, 1, 1, observable=True)
    transform = random_feedback_transform(rng, 2, 1, 1)
    checks.append(extended_action_consistency(candidate, transform))
print(checks)
