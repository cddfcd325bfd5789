"""A point that is degenerate yet certified stable.

The bundled 2-output, 3-input, degree-4 system admits constant full-rank
matrices K with det [P; K] identically zero (degenerate), yet its kernel
matrix satisfies the subspace rank criterion for every proper subspace, so
the point is certified stable by the exhaustive chart search.
"""

from fbinv.reference import (
    reference_degeneracy_witness,
    reference_system,
)
from fbinv.arsys import compute_Q
from fbinv.stability import (
    StabilityMode,
    is_nondegenerate,
    stability_check,
    stacked_determinant,
)

ar = reference_system()
print("the system P(s,t), row degrees (2, 2):")
for row in ar.P.entries:
    print("  [" + ", ".join(str(e) for e in row) + "]")

print()
print("== degeneracy ==")
K = reference_degeneracy_witness()
print(f"stacking the selector rows K =\n{K}")
print(f"gives det [P; K] = {stacked_determinant(ar.P, K)}  (identically zero)")

verdict = is_nondegenerate(ar)
print(f"decision: {verdict.status.value}")
print(f"first verified witness (chart {[c + 1 for c in verdict.chart]}):\n{verdict.witness}")
solvable = [tuple(c + 1 for c in r.chart) for r in verdict.chart_reports if r.status == "HasComplexSolution"]
print(f"charts containing degenerate K: {solvable}")

print()
print("== the kernel matrix ==")
syz = compute_Q(ar)
print(f"row degrees {syz.row_degrees}:")
for row in syz.Q.entries:
    print("  [" + ", ".join(str(e) for e in row) + "]")

print()
print("== stability, the cheap profile and the certificate ==")
generic = stability_check(ar, mode=StabilityMode.GENERIC_SUBSPACE, seed=0)
for r in generic.details:
    print(f"  generic flag, h = {r.h}: rank {r.achieved} (needs > {r.h} * 3/5, i.e. >= {r.strict_bound})")
print(f"generic mode alone says: {generic.status.value}")

exact = stability_check(ar, mode=StabilityMode.EXHAUSTIVE)
print(f"exhaustive chart search says: {exact.status.value}")
print()
print("verdict: degenerate but stable")
