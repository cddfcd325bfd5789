"""Nondegeneracy and the geometric (semi)stability criterion.

A system P is degenerate when some constant full-rank m x (m+p) matrix K
makes det [P; K] vanish identically.  Stability is certified through the
cokernel presentation Q of the observable part: the criterion asks that for a
generic point of the projective line every h-dimensional subspace H maps to
something of dimension > (m/(m+p)) h (>= for semistability).  Both questions
reduce to solvability of polynomial systems over the complex numbers, decided
exactly by Groebner bases over chart parametrizations; `GenericSubspace` mode
instead reproduces the cheap random-flag rank profile, which can refute the
criterion but never certify it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .arsys import ARSystem, compute_Q, observable_part
from .ideals import (
    DEFAULT_BUDGET,
    GroebnerBudget,
    IdealStatus,
    groebner,
    solve_if_zero_dimensional,
)
from .linalg import RatMatrix
from .multipoly import MultiPoly, mp_det
from .poly import HomPoly, dehomogenize
from .polymatrix import HomPolyMatrix, determinant, generic_rank, maximal_minors
from .sampling import random_invertible


def euler_characteristic(rank: int, degree: int, ell: int) -> int:
    """chi of a twisted sheaf on the projective line: rank (ell+1) + degree."""
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    return rank * (ell + 1) + degree


@dataclass(frozen=True)
class GradedBound:
    """Rank thresholds for subspaces of dimension h under the m/(m+p) slope."""

    h: int
    strict_bound: int
    weak_bound: int

    @classmethod
    def for_dimension(cls, h: int, m: int, p: int) -> "GradedBound":
        if not 1 <= h <= m + p - 1:
            raise ValueError("subspace dimension out of range")
        slope = Fraction(m * h, m + p)
        strict = slope.numerator // slope.denominator + 1
        weak = -((-slope.numerator) // slope.denominator)
        return cls(h, strict, weak)


class DegeneracyStatus(str, Enum):
    NONDEGENERATE = "Nondegenerate"
    DEGENERATE = "Degenerate"
    NOT_CERTIFIED = "NotCertified"


@dataclass(frozen=True)
class ChartReport:
    chart: tuple[int, ...]
    status: str
    witness: RatMatrix | None = None


@dataclass(frozen=True)
class DegeneracyVerdict:
    status: DegeneracyStatus
    witness: RatMatrix | None
    chart: tuple[int, ...] | None
    chart_reports: tuple[ChartReport, ...] = ()

    def witnessed_charts(self) -> dict[tuple[int, ...], RatMatrix]:
        return {r.chart: r.witness for r in self.chart_reports if r.witness is not None}


class StabilityStatus(str, Enum):
    STABLE_CERTIFIED = "StableCertified"
    SEMISTABLE_CERTIFIED = "SemistableCertified"
    CRITERION_FAILS = "CriterionFails"
    NOT_CERTIFIED = "NotCertified"


class StabilityMode(str, Enum):
    GENERIC_SUBSPACE = "GenericSubspace"
    EXHAUSTIVE = "Exhaustive"


@dataclass(frozen=True)
class RankReport:
    """Per-dimension record.

    In GenericSubspace mode `achieved` is the generic rank of the sampled
    flag prefix and the ok-flags compare it against the bounds.  In
    Exhaustive mode `achieved` is a certified lower bound for the minimum
    over all subspaces (None when a bound failed or the budget ran out) and
    the ok-flags state whether the strict/weak condition holds for every
    subspace (None = undecided within budget).
    """

    h: int
    weak_bound: int
    strict_bound: int
    achieved: int | None
    strict_ok: bool | None
    weak_ok: bool | None


@dataclass(frozen=True)
class StabilityVerdict:
    status: StabilityStatus
    mode: StabilityMode
    details: tuple[RankReport, ...]
    witness: RatMatrix | None = None


# ---------------------------------------------------------------------------
# Stacked determinants


def stacked_determinant(P: HomPolyMatrix, K: RatMatrix) -> HomPoly:
    """det [P; K] computed directly on the stacked polynomial matrix."""
    rows = [list(r) for r in P.entries]
    for krow in K.entries:
        rows.append([HomPoly.constant(x) for x in krow])
    return determinant(HomPolyMatrix.from_rows(rows))


def laplace_stacked_determinant(P: HomPolyMatrix, K: RatMatrix) -> HomPoly:
    """det [P; K] via the expansion along the P-block.

    Pairs each maximal minor p_I of P with the complementary minor of K and
    the sign (-1)^(sum I - p(p-1)/2); kept separate from `stacked_determinant`
    so the identity can be tested between two independent routes.
    """
    p = P.rows
    width = P.cols
    minors = maximal_minors(P, p)
    acc: HomPoly | None = None
    base = p * (p - 1) // 2
    for idx, cols in enumerate(combinations(range(width), p)):
        comp = [c for c in range(width) if c not in cols]
        kminor = K.submatrix(range(K.rows), comp).det()
        if kminor == 0 or minors[idx].is_zero():
            continue
        sign = -1 if (sum(cols) - base) % 2 else 1
        term = minors[idx].scale(sign * kminor)
        acc = term if acc is None else acc + term
    if acc is None:
        return HomPoly.zero(sum(P.row_degree_label(i) for i in range(p)))
    return acc


# ---------------------------------------------------------------------------
# Echelon charts


def echelon_charts(ambient: int, k: int) -> Iterator[tuple[int, ...]]:
    """Pivot-column subsets of the reduced-echelon cells, in lexicographic order."""
    yield from combinations(range(ambient), k)


def chart_parameter_matrix(
    pivots: Sequence[int], ambient: int
) -> tuple[list[list[MultiPoly | None]], list[str], list[tuple[int, int]]]:
    """Rows of a reduced-echelon matrix with the given pivot columns.

    Entries are None (zero), 1-markers, or parameter positions; returned as a
    symbolic grid over the chart's parameters, ordered row-major.
    """
    k = len(pivots)
    pivot_set = set(pivots)
    slots = [
        (i, j)
        for i in range(k)
        for j in range(ambient)
        if j > pivots[i] and j not in pivot_set
    ]
    names = [f"x{i}_{j}" for i, j in slots]
    variables = tuple(names)
    index = {slot: pos for pos, slot in enumerate(slots)}
    grid: list[list[MultiPoly]] = []
    for i in range(k):
        row = []
        for j in range(ambient):
            if j == pivots[i]:
                row.append(MultiPoly.constant(variables, 1))
            elif (i, j) in index:
                row.append(MultiPoly.variable(variables, index[(i, j)]))
            else:
                row.append(MultiPoly.zero(variables))
        grid.append(row)
    return grid, list(variables), slots


def _chart_point_matrix(
    pivots: Sequence[int], ambient: int, slots: Sequence[tuple[int, int]], values: Sequence[Fraction]
) -> RatMatrix:
    k = len(pivots)
    grid = [[Fraction(0)] * ambient for _ in range(k)]
    for i, pc in enumerate(pivots):
        grid[i][pc] = Fraction(1)
    for (i, j), v in zip(slots, values):
        grid[i][j] = Fraction(v)
    return RatMatrix.from_rows(grid)


def _witness_from_chart(verdict_basis, generators, pivots, ambient, slots) -> RatMatrix | None:
    """Try to extract a rational point of the chart system."""
    nparams = len(slots)
    if nparams == 0:
        return _chart_point_matrix(pivots, ambient, slots, [])
    zero = [Fraction(0)] * nparams
    if all(g.eval(zero) == 0 for g in generators):
        return _chart_point_matrix(pivots, ambient, slots, zero)
    if verdict_basis is None:
        return None
    points = solve_if_zero_dimensional(verdict_basis)
    if points:
        return _chart_point_matrix(pivots, ambient, slots, points[0])
    return None


# ---------------------------------------------------------------------------
# Nondegeneracy


def is_nondegenerate(ar: ARSystem, budget: GroebnerBudget = DEFAULT_BUDGET) -> DegeneracyVerdict:
    """Decide whether any constant full-rank K kills det [P; K] identically.

    Single-output systems reduce to exact linear independence of the entry
    coefficient vectors; in general each reduced-echelon chart of K yields a
    polynomial system whose complex solvability is decided by Groebner bases.
    """
    if ar.p == 1:
        return _miso_nondegenerate(ar)
    minors = maximal_minors(ar.P, ar.p)
    subsets = list(combinations(range(ar.external_dim), ar.p))
    reports: list[ChartReport] = []
    first_solvable: tuple[int, ...] | None = None
    exceeded = False
    degenerate = False
    primary: tuple[RatMatrix, tuple[int, ...]] | None = None
    for pivots in echelon_charts(ar.external_dim, ar.m):
        generators, variables, slots = _degeneracy_chart_system(ar, pivots, minors, subsets)
        nonzero = [g for g in generators if not g.is_zero()]
        verdict = groebner(nonzero, budget)
        if verdict.status == IdealStatus.BUDGET_EXCEEDED:
            exceeded = True
            reports.append(ChartReport(pivots, verdict.status.value))
            continue
        if verdict.status == IdealStatus.NO_COMPLEX_SOLUTION:
            reports.append(ChartReport(pivots, verdict.status.value))
            continue
        degenerate = True
        if first_solvable is None:
            first_solvable = pivots
        witness = _witness_from_chart(verdict.basis, nonzero, pivots, ar.external_dim, slots)
        if witness is not None and (
            not stacked_determinant(ar.P, witness).is_zero() or witness.rank() != ar.m
        ):  # pragma: no cover - defensive
            witness = None
        reports.append(ChartReport(pivots, verdict.status.value, witness))
        if witness is not None and primary is None:
            primary = (witness, pivots)
    if degenerate:
        witness, chart = primary if primary is not None else (None, first_solvable)
        return DegeneracyVerdict(DegeneracyStatus.DEGENERATE, witness, chart, tuple(reports))
    if exceeded:
        return DegeneracyVerdict(DegeneracyStatus.NOT_CERTIFIED, None, None, tuple(reports))
    return DegeneracyVerdict(DegeneracyStatus.NONDEGENERATE, None, None, tuple(reports))


def _miso_nondegenerate(ar: ARSystem) -> DegeneracyVerdict:
    rows = []
    for e in ar.P.entries[0]:
        u = dehomogenize(e)
        rows.append([u.coeff(a) for a in range(ar.n + 1)])
    coeffs = RatMatrix.from_rows(rows, ar.n + 1)
    if coeffs.rank() == ar.m + 1:
        return DegeneracyVerdict(DegeneracyStatus.NONDEGENERATE, None, None, ())
    # a dependency c with sum_j c_j f_j = 0 turns into a witness: any K whose
    # kernel is spanned by c has signed minors proportional to c
    c = coeffs.transpose().right_nullspace().entries[0]
    witness, chart = RatMatrix.from_rows([c]).right_nullspace().rref()
    assert stacked_determinant(ar.P, witness).is_zero()
    assert witness.rank() == ar.m
    return DegeneracyVerdict(DegeneracyStatus.DEGENERATE, witness, chart, ())


def _degeneracy_chart_system(ar: ARSystem, pivots, minors, subsets):
    """Coefficients of det [P; K] as polynomials in the chart parameters of K."""
    grid, variables, slots = chart_parameter_matrix(pivots, ar.external_dim)
    width = ar.external_dim
    n = ar.n
    base = ar.p * (ar.p - 1) // 2
    gens = [MultiPoly.zero(tuple(variables)) for _ in range(n + 1)]
    for idx, cols in enumerate(subsets):
        pI = minors[idx]
        if pI.is_zero():
            continue
        comp = [c for c in range(width) if c not in cols]
        kminor = mp_det([[grid[i][j] for j in comp] for i in range(ar.m)], tuple(variables))
        if kminor.is_zero():
            continue
        sign = -1 if (sum(cols) - base) % 2 else 1
        for a, coeff in enumerate(pI.coeffs):
            if coeff != 0:
                gens[a] = gens[a] + kminor.scale(sign * coeff)
    return gens, variables, slots


# ---------------------------------------------------------------------------
# Stability


def stability_check(
    ar: ARSystem,
    mode: StabilityMode = StabilityMode.EXHAUSTIVE,
    seed: int = 0,
    budget: GroebnerBudget = DEFAULT_BUDGET,
    flag_samples: int = 3,
) -> StabilityVerdict:
    """Certify the geometric criterion on the observable part's kernel matrix Q.

    Exhaustive mode decides, for every h and both bounds, whether some
    subspace H has generic rank of Q H^T below the bound, by chart systems
    over Grassmannians; it alone can certify stability.  GenericSubspace mode
    reports the rank profile of random flags: a violated bound refutes the
    criterion, but passing ranks are reported NotCertified.
    """
    syz = compute_Q(observable_part(ar))
    Q = syz.Q
    m, p = ar.m, ar.p
    width = m + p
    bounds = [GradedBound.for_dimension(h, m, p) for h in range(1, width)]
    if mode == StabilityMode.GENERIC_SUBSPACE:
        return _generic_subspace_check(Q, bounds, width, seed, flag_samples)
    return _exhaustive_check(Q, bounds, width, budget)


def _generic_subspace_check(Q, bounds, width, seed, flag_samples) -> StabilityVerdict:
    rng = random.Random(seed)
    flags = [random_invertible(rng, width, lo=-9, hi=9) for _ in range(max(1, flag_samples))]
    details = []
    witness = None
    failed = False
    for bound in bounds:
        achieved = 0
        for A in flags:
            moved = Q.mul_rat(A).submatrix(range(Q.rows), range(bound.h))
            achieved = max(achieved, generic_rank(moved, seed=rng.randint(0, 2**30)))
            if achieved >= bound.strict_bound:
                break
        strict_ok = achieved >= bound.strict_bound
        weak_ok = achieved >= bound.weak_bound
        if not strict_ok and witness is None:
            witness = flags[0].transpose().submatrix(range(bound.h), range(width))
            failed = True
        details.append(
            RankReport(bound.h, bound.weak_bound, bound.strict_bound, achieved, strict_ok, weak_ok)
        )
    status = StabilityStatus.CRITERION_FAILS if failed else StabilityStatus.NOT_CERTIFIED
    return StabilityVerdict(status, StabilityMode.GENERIC_SUBSPACE, tuple(details), witness)


def _exhaustive_check(Q, bounds, width, budget) -> StabilityVerdict:
    details = []
    witness = None
    for bound in bounds:
        strict_exists, strict_unc, strict_wit = _exists_low_rank_subspace(
            Q, width, bound.h, bound.strict_bound - 1, budget
        )
        if bound.weak_bound == bound.strict_bound:
            weak_exists, weak_unc, weak_wit = strict_exists, strict_unc, strict_wit
        elif strict_exists is False and not strict_unc:
            # nothing even below the strict bound, so nothing below the weak one
            weak_exists, weak_unc, weak_wit = False, False, None
        else:
            weak_exists, weak_unc, weak_wit = _exists_low_rank_subspace(
                Q, width, bound.h, bound.weak_bound - 1, budget
            )
        strict_ok = False if strict_exists else (None if strict_unc else True)
        weak_ok = False if weak_exists else (None if weak_unc else True)
        achieved = None
        if weak_ok is True and strict_ok is True:
            achieved = bound.strict_bound
        elif weak_ok is True:
            achieved = bound.weak_bound
        if weak_exists and witness is None:
            witness = weak_wit
        elif strict_exists and witness is None:
            witness = strict_wit
        details.append(
            RankReport(bound.h, bound.weak_bound, bound.strict_bound, achieved, strict_ok, weak_ok)
        )
    if any(r.weak_ok is False for r in details):
        status = StabilityStatus.CRITERION_FAILS
    elif any(r.weak_ok is None for r in details):
        status = StabilityStatus.NOT_CERTIFIED
    elif all(r.strict_ok is True for r in details):
        status = StabilityStatus.STABLE_CERTIFIED
    else:
        status = StabilityStatus.SEMISTABLE_CERTIFIED
    return StabilityVerdict(status, StabilityMode.EXHAUSTIVE, tuple(details), witness)


def _exists_low_rank_subspace(
    Q: HomPolyMatrix, width: int, h: int, r: int, budget: GroebnerBudget
) -> tuple[bool, bool, RatMatrix | None]:
    """Is there an h-dimensional H with generic rank of Q H^T at most r?

    Returns (exists, undecided_within_budget, witness_or_None).
    """
    if r < 0:
        return False, False, None
    if r >= min(Q.rows, h):
        return True, False, None  # pragma: no cover - bounds keep r below this
    exceeded = False
    for pivots in echelon_charts(width, h):
        generators, variables, slots = _rank_chart_system(Q, pivots, width, h, r)
        nonzero = [g for g in generators if not g.is_zero()]
        verdict = groebner(nonzero, budget)
        if verdict.status == IdealStatus.BUDGET_EXCEEDED:
            exceeded = True
            continue
        if verdict.status == IdealStatus.NO_COMPLEX_SOLUTION:
            continue
        witness = _witness_from_chart(verdict.basis, nonzero, pivots, width, slots)
        if witness is not None:
            moved = Q.mul_rat(witness.transpose())
            if generic_rank(moved) > r:  # pragma: no cover - defensive
                witness = None
        return True, False, witness
    return False, exceeded, None


def _rank_chart_system(Q: HomPolyMatrix, pivots, width, h, r):
    """All (r+1)-minors of Q(s,t) H^T == 0, as polynomials in chart parameters."""
    grid, variables, slots = chart_parameter_matrix(pivots, width)
    full_vars = tuple(list(variables) + ["s", "t"])
    nparams = len(variables)

    def lift_param(poly: MultiPoly) -> MultiPoly:
        return MultiPoly(full_vars, {tuple(list(e) + [0, 0]): c for e, c in poly.terms.items()})

    def lift_q(entry: HomPoly) -> MultiPoly:
        return MultiPoly(
            full_vars,
            {
                tuple([0] * nparams + [entry.degree - j, j]): c
                for j, c in enumerate(entry.coeffs)
                if c != 0
            },
        )

    product = []
    for row_q in Q.entries:
        prow = []
        for i in range(h):
            acc = MultiPoly.zero(full_vars)
            for k in range(width):
                if row_q[k].is_zero() or grid[i][k].is_zero():
                    continue
                acc = acc + lift_q(row_q[k]) * lift_param(grid[i][k])
            prow.append(acc)
        product.append(prow)
    generators: list[MultiPoly] = []
    size = r + 1
    for rows_idx in combinations(range(Q.rows), size):
        for cols_idx in combinations(range(h), size):
            minor = mp_det([[product[i][j] for j in cols_idx] for i in rows_idx], full_vars)
            generators.extend(_split_by_st(minor, variables, nparams))
    return generators, variables, slots


def _split_by_st(poly: MultiPoly, param_vars, nparams) -> list[MultiPoly]:
    """Group a parameters+(s,t) polynomial by its (s,t) monomial."""
    buckets: dict[tuple[int, int], dict] = {}
    for exps, c in poly.terms.items():
        key = (exps[nparams], exps[nparams + 1])
        buckets.setdefault(key, {})[tuple(exps[:nparams])] = c
    return [MultiPoly(tuple(param_vars), terms) for terms in buckets.values()]


# ---------------------------------------------------------------------------
# Property suite: nondegenerate systems are certified stable


def nondegenerate_implies_stable_suite(
    sizes: Sequence[tuple[int, int, int]],
    samples: int,
    seed: int = 0,
    budget: GroebnerBudget = DEFAULT_BUDGET,
) -> dict:
    """Sample systems per (p, m, n) size; every certified-nondegenerate one
    must come back StableCertified from the exhaustive check."""
    from .sampling import random_ar_system

    rng = random.Random(seed)
    report = {"sizes": [], "counterexamples": 0}
    for p, m, n in sizes:
        entry = {
            "p": p,
            "m": m,
            "n": n,
            "samples": samples,
            "nondegenerate": 0,
            "stable_certified": 0,
            "not_certified": 0,
            "counterexamples": [],
        }
        for _ in range(samples):
            ar = random_ar_system(rng, m, p, n)
            verdict = is_nondegenerate(ar, budget)
            if verdict.status != DegeneracyStatus.NONDEGENERATE:
                continue
            entry["nondegenerate"] += 1
            stab = stability_check(ar, StabilityMode.EXHAUSTIVE, budget=budget)
            if stab.status == StabilityStatus.STABLE_CERTIFIED:
                entry["stable_certified"] += 1
            elif stab.status == StabilityStatus.NOT_CERTIFIED:
                entry["not_certified"] += 1
            else:
                entry["counterexamples"].append(str(ar.P))
        report["sizes"].append(entry)
        report["counterexamples"] += len(entry["counterexamples"])
    return report
