"""Minimal Buchberger engine deciding solvability over the complex numbers.

The only question the rest of the package ever asks is "does this polynomial
system have a common complex zero?", which by the Nullstellensatz is "is the
reduced Groebner basis {1}?".  A budget (S-pairs processed, total degree)
turns runaway computations into an explicit BudgetExceeded verdict instead of
a wrong answer.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .linalg import ONE, frac
from .multipoly import (
    MultiPoly,
    OrderKey,
    divides,
    grevlex_key,
    lex_key,
    normal_form,
)


@dataclass(frozen=True)
class GroebnerBudget:
    max_pairs: int = 2000
    max_degree: int = 60


DEFAULT_BUDGET = GroebnerBudget()


class IdealStatus(str, Enum):
    NO_COMPLEX_SOLUTION = "NoComplexSolution"
    HAS_COMPLEX_SOLUTION = "HasComplexSolution"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass(frozen=True)
class IdealVerdict:
    status: IdealStatus
    basis: tuple[MultiPoly, ...] | None

    @property
    def solvable(self) -> bool:
        return self.status == IdealStatus.HAS_COMPLEX_SOLUTION


def _s_polynomial(f: MultiPoly, g: MultiPoly, key: OrderKey) -> MultiPoly:
    fe, fc = f.leading(key)
    ge, gc = g.leading(key)
    lcm = tuple(max(a, b) for a, b in zip(fe, ge))
    return f.mul_term(tuple(l - a for l, a in zip(lcm, fe)), ONE / fc) - g.mul_term(
        tuple(l - a for l, a in zip(lcm, ge)), ONE / gc
    )


def _buchberger(
    generators: Sequence[MultiPoly], budget: GroebnerBudget, key: OrderKey
) -> tuple[list[MultiPoly], bool]:
    """Return (basis, exceeded).  The basis is reduced when not exceeded."""
    basis = [g.monic(key) for g in generators if not g.is_zero()]
    if not basis:
        return [], False
    variables = basis[0].variables

    leads = [g.leading(key)[0] for g in basis]
    heap: list[tuple[tuple, int, int]] = []

    def lcm_of(i: int, j: int):
        return tuple(max(a, b) for a, b in zip(leads[i], leads[j]))

    def push(i: int, j: int):
        lcm = lcm_of(i, j)
        heapq.heappush(heap, ((sum(lcm), key(lcm)), i, j))

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            push(i, j)

    done: set[tuple[int, int]] = set()
    pairs_processed = 0
    while heap:
        if pairs_processed >= budget.max_pairs:
            return basis, True
        _, i, j = heapq.heappop(heap)
        done.add((i, j))
        pairs_processed += 1
        lcm = lcm_of(i, j)
        # product criterion: coprime leading monomials reduce to zero
        if all(min(a, b) == 0 for a, b in zip(leads[i], leads[j])):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not divides(leads[k], lcm):
                continue
            p1 = (min(i, k), max(i, k))
            p2 = (min(j, k), max(j, k))
            if p1 in done and p2 in done:
                skip = True
                break
        if skip:
            continue
        rem = normal_form(_s_polynomial(basis[i], basis[j], key), basis, key)
        if rem.is_zero():
            continue
        if rem.total_degree() > budget.max_degree:
            return basis, True
        rem = rem.monic(key)
        basis.append(rem)
        leads.append(rem.leading(key)[0])
        new_index = len(basis) - 1
        for k in range(new_index):
            push(k, new_index)
        if rem.is_constant():
            return [MultiPoly.constant(variables, 1)], False
    return _reduce_basis(basis, key), False


def _reduce_basis(basis: list[MultiPoly], key: OrderKey) -> list[MultiPoly]:
    # drop members whose leading term another member's leading term divides
    kept: list[MultiPoly] = []
    leads = [g.leading(key)[0] for g in basis]
    for i, g in enumerate(basis):
        if any(
            j != i and divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i)
            for j in range(len(basis))
        ):
            continue
        kept.append(g)
    # tail-reduce until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            reduced = normal_form(kept[i], others, key) if others else kept[i]
            reduced = reduced.monic(key)
            if reduced != kept[i]:
                changed = True
                if reduced.is_zero():
                    kept.pop(i)
                else:
                    kept[i] = reduced
                break
    kept.sort(key=lambda g: key(g.leading(key)[0]), reverse=True)
    return kept


def groebner(generators: Sequence[MultiPoly], budget: GroebnerBudget = DEFAULT_BUDGET) -> IdealVerdict:
    """Reduced grevlex Groebner basis, or a BudgetExceeded verdict.

    The zero ideal (no nonzero generators) is solvable: every point works.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return IdealVerdict(IdealStatus.HAS_COMPLEX_SOLUTION, ())
    variables = gens[0].variables
    for g in gens:
        if g.variables != variables:
            raise ValueError("generators over different variable lists")
    if any(g.is_constant() for g in gens):
        return IdealVerdict(IdealStatus.NO_COMPLEX_SOLUTION, (MultiPoly.constant(variables, 1),))
    basis, exceeded = _buchberger(gens, budget, grevlex_key)
    if exceeded:
        return IdealVerdict(IdealStatus.BUDGET_EXCEEDED, None)
    basis_t = tuple(basis)
    if len(basis_t) == 1 and basis_t[0].is_constant():
        return IdealVerdict(IdealStatus.NO_COMPLEX_SOLUTION, basis_t)
    return IdealVerdict(IdealStatus.HAS_COMPLEX_SOLUTION, basis_t)


def is_zero_dimensional(basis: Sequence[MultiPoly], key: OrderKey = grevlex_key) -> bool:
    """Finite solution set iff every variable appears as a pure leading power."""
    if not basis:
        return False
    nvars = len(basis[0].variables)
    covered = [False] * nvars
    for g in basis:
        exps = g.leading(key)[0]
        support = [i for i, e in enumerate(exps) if e]
        if len(support) == 1:
            covered[support[0]] = True
        elif len(support) == 0:
            return False
    return all(covered)


def rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """All rational roots of a univariate polynomial given by ascending coefficients."""
    c = [frac(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return []
    roots = []
    lead_shift = 0
    while c[0] == 0:
        c.pop(0)
        lead_shift += 1
    if lead_shift:
        roots.append(Fraction(0))
    if len(c) == 1:
        return roots
    denom_lcm = 1
    for x in c:
        denom_lcm = denom_lcm * x.denominator // _gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in c]
    g = 0
    for v in ints:
        g = _gcd(g, abs(v))
    ints = [v // g for v in ints]
    a0, an = abs(ints[0]), abs(ints[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                if sum(ci * cand**i for i, ci in enumerate(ints)) == 0:
                    roots.append(cand)
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [1]
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def solve_if_zero_dimensional(
    basis: Sequence[MultiPoly], budget: GroebnerBudget = GroebnerBudget(max_pairs=400, max_degree=40)
) -> list[tuple[Fraction, ...]] | None:
    """Best-effort rational points of a zero-dimensional ideal given a reduced basis.

    Returns None when the ideal is {1}, not visibly zero-dimensional, or when
    no rational point is found; verdicts elsewhere never rely on this.
    """
    polys = [g for g in basis if not g.is_zero()]
    if not polys:
        return None
    variables = polys[0].variables
    nvars = len(variables)
    if nvars == 0:
        return [()]
    if any(g.is_constant() for g in polys):
        return None
    if not is_zero_dimensional(polys):
        return None
    lex_basis, exceeded = _buchberger(polys, budget, lex_key)
    if exceeded:
        return None
    points: list[tuple[Fraction, ...]] = []
    _extend_point(lex_basis, variables, {}, nvars - 1, points, limit=8)
    verified = [pt for pt in points if all(g.eval(pt) == 0 for g in polys)]
    return verified or None


def _extend_point(gens, variables, assignment, var_index, points, limit):
    if len(points) >= limit:
        return
    if var_index < 0:
        if all(g.substitute(assignment).is_zero() for g in gens):
            points.append(tuple(assignment[i] for i in range(len(variables))))
        return
    specialized = [g.substitute(assignment) for g in gens]
    specialized = [g for g in specialized if not g.is_zero()]
    if any(g.is_constant() for g in specialized):
        return
    univ = None
    for g in specialized:
        support = {i for exps in g.terms for i, e in enumerate(exps) if e}
        if support == {var_index}:
            univ = g
            break
    if univ is None:
        return
    deg = max(exps[var_index] for exps in univ.terms)
    coeffs = [Fraction(0)] * (deg + 1)
    for exps, c in univ.terms.items():
        coeffs[exps[var_index]] += c
    for root in rational_roots(coeffs):
        new_assignment = dict(assignment)
        new_assignment[var_index] = root
        _extend_point(gens, variables, new_assignment, var_index - 1, points, limit)
