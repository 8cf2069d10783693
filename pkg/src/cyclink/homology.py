"""Rational 2-chains bounding lifted curves in a cyclic branched cover.

The cover deformation-retracts onto a 2-complex with one vertical wall per
arc lift and one horizontal cell per sheet gap; a lifted curve bounds
rationally iff a linear system over the wall coefficients is consistent.
assemble_system writes that system down, bounding_chain solves it, and
verify_boundary recomputes the boundary of a candidate chain cell by cell,
independently of how the system was assembled.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .cover import BRANCH_WALL, CoverStructure, resolve_coset, wrap_sheet
from .rational_linalg import (
    format_rational,
    minimal_scalar_integer_solution,
    parse_rational,
    solve_many,
    solve_particular,
)


@dataclass(frozen=True)
class TwoChain:
    """A rational 2-chain whose boundary is one lifted curve.

    x[i][j-1] is the coefficient of the j-th lift of the wall under branch
    arc i; the lifted curve is the union of path-lifts of component `curve`
    over the sheets in `coset`, each taken with coefficient 1.
    """

    curve: int
    coset: tuple[int, ...]
    x: tuple[tuple[Fraction, ...], ...]

    def coefficient(self, arc: int, sheet: int) -> Fraction:
        return self.x[arc][sheet - 1]

    def to_dict(self) -> dict:
        return {
            "curve": self.curve,
            "coset": list(self.coset),
            "x": [[format_rational(v) for v in row] for row in self.x],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TwoChain":
        return cls(
            curve=int(data["curve"]),
            coset=tuple(int(s) for s in data["coset"]),
            x=tuple(
                tuple(parse_rational(v) for v in row) for row in data["x"]
            ),
        )


def assemble_system(cover: CoverStructure, curve: int | str, coset):
    """Linear system for chains bounding the given lifted curve.

    Returns (A, b, columns) where columns maps (branch arc, sheet) to the
    column index of that wall lift's coefficient. A depends only on the
    cover; only b depends on which lifted curve is being bounded.
    """
    diagram = cover.diagram
    branch = diagram.branch
    ci = diagram.component_index(curve)
    if ci == branch:
        raise ValueError("cannot bound lifts of the branch component")
    group = resolve_coset(cover, ci, coset)
    q = cover.q
    comp = diagram.components[branch]
    n = comp.arc_count

    columns = {
        (i, j): i * q + (j - 1) for i in range(n) for j in range(1, q + 1)
    }
    width = n * q
    rows: list[list[int]] = []
    rhs: list[int] = []

    # Vertical walls are built from sheet-gap cells, so the per-arc
    # coefficients must sum to zero.
    for i in range(n):
        row = [0] * width
        for j in range(1, q + 1):
            row[columns[(i, j)]] = 1
        rows.append(row)
        rhs.append(0)

    for i, up in enumerate(comp.underpasses):
        oc, oa = up.over.component, up.over.arc
        eps = up.sign
        hit = cover.sigma[branch][i]
        for j in range(1, q + 1):
            s_here = hit.superscript_of(j)
            s_above = hit.superscript_of(wrap_sheet(j + 1, q))
            acc: dict[int, int] = defaultdict(int)
            acc[columns[(i, j)]] += 1
            acc[columns[((i + 1) % n, j)]] -= 1
            b_val = 0
            if oc == branch:
                acc[columns[(oa, s_here)]] -= eps
                acc[columns[(oa, s_above)]] += eps
            elif oc == ci:
                b_val = eps * ((s_here in group) - (s_above in group))
            # Walls of other curves carry coefficient zero: no terms.
            row = [0] * width
            for col, val in acc.items():
                row[col] = val
            rows.append(row)
            rhs.append(b_val)

    return rows, rhs, columns


def _chain_from_solution(cover, ci, group, solution):
    if solution is None:
        return None
    q = cover.q
    n = cover.diagram.components[cover.diagram.branch].arc_count
    x = tuple(
        tuple(solution[i * q + (j - 1)] for j in range(1, q + 1))
        for i in range(n)
    )
    return TwoChain(curve=ci, coset=group, x=x)


def bounding_chain(cover: CoverStructure, curve: int | str, coset) -> TwoChain | None:
    """One rational chain bounding the lifted curve, or None if none exists."""
    ci = cover.diagram.component_index(curve)
    matrix, rhs, _ = assemble_system(cover, ci, coset)
    solution = solve_particular(matrix, rhs)
    return _chain_from_solution(
        cover, ci, resolve_coset(cover, ci, coset), solution
    )


def bounding_chains(cover: CoverStructure, curve: int | str) -> dict[tuple[int, ...], TwoChain | None]:
    """Bounding chains for every lift coset of the curve, keyed by coset.

    The coefficient matrix is shared by all cosets of one curve, so the
    whole family is solved with a single elimination; unbounded lifts map
    to None.
    """
    ci = cover.diagram.component_index(curve)
    if ci == cover.diagram.branch:
        raise ValueError("cannot bound lifts of the branch component")
    cosets = cover.components_of[ci]
    matrix = []
    rhss = []
    for group in cosets:
        matrix, rhs, _ = assemble_system(cover, ci, group)
        rhss.append(rhs)
    solutions = solve_many(matrix, rhss)
    return {
        group: _chain_from_solution(cover, ci, group, solution)
        for group, solution in zip(cosets, solutions)
    }


def minimal_bounding_multiple(cover: CoverStructure, curve: int | str, coset) -> int | None:
    """Smallest d >= 1 such that d times the lifted curve bounds integrally.

    None when the curve does not even bound rationally.
    """
    ci = cover.diagram.component_index(curve)
    matrix, rhs, _ = assemble_system(cover, ci, coset)
    return minimal_scalar_integer_solution(matrix, rhs)


def verify_boundary(cover: CoverStructure, chain: TwoChain) -> bool:
    """Recompute the chain's boundary cell by cell and compare to its curve.

    This walks every 1-cell of the cover complex directly: wall side edges,
    wall bottom edges, and the slits cut where wall lifts pass under
    crossings. It shares no code path with assemble_system.
    """
    diagram = cover.diagram
    q = cover.q
    branch = diagram.branch
    ci = chain.curve
    if not 0 <= ci < len(diagram.components) or ci == branch:
        raise ValueError("chain curve does not name a liftable component")
    group = set(resolve_coset(cover, ci, chain.coset))
    n = diagram.components[branch].arc_count
    if len(chain.x) != n or any(len(row) != q for row in chain.x):
        raise ValueError("chain shape does not match this cover")

    boundary: dict[tuple, Fraction] = defaultdict(Fraction)

    # Branch wall lifts: bottom edge on the branch arc, one side edge up
    # each neighbouring sheet gap.
    for i in range(n):
        for j in range(1, q + 1):
            v = chain.x[i][j - 1]
            if not v:
                continue
            boundary[("h", branch, i, None)] += v
            boundary[("v", branch, i, j)] += v
            boundary[("v", branch, (i - 1) % n, j)] -= v

    # Curve wall lifts over the chosen sheets, all with coefficient 1.
    m = diagram.components[ci].arc_count
    for u in range(m):
        for s in group:
            boundary[("h", ci, u, s)] += 1
            boundary[("v", ci, u, s)] += 1
            boundary[("v", ci, (u - 1) % m, s)] -= 1

    # Slits: where a wall lift passes under a crossing of the branch, its
    # bottom edge is interrupted and the two sides land one sheet apart.
    # Under a crossing of any other component both sides land on the same
    # edge and cancel, so only branch underpasses contribute.
    comp = diagram.components[branch]
    for u, up in enumerate(comp.underpasses):
        oc, oa = up.over.component, up.over.arc
        eps = up.sign
        hit = cover.sigma[branch][u]
        if oc == branch:
            for s in range(1, q + 1):
                v = chain.x[oa][s - 1]
                if not v:
                    continue
                p = hit.lift_with_superscript(s)
                boundary[("v", branch, u, p)] -= eps * v
                boundary[("v", branch, u, wrap_sheet(p - 1, q))] += eps * v
        elif oc == ci:
            for s in group:
                p = hit.lift_with_superscript(s)
                boundary[("v", branch, u, p)] -= eps
                boundary[("v", branch, u, wrap_sheet(p - 1, q))] += eps

    target: dict[tuple, Fraction] = defaultdict(Fraction)
    for u in range(m):
        for s in group:
            target[("h", ci, u, s)] += 1

    left = {k: v for k, v in boundary.items() if v}
    right = {k: v for k, v in target.items() if v}
    return left == right
