"""Sheet bookkeeping for cyclic covers branched over one diagram component.

Everything downstream solvers need to know about the q-fold cyclic branched
cover is combinatorial and is computed here in one pass: how the q sheets
permute while walking along each component (the omega tables), which lift of
a wall is crossed at each underpass (the sigma tables), and how path-lifts of
the non-branch components close up into connected curves (the cosets).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import LinkDiagram, validate, writhe

BRANCH_WALL = "branch-wall"
PSEUDO_WALL = "pseudo-wall"


def wrap_sheet(value: int, q: int) -> int:
    """Reduce a sheet label mod q into the range 1..q."""
    return (value - 1) % q + 1


@dataclass(frozen=True)
class SheetMap:
    """A permutation of the sheet labels 1..q, stored as a lookup table.

    Every map that arises from walking a component is a cyclic shift
    j -> wrap(j + shift), but consumers only rely on the table.
    """

    table: tuple[int, ...]

    @classmethod
    def from_shift(cls, shift: int, q: int) -> "SheetMap":
        return cls(tuple(wrap_sheet(j + shift, q) for j in range(1, q + 1)))

    @property
    def q(self) -> int:
        return len(self.table)

    @property
    def shift(self) -> int:
        # table[0] = wrap(1 + shift), so this recovers the shift in 0..q-1.
        return (self.table[0] - 1) % self.q

    def apply(self, j: int) -> int:
        return self.table[j - 1]

    def invert(self, j: int) -> int:
        return self.table.index(j) + 1

    def is_identity(self) -> bool:
        return self.shift == 0


@dataclass(frozen=True)
class WallHit:
    """Which lift of the overstrand wall an arc runs into at its underpass.

    Walking into the crossing on sheet j, the wall lift crossed carries the
    superscript returned by superscript_of(j); lift_with_superscript is its
    inverse and answers "on which sheet does the wall lift labelled s sit".
    """

    wall_kind: str
    wall_component: int
    wall_arc: int
    offset: int
    q: int

    def superscript_of(self, j: int) -> int:
        return wrap_sheet(j + self.offset, self.q)

    def lift_with_superscript(self, s: int) -> int:
        return wrap_sheet(s - self.offset, self.q)


@dataclass(frozen=True)
class CoverStructure:
    """The combinatorial structure of one branched cover.

    omega[c][i] is the sheet permutation accumulated walking component c from
    its basepoint to the start of arc i; omega[c][arc_count] is the closure
    map of the walk. sigma[c][i] describes the wall lift crossed at underpass
    i of component c. lbar[c] and components_of[c] are None at the branch;
    elsewhere lbar[c] is the linking number with the branch mod q, and
    components_of[c] lists the sheet cosets that form closed lifted curves.
    """

    q: int
    diagram: LinkDiagram
    omega: tuple[tuple[SheetMap, ...], ...]
    sigma: tuple[tuple[WallHit, ...], ...]
    lbar: tuple[int | None, ...]
    components_of: tuple[tuple[tuple[int, ...], ...] | None, ...]


def build_cover(diagram: LinkDiagram, q: int) -> CoverStructure:
    """Compute sheet walks, wall hits and lift cosets for the q-fold cover.

    The branch component must have writhe divisible by q; otherwise the
    sheets fail to close up and a ValueError points at normalize_writhe.
    """
    if q < 1:
        raise ValueError("cover degree q must be a positive integer")
    problems = validate(diagram)
    if problems:
        raise ValueError("invalid diagram: " + "; ".join(problems))
    w = writhe(diagram, diagram.branch)
    if w % q != 0:
        raise ValueError(
            f"branch component writhe {w} is not divisible by q={q}; "
            "apply normalize_writhe to the diagram first"
        )

    branch = diagram.branch
    shifts: list[list[int]] = []
    for comp in diagram.components:
        t = [0]
        for up in comp.underpasses:
            step = up.sign if up.over.component == branch else 0
            t.append(t[-1] + step)
        shifts.append(t)

    omega = tuple(
        tuple(SheetMap.from_shift(t, q) for t in walk) for walk in shifts
    )

    sigma = []
    for ci, comp in enumerate(diagram.components):
        hits = []
        for i, up in enumerate(comp.underpasses):
            oc, oa = up.over.component, up.over.arc
            if oc == branch:
                kind = BRANCH_WALL
                # Walls hang below a negative crossing one lift lower.
                adjust = 1 if up.sign < 0 else 0
            else:
                kind = PSEUDO_WALL
                adjust = 0
            offset = (shifts[ci][i] - shifts[oc][oa] - adjust) % q
            hits.append(WallHit(kind, oc, oa, offset, q))
        sigma.append(tuple(hits))

    lbar: list[int | None] = []
    components_of: list[tuple[tuple[int, ...], ...] | None] = []
    for ci, comp in enumerate(diagram.components):
        if ci == branch:
            lbar.append(None)
            components_of.append(None)
            continue
        l = shifts[ci][-1] % q
        lbar.append(l)
        step = gcd(l, q)  # gcd(0, q) == q: every lift closes on its own sheet
        cosets = tuple(
            tuple(range(k, q + 1, step)) for k in range(1, step + 1)
        )
        components_of.append(cosets)

    return CoverStructure(
        q=q,
        diagram=diagram,
        omega=omega,
        sigma=tuple(sigma),
        lbar=tuple(lbar),
        components_of=tuple(components_of),
    )


def lift_components(cover: CoverStructure, curve: int | str) -> list[tuple[int, ...]]:
    """The sheet cosets whose path-lifts join into one closed curve each."""
    ci = cover.diagram.component_index(curve)
    if ci == cover.diagram.branch:
        raise ValueError("the branch component lifts to the branch locus, not to curves")
    return list(cover.components_of[ci])


def resolve_coset(cover: CoverStructure, curve: int | str, coset) -> tuple[int, ...]:
    """Canonicalize a coset given as its smallest member or as a collection."""
    ci = cover.diagram.component_index(curve)
    if ci == cover.diagram.branch:
        raise ValueError("the branch component has no lift cosets")
    cosets = cover.components_of[ci]
    if isinstance(coset, int):
        for c in cosets:
            if coset in c:
                return c
        raise ValueError(f"no lift of component {ci} contains sheet {coset}")
    wanted = tuple(sorted(set(coset)))
    if wanted in cosets:
        return wanted
    raise ValueError(f"{wanted} is not a lift component of component {ci}")


def sigma_at(cover: CoverStructure, component: int | str, arc: int, j: int) -> int:
    """Superscript of the wall lift crossed at an underpass, entered on sheet j."""
    ci = cover.diagram.component_index(component)
    hits = cover.sigma[ci]
    if not 0 <= arc < len(hits):
        raise ValueError(f"component {ci} has no underpass {arc}")
    if not 1 <= j <= cover.q:
        raise ValueError(f"sheet {j} out of range 1..{cover.q}")
    return hits[arc].superscript_of(j)
