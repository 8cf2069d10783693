"""Oriented link diagrams encoded as underpass lists.

A diagram is stored one component at a time. Walking along a component in
the direction of its orientation, an arc ends exactly where the walker
passes under another strand, so a component with n underpasses has n arcs
and ``underpasses[i]`` is the crossing at the head of arc i. Overpasses do
not interrupt arcs; they are implicit, since arc (c, a) appears as the
``over`` reference of every crossing where it is the overstrand.

One component is distinguished as the branch curve. The covering machinery
in :mod:`cyclink.cover` consumes these diagrams and requires the branch
writhe to vanish mod q; :func:`normalize_writhe` adds the kinks that
arrange this.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

FORMAT = "cyclink-diagram-1"


@dataclass(frozen=True)
class OverstrandRef:
    """The arc passing over at some crossing: component index plus arc index."""

    component: int
    arc: int


@dataclass(frozen=True)
class Underpass:
    """One undercrossing along a walk: crossing sign and the overstrand arc."""

    sign: int
    over: OverstrandRef


@dataclass(frozen=True)
class LinkComponent:
    name: str
    underpasses: tuple[Underpass, ...]

    @property
    def arc_count(self) -> int:
        # A closed curve that never passes under anything is one arc.
        return max(1, len(self.underpasses))


@dataclass(frozen=True)
class LinkDiagram:
    components: tuple[LinkComponent, ...]
    branch: int

    def component_index(self, key: int | str) -> int:
        """Resolve a component given by index or by name."""
        if isinstance(key, int):
            if not 0 <= key < len(self.components):
                raise ValueError(f"component index {key} out of range")
            return key
        for i, c in enumerate(self.components):
            if c.name == key:
                return i
        try:
            return self.component_index(int(key))
        except (TypeError, ValueError):
            pass
        raise ValueError(f"no component named {key!r}")


ValidationReport = list


def validate(diagram: LinkDiagram) -> list[str]:
    """Check structural consistency; returns a list of violations, empty if valid."""
    problems: list[str] = []
    if not diagram.components:
        problems.append("diagram has no components")
        return problems
    if not 0 <= diagram.branch < len(diagram.components):
        problems.append(f"branch index {diagram.branch} out of range")
    seen: set[str] = set()
    for ci, comp in enumerate(diagram.components):
        if comp.name in seen:
            problems.append(f"duplicate component name {comp.name!r}")
        seen.add(comp.name)
        for ai, up in enumerate(comp.underpasses):
            where = f"component {ci} ({comp.name}) underpass {ai}"
            if up.sign not in (1, -1):
                problems.append(f"{where}: sign {up.sign} is not +1 or -1")
            oc = up.over.component
            if not 0 <= oc < len(diagram.components):
                problems.append(f"{where}: overstrand component {oc} out of range")
                continue
            target = diagram.components[oc]
            if not 0 <= up.over.arc < target.arc_count:
                problems.append(
                    f"{where}: overstrand arc {up.over.arc} out of range for "
                    f"component {oc} with {target.arc_count} arcs"
                )
    return problems


def writhe(diagram: LinkDiagram, component: int) -> int:
    """Signed count of self-crossings of one component."""
    comp = diagram.components[component]
    return sum(u.sign for u in comp.underpasses if u.over.component == component)


def pairwise_linking(diagram: LinkDiagram, a: int, b: int) -> int:
    """Linking number of components a and b, read off from a's underpasses.

    For a planar-realizable diagram this equals the count read off from b's
    underpasses; both sides of that symmetry are exercised in the tests.
    """
    if a == b:
        raise ValueError("pairwise linking needs two distinct components")
    comp = diagram.components[a]
    return sum(u.sign for u in comp.underpasses if u.over.component == b)


def normalize_writhe(diagram: LinkDiagram, q: int) -> LinkDiagram:
    """Append kinks to the branch component until its writhe vanishes mod q.

    Uses whichever of the two kink counts is smaller: r positive kinks with
    r = (-writhe) mod q, or r' negative kinks with r' = writhe mod q. Ties go
    to positive kinks. Each kink is one extra arc whose underpass records the
    kink arc itself as overstrand.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    w = writhe(diagram, diagram.branch)
    r_pos = (-w) % q
    r_neg = w % q
    count, sign = (r_pos, 1) if r_pos <= r_neg else (r_neg, -1)
    if count == 0:
        return diagram
    comp = diagram.components[diagram.branch]
    ups = list(comp.underpasses)
    for _ in range(count):
        ups.append(Underpass(sign, OverstrandRef(diagram.branch, len(ups))))
    comps = list(diagram.components)
    comps[diagram.branch] = replace(comp, underpasses=tuple(ups))
    return replace(diagram, components=tuple(comps))


def mirror(diagram: LinkDiagram) -> LinkDiagram:
    """The mirror diagram: every crossing sign negated, over/under kept."""
    comps = []
    for comp in diagram.components:
        ups = tuple(Underpass(-u.sign, u.over) for u in comp.underpasses)
        comps.append(replace(comp, underpasses=ups))
    return replace(diagram, components=tuple(comps))


def diagram_to_dict(diagram: LinkDiagram) -> dict:
    return {
        "format": FORMAT,
        "branch": diagram.branch,
        "components": [
            {
                "name": c.name,
                "underpasses": [
                    {
                        "sign": u.sign,
                        "over": {"component": u.over.component, "arc": u.over.arc},
                    }
                    for u in c.underpasses
                ],
            }
            for c in diagram.components
        ],
    }


def diagram_from_dict(data: dict) -> LinkDiagram:
    if not isinstance(data, dict):
        raise ValueError("diagram JSON must be an object")
    fmt = data.get("format")
    if fmt != FORMAT:
        raise ValueError(f"unsupported diagram format {fmt!r}, expected {FORMAT!r}")
    try:
        comps = tuple(
            LinkComponent(
                name=str(c["name"]),
                underpasses=tuple(
                    Underpass(
                        sign=int(u["sign"]),
                        over=OverstrandRef(
                            int(u["over"]["component"]), int(u["over"]["arc"])
                        ),
                    )
                    for u in c["underpasses"]
                ),
            )
            for c in data["components"]
        )
        branch = int(data["branch"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed diagram JSON: {exc}") from exc
    return LinkDiagram(components=comps, branch=branch)


def load_diagram(path) -> LinkDiagram:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"not valid JSON: {exc}") from exc
    return diagram_from_dict(data)


def save_diagram(diagram: LinkDiagram, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(diagram_to_dict(diagram), fh, indent=1)
        fh.write("\n")
