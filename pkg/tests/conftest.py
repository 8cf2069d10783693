"""Shared diagram factories for the test suite.

Everything here leans on the geometric Builder so that the diagrams are
planar-realizable by construction; tests then probe the library against
facts that are forced by the geometry (linking numbers of torus links,
meridian counts, mirror behaviour) rather than against its own output.
"""

from __future__ import annotations

from functools import lru_cache

from builders import Builder, ClosedBraid, closed_braid_diagram
from cyclink import LinkDiagram
from cyclink.fixtures import Fixture, load_fixture


@lru_cache(maxsize=None)
def fixture(name: str) -> Fixture:
    # Fixtures are frozen; caching keeps repeated loads out of the profile.
    return load_fixture(name)


def hopf_diagram(sign: int = 1) -> LinkDiagram:
    """Hopf link as the closed 2-braid with two same-sign crossings."""
    cb = ClosedBraid(2)
    cb.step(0, sign)
    cb.step(0, sign)
    first = cb.builder.death(1)
    second = cb.builder.death(0)
    return cb.builder.to_diagram(branch=first, names={first: "K", second: "eta"})


def trefoil_diagram(sign: int = 1) -> LinkDiagram:
    return closed_braid_diagram(2, [(0, sign)] * 3)


def wire_with_meridian(span: int = 1, wires: int = 1, **kw) -> LinkDiagram:
    """An unknot closed from `wires` strands plus a circle around the first
    `span` of them. One positive crossing per adjacent pair joins the
    strands into a single component."""
    cb = ClosedBraid(wires)
    m = cb.meridian(0, span, **kw)
    for s in range(wires - 1):
        cb.step(s, 1)
    k = cb.close()
    return cb.builder.to_diagram(branch=k, names={k: "K", m: "eta"})


def hopf_pair_beside_unknot(sign: int = 1) -> LinkDiagram:
    """An unknotted branch next to a split-off Hopf pair eta1, eta2.

    The pair never touches the branch, so each lift stays in its own sheet
    copy and every cover-level linking number is forced by the classical
    one: sign on the diagonal, zero elsewhere.
    """
    b = Builder()
    b.birth(0)
    k = b.death(0)
    b.birth(0)
    b.birth(1)
    b.cross_signed(2, sign)
    b.cross_signed(2, sign)
    first = b.death(1)
    second = b.death(0)
    return b.to_diagram(
        branch=k, names={k: "K", first: "eta1", second: "eta2"}
    )


def clasped_wire_diagram() -> LinkDiagram:
    """Trefoil plus a winding-zero circle around a wire/return pair.

    The circle is inserted between braid crossings, so the two strands it
    encircles sit on different sheets of the cover walk. Its lifts bound
    at q = 2 and 3 but not at q = 6, which makes this the standing example
    of a defined-input / undefined-value linking computation.
    """
    cb = ClosedBraid(2)
    cb.step(0, 1)
    clasp = cb.builder.meridian(1, 2)
    cb.step(0, 1)
    cb.step(0, 1)
    k = cb.close()
    return cb.builder.to_diagram(branch=k, names={k: "K", clasp: "eta"})
