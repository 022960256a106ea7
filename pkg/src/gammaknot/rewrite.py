"""Local rewrites of knot diagrams.

Reidemeister I and II moves, crossing changes, splicing a tangle template
into a disk cut, and the gamma-knot construction built from them: replace
two co-oriented parallel arcs by the 16-crossing 2-parallel of a
figure-eight arc, adding one kink first when the arcs are anti-parallel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Crossing, Diagram, DiagramError, assemble, parse_pd
from .metric import EdgePair, far_pair, rho
from .tangle import (
    DiskCut,
    TangleDiagram2,
    cut_disk,
    orientation_case,
    tangle_sum,
    trivial_tangle,
    two_parallel_tangle,
)

__all__ = [
    "DOUBLE_FIG8",
    "GammaReport",
    "TRIVIAL",
    "TangleTemplate",
    "crossing_change",
    "gamma_knot",
    "mirror",
    "reidemeister1",
    "reidemeister2",
    "splice",
]


def crossing_change(d: Diagram, c: int) -> Diagram:
    """Swap over and under at crossing ``c``; the projection is unchanged."""
    if not 0 <= c < d.n:
        raise DiagramError(f"no crossing with id {c}")
    out = list(d.crossings)
    x = out[c]
    r = x.over_in
    slots = tuple(x.slots[(k + r) % 4] for k in range(4))
    out[c] = Crossing(c, slots, 4 - r)
    return Diagram(tuple(out), d.source_labels)


def mirror(d: Diagram) -> Diagram:
    """Change every crossing."""
    for c in range(d.n):
        d = crossing_change(d, c)
    return d


# (side, sign) -> slots of the kink crossing and the slot where the incoming
# piece e1 enters.  e1 runs into the kink, l is the loop, e2 leaves.
_KINKS = {
    ("R", -1): (("e1", "l", "l", "e2"), 0),
    ("R", 1): (("l", "l", "e2", "e1"), 3),
    ("L", 1): (("e1", "e2", "l", "l"), 0),
    ("L", -1): (("l", "e1", "e2", "l"), 1),
}


def _kink(d: Diagram, edge: int, side: str, sign: int):
    if not 0 <= edge < d.num_edges:
        raise DiagramError(f"edge index {edge} out of range")
    if (side, sign) not in _KINKS:
        raise ValueError("side must be 'L' or 'R' and sign +1 or -1")
    slots, entry = _KINKS[(side, sign)]
    if d.n == 0:
        slots = tuple("e1" if v == "e2" else v for v in slots)
        raw = [list(slots)]
    else:
        raw = [list(x.slots) for x in d.crossings]
        tc, ts = d.tail(edge)
        hc, hs = d.head(edge)
        raw[tc][ts] = "e1"
        raw[hc][hs] = "e2"
        raw.append(list(slots))
    return assemble(raw, start=(len(raw) - 1, entry))


def reidemeister1(d: Diagram, edge: int, side: str, sign: int) -> Diagram:
    """Add a kink on ``edge`` whose loop lies on ``side`` ('L' or 'R').

    ``sign`` is the sign of the new crossing.
    """
    return _kink(d, edge, side, sign)[0]


def reidemeister2(d: Diagram, e: int, f: int, over: int, face: int | None = None) -> Diagram:
    """Push a finger of ``e`` across ``f`` through a face they share.

    Adds two crossings bounding a bigon; edge ``over`` passes over at both.
    ``face`` defaults to the lowest-indexed shared face.
    """
    if d.n == 0:
        raise DiagramError("the crossingless diagram has a single edge")
    if e == f or over not in (e, f):
        raise DiagramError("need two distinct edges, one of them over")
    for x in (e, f):
        if not 0 <= x < d.num_edges:
            raise DiagramError(f"edge index {x} out of range")
    if face is None:
        shared = [k for k, q in enumerate(d.faces) if e in q.edges and f in q.edges]
        if not shared:
            raise DiagramError(f"edges {e} and {f} share no face")
        face = shared[0]
    q = d.faces[face]
    if e not in q.edges or f not in q.edges:
        raise DiagramError(f"edges {e} and {f} do not both border face {face}")

    raw = [list(x.slots) for x in d.crossings]
    for x, tag in ((e, "e"), (f, "f")):
        fwd = q.side_of(x) == "R"
        back, ahead = (d.tail(x), d.head(x)) if fwd else (d.head(x), d.tail(x))
        # pieces named along the face walk: 1 before the finger, 2 after
        raw[back[0]][back[1]] = tag + "1"
        raw[ahead[0]][ahead[1]] = tag + "2"
    if over == f:
        raw.append(["e1", "f2", "em", "fm"])
        raw.append(["e2", "fm", "em", "f1"])
    else:
        raw.append(["f2", "em", "fm", "e1"])
        raw.append(["fm", "em", "f1", "e2"])
    return assemble(raw, start=(0, 0))[0]


@dataclass(frozen=True)
class TangleTemplate:
    """A tangle to be glued into a disk cut in place of the two inside arcs.

    Strands join boundary points 0-1 and 2-3.  ``required_case`` is the
    orientation case the template needs, or ``None`` if any will do.
    """

    name: str
    tangle: TangleDiagram2
    required_case: str | None

    @property
    def n(self) -> int:
        return self.tangle.n

    @property
    def strand_map(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return self.tangle.strand_ends(1), self.tangle.strand_ends(2)


FIGURE_EIGHT = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")

DOUBLE_FIG8 = TangleTemplate("double_fig8", two_parallel_tangle(FIGURE_EIGHT, 0), "alpha")
TRIVIAL = TangleTemplate("trivial", TangleDiagram2.build((), ("p", "p", "q", "q")), None)


def _gluing_shift(outside: TangleDiagram2, t: TangleTemplate) -> int:
    arcs = {frozenset((0, 3)), frozenset((1, 2))}
    ends = [frozenset(p) for p in t.strand_map]
    for s in range(4):
        back = {m: (s - m) % 4 for m in range(4)}
        if {frozenset(back[m] for m in e) for e in ends} != arcs:
            continue
        if outside.inward is not None and t.tangle.inward is not None:
            if any(outside.inward[k] == t.tangle.inward[(s - k) % 4] for k in range(4)):
                continue
        return s
    raise DiagramError(f"template {t.name} cannot be glued in with matching orientations")


def splice(d: Diagram, cut: DiskCut, t: TangleTemplate) -> Diagram:
    """Replace the two inside arcs of ``cut`` by template ``t``."""
    case = orientation_case(d, cut)
    if t.required_case is not None and case != t.required_case:
        raise DiagramError(f"template {t.name} needs case {t.required_case}, cut is case {case}")
    _, outside = cut_disk(d, cut.pair)
    s = _gluing_shift(outside, t)
    out = tangle_sum(outside, t.tangle, s)
    if not isinstance(out, Diagram):
        raise DiagramError("splice produced a link, not a knot")
    return out


def template_winding(cut: DiskCut, t: TangleTemplate, outside: TangleDiagram2) -> int:
    """Signed count of template strands crossing a chord between the arcs.

    Outside points 2 and 3 lie on one end of the disk; a strand entering
    the template there counts +1 and one leaving counts -1.
    """
    if t.tangle.inward is None:
        raise ValueError("template is unoriented")
    s = _gluing_shift(outside, t)
    return sum(1 if t.tangle.inward[(s - k) % 4] else -1 for k in (2, 3))


@dataclass(frozen=True)
class GammaReport:
    case: str
    input_cr: int
    output_cr: int
    cut: DiskCut
    kink: dict | None
    winding: int

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "input_cr": self.input_cr,
            "output_cr": self.output_cr,
            "cut": self.cut.as_dict(),
            "kink": self.kink,
            "winding": self.winding,
        }


def gamma_knot(d: Diagram, cut: DiskCut | EdgePair | tuple[int, int] | None = None,
               kink_sign: int = 1) -> tuple[Diagram, GammaReport]:
    """Build a knot satellite to ``d`` with a doubled figure-eight pattern.

    The default cut is the far pair's.  With co-oriented arcs the template
    goes in directly (+16 crossings); otherwise a kink on ``I`` on the
    face's side reverses the arc through the disk first (+17).
    """
    if d.n == 0:
        raise DiagramError("gamma move needs at least one crossing")
    if cut is None:
        cut = far_pair(d)
    if not isinstance(cut, DiskCut):
        cut = cut_disk(d, cut)[0]
    case = orientation_case(d, cut)
    if case == "alpha":
        target, tcut, kink = d, cut, None
    else:
        i, j = cut.pair.i, cut.pair.j
        si, sj = cut.sides
        target, relabel = _kink(d, i, si, kink_sign)
        loop, jj = relabel["l"], relabel[j]
        # the loop runs backwards past the face it bulges into
        sl = "L" if si == "R" else "R"
        q = target.face_index[(loop, sl)]
        if target.face_index[(jj, sj)] != q:
            raise DiagramError("kink loop and J do not share a face")
        a, b = sorted((loop, jj))
        tcut = cut_disk(target, EdgePair(a, b, rho(target, a, b), q))[0]
        if orientation_case(target, tcut) != "alpha":
            raise DiagramError("kink did not make the arcs co-oriented")
        kink = {"edge": i, "side": si, "sign": kink_sign}
    out = splice(target, tcut, DOUBLE_FIG8)
    _, outside = cut_disk(target, tcut.pair)
    report = GammaReport(case, d.n, out.n, cut, kink, template_winding(tcut, DOUBLE_FIG8, outside))
    return out, report
