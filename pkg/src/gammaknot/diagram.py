"""Knot diagrams as oriented 4-valent combinatorial maps.

A crossing is stored PD-style: four edge labels in counterclockwise order,
starting at the incoming under-strand.  Slots 0 and 2 are the under-strand,
slots 1 and 3 the over-strand.  ``over_in`` records which over slot is
incoming, which fixes the crossing sign.

Diagrams are immutable.  Every constructor funnels through :func:`assemble`,
which follows strands to build the traversal, relabels edges ``0..2n-1`` in
traversal order and rejects anything that is not a single closed component
drawn on the sphere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

__all__ = [
    "Crossing",
    "Diagram",
    "DiagramError",
    "Face",
    "UNKNOT",
    "assemble",
    "edge_cycle",
    "faces",
    "parse_pd",
    "parse_pd_file",
    "serialize",
]

Position = tuple[int, int]


class DiagramError(ValueError):
    """Raised for malformed or non-knot diagram data."""


@dataclass(frozen=True)
class Crossing:
    id: int
    slots: tuple[int, int, int, int]
    over_in: int  # 1 or 3

    def __post_init__(self):
        if len(self.slots) != 4:
            raise DiagramError(f"crossing {self.id} needs exactly 4 slots")
        if self.over_in not in (1, 3):
            raise DiagramError(f"crossing {self.id}: over_in must be 1 or 3")

    @property
    def over_under(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """(over slot pair, under slot pair), each as (incoming, outgoing)."""
        return (self.over_in, 4 - self.over_in), (0, 2)

    @property
    def sign(self) -> int:
        # under runs south->north; over entering from the west is right-handed
        return 1 if self.over_in == 3 else -1

    def incoming(self) -> tuple[int, int]:
        return (0, self.over_in)

    def outgoing(self) -> tuple[int, int]:
        return (2, 4 - self.over_in)


@dataclass(frozen=True)
class Face:
    """A complementary region, as its boundary walk of (edge, side) pairs.

    The walk keeps the face on its right; ``side`` says on which side of the
    edge's own orientation the face lies ('L' or 'R').
    """

    boundary: tuple[tuple[int, str], ...]

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(e for e, _ in self.boundary)

    def side_of(self, edge: int) -> str:
        for e, s in self.boundary:
            if e == edge:
                return s
        raise KeyError(edge)

    def __len__(self):
        return len(self.boundary)


@dataclass(frozen=True, eq=False)
class Diagram:
    """A single-component knot diagram on the sphere.

    Edge ``k`` enters the ``k``-th crossing visit of the traversal and edge
    ``k+1`` leaves it, so the traversal order is simply ``0, 1, ..., 2n-1``.
    The 0-crossing unknot is a single edge ``0`` with two faces.
    """

    crossings: tuple[Crossing, ...]
    source_labels: tuple[Hashable, ...] = field(default=(), compare=False)

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def num_edges(self) -> int:
        return max(2 * self.n, 1)

    @property
    def edges(self) -> range:
        return range(self.num_edges)

    @property
    def traversal(self) -> tuple[int, ...]:
        return tuple(self.edges)

    @cached_property
    def _ends(self) -> tuple[list[Position], list[Position]]:
        tail: list[Position] = [(-1, -1)] * self.num_edges
        head: list[Position] = [(-1, -1)] * self.num_edges
        for x in self.crossings:
            for s in x.incoming():
                head[x.slots[s]] = (x.id, s)
            for s in x.outgoing():
                tail[x.slots[s]] = (x.id, s)
        return tail, head

    def tail(self, edge: int) -> Position:
        """Crossing slot where ``edge`` starts."""
        return self._ends[0][edge]

    def head(self, edge: int) -> Position:
        """Crossing slot where ``edge`` ends."""
        return self._ends[1][edge]

    def label_at(self, pos: Position) -> int:
        return self.crossings[pos[0]].slots[pos[1]]

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        if self.n == 0:
            return (Face(((0, "R"),)), Face(((0, "L"),)))
        tail, head = self._ends
        seen: set[Position] = set()
        out = []
        for x in self.crossings:
            for s in range(4):
                start = (x.id, s)
                if start in seen:
                    continue
                walk = []
                pos = start
                while pos not in seen:
                    seen.add(pos)
                    e = self.label_at(pos)
                    if pos == tail[e]:
                        walk.append((e, "R"))
                        c, t = head[e]
                    else:
                        walk.append((e, "L"))
                        c, t = tail[e]
                    pos = (c, (t + 1) % 4)
                out.append(Face(tuple(walk)))
        return tuple(out)

    @cached_property
    def face_index(self) -> dict[tuple[int, str], int]:
        """Map (edge, side) -> index of the face on that side."""
        return {inc: k for k, f in enumerate(self.faces) for inc in f.boundary}

    def to_pd(self) -> list[tuple[int, int, int, int]]:
        return [x.slots for x in self.crossings]

    def canonical_key(self) -> tuple:
        """Invariant under edge relabelling (cyclic shifts) and crossing order."""
        if self.n == 0:
            return ()
        m = 2 * self.n
        best = None
        for r in range(m):
            key = tuple(sorted(
                (tuple((v - r) % m for v in x.slots), x.over_in) for x in self.crossings
            ))
            if best is None or key < best:
                best = key
        return best

    def is_isomorphic(self, other: Diagram) -> bool:
        return self.n == other.n and self.canonical_key() == other.canonical_key()

    def gauss_code(self) -> str:
        """Signed Gauss code: one ``O``/``U`` token per crossing visit, 1-based ids."""
        if self.n == 0:
            return ""
        tail, head = self._ends
        tokens = []
        for k in range(2 * self.n):
            c, s = head[k]
            x = self.crossings[c]
            kind = "U" if s == 0 else "O"
            tokens.append(f"{kind}{c + 1}{'+' if x.sign > 0 else '-'}")
        return " ".join(tokens)

    def __repr__(self):
        return f"Diagram(n={self.n}, pd={serialize(self)!r})"


UNKNOT = Diagram(())


def _positions(raw: Sequence[Sequence[Hashable]]) -> dict[Hashable, list[Position]]:
    pos: dict[Hashable, list[Position]] = {}
    for c, slots in enumerate(raw):
        if len(slots) != 4:
            raise DiagramError(f"crossing {c} has {len(slots)} slots, expected 4")
        for s, lab in enumerate(slots):
            pos.setdefault(lab, []).append((c, s))
    bad = {lab: len(p) for lab, p in pos.items() if len(p) != 2}
    if bad:
        lab, k = next(iter(bad.items()))
        raise DiagramError(f"edge label {lab!r} appears {k} times, expected 2")
    return pos


def _face_count(raw: Sequence[Sequence[Hashable]], pos: dict) -> int:
    # orientation-free face walk: arrive at (c, s), leave through (c, s+1)
    seen: set[Position] = set()
    count = 0
    for c in range(len(raw)):
        for s in range(4):
            if (c, s) in seen:
                continue
            count += 1
            p = (c, s)
            while p not in seen:
                seen.add(p)
                a, b = pos[raw[p[0]][p[1]]]
                q = b if a == p else a
                p = (q[0], (q[1] + 1) % 4)
    return count


def assemble(raw: Sequence[Sequence[Hashable]], start: Position = (0, 0), strict: bool = False,
             source: Sequence[Hashable] | None = None) -> tuple[Diagram, dict[Hashable, int]]:
    """Build a validated :class:`Diagram` from raw crossings.

    ``raw`` lists each crossing as 4 labels in counterclockwise order with
    the under-strand at slots 0 and 2; the under direction need not be known.
    The traversal enters crossing ``start[0]`` through slot ``start[1]``,
    which fixes the orientation.  With ``strict`` every under-strand must
    already be entered through slot 0 (the PD convention).

    Returns the diagram and the map from raw labels to new edge indices.
    """
    raw = [tuple(x) for x in raw]
    if not raw:
        return UNKNOT, {}
    pos = _positions(raw)
    n = len(raw)
    c0, s0 = start
    if not (0 <= c0 < n and 0 <= s0 < 4):
        raise DiagramError(f"start position {start} out of range")

    def other(p: Position) -> Position:
        a, b = pos[raw[p[0]][p[1]]]
        return b if a == p else a

    entries: list[Position] = []
    p = (c0, s0)
    while True:
        entries.append(p)
        if len(entries) > 2 * n:
            raise DiagramError("traversal does not close up")
        p = other((p[0], (p[1] + 2) % 4))
        if p == (c0, s0):
            break
    if len(entries) != 2 * n:
        raise DiagramError(
            f"diagram has more than one component (traversal covers {len(entries)} of {2 * n} edges)")

    rot = [0] * n
    over_entry = [0] * n
    for c, s in entries:
        if s % 2 == 0:
            if s == 2:
                if strict:
                    raise DiagramError(
                        f"crossing {c}: under-strand enters through slot 2, expected slot 0")
                rot[c] = 2
        else:
            over_entry[c] = s

    m = 2 * n
    new_at: dict[Position, int] = {}
    relabel: dict[Hashable, int] = {}
    for k, (c, s) in enumerate(entries):
        new_at[(c, s)] = k
        new_at[(c, (s + 2) % 4)] = (k + 1) % m
        relabel[raw[c][s]] = k

    crossings = []
    for c in range(n):
        r = rot[c]
        slots = tuple(new_at[(c, (i + r) % 4)] for i in range(4))
        over_in = (over_entry[c] - r) % 4
        crossings.append(Crossing(c, slots, over_in))

    faces_n = _face_count(raw, pos)
    if n - 2 * n + faces_n != 2:
        raise DiagramError(
            f"rotation system is not planar: V-E+F = {n}-{2 * n}+{faces_n} != 2")

    labels = tuple(source) if source is not None else tuple(raw[c][s] for c, s in entries)
    return Diagram(tuple(crossings), labels), relabel


_RECORD = re.compile(r"X\[\s*([^\]]*)\]")


def parse_pd(text: str) -> Diagram:
    """Parse ``X[a,b,c,d] X[...] ...`` (or ``U``) into a validated diagram.

    Edge labels are positive integers, not necessarily contiguous.  A
    ``PD[...]`` wrapper and commas between records are tolerated.
    """
    body = text.strip()
    if body.startswith("PD[") and body.endswith("]"):
        body = body[3:-1]
    if body == "U":
        return UNKNOT
    if not body:
        raise DiagramError("empty PD code")
    raw = []
    last = 0
    for m in _RECORD.finditer(body):
        gap = body[last:m.start()]
        if gap.strip(" \t\n,"):
            raise DiagramError(f"malformed token {gap.strip()!r}")
        parts = [p.strip() for p in m.group(1).split(",")]
        if len(parts) != 4 or not all(p.isdigit() and int(p) > 0 for p in parts):
            raise DiagramError(f"malformed crossing record {m.group(0)!r}")
        raw.append(tuple(int(p) for p in parts))
        last = m.end()
    tail = body[last:]
    if tail.strip(" \t\n,"):
        raise DiagramError(f"malformed token {tail.strip()!r}")
    d, _ = assemble(raw, strict=True)
    return d


def parse_pd_file(path) -> list[tuple[int, Diagram]]:
    """All diagrams in a file, one per non-blank, non-``#`` line, with line numbers."""
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                out.append((lineno, parse_pd(line)))
            except DiagramError as exc:
                raise DiagramError(f"{path}:{lineno}: {exc}") from None
    return out


def serialize(d: Diagram) -> str:
    """PD text with labels 1..2n."""
    if d.n == 0:
        return "U"
    return " ".join("X[{},{},{},{}]".format(*(v + 1 for v in x.slots)) for x in d.crossings)


def faces(d: Diagram) -> tuple[Face, ...]:
    return d.faces


def edge_cycle(d: Diagram) -> tuple[int, ...]:
    return d.traversal

