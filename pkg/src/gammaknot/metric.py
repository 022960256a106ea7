"""Edge metric, neighboring pairs and the far neighboring pair.

Edges of a one-component diagram form a single cycle under the
"consecutive" relation, so the largest metric giving consecutive edges
distance one is the cyclic distance on ``2n`` points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .diagram import Diagram, DiagramError

__all__ = [
    "EdgePair",
    "chain_split",
    "far_pair",
    "lemma_bound",
    "neighboring_pairs",
    "random_shadows",
    "rho",
]


@dataclass(frozen=True)
class EdgePair:
    i: int
    j: int
    rho: int
    shared_face: int

    def as_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "rho": self.rho, "face": self.shared_face}


def _need_crossings(d: Diagram):
    if d.n == 0:
        raise DiagramError("operation needs a diagram with at least one crossing")


def rho(d: Diagram, i: int, j: int) -> int:
    """Cyclic distance between edges ``i`` and ``j`` along the traversal."""
    _need_crossings(d)
    m = 2 * d.n
    for k in (i, j):
        if not 0 <= k < m:
            raise DiagramError(f"edge index {k} out of range 0..{m - 1}")
    delta = abs(i - j)
    return min(delta, m - delta)


def lemma_bound(n: int) -> int:
    """ceil(2n/3), the guaranteed far-pair distance."""
    return -(-2 * n // 3)


def neighboring_pairs(d: Diagram) -> list[EdgePair]:
    """Unordered pairs ``i < j`` of edges on a common face.

    The witnessing face is the lowest-indexed one when several qualify.
    """
    _need_crossings(d)
    witness: dict[tuple[int, int], int] = {}
    for k, f in enumerate(d.faces):
        es = sorted(f.edges)
        for a in range(len(es)):
            for b in range(a + 1, len(es)):
                witness.setdefault((es[a], es[b]), k)
    return [EdgePair(i, j, rho(d, i, j), k) for (i, j), k in sorted(witness.items())]


def far_pair(d: Diagram) -> EdgePair:
    """A neighboring pair of maximal distance; ties go to the smallest ``(i, j)``."""
    best = None
    for p in neighboring_pairs(d):
        if best is None or p.rho > best.rho:
            best = p
    if best is None:
        raise DiagramError("diagram has no neighboring pairs")
    return best


def chain_split(d: Diagram, k: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Split the edge cycle into contiguous arcs of sizes ``k, k, 2n-2k``.

    ``k`` defaults to ``floor(2n/3)``; it must keep the third arc within
    ``{k, k+1, k+2}``.
    """
    if d.n < 2:
        raise DiagramError("chain split needs at least 2 crossings")
    m = 2 * d.n
    if k is None:
        k = m // 3
    if k < 1 or (m - 2 * k) not in (k, k + 1, k + 2):
        raise DiagramError(f"k={k} infeasible for {m} edges: third arc has {m - 2 * k}")
    edges = tuple(range(m))
    return edges[:k], edges[k:2 * k], edges[2 * k:]


def random_shadows(seeds: Sequence[Diagram], count: int, max_n: int,
                   rng: random.Random) -> Iterator[Diagram]:
    """Yield ``count`` random diagrams with at most ``max_n`` crossings.

    Each diagram comes from its predecessor by one random crossing-increasing
    Reidemeister I or II move, so every output is realizable.  A chain
    restarts from a random seed diagram when the next move would exceed
    ``max_n``.  Over/under choices are random; only the projection matters
    for the far-pair bound.
    """
    from .rewrite import reidemeister1, reidemeister2

    pool = [s for s in seeds if s.n <= max_n - 1]
    if not pool:
        raise ValueError("no seed diagram leaves room for a move")
    cur = rng.choice(pool)
    produced = 0
    while produced < count:
        if cur.n + 1 > max_n:
            cur = rng.choice(pool)
            continue
        use_r2 = cur.n > 0 and cur.n + 2 <= max_n and rng.random() < 0.6
        if use_r2:
            k = rng.randrange(len(cur.faces))
            face = cur.faces[k]
            if len(face) < 2:
                continue
            (e, _), (f, _) = rng.sample(face.boundary, 2)
            cur = reidemeister2(cur, e, f, over=rng.choice((e, f)), face=k)
        else:
            e = rng.randrange(cur.num_edges)
            cur = reidemeister1(cur, e, rng.choice("LR"), rng.choice((1, -1)))
        produced += 1
        yield cur

