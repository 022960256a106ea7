"""Kauffman bracket, Jones polynomial, connected sum and table lookup.

Everything lives in the bracket variable ``A``; the Jones variable is
``t = A**-4`` so t-degrees are A-degrees divided by -4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Sequence

from .diagram import Diagram, DiagramError, assemble
from .polynomial import LaurentPoly

__all__ = [
    "BRACKET_LIMIT",
    "IdTableEntry",
    "connected_sum",
    "fingerprint",
    "identify",
    "jones",
    "kauffman_bracket",
    "load_idtable",
    "span_t",
]

BRACKET_LIMIT = 22

LOOP = LaurentPoly({2: -1, -2: -1})  # -A^2 - A^-2


class CrossingLimitError(DiagramError):
    pass


def _order(d: Diagram) -> list[int]:
    """Greedy crossing order keeping the set of open edges small."""
    n = d.n
    done = [False] * n
    seen_edges: set[int] = set()
    order = []
    for _ in range(n):
        best, best_score = -1, None
        for x in d.crossings:
            if done[x.id]:
                continue
            shared = sum(1 for e in x.slots if e in seen_edges)
            score = (shared, -x.id)
            if best_score is None or score > best_score:
                best, best_score = x.id, score
        done[best] = True
        order.append(best)
        for e in d.crossings[best].slots:
            if e in seen_edges:
                seen_edges.discard(e)
            else:
                seen_edges.add(e)
    return order


def _join(match: dict, u: int, v: int) -> int:
    """Connect one end of edge ``u`` with one end of ``v``; return loops closed."""
    if u == v:
        return 1
    pu = match.pop(u, None)
    pv = match.pop(v, None)
    if pu is None and pv is None:
        match[u] = v
        match[v] = u
        return 0
    if pu is not None and pv is not None:
        if pu == v:
            return 1
        match[pu] = pv
        match[pv] = pu
        return 0
    if pu is None:
        # v was open: its far end now continues to u's unseen end
        match[pv] = u
        match[u] = pv
    else:
        match[pu] = v
        match[v] = pu
    return 0


def _addto(acc: dict, poly: dict, shift: int, loops: int):
    for _ in range(loops):
        nxt: dict[int, int] = {}
        for e, c in poly.items():
            nxt[e + 2] = nxt.get(e + 2, 0) - c
            nxt[e - 2] = nxt.get(e - 2, 0) - c
        poly = nxt
    for e, c in poly.items():
        acc[e + shift] = acc.get(e + shift, 0) + c


def kauffman_bracket(d: Diagram, limit: int = BRACKET_LIMIT) -> LaurentPoly:
    """Unknot-normalized Kauffman bracket, ``<U> = 1``.

    State sum with memoization over partial smoothings: crossings are
    absorbed one at a time and states that induce the same pairing of open
    edge ends are merged.
    """
    if d.n > limit:
        raise CrossingLimitError(f"{d.n} crossings exceeds bracket limit {limit}")
    if d.n == 0:
        return LaurentPoly.one()
    states: dict[frozenset, dict[int, int]] = {frozenset(): {0: 1}}
    for c in _order(d):
        a, b, cc, dd = d.crossings[c].slots
        nxt: dict[frozenset, dict[int, int]] = {}
        for key, poly in states.items():
            base = dict(key)
            for shift, pairs in ((1, ((a, b), (cc, dd))), (-1, ((a, dd), (b, cc)))):
                m = dict(base)
                loops = _join(m, *pairs[0]) + _join(m, *pairs[1])
                k = frozenset(m.items())
                _addto(nxt.setdefault(k, {}), poly, shift, loops)
        states = {k: p for k, p in nxt.items() if any(p.values())}
    total = LaurentPoly(states.get(frozenset(), {}))
    return total.divexact(LOOP)


def jones(d: Diagram, limit: int = BRACKET_LIMIT) -> LaurentPoly:
    """Jones polynomial in ``A``: ``(-A^3)^(-w) <D>``."""
    w = d.writhe
    sign = -1 if w % 2 else 1
    return kauffman_bracket(d, limit).shift(-3 * w) * sign


def span_t(p: LaurentPoly) -> Fraction:
    if not p:
        raise ValueError("span of the zero polynomial is undefined")
    return Fraction(p.span, 4)


def t_terms(p: LaurentPoly) -> list[tuple[Fraction, int]]:
    """Terms as (t-exponent, coefficient), ascending in t."""
    return sorted((Fraction(-e, 4), c) for e, c in p.items())


def connected_sum(d1: Diagram, d2: Diagram) -> Diagram:
    """Band ``d2`` into ``d1`` along edge 0 of each; orientations agree."""
    if d1.n == 0:
        return d2
    if d2.n == 0:
        return d1
    raw = [[("a", v) for v in x.slots] for x in d1.crossings]
    raw += [[("b", v) for v in x.slots] for x in d2.crossings]
    off = d1.n
    t1, h1 = d1.tail(0), d1.head(0)
    t2, h2 = d2.tail(0), d2.head(0)
    raw[t1[0]][t1[1]] = "x"
    raw[off + h2[0]][h2[1]] = "x"
    raw[off + t2[0]][t2[1]] = "y"
    raw[h1[0]][h1[1]] = "y"
    out, _ = assemble(raw, start=(0, 0))
    return out


@dataclass(frozen=True)
class IdTableEntry:
    name: str
    crossing_number: int
    jones_fingerprint: LaurentPoly


def fingerprint(p: LaurentPoly) -> LaurentPoly:
    """Mirror-invariant canonical form: the smaller of ``p`` and its mirror."""
    q = p.mirror()
    return min(p, q, key=LaurentPoly.sort_key)


def format_entry(e: IdTableEntry) -> str:
    coeffs = ",".join(f"{x}:{c}" for x, c in e.jones_fingerprint.items())
    return f"{e.name} {e.crossing_number} {coeffs}"


def parse_entry(line: str) -> IdTableEntry:
    parts = line.split()
    if len(parts) != 3:
        raise ValueError(f"malformed id-table line {line!r}")
    name, cr, coeffs = parts
    terms = []
    for tok in coeffs.split(","):
        e, c = tok.split(":")
        terms.append((int(e), int(c)))
    return IdTableEntry(name, int(cr), LaurentPoly(terms))


def load_idtable(path=None) -> list[IdTableEntry]:
    """Read an id table; defaults to the bundled prime knots through 9 crossings."""
    if path is None:
        text = resources.files("gammaknot").joinpath("data/idtable.txt").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return [parse_entry(ln) for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def identify(d: Diagram, table: Sequence[IdTableEntry] | None = None) -> list[str]:
    """Table entries whose Jones fingerprint matches ``d``.

    Advisory only: distinct knots can share a Jones polynomial.
    """
    if table is None:
        table = load_idtable()
    fp = fingerprint(jones(d))
    return [e.name for e in table if e.jones_fingerprint == fp]

