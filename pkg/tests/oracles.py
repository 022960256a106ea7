"""Slow, independent reference computations used to check the package.

None of these call into gammaknot beyond reading crossing slot data.
"""

from collections import deque
from itertools import product


def _padd(p, q, scale=1):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + scale * c
    return {e: c for e, c in out.items() if c}


def _pmul(p, q):
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return {e: c for e, c in out.items() if c}


class _UF:
    def __init__(self):
        self.p = {}

    def find(self, x):
        self.p.setdefault(x, x)
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        self.p[self.find(a)] = self.find(b)


def naive_bracket(slots):
    """Full 2^n state sum.  ``slots`` is a list of 4-tuples of edge labels.

    A-smoothing joins slots 0-1 and 2-3, B-smoothing joins 0-3 and 1-2.
    Returns a dict exponent -> coefficient with <O> = 1.
    """
    if not slots:
        return {0: 1}
    delta = {2: -1, -2: -1}
    powers = [{0: 1}]
    labels = {v for x in slots for v in x}
    total = {}
    for state in product((0, 1), repeat=len(slots)):
        uf = _UF()
        for v in labels:
            uf.find(v)
        for x, b in zip(slots, state):
            if b == 0:
                uf.union(x[0], x[1])
                uf.union(x[2], x[3])
            else:
                uf.union(x[0], x[3])
                uf.union(x[1], x[2])
        loops = len({uf.find(v) for v in labels})
        while len(powers) < loops:
            powers.append(_pmul(powers[-1], delta))
        shift = state.count(0) - state.count(1)
        total = _padd(total, {e + shift: c for e, c in powers[loops - 1].items()})
    return total


def naive_jones(d):
    """(-A^3)^(-w) <D> from the naive bracket, as a dict in A."""
    br = naive_bracket([x.slots for x in d.crossings])
    w = sum(x.sign for x in d.crossings)
    sign = -1 if w % 2 else 1
    return {e - 3 * w: sign * c for e, c in br.items()}


def bfs_distances(d):
    """All-pairs shortest paths on the graph whose edges join consecutive edges."""
    m = 2 * d.n
    adj = {k: set() for k in range(m)}
    for x in d.crossings:
        for a, b in ((x.slots[0], x.slots[2]), (x.slots[1], x.slots[3])):
            adj[a].add(b)
            adj[b].add(a)
    dist = {}
    for s in range(m):
        seen = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen[v] = seen[u] + 1
                    q.append(v)
        for t, v in seen.items():
            dist[(s, t)] = v
    return dist


def face_edge_sets(d):
    """Faces traced directly from the slot rotation, as sets of edge labels."""
    where = {}
    for x in d.crossings:
        for s, lab in enumerate(x.slots):
            where.setdefault(lab, []).append((x.id, s))
    seen = set()
    faces = []
    for x in d.crossings:
        for s in range(4):
            if (x.id, s) in seen:
                continue
            edges = set()
            dart = (x.id, s)
            while dart not in seen:
                seen.add(dart)
                c, k = dart
                lab = d.crossings[c].slots[k]
                edges.add(lab)
                a, b = where[lab]
                c2, k2 = b if a == dart else a
                dart = (c2, (k2 + 1) % 4)
            faces.append(edges)
    return faces


def incoming_crossing(d):
    """Edge label -> crossing id where it ends, read from incoming slots."""
    head = {}
    for x in d.crossings:
        head[x.slots[0]] = x.id
        head[x.slots[x.over_in]] = x.id
    return head


def strand_classification(d, i, j):
    """(cr_c1, cr_c2, mutual) for cutting edges i < j, by counting visits.

    c1 runs forward from i to j; a crossing visited twice on it belongs to c1,
    never to c2, once to both.
    """
    head = incoming_crossing(d)
    order = []
    e = i
    # follow edges i, i+1, ..., j-1 by stepping to the outgoing label
    out_of = {}
    for x in d.crossings:
        out_of[x.slots[0]] = x.slots[2]
        out_of[x.slots[x.over_in]] = x.slots[4 - x.over_in]
    while e != j:
        order.append(head[e])
        e = out_of[e]
    visits = {c: order.count(c) for c in range(d.n)}
    c1 = sum(1 for v in visits.values() if v == 2)
    c2 = sum(1 for v in visits.values() if v == 0)
    return c1, c2, sum(1 for v in visits.values() if v == 1)


def bigon_coherent(d, first_new):
    """After an R2 move adding crossings ``first_new`` and ``first_new+1``,
    report whether the knot runs along both bigon edges the same way."""
    head = incoming_crossing(d)
    tail = {}
    for x in d.crossings:
        tail[x.slots[2]] = x.id
        tail[x.slots[4 - x.over_in]] = x.id
    new = {first_new, first_new + 1}
    bigon = [e for e in head if head[e] in new and tail[e] in new]
    assert len(bigon) == 2, bigon
    return tail[bigon[0]] == tail[bigon[1]]
