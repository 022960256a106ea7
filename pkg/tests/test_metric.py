import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaknot.diagram import UNKNOT, DiagramError, parse_pd, serialize
from gammaknot.metric import (
    chain_split,
    far_pair,
    lemma_bound,
    neighboring_pairs,
    random_shadows,
    rho,
)
from gammaknot.rewrite import reidemeister1

from conftest import MANIFEST, corpus_diagrams
from oracles import bfs_distances, face_edge_sets

SEEDS = [r["diagram"] for r in MANIFEST]


def shadow(seed, max_n=20):
    rng = random.Random(seed)
    return next(random_shadows(SEEDS, 1, max_n, rng))


shadows = st.integers(0, 2**32).map(shadow)


def test_trefoil_values():
    d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
    assert rho(d, 0, 1) == 1
    assert rho(d, 0, 3) == 3
    assert all(rho(d, i, i) == 0 for i in d.edges)


def test_rho_errors(trefoil):
    with pytest.raises(DiagramError):
        rho(UNKNOT, 0, 0)
    with pytest.raises(DiagramError):
        rho(trefoil, 0, 6)


@pytest.mark.parametrize("row", corpus_diagrams(max_n=10), ids=lambda r: r["file"])
def test_rho_equals_bfs(row):
    d = row["diagram"]
    if d.n == 0:
        return
    dist = bfs_distances(d)
    for i in d.edges:
        for j in d.edges:
            assert rho(d, i, j) == dist[(i, j)]


@pytest.mark.parametrize("row", MANIFEST, ids=lambda r: r["file"])
def test_neighboring_pairs_exhaustive(row):
    d = row["diagram"]
    if d.n == 0:
        return
    expected = set()
    for f in face_edge_sets(d):
        fs = sorted(f)
        expected |= {(a, b) for k, a in enumerate(fs) for b in fs[k + 1:]}
    got = neighboring_pairs(d)
    assert {(p.i, p.j) for p in got} == expected
    assert all(p.i < p.j for p in got)
    for p in got:
        q = d.faces[p.shared_face]
        assert p.i in q.edges and p.j in q.edges
        assert p.rho == rho(d, p.i, p.j)


def test_trefoil_neighboring(trefoil):
    pairs = {(p.i, p.j): p.rho for p in neighboring_pairs(trefoil)}
    # the triangular face holds edges two apart
    assert any(r == 2 for r in pairs.values())
    # consecutive edges sit on opposite slots of their common crossing, so
    # they share a face only if some other corner brings them together
    assert (0, 1) not in pairs
    assert all(rho(trefoil, i, j) >= 2 for i, j in pairs)


def test_far_pair_examples(trefoil, fig8):
    fp = far_pair(trefoil)
    assert fp.rho >= lemma_bound(3) == 2
    assert fp.rho == max(p.rho for p in neighboring_pairs(trefoil))
    assert (fp.i, fp.j, fp.rho) == (0, 3, 3)
    fp8 = far_pair(fig8)
    assert fp8.rho >= lemma_bound(4) == 3
    with pytest.raises(DiagramError):
        far_pair(UNKNOT)


@pytest.mark.parametrize("row", MANIFEST, ids=lambda r: r["file"])
def test_far_pair_deterministic_and_bounded(row):
    d = row["diagram"]
    if d.n == 0:
        return
    a, b = far_pair(d), far_pair(parse_pd(serialize(d)))
    assert a == b
    assert a.rho >= lemma_bound(d.n)
    ties = [p for p in neighboring_pairs(d) if p.rho == a.rho]
    assert (a.i, a.j) == min((p.i, p.j) for p in ties)


def test_chain_split_sizes():
    tre = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
    assert [len(p) for p in chain_split(tre, 2)] == [2, 2, 2]
    fig8 = corpus_diagrams(knot="4_1", minimal=1)[0]["diagram"]
    parts = chain_split(fig8, 2)
    assert [len(p) for p in parts] == [2, 2, 4]
    assert sum(parts, ()) == tuple(range(8))


def test_chain_split_two_crossings():
    d = reidemeister1(reidemeister1(UNKNOT, 0, "L", 1), 0, "R", -1)
    assert d.n == 2
    assert [len(p) for p in chain_split(d, 1)] == [1, 1, 2]
    assert [len(p) for p in chain_split(d)] == [1, 1, 2]


def test_chain_split_errors(trefoil):
    with pytest.raises(DiagramError):
        chain_split(trefoil, 1)
    with pytest.raises(DiagramError):
        chain_split(trefoil, 3)
    with pytest.raises(DiagramError):
        chain_split(UNKNOT)


@pytest.mark.parametrize("n", range(2, 40))
def test_chain_split_default_feasible(n):
    m = 2 * n
    k = m // 3
    assert m - 2 * k in (k, k + 1, k + 2)


def test_lemma_bound_values():
    assert [lemma_bound(n) for n in range(1, 8)] == [1, 2, 2, 3, 4, 4, 5]


@settings(max_examples=60, deadline=None)
@given(shadows)
def test_metric_axioms_on_shadows(d):
    m = d.num_edges
    edges = list(range(m))
    rng = random.Random(m)
    sample = [tuple(rng.choice(edges) for _ in range(3)) for _ in range(50)]
    for a, b, c in sample:
        assert rho(d, a, b) == rho(d, b, a)
        assert rho(d, a, c) <= rho(d, a, b) + rho(d, b, c)
        assert (rho(d, a, b) == 0) == (a == b)
    assert rho(d, 0, 1 % m) == (1 if m > 1 else 0)


@settings(max_examples=60, deadline=None)
@given(shadows)
def test_lemma_bound_on_shadows(d):
    if d.n == 0:
        return
    assert d.n - 2 * d.n + len(d.faces) == 2
    assert far_pair(d).rho >= lemma_bound(d.n)


def test_random_shadows_deterministic():
    a = [x.to_pd() for x in random_shadows(SEEDS, 50, 15, random.Random(3))]
    b = [x.to_pd() for x in random_shadows(SEEDS, 50, 15, random.Random(3))]
    assert a == b
    assert all(len(x) <= 15 for x in a)
    with pytest.raises(ValueError):
        next(random_shadows([SEEDS[0]], 1, 1, random.Random(0)))
