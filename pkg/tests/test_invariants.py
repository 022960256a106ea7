from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from gammaknot.diagram import UNKNOT, parse_pd
from gammaknot.invariants import (
    CrossingLimitError,
    IdTableEntry,
    connected_sum,
    fingerprint,
    format_entry,
    identify,
    jones,
    kauffman_bracket,
    load_idtable,
    parse_entry,
    span_t,
    t_terms,
)
from gammaknot.polynomial import LaurentPoly
from gammaknot.rewrite import crossing_change, mirror, reidemeister1

from conftest import MANIFEST, by_file, corpus_diagrams
from oracles import naive_bracket, naive_jones


def in_t(terms):
    """Polynomial in t given as {t-exponent: coef}, converted to A (t = A^-4)."""
    return LaurentPoly({-4 * e: c for e, c in terms.items()})


# tabulated Jones polynomials, up to mirror image
REFERENCE = {
    "trefoil.pd": in_t({1: 1, 3: 1, 4: -1}),
    "figure_eight.pd": in_t({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}),
    "5_1.pd": in_t({2: 1, 4: 1, 5: -1, 6: 1, 7: -1}),
    "5_2.pd": in_t({1: 1, 2: -1, 3: 2, 4: -1, 5: 1, 6: -1}),
}


def test_unknot_normalisation():
    assert kauffman_bracket(UNKNOT) == 1
    assert jones(UNKNOT) == 1
    assert span_t(jones(UNKNOT)) == 0


def test_kinks_by_two_state_sum():
    for text, w in (("X[1,2,2,1]", -1), ("X[2,2,1,1]", 1), ("X[1,1,2,2]", 1), ("X[2,1,1,2]", -1)):
        d = parse_pd(text)
        assert d.writhe == w
        br = kauffman_bracket(d)
        assert br.items() == naive_bracket([x.slots for x in d.crossings]).items()
        assert br == LaurentPoly({3 * d.writhe: -1})
        assert jones(d) == 1
    pos = reidemeister1(UNKNOT, 0, "R", 1)
    neg = reidemeister1(UNKNOT, 0, "R", -1)
    assert kauffman_bracket(pos) == LaurentPoly({3: -1})
    assert kauffman_bracket(neg) == LaurentPoly({-3: -1})


def test_trefoil_bracket_span(trefoil):
    assert kauffman_bracket(trefoil).span == 12
    assert span_t(jones(trefoil)) == 3


@pytest.mark.parametrize("name", sorted(REFERENCE))
def test_reference_polynomials(name):
    assert fingerprint(jones(by_file(name))) == fingerprint(REFERENCE[name])


@pytest.mark.parametrize("row", corpus_diagrams(max_n=10), ids=lambda r: r["file"])
def test_bracket_matches_naive_state_sum(row):
    d = row["diagram"]
    assert dict(kauffman_bracket(d).items()) == naive_bracket([x.slots for x in d.crossings])
    assert dict(jones(d).items()) == naive_jones(d)


@pytest.mark.parametrize("row", MANIFEST, ids=lambda r: r["file"])
def test_span_bounds(row):
    d = row["diagram"]
    s = span_t(jones(d))
    assert s.denominator == 1
    assert s <= d.n
    if row["reduced_alternating"]:
        assert s == d.n


@pytest.mark.parametrize("row", corpus_diagrams(prime=1, minimal=1), ids=lambda r: r["file"])
def test_identify_prime_corpus(row):
    d = row["diagram"]
    if d.n <= 9:
        assert row["knot"] in identify(d)


def test_identify_edge_cases(trefoil):
    assert identify(trefoil) == ["3_1"]
    assert identify(mirror(trefoil)) == ["3_1"]
    assert identify(UNKNOT) == ["0_1"]


def test_idtable_round_trip():
    table = load_idtable()
    assert table[0].name == "0_1"
    assert len({e.name for e in table}) == len(table)
    for e in table[:10]:
        assert parse_entry(format_entry(e)) == e
    with pytest.raises(ValueError):
        parse_entry("3_1 3")
    assert IdTableEntry("x", 0, LaurentPoly.one()) == parse_entry("x 0 0:1")


def test_jones_values_named():
    assert span_t(jones(by_file("figure_eight.pd"))) == 4
    assert t_terms(jones(by_file("figure_eight.pd")))[0] == (Fraction(-2), 1)


SMALL = corpus_diagrams(max_n=6)


@pytest.mark.parametrize("a,b", list(combinations_with_replacement(range(len(SMALL)), 2)),
                         ids=lambda k: SMALL[k]["file"])
def test_span_additivity(a, b):
    d1, d2 = SMALL[a]["diagram"], SMALL[b]["diagram"]
    s = connected_sum(d1, d2)
    assert s.n == d1.n + d2.n
    v = jones(s)
    assert v == jones(d1) * jones(d2)
    assert span_t(v) == span_t(jones(d1)) + span_t(jones(d2))


def test_named_connected_sums(trefoil, fig8):
    g = connected_sum(trefoil, trefoil)
    assert g.n == 6 and span_t(jones(g)) == 6
    assert span_t(jones(connected_sum(trefoil, fig8))) == 7
    assert jones(connected_sum(trefoil, UNKNOT)) == jones(trefoil)
    assert jones(connected_sum(UNKNOT, fig8)) == jones(fig8)


@pytest.mark.parametrize("row", corpus_diagrams(max_n=12), ids=lambda r: r["file"])
def test_r1_invariance(row):
    d = row["diagram"]
    v = jones(d)
    for side in "LR":
        for sign in (1, -1):
            k = reidemeister1(d, 0, side, sign)
            assert k.n == d.n + 1
            assert jones(k) == v
    if d.n:
        k = reidemeister1(d, d.num_edges - 1, "L", 1)
        assert jones(k) == v


@pytest.mark.parametrize("row", corpus_diagrams(max_n=8), ids=lambda r: r["file"])
def test_mirror_negates_exponents(row):
    d = row["diagram"]
    assert jones(mirror(d)) == jones(d).mirror()


def test_crossing_change(trefoil):
    for c in range(3):
        changed = crossing_change(trefoil, c)
        assert changed.n == 3
        assert jones(changed) == 1
        assert crossing_change(changed, c).to_pd() == trefoil.to_pd()
        assert crossing_change(changed, c).crossings == trefoil.crossings
    with pytest.raises(ValueError):
        crossing_change(trefoil, 99)


def test_bracket_limit(trefoil):
    with pytest.raises(CrossingLimitError):
        kauffman_bracket(trefoil, limit=2)
