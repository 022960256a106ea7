import pytest

from gammaknot.diagram import (
    UNKNOT,
    DiagramError,
    assemble,
    edge_cycle,
    faces,
    parse_pd,
    parse_pd_file,
    serialize,
)

from conftest import CORPUS, MANIFEST
from oracles import face_edge_sets

TREFOIL_TEXT = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def test_parse_trefoil_example():
    d = parse_pd(TREFOIL_TEXT)
    assert d.n == 3
    assert d.num_edges == 6
    assert edge_cycle(d) == (0, 1, 2, 3, 4, 5)


def test_single_cycle_by_strand_following():
    # follow labels through the raw records without using the parser's traversal
    recs = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]
    nxt = {}
    for r in recs:
        nxt[r[0]] = r[2]
    # over strands: whichever of r[1], r[3] is smaller cyclically leads
    for r in recs:
        a, b = r[1], r[3]
        if (b - a) % 6 == 1:
            nxt[a] = b
        else:
            nxt[b] = a
    seen, lab = [], 1
    while lab not in seen:
        seen.append(lab)
        lab = nxt[lab]
    assert len(seen) == 6


def test_unknot():
    d = parse_pd("U")
    assert d is UNKNOT
    assert d.n == 0
    assert d.num_edges == 1
    assert edge_cycle(d) == (0,)
    assert len(faces(d)) == 2
    assert serialize(d) == "U"


@pytest.mark.parametrize("text", [
    "X[1,2,3,4]",
    "",
    "X[1,2,3]",
    "X[0,1,1,2]",
    "X[1,a,1,2]",
    "Y[1,1,2,2]",
    "X[1,5,2,4] junk X[3,1,4,6] X[5,3,6,2]",
])
def test_malformed_codes_raise(text):
    with pytest.raises(DiagramError):
        parse_pd(text)


def test_hopf_link_rejected():
    with pytest.raises(DiagramError, match="more than one component"):
        parse_pd("X[4,1,3,2] X[2,3,1,4]")


def test_nonplanar_rotation_rejected():
    # trefoil records with one crossing's cyclic order reflected
    with pytest.raises(DiagramError, match="not planar"):
        parse_pd("X[1,5,2,4] X[3,6,4,1] X[5,3,6,2]")


def test_strict_slot_convention():
    # an under-strand entered through slot 2 is not PD
    with pytest.raises(DiagramError, match="slot 2"):
        parse_pd("X[2,4,1,5] X[3,6,4,1] X[5,2,6,3]")


def test_pd_wrapper_and_commas():
    d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
    assert d.is_isomorphic(parse_pd(TREFOIL_TEXT))


@pytest.mark.parametrize("row", MANIFEST, ids=lambda r: r["file"])
def test_corpus_round_trip(row):
    d = row["diagram"]
    assert d.n == row["n"]
    again = parse_pd(serialize(d))
    assert again.is_isomorphic(d)
    assert again.to_pd() == d.to_pd()


@pytest.mark.parametrize("row", MANIFEST, ids=lambda r: r["file"])
def test_corpus_euler_and_faces(row):
    d = row["diagram"]
    if d.n == 0:
        return
    fs = faces(d)
    assert d.n - 2 * d.n + len(fs) == 2
    # every edge has two sides, each on exactly one face
    incidences = [inc for f in fs for inc in f.boundary]
    assert sorted(incidences) == sorted((e, s) for e in d.edges for s in "LR")
    # independent tracing gives the same face edge sets
    assert sorted(map(sorted, face_edge_sets(d))) == sorted(sorted(f.edges) for f in fs)


def test_face_counts(trefoil, fig8):
    assert len(faces(trefoil)) == 5
    assert len(faces(fig8)) == 6
    assert edge_cycle(trefoil) == tuple(range(6))
    assert len(edge_cycle(fig8)) == 8


def test_edges_follow_traversal(fig8):
    for e in fig8.edges:
        assert fig8.tail((e + 1) % 8)[0] == fig8.head(e)[0]


def test_writhe_and_signs(trefoil, fig8):
    assert abs(trefoil.writhe) == 3
    assert fig8.writhe == 0


def test_relabelling_gives_isomorphic_diagram():
    d = parse_pd(TREFOIL_TEXT)
    shifted = parse_pd("X[11,14,12,15] X[13,16,14,11] X[15,12,16,13]")
    assert d.is_isomorphic(shifted)
    reordered = parse_pd("X[5,2,6,3] X[1,4,2,5] X[3,6,4,1]")
    assert d.is_isomorphic(reordered)


def test_gauss_code(trefoil):
    code = trefoil.gauss_code().split()
    assert len(code) == 6
    # alternating diagram: O and U alternate
    assert all(code[k][0] != code[k + 1][0] for k in range(5))
    for c in range(1, 4):
        assert sum(1 for t in code if t[1:-1] == str(c)) == 2


def test_assemble_relabel_map():
    d, relabel = assemble([("p", "q", "q", "p")])
    assert d.n == 1
    assert relabel == {"p": 0, "q": 1}
    with pytest.raises(DiagramError, match="more than one component"):
        assemble([("a", "c", "b", "d"), ("b", "d", "a", "c")])


def test_parse_pd_file_reports_line(tmp_path):
    p = tmp_path / "bad.pd"
    p.write_text("# comment\n" + TREFOIL_TEXT + "\nX[1,2,3,4]\n")
    with pytest.raises(DiagramError, match=":3:"):
        parse_pd_file(p)
    good = parse_pd_file(CORPUS / "trefoil.pd")
    assert [ln for ln, _ in good] == [2]
