"""Regenerate the bundled corpus and the Jones identification table.

Development-only: reads KnotInfo through the ``database_knotinfo`` package,
which is not a runtime dependency.  Run from the repository root:

    python3 tools/build_tables.py
"""

import argparse
import csv
import re
from pathlib import Path

from database_knotinfo import link_list

from gammaknot.diagram import assemble, parse_pd, serialize
from gammaknot.invariants import IdTableEntry, connected_sum, fingerprint, format_entry, jones
from gammaknot.polynomial import LaurentPoly
from gammaknot.rewrite import mirror, reidemeister1, reidemeister2

PKG = Path(__file__).resolve().parents[1] / "src" / "gammaknot"

EXTRA_PRIMES = ["9_1", "9_42", "10_1", "10_124", "10_132"]
ALIASES = {"3_1": "trefoil", "4_1": "figure_eight"}

_TERM = re.compile(r"([+-]?)\s*(\d*)\*?(t(?:\^\(?(-?\d+)\)?)?)?")


def parse_knotinfo_jones(text: str) -> LaurentPoly:
    """KnotInfo Jones string in t, converted to the A variable (t = A^-4)."""
    terms = []
    pos = 0
    text = text.replace(" ", "")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Jones string {text!r} at {pos}")
        sign, coef, tpart, exp = m.groups()
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        e = 0 if not tpart else (int(exp) if exp is not None else 1)
        terms.append((-4 * e, c))
        pos = m.end()
    return LaurentPoly(terms)


def pd_text(pd: str) -> str:
    rows = re.findall(r"\[(\d+(?:,\d+){3})\]", pd.replace(" ", ""))
    return " ".join(f"X[{r}]" for r in rows)


def is_alternating_diagram(d) -> bool:
    if d.n == 0:
        return True
    kinds = [d.head(k)[1] == 0 for k in range(2 * d.n)]
    return all(kinds[k] != kinds[(k + 1) % len(kinds)] for k in range(len(kinds)))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-id", type=int, default=9, help="largest crossing number in the id table")
    ap.add_argument("--max-corpus", type=int, default=8, help="all primes up to this go into the corpus")
    args = ap.parse_args(argv)

    rows = {r["name"]: r for r in link_list()[1:]}
    table = [IdTableEntry("0_1", 0, LaurentPoly.one())]
    primes = {}
    for name, r in rows.items():
        if not re.fullmatch(r"\d+_\d+", name) or name == "0_1":
            continue
        cr = int(r["crossing_number"])
        want = cr <= args.max_corpus or name in EXTRA_PRIMES
        if cr > args.max_id and not want:
            continue
        d = parse_pd(pd_text(r["pd_notation"]))
        ref = parse_knotinfo_jones(r["jones_polynomial"])
        ours = jones(d)
        if fingerprint(ours) != fingerprint(ref):
            raise SystemExit(f"{name}: computed Jones {ours} disagrees with KnotInfo {ref}")
        if cr <= args.max_id:
            table.append(IdTableEntry(name, cr, fingerprint(ref)))
        if want:
            primes[name] = (d, r["alternating"] == "Y")

    data = PKG / "data"
    data.mkdir(exist_ok=True)
    with open(data / "idtable.txt", "w") as fh:
        fh.write("# name crossing_number jones_exponent_in_A:coefficient,...\n")
        fh.write("# fingerprint = lexicographically smaller of V and its mirror\n")
        for e in table:
            fh.write(format_entry(e) + "\n")

    corpus = PKG / "corpus"
    corpus.mkdir(exist_ok=True)
    for old in corpus.glob("*.pd"):
        old.unlink()
    manifest = []

    def emit(stem, knot, d, minimal, prime, alternating):
        (corpus / f"{stem}.pd").write_text(f"# {knot}\n{serialize(d)}\n")
        manifest.append({
            "file": f"{stem}.pd", "knot": knot, "n": d.n,
            "minimal": int(minimal), "prime": int(prime),
            "alternating_diagram": int(is_alternating_diagram(d)),
            "reduced_alternating": int(minimal and alternating and is_alternating_diagram(d)),
        })

    def key(name):
        a, b = name.split("_")
        return int(a), int(b)

    for name in sorted(primes, key=key):
        d, alt = primes[name]
        emit(ALIASES.get(name, name), name, d, True, True, alt)

    tref = primes["3_1"][0]
    fig8 = primes["4_1"][0]
    emit("granny", "3_1#3_1", connected_sum(tref, tref), True, False, True)
    emit("square", "3_1#m3_1", connected_sum(tref, mirror(tref)), True, False, True)
    emit("trefoil_fig8", "3_1#4_1", connected_sum(tref, fig8), True, False, True)
    emit("unknot", "0_1", assemble([])[0], True, False, True)
    emit("trefoil_kink", "3_1", reidemeister1(tref, 0, "R", 1), False, True, True)
    emit("fig8_r2", "4_1", reidemeister2(fig8, 1, 5, over=1), False, True, True)
    emit("unknot_r2", "0_1", reidemeister2(reidemeister1(assemble([])[0], 0, "L", 1), 0, 1, over=0),
         False, False, True)

    with open(corpus / "MANIFEST.csv", "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(manifest[0]))
        w.writeheader()
        w.writerows(manifest)
    print(f"wrote {len(table)} id-table entries and {len(manifest)} corpus diagrams")


if __name__ == "__main__":
    main()
