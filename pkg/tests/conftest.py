import csv
from importlib import resources
from pathlib import Path

import pytest

from gammaknot.diagram import parse_pd_file

CORPUS = Path(str(resources.files("gammaknot"))) / "corpus"


def _manifest():
    with open(CORPUS / "MANIFEST.csv") as fh:
        rows = list(csv.DictReader(fh))
    for r in rows:
        for k in ("n", "minimal", "prime", "alternating_diagram", "reduced_alternating"):
            r[k] = int(r[k])
        ((_, r["diagram"]),) = parse_pd_file(CORPUS / r["file"])
    return rows


MANIFEST = _manifest()


def corpus_diagrams(max_n=None, **flags):
    out = []
    for r in MANIFEST:
        if max_n is not None and r["n"] > max_n:
            continue
        if any(r[k] != v for k, v in flags.items()):
            continue
        out.append(r)
    return out


def by_file(name):
    return next(r["diagram"] for r in MANIFEST if r["file"] == name)


@pytest.fixture(scope="session")
def trefoil():
    return by_file("trefoil.pd")


@pytest.fixture(scope="session")
def fig8():
    return by_file("figure_eight.pd")


@pytest.fixture(scope="session")
def granny():
    return by_file("granny.pd")
