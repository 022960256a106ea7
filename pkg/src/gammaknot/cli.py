"""Command-line front end.

Every subcommand writes one JSON object per line on stdout and a short
summary on stderr.  The exit status is 0 exactly when every record passes.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .census import (
    ScenarioSpec,
    cumulative,
    growth_audit,
    load_census,
    phph_audit,
    satellite_supply_audit,
)
from .diagram import DiagramError, parse_pd_file, serialize
from .invariants import identify, jones, span_t
from .metric import far_pair, lemma_bound, neighboring_pairs, random_shadows, rho
from .rewrite import gamma_knot
from .tangle import all_cuts, weak_pt_witness

WORKERS_ENV = "GAMMAKNOT_WORKERS"


def _package_root() -> Path:
    return Path(str(resources.files("gammaknot")))


def resolve(path: str) -> Path:
    """Use ``path`` as given if it exists, else look inside the bundled data."""
    p = Path(path)
    if p.exists():
        return p
    root = _package_root()
    for cand in (root / path, root / "data" / path, root / "corpus" / path):
        if cand.exists():
            return cand
    raise FileNotFoundError(f"cannot read {path}")


def corpus_files() -> list[str]:
    return [f"corpus/{p.name}" for p in sorted((_package_root() / "corpus").glob("*.pd"))]


class Run:
    """Collects records, writes them as JSON lines and tracks failures."""

    def __init__(self, name: str, out=None):
        self.name = name
        self.out = out or sys.stdout
        self.total = 0
        self.failed = 0

    def emit(self, record: dict):
        self.total += 1
        if not record.get("pass", False):
            self.failed += 1
        self.out.write(json.dumps(record) + "\n")

    def error(self, where: str, exc: Exception):
        self.emit({"file": where, "error": str(exc), "pass": False})

    def finish(self) -> int:
        print(f"{self.name}: {self.total} records, {self.total - self.failed} pass, "
              f"{self.failed} fail", file=sys.stderr)
        return 0 if self.failed == 0 and self.total > 0 else 1


def _diagrams(paths: list[str], run: Run):
    for path in paths:
        try:
            items = parse_pd_file(resolve(path))
        except (OSError, DiagramError) as exc:
            run.error(path, exc)
            continue
        for lineno, d in items:
            yield f"{path}:{lineno}", d


def _lemma_record(where: str, d, extra: dict | None = None) -> dict:
    fp = far_pair(d)
    bound = lemma_bound(d.n)
    rec = {"file": where, "n": d.n, "far_pair": fp.as_dict(), "bound": bound,
           "pass": fp.rho >= bound}
    if extra:
        rec.update(extra)
    return rec


def _random_record(args) -> dict:
    k, seed, d = args
    return _lemma_record(f"random:{seed}:{k}", d, {"seed": seed})


def cmd_validate(a, run: Run):
    for where, d in _diagrams(a.files, run):
        f = len(d.faces)
        run.emit({"file": where, "n": d.n, "edges": d.num_edges, "faces": f,
                  "euler": d.n - 2 * d.n + f, "writhe": d.writhe, "pass": d.n - 2 * d.n + f == 2})


def cmd_faces(a, run: Run):
    for where, d in _diagrams(a.files, run):
        faces = [[f"{e}{s}" for e, s in q.boundary] for q in d.faces]
        run.emit({"file": where, "n": d.n, "faces": faces, "pass": len(faces) == d.n + 2})


def cmd_rho(a, run: Run):
    for where, d in _diagrams(a.files, run):
        try:
            if a.pair:
                i, j = _pair(a.pair)
                run.emit({"file": where, "i": i, "j": j, "rho": rho(d, i, j), "pass": True})
            else:
                pairs = [p.as_dict() for p in neighboring_pairs(d)]
                run.emit({"file": where, "n": d.n, "neighboring": pairs, "pass": True})
        except DiagramError as exc:
            run.error(where, exc)


def cmd_lemma_verify(a, run: Run):
    files = a.files or corpus_files()
    seeds = []
    for where, d in _diagrams(files, run):
        seeds.append(d)
        if d.n > 0:
            run.emit(_lemma_record(where, d))
    if not a.random:
        return
    rng = random.Random(a.seed)
    jobs = ((k, a.seed, d) for k, d in enumerate(random_shadows(seeds, a.random, a.max_n, rng)))
    workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            for rec in pool.imap(_random_record, jobs, chunksize=200):
                run.emit(rec)
    else:
        for job in jobs:
            run.emit(_random_record(job))


def _pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i,j but got {text!r}") from None
    return i, j


def cmd_gamma(a, run: Run):
    sign = -1 if a.case_beta_kink_sign in ("-", "-1") else 1
    pds = []
    for where, d in _diagrams([a.file], run):
        try:
            cut = _pair(a.cut) if a.cut else None
            out, rep = gamma_knot(d, cut, kink_sign=sign)
        except DiagramError as exc:
            run.error(where, exc)
            continue
        delta = out.n - d.n
        expect = 16 if rep.case == "alpha" else 17
        nontrivial = jones(out) != 1
        euler = out.n - 2 * out.n + len(out.faces)
        pds.append(serialize(out))
        run.emit({"file": where, **rep.as_dict(), "euler": euler, "jones_nontrivial": nontrivial,
                  "pd": serialize(out), "pass": delta == expect and euler == 2 and nontrivial})
    if a.out and pds:
        Path(a.out).write_text("\n".join(pds) + "\n")


def cmd_pt_witness(a, run: Run):
    for where, d in _diagrams([a.file], run):
        try:
            if a.all_cuts:
                for rep, connected in all_cuts(d):
                    rec = rep.as_dict()
                    rec["clean"] = not rep.scan.witness
                    rec["connected"] = connected
                    rec["pass"] = rep.identities_hold
                    run.emit({"file": where, **rec})
            else:
                run.emit({"file": where, **weak_pt_witness(d).as_dict()})
        except DiagramError as exc:
            run.error(where, exc)


def cmd_jones(a, run: Run):
    for where, d in _diagrams(a.files, run):
        try:
            v = jones(d)
        except DiagramError as exc:
            run.error(where, exc)
            continue
        rec = {"file": where, "n": d.n, "coeffs": [[e, c] for e, c in v.items()],
               "variable": "A", "span_t": str(span_t(v))}
        if a.identify:
            rec["candidates"] = identify(d)
        rec["pass"] = span_t(v) <= d.n
        run.emit(rec)


def _emit_audit(run: Run, rep, source: str):
    run.emit({"source": source, **rep.as_dict()})


def cmd_census_audit(a, run: Run):
    try:
        path = resolve(a.table) if a.table else None
        table = load_census(path)
    except (OSError, ValueError) as exc:
        run.error(a.table or "table1.csv", exc)
        return
    src = str(a.table or "table1.csv")
    run.emit({"source": src, "audit": "trichotomy", "rows": table.n_max - table.n_min + 1,
              "pass": True})
    c = cumulative(table)
    _emit_audit(run, phph_audit(c.P, c.H, a.eps0, a.shift), src)
    _emit_audit(run, satellite_supply_audit(c.H, c.S, a.eps0, a.shift), src)
    _emit_audit(run, growth_audit(c.P, a.bound), src)


def cmd_scenario(a, run: Run):
    try:
        spec = ScenarioSpec.load(resolve(a.file))
    except (OSError, ValueError) as exc:
        run.error(a.file, exc)
        return
    if a.shift is not None:
        spec = ScenarioSpec(spec.P, spec.H, spec.S, spec.C, spec.eps0, spec.N0, a.shift)
    for rep in spec.audits(a.bound, a.cable_samples):
        _emit_audit(run, rep, a.file)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gammaknot", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and check diagrams")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("faces", help="list faces as edge-side sequences")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("rho", help="edge distances and neighboring pairs")
    p.add_argument("files", nargs="+")
    p.add_argument("--pair", help="report rho for one pair i,j")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("lemma-verify", help="check the far-pair bound on diagrams")
    p.add_argument("files", nargs="*", help="PD files (default: bundled corpus)")
    p.add_argument("--random", type=int, default=0, help="number of random shadows")
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lemma_verify)

    p = sub.add_parser("gamma", help="build the doubled figure-eight satellite")
    p.add_argument("file")
    p.add_argument("--cut", help="edge pair i,j sharing a face (default: far pair)")
    p.add_argument("--case-beta-kink-sign", default="+", choices=["+", "-", "1", "-1"])
    p.add_argument("--out", help="write the resulting PD code here")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("pt-witness", help="disk cut, strand statistics and local-knot scan")
    p.add_argument("file")
    p.add_argument("--all-cuts", action="store_true", help="sweep every neighboring pair")
    p.set_defaults(func=cmd_pt_witness)

    p = sub.add_parser("jones", help="Jones polynomial and span")
    p.add_argument("files", nargs="+")
    p.add_argument("--identify", action="store_true", help="look up the bundled table")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("census-audit", help="audit the counting inequalities on a census")
    p.add_argument("table", nargs="?", help="census CSV (default: bundled table1.csv)")
    p.add_argument("--eps0", type=Fraction, default=Fraction(0))
    p.add_argument("--shift", type=int, default=17)
    p.add_argument("--bound", type=Fraction, help="check P_n < (B+1)^n")
    p.set_defaults(func=cmd_census_audit)

    p = sub.add_parser("scenario", help="audit synthetic sequences from a JSON file")
    p.add_argument("file")
    p.add_argument("--shift", type=int)
    p.add_argument("--bound", type=Fraction)
    p.add_argument("--cable-samples", type=int, nargs="*", default=[])
    p.set_defaults(func=cmd_scenario)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    run = Run(args.command)
    args.func(args, run)
    return run.finish()


if __name__ == "__main__":
    sys.exit(main())
