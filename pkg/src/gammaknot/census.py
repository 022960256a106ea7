"""Knot census tables and audits of the counting inequalities.

Per-crossing-number counts of prime knots split into hyperbolic, satellite
and torus knots; cumulative sums ``P_n, H_n, S_n`` count knots of ``n`` or
fewer crossings.  All inequality checks run in exact rational arithmetic.
Only the growth audit uses floats, for the ``n``-th roots.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Sequence

__all__ = [
    "CensusError",
    "CensusRow",
    "CensusTable",
    "PREIMAGE_BOUND",
    "ScenarioSpec",
    "addendum2_audit",
    "cable_crossing_bound",
    "cumulative",
    "growth_audit",
    "load_census",
    "phph_audit",
    "satellite_supply_audit",
]

COLUMNS = ("n", "prime", "hyperbolic", "satellite", "torus")

# every factor K of f(K) has cr(f(K)) < cr(K)/4; with the 1/152 additivity
# lower bound this caps each fibre of f below 152/4
PREIMAGE_BOUND = Fraction(152, 4)


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CensusRow:
    prime: int
    hyperbolic: int
    satellite: int
    torus: int


@dataclass(frozen=True)
class CensusTable:
    rows: dict[int, CensusRow]

    def __post_init__(self):
        if not self.rows:
            raise CensusError("empty census")
        ns = sorted(self.rows)
        if ns != list(range(ns[0], ns[-1] + 1)):
            raise CensusError(f"crossing numbers are not contiguous: {ns}")
        for n, r in self.rows.items():
            if min(r.prime, r.hyperbolic, r.satellite, r.torus) < 0:
                raise CensusError(f"negative count at n={n}")
            if r.prime != r.hyperbolic + r.satellite + r.torus:
                raise CensusError(
                    f"n={n}: prime {r.prime} != hyperbolic {r.hyperbolic}"
                    f" + satellite {r.satellite} + torus {r.torus}")

    @property
    def n_min(self) -> int:
        return min(self.rows)

    @property
    def n_max(self) -> int:
        return max(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for n in sorted(self.rows):
            r = self.rows[n]
            w.writerow((n, r.prime, r.hyperbolic, r.satellite, r.torus))
        return buf.getvalue()


def parse_census(text: str) -> CensusTable:
    reader = csv.DictReader(io.StringIO(text))
    missing = [c for c in COLUMNS if c not in (reader.fieldnames or [])]
    if missing:
        raise CensusError(f"missing column(s): {', '.join(missing)}")
    rows = {}
    for rec in reader:
        try:
            n = int(rec["n"])
            row = CensusRow(*(int(rec[c]) for c in COLUMNS[1:]))
        except (TypeError, ValueError) as exc:
            raise CensusError(f"bad census row {rec}: {exc}") from None
        if n in rows:
            raise CensusError(f"duplicate row n={n}")
        rows[n] = row
    return CensusTable(rows)


def load_census(path=None) -> CensusTable:
    """Read a census CSV; the default is the bundled table for n = 3..16."""
    if path is None:
        text = resources.files("gammaknot").joinpath("data/table1.csv").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_census(text)


@dataclass(frozen=True)
class Cumulative:
    """Running sums indexed by ``n`` from 0 (so ``P[n]`` counts <= n crossings)."""

    P: tuple[int, ...]
    H: tuple[int, ...]
    S: tuple[int, ...]


def cumulative(t: CensusTable) -> Cumulative:
    P, H, S = [], [], []
    p = h = s = 0
    for n in range(t.n_max + 1):
        r = t.rows.get(n)
        if r is not None:
            p, h, s = p + r.prime, h + r.hyperbolic, s + r.satellite
        P.append(p)
        H.append(h)
        S.append(s)
    return Cumulative(tuple(P), tuple(H), tuple(S))


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x))


@dataclass(frozen=True)
class AuditRow:
    n: int
    values: dict
    ok: bool | None  # None: skipped

    def as_dict(self) -> dict:
        vals = {k: str(v) if isinstance(v, Fraction) else v for k, v in self.values.items()}
        return {"n": self.n, **vals, "ok": self.ok}


@dataclass(frozen=True)
class AuditReport:
    name: str
    rows: tuple[AuditRow, ...]
    params: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return not any(r.ok is not None for r in self.rows)

    @property
    def passed(self) -> bool:
        return not self.empty and all(r.ok for r in self.rows if r.ok is not None)

    @property
    def failures(self) -> list[int]:
        return [r.n for r in self.rows if r.ok is False]

    def as_dict(self) -> dict:
        params = {k: str(v) if isinstance(v, Fraction) else v for k, v in self.params.items()}
        return {
            "audit": self.name,
            **params,
            **self.extra,
            "rows": [r.as_dict() for r in self.rows],
            "empty": self.empty,
            "pass": self.passed,
        }


def satellite_supply_audit(H: Sequence, S: Sequence, eps0, shift: int = 17) -> AuditReport:
    """Check ``S[n + shift] >= eps0 * H[n]`` wherever both are defined."""
    eps0 = _frac(eps0)
    rows = []
    for n in range(len(H)):
        if n + shift >= len(S):
            break
        lhs = Fraction(S[n + shift])
        rhs = eps0 * Fraction(H[n])
        rows.append(AuditRow(n, {"lhs": lhs, "rhs": rhs, "margin": lhs - rhs}, lhs >= rhs))
    return AuditReport("satellite_supply", tuple(rows), {"eps0": eps0, "shift": shift})


def phph_audit(P: Sequence, H: Sequence, eps0, shift: int = 17) -> AuditReport:
    """Check ``1 >= H[n+s]/P[n+s] + eps0 (H[n]/P[n]) (P[n]/P[n+s])``.

    Rows with ``P[n] = 0`` are skipped (the middle ratio is undefined).
    """
    eps0 = _frac(eps0)
    rows = []
    for n in range(len(P)):
        m = n + shift
        if m >= len(P) or m >= len(H):
            break
        if P[n] == 0 or P[m] == 0:
            rows.append(AuditRow(n, {"skipped": "P_n = 0"}, None))
            continue
        first = Fraction(H[m], P[m])
        second = eps0 * Fraction(H[n], P[n]) * Fraction(P[n], P[m])
        margin = 1 - first - second
        rows.append(AuditRow(n, {"first": first, "second": second, "margin": margin}, margin >= 0))
    return AuditReport("phph", tuple(rows), {"eps0": eps0, "shift": shift})


def growth_audit(P: Sequence, bound=None) -> AuditReport:
    """``P[n]**(1/n)`` for every ``n >= 1`` with ``P[n] > 0``.

    Roots are floats good to about one ulp.  With ``bound`` B each row
    checks ``P[n] < (B+1)**n`` exactly.
    """
    B = None if bound is None else _frac(bound)
    rows = []
    sup = None
    for n in range(1, len(P)):
        if P[n] <= 0:
            continue
        v = Fraction(P[n])
        root = math.exp((math.log(v.numerator) - math.log(v.denominator)) / n)
        sup = root if sup is None else max(sup, root)
        vals = {"P": v, "root": root, "ulp": math.ulp(root)}
        ok = True
        if B is not None:
            ok = Fraction(P[n]) < (B + 1) ** n
            vals["below_bound"] = ok
        rows.append(AuditRow(n, vals, ok))
    params = {} if B is None else {"bound": B}
    return AuditReport("growth", tuple(rows), params, {"sup_root": sup})


def cable_crossing_bound(cr: int) -> int:
    """A two-strand cable of a knot with ``cr`` crossings needs at most 4 cr + 1."""
    return 4 * cr + 1


def addendum2_audit(spec: ScenarioSpec, crossing_samples: Sequence[int] = ()) -> AuditReport:
    """Check ``(eps0/38) H[4n] < C[n] < S[4n+1]`` for ``n > N0/4`` in range.

    Also reports ``(eps0/38) H[m] < S[m+4]`` for ``m > N0`` and the cable
    crossing bounds of the sample crossing numbers.
    """
    H, S, C = spec.H, spec.S, spec.C
    if H is None or C is None:
        raise ValueError("the audit needs H and C sequences")
    k = spec.eps0 / PREIMAGE_BOUND
    rows = []
    n = 0
    while 4 * n < len(H) and n < len(C):
        if 4 * n > spec.N0:
            left = k * Fraction(H[4 * n])
            vals = {"lhs": left, "C": Fraction(C[n])}
            ok = left < C[n]
            if S is not None and 4 * n + 1 < len(S):
                vals["S_4n+1"] = Fraction(S[4 * n + 1])
                vals["cable_ok"] = C[n] < S[4 * n + 1]
                ok = ok and vals["cable_ok"]
            rows.append(AuditRow(n, vals, ok))
        n += 1
    shifted = []
    if S is not None:
        for m in range(spec.N0 + 1, len(H)):
            if m + 4 >= len(S):
                break
            shifted.append({"m": m, "ok": k * Fraction(H[m]) < S[m + 4]})
    extra = {
        "preimage_bound": str(PREIMAGE_BOUND),
        "cable_bounds": {str(c): cable_crossing_bound(c) for c in crossing_samples},
        "shifted": shifted,
    }
    return AuditReport("addendum2", tuple(rows), {"eps0": spec.eps0, "N0": spec.N0}, extra)


def _generate(gen, length: int, named: dict) -> list[Fraction]:
    if isinstance(gen, list):
        return [_frac(v) for v in gen]
    kind = gen.get("kind", "ref" if "ref" in gen else None)
    scale = _frac(gen.get("scale", 1))
    if kind == "geometric":
        b = _frac(gen["base"])
        return [scale * b ** n for n in range(length)]
    if kind == "factorial":
        return [scale * math.factorial(n) for n in range(length)]
    if kind == "polynomial":
        cs = [_frac(c) for c in gen["coeffs"]]
        return [scale * sum(c * n ** i for i, c in enumerate(cs)) for n in range(length)]
    if kind == "table":
        return [_frac(v) for v in gen["values"]]
    if kind == "ref":
        base = named.get(gen["ref"])
        if base is None:
            raise ValueError(f"sequence {gen['ref']!r} must be defined before it is referenced")
        return [_frac(gen.get("factor", 1)) * v for v in base]
    raise ValueError(f"unknown sequence generator {gen!r}")


@dataclass(frozen=True)
class ScenarioSpec:
    """Cumulative sequences (indexed from 0) plus audit parameters."""

    P: tuple | None = None
    H: tuple | None = None
    S: tuple | None = None
    C: tuple | None = None
    eps0: Fraction = Fraction(0)
    N0: int = 0
    shift: int = 17

    @classmethod
    def from_dict(cls, data: dict, length: int = 40) -> ScenarioSpec:
        """Build from JSON-style data.

        Each of P, H, S, C is a literal list or a generator: ``{"kind":
        "geometric", "base": b}``, ``"factorial"``, ``"polynomial"`` with
        ``coeffs``, ``"table"`` with ``values``, or ``"ref"`` naming an
        earlier sequence with a ``factor``.  Every generator takes an
        optional ``scale``.
        """
        length = int(data.get("length", length))
        named: dict[str, list] = {}
        for key in ("P", "H", "S", "C"):
            if key in data and data[key] is not None:
                named[key] = _generate(data[key], length, named)
        return cls(
            *(tuple(named[k]) if k in named else None for k in ("P", "H", "S", "C")),
            eps0=_frac(data.get("eps0", 0)),
            N0=int(data.get("N0", 0)),
            shift=int(data.get("shift", 17)),
        )

    @classmethod
    def load(cls, path) -> ScenarioSpec:
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def audits(self, bound=None, crossing_samples: Sequence[int] = ()) -> list[AuditReport]:
        out = []
        if self.P is not None and self.H is not None:
            out.append(phph_audit(self.P, self.H, self.eps0, self.shift))
        if self.H is not None and self.S is not None:
            out.append(satellite_supply_audit(self.H, self.S, self.eps0, self.shift))
        if self.P is not None:
            out.append(growth_audit(self.P, bound))
        if self.H is not None and self.C is not None:
            out.append(addendum2_audit(self, crossing_samples))
        return out
