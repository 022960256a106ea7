"""Integer Laurent polynomials in one variable."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> LaurentPoly:
        return cls({exp: coef})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __bool__(self):
        return bool(self._terms)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def __add__(self, other):
        other = _coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({-e * -k: c ** -k})
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> LaurentPoly:
        """Substitute the variable by its inverse."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def divexact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ``ValueError`` if there is a remainder."""
        other = _coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LaurentPoly()
        rem = dict(self._terms)
        top_e, top_c = other.max_degree, other.coefficient(other.max_degree)
        floor = self.min_degree - other.min_degree
        quot: dict[int, int] = {}
        while rem:
            e = max(rem)
            k = e - top_e
            if k < floor or rem[e] % top_c:
                raise ValueError("inexact division")
            q = rem[e] // top_c
            quot[k] = q
            for oe, oc in other._terms.items():
                v = rem.get(oe + k, 0) - q * oc
                if v:
                    rem[oe + k] = v
                else:
                    rem.pop(oe + k, None)
        return LaurentPoly(quot)

    def sort_key(self) -> tuple:
        return tuple(self._terms.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms.items()):
            mono = "" if e == 0 else ("A" if e == 1 else f"A^{e}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
            else:
                coef = f"{c:+d}"
            parts.append(f"{coef}{mono}")
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")
