"""Incremental linear-span basis over constraint polynomials.

Polynomials arrive one at a time.  Each is reduced against the stored rows; a
nonzero remainder becomes a new row and the constraint that produced it is
kept.  The kept constraints span every inserted polynomial, so a coloring that
zeroes the kept ones zeroes them all.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .field import FieldMismatch, PrimeField
from .polyring import Monomial, Poly, monomial_key


class Kind(enum.Enum):
    TYPE1 = 1
    TYPE2 = 2


@dataclass(frozen=True)
class ConstraintTag:
    """Identifies one constraint polynomial by the graph data that produced it.

    Type1 payload: ``(v, S)`` with ``S`` a sorted q-subset of ``N(v) & X``.
    Type2 payload: ``(u1, u2, S1, S2)`` for an oriented edge ``u1u2`` outside
    the modulator with ``S1``, ``S2`` sorted (q-1)-subsets of the neighborhoods.
    """

    kind: Kind
    payload: tuple

    @classmethod
    def type1(cls, v: int, S: Iterable[int]) -> ConstraintTag:
        return cls(Kind.TYPE1, (v, tuple(sorted(S))))

    @classmethod
    def type2(cls, u1: int, u2: int, S1: Iterable[int], S2: Iterable[int]) -> ConstraintTag:
        return cls(Kind.TYPE2, (u1, u2, tuple(sorted(S1)), tuple(sorted(S2))))

    @property
    def outside_vertices(self) -> tuple[int, ...]:
        if self.kind is Kind.TYPE1:
            return (self.payload[0],)
        return self.payload[:2]

    def gadget_edges(self) -> list[tuple[int, int]]:
        """Edges the constraint contributes to the kernel."""
        if self.kind is Kind.TYPE1:
            v, S = self.payload
            return [(v, z) for z in S]
        u1, u2, S1, S2 = self.payload
        return [(u1, u2)] + [(u1, z) for z in S1] + [(u2, z) for z in S2]

    def sort_key(self) -> tuple:
        return (self.kind.value, self.payload)

    def __str__(self) -> str:
        if self.kind is Kind.TYPE1:
            v, S = self.payload
            return f"f[v={v}, S={list(S)}]"
        u1, u2, S1, S2 = self.payload
        return f"h[u1={u1}, u2={u2}, S1={list(S1)}, S2={list(S2)}]"


@dataclass
class _Row:
    terms: dict[Monomial, int]
    pivot: Monomial
    tag: ConstraintTag


class EchelonBasis:
    """Fully reduced row store keyed by pivot monomial.

    Every row is scaled so its pivot coefficient is 1 and has coefficient 0 on
    every other row's pivot.  Reducing an incoming polynomial therefore needs a
    single pass: subtracting a row never reintroduces another pivot.
    """

    def __init__(self, field: PrimeField):
        self.field = field
        self._rows: list[_Row] = []
        self._pivots: dict[Monomial, _Row] = {}
        self.inserted = 0

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, poly: Poly) -> dict[Monomial, int]:
        if poly.field != self.field:
            raise FieldMismatch(f"basis over {self.field!r} cannot take a polynomial over {poly.field!r}")
        p = self.field.p
        rem = dict(poly.terms)
        hits = [m for m in rem if m in self._pivots]
        for m in hits:
            c = rem.get(m, 0)
            if not c:
                continue
            for mono, coef in self._pivots[m].terms.items():
                v = (rem.get(mono, 0) - c * coef) % p
                if v:
                    rem[mono] = v
                else:
                    rem.pop(mono, None)
        return rem

    def contains(self, poly: Poly) -> bool:
        """Whether ``poly`` lies in the span of the stored rows."""
        return not self.reduce(poly)

    def insert(self, poly: Poly, tag: ConstraintTag) -> bool:
        rem = self.reduce(poly)
        self.inserted += 1
        if not rem:
            return False
        p = self.field.p
        pivot = max(rem, key=monomial_key)
        inv = self.field.inv(rem[pivot])
        if inv != 1:
            rem = {m: c * inv % p for m, c in rem.items()}
        row = _Row(rem, pivot, tag)
        for other in self._rows:
            c = other.terms.get(pivot)
            if not c:
                continue
            terms = other.terms
            for mono, coef in rem.items():
                v = (terms.get(mono, 0) - c * coef) % p
                if v:
                    terms[mono] = v
                else:
                    terms.pop(mono, None)
        self._rows.append(row)
        self._pivots[pivot] = row
        return True

    def members(self) -> list[ConstraintTag]:
        return [row.tag for row in self._rows]

    def rows(self) -> list[tuple[Poly, Monomial, ConstraintTag]]:
        return [(Poly(self.field, row.terms), row.pivot, row.tag) for row in self._rows]


def basis_insert(B: EchelonBasis, p: Poly, tag: ConstraintTag) -> bool:
    """Insert ``p``; ``True`` when it was independent of the stored rows."""
    return B.insert(p, tag)


def basis_members(B: EchelonBasis) -> list[ConstraintTag]:
    return B.members()


def monomial_space_bound(q: int, k: int, degree: int) -> int:
    """Bound ``(q*k)^degree + 1`` on the dimension of the polynomial space."""
    return (q * k) ** degree + 1
