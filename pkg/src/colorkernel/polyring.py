"""Sparse multivariate polynomials over GF(p) and the determinant constraint polynomials.

Every vertex ``v`` of the modulator owns a block of variables ``x_v``, one per
coordinate of a palette vector.  The first coordinate of any palette vector is
1, so it is substituted away and only coordinates ``2..q`` appear as variables.

A monomial is a tuple of ``(VarId, exponent)`` pairs sorted by ``VarId``; the
empty tuple is the constant monomial.  Monomials compare graded-lexicographically
through :func:`monomial_key`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .field import FieldElement, FieldMismatch, PrimeField
from .palette import Palette, palette_sum


class PolyError(ValueError):
    pass


class BlockCountMismatch(PolyError):
    pass


class UnboundVertex(KeyError):
    pass


class VarId(NamedTuple):
    vertex: int
    coordinate: int

    def __str__(self) -> str:
        return f"x{self.vertex}_{self.coordinate}"


Monomial = tuple[tuple[VarId, int], ...]

ONE: Monomial = ()


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def monomial_key(m: Monomial) -> tuple[int, Monomial]:
    return (monomial_degree(m), m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged: dict[VarId, int] = dict(a)
    for var, e in b:
        merged[var] = merged.get(var, 0) + e
    return tuple(sorted(merged.items()))


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


class Poly:
    """Immutable sparse polynomial: a map from monomials to nonzero residues."""

    __slots__ = ("field", "_terms")

    def __init__(self, field: PrimeField, terms: Mapping[Monomial, int] | None = None):
        self.field = field
        p = field.p
        self._terms: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                c = int(c) % p
                if c:
                    self._terms[m] = c

    @classmethod
    def _wrap(cls, field: PrimeField, terms: dict[Monomial, int]) -> Poly:
        # trusted constructor: terms already canonical and zero-free
        poly = cls.__new__(cls)
        poly.field = field
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, field: PrimeField) -> Poly:
        return cls._wrap(field, {})

    @classmethod
    def constant(cls, field: PrimeField, c: int) -> Poly:
        return cls(field, {ONE: c})

    @classmethod
    def variable(cls, field: PrimeField, vertex: int, coordinate: int) -> Poly:
        return cls._wrap(field, {((VarId(vertex, coordinate), 1),): 1})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((monomial_degree(m) for m in self._terms), default=-1)

    def leading_monomial(self) -> Monomial | None:
        return max(self._terms, key=monomial_key, default=None)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def vertices(self) -> set[int]:
        return {var.vertex for m in self._terms for var, _ in m}

    def _check(self, other: Poly) -> None:
        if other.field != self.field:
            raise FieldMismatch(f"cannot combine polynomials over {self.field!r} and {other.field!r}")

    def combine(self, other: Poly, s: int | FieldElement = 1) -> Poly:
        """Return ``self + s * other``."""
        self._check(other)
        p = self.field.p
        s = int(s) % p
        out = dict(self._terms)
        if s == 0:
            return Poly._wrap(self.field, out)
        for m, c in other._terms.items():
            v = (out.get(m, 0) + s * c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._wrap(self.field, out)

    def scale(self, s: int | FieldElement) -> Poly:
        p = self.field.p
        s = int(s) % p
        if s == 0:
            return Poly.zero(self.field)
        return Poly._wrap(self.field, {m: c * s % p for m, c in self._terms.items()})

    def __add__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly.constant(self.field, other)
        return self.combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly.constant(self.field, other)
        return self.combine(other, -1)

    def __neg__(self) -> Poly:
        return self.scale(-1)

    def __mul__(self, other: Poly | int | FieldElement) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        p = self.field.p
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Poly._wrap(self.field, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, int):
            return self == Poly.constant(self.field, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def evaluate(self, assignment: Mapping[int, Sequence[int]]) -> int:
        p = self.field.p
        total = 0
        for m, c in self._terms.items():
            term = c
            for var, e in m:
                try:
                    column = assignment[var.vertex]
                except KeyError:
                    raise UnboundVertex(var.vertex) from None
                term = term * pow(int(column[var.coordinate - 1]), e, p) % p
                if not term:
                    break
            total += term
        return total % p

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(format_monomial(m))
            else:
                parts.append(f"{c}*{format_monomial(m)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {self})"


def poly_combine(p1: Poly, p2: Poly, s: int | FieldElement) -> Poly:
    return p1.combine(p2, s)


def poly_eval(p: Poly, assignment: Mapping[int, Sequence[int]]) -> FieldElement:
    """Evaluate at an assignment of palette columns to vertices."""
    return p.field(p.evaluate(assignment))


@dataclass(frozen=True)
class AffineColumn:
    """A column ``constant + sum(sign * x_v)`` built from whole variable blocks."""

    constant: tuple[int, ...]
    blocks: tuple[tuple[int, int], ...]

    def entry(self, field: PrimeField, coordinate: int) -> Poly:
        terms: dict[Monomial, int] = {ONE: self.constant[coordinate - 1]}
        for vertex, sign in self.blocks:
            m = ((VarId(vertex, coordinate), 1),)
            terms[m] = terms.get(m, 0) + sign
        return Poly(field, terms)

    def evaluate(self, field: PrimeField, assignment: Mapping[int, Sequence[int]]) -> tuple[int, ...]:
        out = list(self.constant)
        for vertex, sign in self.blocks:
            col = assignment[vertex]
            for j in range(len(out)):
                out[j] += sign * col[j]
        return tuple(x % field.p for x in out)


ColumnSpec = Union[int, AffineColumn]


def missing_color_column(P: Palette, x_blocks: Iterable[int]) -> AffineColumn:
    """The column ``c - sum(x_i)`` where ``c`` is the sum of all palette vectors."""
    return AffineColumn(palette_sum(P).c, tuple((v, -1) for v in x_blocks))


def _column_entry(field: PrimeField, spec: ColumnSpec, coordinate: int) -> Poly:
    if isinstance(spec, AffineColumn):
        return spec.entry(field, coordinate)
    return Poly.variable(field, spec, coordinate)


def _parity(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def ones_row_determinant(field: PrimeField, columns: Sequence[ColumnSpec], n: int) -> Poly:
    """Symbolic ``n x n`` determinant whose first row is all ones.

    Row ``r`` (for ``r >= 1``) holds coordinate ``r + 1`` of each column spec.
    Expanded as a signed sum over permutations.
    """
    if len(columns) != n:
        raise BlockCountMismatch(f"expected {n} columns, got {len(columns)}")
    entries = [[_column_entry(field, spec, r + 1) for spec in columns] for r in range(1, n)]
    p = field.p
    acc: dict[Monomial, int] = {}
    for perm in permutations(range(n)):
        # perm[r] is the column picked in row r; row 0 contributes a factor 1
        sign = _parity(perm)
        partial: dict[Monomial, int] = {ONE: sign % p}
        for r in range(1, n):
            factor = entries[r - 1][perm[r]]._terms
            nxt: dict[Monomial, int] = {}
            for m1, c1 in partial.items():
                for m2, c2 in factor.items():
                    m = monomial_mul(m1, m2)
                    nxt[m] = (nxt.get(m, 0) + c1 * c2) % p
            partial = nxt
        for m, c in partial.items():
            acc[m] = (acc.get(m, 0) + c) % p
    return Poly._wrap(field, {m: c for m, c in acc.items() if c})


def build_f(q: int, P: Palette, blocks: Sequence[ColumnSpec]) -> Poly:
    """Degree q-1 polynomial vanishing on palette-colored inputs exactly when two columns repeat."""
    if len(blocks) != q:
        raise BlockCountMismatch(f"f takes {q} column blocks, got {len(blocks)}")
    if P.q != q:
        raise PolyError(f"palette is for q={P.q}, not q={q}")
    return ones_row_determinant(P.field, blocks, q)


def build_g(q: int, P: Palette, blocks: Sequence[int]) -> Poly:
    """Degree q-2 polynomial on q-1 blocks: determinant of the first q-1 rows."""
    if len(blocks) != q - 1:
        raise BlockCountMismatch(f"g takes {q - 1} vertex blocks, got {len(blocks)}")
    if P.q != q:
        raise PolyError(f"palette is for q={P.q}, not q={q}")
    return ones_row_determinant(P.field, blocks, q - 1)


def build_h(q: int, P: Palette, x_blocks: Sequence[int], y_blocks: Sequence[int]) -> Poly:
    """Degree 2q-3 polynomial ``g(x) * f(y, c - sum(x))``.

    For palette-colored inputs it vanishes iff the x-colors repeat or the x- and
    y-color sets differ.
    """
    if len(x_blocks) != q - 1 or len(y_blocks) != q - 1:
        raise BlockCountMismatch(
            f"h takes two lists of {q - 1} blocks, got {len(x_blocks)} and {len(y_blocks)}"
        )
    g = build_g(q, P, x_blocks)
    f = build_f(q, P, [*y_blocks, missing_color_column(P, x_blocks)])
    return g * f
