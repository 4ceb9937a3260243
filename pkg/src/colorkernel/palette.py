"""q-palettes: q color vectors in F^q used to encode a coloring algebraically.

A palette is a set of q vectors whose first entries are all 1, which are
linearly independent, and any q-1 of which stay independent once their last
coordinate is dropped.  Two constructions are provided: a near-triangular one
that works over every field except GF(2) with odd q, and a Vandermonde one for
fields with at least q elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .field import FieldError, Matrix, PrimeField, rank, solve_unique


class PaletteError(ValueError):
    pass


class InvalidAlpha(PaletteError):
    pass


class NoValidAlpha(PaletteError):
    pass


class FieldTooSmall(PaletteError):
    pass


class DuplicateAlpha(PaletteError):
    pass


class DimensionMismatch(PaletteError):
    pass


@dataclass(frozen=True)
class Palette:
    """An immutable q-palette; ``columns[i]`` encodes color ``i``."""

    q: int
    field: PrimeField
    columns: tuple[tuple[int, ...], ...]
    construction: str = "custom"
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.columns) != self.q or any(len(c) != self.q for c in self.columns):
            raise DimensionMismatch(f"a {self.q}-palette needs {self.q} vectors of length {self.q}")

    def __len__(self) -> int:
        return self.q

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.columns)

    def __getitem__(self, color: int) -> tuple[int, ...]:
        return self.columns[color]

    def color_of(self, column: Sequence[int]) -> int:
        """Index of ``column`` in the palette, or ``ValueError``."""
        return self.columns.index(tuple(column))

    def matrix(self) -> Matrix:
        return Matrix.from_columns(self.field, self.columns)

    def truncated(self, color: int) -> tuple[int, ...]:
        return self.columns[color][:-1]

    def format(self) -> str:
        return self.matrix().format()


@dataclass(frozen=True)
class PaletteSum:
    c: tuple[int, ...]


@dataclass(frozen=True)
class PaletteReport:
    """Outcome of checking the three palette conditions.

    Each ``*_witness`` is ``None`` when the condition holds.  For the first item
    the witness is the index of a vector whose first entry is not 1; for the
    second it is the full index set (with ``rank`` recording the deficiency);
    for the third it is a (q-1)-subset of indices whose truncations are
    dependent.
    """

    q: int
    first_entries: bool
    independent: bool
    truncations_independent: bool
    rank: int
    first_entries_witness: int | None = None
    independent_witness: tuple[int, ...] | None = None
    truncations_witness: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return self.first_entries and self.independent and self.truncations_independent

    def __bool__(self) -> bool:
        return self.passed

    def format(self) -> str:
        def mark(ok: bool) -> str:
            return "pass" if ok else "FAIL"

        lines = [
            f"item1 first-entries-one      {mark(self.first_entries)}"
            + ("" if self.first_entries else f"  witness=vector {self.first_entries_witness}"),
            f"item2 linearly-independent   {mark(self.independent)}  rank={self.rank}",
            f"item3 truncations-independent {mark(self.truncations_independent)}"
            + ("" if self.truncations_independent else f"  witness={list(self.truncations_witness or ())}"),
            f"palette {mark(self.passed)}",
        ]
        return "\n".join(lines)


def palette_exists(q: int, p: int) -> bool:
    """Whether some q-palette exists over GF(p): q even or the field has 3+ elements."""
    return q % 2 == 0 or p >= 3


def forbidden_alphas(q: int, F: PrimeField) -> set[int]:
    return {0, (4 - q) % F.p}


def default_alpha(q: int, F: PrimeField) -> int:
    """Smallest element outside ``{0, 4 - q}``."""
    bad = forbidden_alphas(q, F)
    for a in range(F.p):
        if a not in bad:
            return a
    raise NoValidAlpha(f"no {q}-palette exists over {F!r}: every element lies in {{0, 4-q}}")


def construct_palette(q: int, F: PrimeField, alpha: int | None = None) -> Palette:
    """Columns ``e1``, ``e1 + e_i`` for ``2 <= i < q`` and ``e1 + alpha*e2 + e3 + ... + eq``."""
    if q < 2:
        raise PaletteError(f"q must be at least 2, got {q}")
    if alpha is None:
        alpha = default_alpha(q, F)
    else:
        alpha = int(alpha) % F.p
        if alpha in forbidden_alphas(q, F):
            raise InvalidAlpha(f"alpha={alpha} is forbidden for q={q} over {F!r} (must avoid 0 and 4-q)")
    cols = []
    for i in range(q - 1):
        col = [0] * q
        col[0] = 1
        if i > 0:
            col[i] = 1
        cols.append(tuple(col))
    last = [1] * q
    last[1] = alpha
    cols.append(tuple(last))
    return Palette(q, F, tuple(cols), "lemma2", (alpha,))


def construct_vandermonde(q: int, F: PrimeField, alphas: Sequence[int] | None = None) -> Palette:
    if q < 2:
        raise PaletteError(f"q must be at least 2, got {q}")
    if F.p < q:
        raise FieldTooSmall(f"a Vandermonde {q}-palette needs at least {q} field elements, {F!r} has {F.p}")
    if alphas is None:
        alphas = range(q)
    points = [int(a) % F.p for a in alphas]
    if len(points) != q:
        raise DimensionMismatch(f"need {q} evaluation points, got {len(points)}")
    if len(set(points)) != q:
        raise DuplicateAlpha(f"evaluation points must be distinct, got {points}")
    cols = tuple(tuple(pow(a, j, F.p) for j in range(q)) for a in points)
    return Palette(q, F, cols, "vandermonde", tuple(points))


def make_palette(q: int, F: PrimeField, variant: str = "lemma2", alpha: int | None = None) -> Palette:
    if variant == "lemma2":
        return construct_palette(q, F, alpha)
    if variant == "vandermonde":
        return construct_vandermonde(q, F)
    raise PaletteError(f"unknown palette variant {variant!r}")


def verify_palette(candidate: Sequence[Sequence[int]], F: PrimeField) -> PaletteReport:
    q = len(candidate)
    if q < 2 or any(len(c) != q for c in candidate):
        raise DimensionMismatch(f"expected {q} vectors of length {q}")
    cols = [tuple(int(x) % F.p for x in c) for c in candidate]

    bad_first = next((i for i, c in enumerate(cols) if c[0] != 1), None)
    r = rank(Matrix.from_columns(F, cols))
    independent = r == q

    trunc_witness = None
    for subset in combinations(range(q), q - 1):
        if rank(Matrix.from_columns(F, [cols[i][:-1] for i in subset])) < q - 1:
            trunc_witness = subset
            break

    return PaletteReport(
        q=q,
        first_entries=bad_first is None,
        independent=independent,
        truncations_independent=trunc_witness is None,
        rank=r,
        first_entries_witness=bad_first,
        independent_witness=None if independent else tuple(range(q)),
        truncations_witness=trunc_witness,
    )


def palette_sum(P: Palette) -> PaletteSum:
    p = P.field.p
    return PaletteSum(tuple(sum(col[j] for col in P.columns) % p for j in range(P.q)))


def truncated_system(P: Palette) -> tuple[Matrix, tuple[int, ...]]:
    """The matrix of the first q-1 truncated columns, and the truncated last column."""
    D = Matrix.from_columns(P.field, [P.truncated(i) for i in range(P.q - 1)])
    return D, P.truncated(P.q - 1)


def last_column_coordinates(P: Palette) -> tuple[int, ...]:
    """Coordinates of the truncated last column in the basis of the other truncations."""
    D, d_last = truncated_system(P)
    try:
        return solve_unique(D, d_last)
    except FieldError as exc:
        raise PaletteError("the first q-1 truncated columns are not a basis") from exc


def search_palettes(q: int, F: PrimeField) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Exhaustively yield every q-palette (as a sorted tuple of vectors) over ``F``.

    Only vectors with leading entry 1 are candidates, so the search space is
    ``C(p^(q-1), q)`` sets.
    """
    candidates = [(1,) + tail for tail in product(range(F.p), repeat=q - 1)]
    for subset in combinations(candidates, q):
        if verify_palette(subset, F).passed:
            yield subset
