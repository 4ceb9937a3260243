"""Exact arithmetic and dense linear algebra over prime fields GF(p).

Values are stored as canonical residues in ``[0, p)``.  ``FieldElement`` wraps a
residue together with its field for the public API; matrices and the polynomial
code work on bare ints internally and only wrap results at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_MODULUS = 2**31 - 1


class FieldError(ValueError):
    pass


class FieldMismatch(FieldError):
    """Operands belong to different prime fields."""


class ZeroInverse(ZeroDivisionError):
    pass


class NotSquare(FieldError):
    pass


class Singular(FieldError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field of integers modulo a prime ``p``."""

    p: int = 3

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not 2 <= self.p <= MAX_MODULUS:
            raise FieldError(f"modulus must be an integer in [2, 2^31-1], got {self.p!r}")
        if not _is_prime(self.p):
            raise FieldError(f"modulus {self.p} is not prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def __repr__(self) -> str:
        return f"GF({self.p})"

    @property
    def order(self) -> int:
        return self.p

    def elements(self) -> list[FieldElement]:
        return [FieldElement(v, self) for v in range(self.p)]

    def reduce(self, value: int) -> int:
        return value % self.p

    def inv(self, a: int) -> int:
        """Inverse of the residue ``a`` via the extended Euclidean algorithm."""
        a %= self.p
        if a == 0:
            raise ZeroInverse(f"0 has no inverse in {self!r}")
        old_r, r = a, self.p
        old_s, s = 1, 0
        while r:
            quot = old_r // r
            old_r, r = r, old_r - quot * r
            old_s, s = s, old_s - quot * s
        return old_s % self.p


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.p:
            raise FieldError(f"{self.value} is not a canonical residue mod {self.field.p}")

    def _coerce(self, other: object) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field!r} with {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field(self.value + o)

    __radd__ = __add__

    def __sub__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field(self.value - o)

    def __rsub__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field(o - self.value)

    def __mul__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field(self.value * self.field.inv(o))

    def __neg__(self) -> FieldElement:
        return self.field(-self.value)

    def __pow__(self, exponent: int) -> FieldElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return self.field(pow(self.value, exponent, self.field.p))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"


def ff_inverse(a: FieldElement | int, F: PrimeField | None = None) -> FieldElement:
    if isinstance(a, FieldElement):
        if F is not None and F != a.field:
            raise FieldMismatch(f"{a!r} is not an element of {F!r}")
        return a.inverse()
    if F is None:
        raise TypeError("a bare integer needs an explicit field")
    return FieldElement(F.inv(a), F)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of canonical residues."""

    field: PrimeField
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise FieldError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        p = self.field.p
        if any(not 0 <= e < p for e in self.entries):
            raise FieldError("matrix entries must be canonical residues")

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]]) -> Matrix:
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise FieldError("ragged rows")
        return cls(field, n_rows, n_cols, tuple(int(x) % field.p for r in rows for x in r))

    @classmethod
    def from_columns(cls, field: PrimeField, columns: Sequence[Sequence[int]]) -> Matrix:
        if not columns:
            return cls(field, 0, 0, ())
        return cls.from_rows(field, list(zip(*columns)))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> Matrix:
        return cls(field, n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> Matrix:
        return cls(field, rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> Matrix:
        return Matrix.from_columns(self.field, self.to_rows()) if self.rows else self

    def __matmul__(self, other: Matrix) -> Matrix:
        if other.field != self.field:
            raise FieldMismatch(f"cannot multiply over {self.field!r} and {other.field!r}")
        if self.cols != other.rows:
            raise FieldError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        p = self.field.p
        out = []
        other_cols = other.columns()
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) % p for c in other_cols)
        return Matrix(self.field, self.rows, other.cols, tuple(out))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise FieldError("vector length does not match column count")
        p = self.field.p
        return tuple(sum(a * int(b) for a, b in zip(self.row(i), vector)) % p for i in range(self.rows))

    def format(self) -> str:
        width = max((len(str(e)) for e in self.entries), default=1)
        return "\n".join(" ".join(str(e).rjust(width) for e in self.row(i)) for i in range(self.rows))


def _eliminate(field: PrimeField, rows: list[list[int]], reduced: bool) -> tuple[list[int], int]:
    """In-place Gaussian elimination; returns pivot columns and the sign of the row swaps."""
    p = field.p
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    sign = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        inv = field.inv(rows[r][c])
        if reduced:
            rows[r] = [x * inv % p for x in rows[r]]
        pivot_row = rows[r]
        start = 0 if reduced else r + 1
        for i in range(start, n_rows):
            if i == r or not rows[i][c]:
                continue
            factor = rows[i][c] * (1 if reduced else inv) % p
            rows[i] = [(a - factor * b) % p for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return pivots, sign


def mat_determinant(M: Matrix) -> FieldElement:
    if not M.is_square:
        raise NotSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    F = M.field
    rows = M.to_rows()
    pivots, sign = _eliminate(F, rows, reduced=False)
    if len(pivots) < M.rows:
        return F(0)
    det = sign
    for i in range(M.rows):
        det = det * rows[i][i] % F.p
    return F(det)


def row_reduce(M: Matrix) -> tuple[int, Matrix]:
    """Reduced row-echelon form; returns ``(rank, echelon)``."""
    rows = M.to_rows()
    pivots, _ = _eliminate(M.field, rows, reduced=True)
    if not rows:
        return 0, M
    return len(pivots), Matrix.from_rows(M.field, rows)


def rank(M: Matrix) -> int:
    return row_reduce(M)[0]


def solve_unique(A: Matrix, b: Sequence[int | FieldElement]) -> tuple[int, ...]:
    """Solve ``A x = b`` for invertible square ``A``."""
    if not A.is_square:
        raise NotSquare(f"expected a square system, got {A.rows}x{A.cols}")
    if len(b) != A.rows:
        raise FieldError("right-hand side length does not match the system")
    p = A.field.p
    aug = [list(A.row(i)) + [int(b[i]) % p] for i in range(A.rows)]
    pivots, _ = _eliminate(A.field, aug, reduced=True)
    if pivots[: A.rows] != list(range(A.rows)):
        raise Singular("system matrix is singular")
    return tuple(aug[i][-1] for i in range(A.rows))


def vector(field: PrimeField, values: Iterable[int]) -> tuple[int, ...]:
    return tuple(int(v) % field.p for v in values)
