"""Dense supertropical matrices and vectors, and the tropical determinant."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import _assignment
from .element import BOTTOM, ONE, Element, Layer, ParseError, as_element, parse_scalar, s_sum

__all__ = [
    "ShapeError",
    "SingularMatrixError",
    "Vector",
    "Matrix",
    "Singularity",
    "DetResult",
    "m_add",
    "m_mul",
    "m_scale",
    "m_apply",
    "transpose",
    "tropical_det",
    "det_value",
    "attaining_permutations",
    "first_attaining",
    "classify",
    "inverse",
    "invertible_decomposition",
    "permutation_matrix",
    "parse_stm",
    "format_stm",
]


class ShapeError(ValueError):
    """Operands have incompatible or unsupported shapes."""


class SingularMatrixError(ValueError):
    """The operation needs a determinant that the matrix does not have."""


class Vector(tuple):
    """Immutable tuple of Elements."""

    def __new__(cls, items: Iterable = ()):
        return super().__new__(cls, (as_element(x) for x in items))

    @property
    def is_tangible(self) -> bool:
        return all(not x.is_ghost for x in self) and any(not x.is_bottom for x in self)

    @property
    def in_ghost_ideal(self) -> bool:
        return all(x.in_ghost_ideal for x in self)

    def scale(self, c: Element) -> Vector:
        return Vector(c * x for x in self)

    def __add__(self, other: Vector) -> Vector:
        if len(self) != len(other):
            raise ShapeError(f"vector lengths differ: {len(self)} vs {len(other)}")
        return Vector(a + b for a, b in zip(self, other))

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self) + ")"

    def __repr__(self) -> str:
        return f"Vector({str(self)})"


class Matrix:
    """Immutable dense matrix of Elements.

    ``A + B`` is the entrywise supertropical sum, ``A @ B`` the matrix product,
    ``A @ v`` applies ``A`` to a Vector, ``c * A`` scales by an Element.
    """

    __slots__ = ("_rows", "_shape")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_element(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        for k, row in enumerate(data):
            if len(row) != ncols:
                raise ShapeError(f"row {k} has {len(row)} entries, expected {ncols}")
        self._rows = data
        self._shape = (len(data), ncols)

    @classmethod
    def _wrap(cls, rows: tuple) -> Matrix:
        m = object.__new__(cls)
        m._rows = rows
        m._shape = (len(rows), len(rows[0]) if rows else 0)
        return m

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls._wrap(tuple(tuple(ONE if i == j else BOTTOM for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls._wrap(tuple((BOTTOM,) * cols for _ in range(rows)))

    @classmethod
    def diag(cls, values: Iterable) -> Matrix:
        vals = [as_element(v) for v in values]
        n = len(vals)
        return cls._wrap(tuple(tuple(vals[i] if i == j else BOTTOM for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> Matrix:
        return cls(zip(*columns)) if columns else cls(())

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def n(self) -> int:
        """Order of a square matrix."""
        if self._shape[0] != self._shape[1]:
            raise ShapeError(f"expected a square matrix, got shape {self._shape}")
        return self._shape[0]

    @property
    def is_square(self) -> bool:
        return self._shape[0] == self._shape[1]

    @property
    def rows(self) -> tuple[tuple[Element, ...], ...]:
        return self._rows

    def row(self, i: int) -> Vector:
        return Vector(self._rows[i])

    def column(self, j: int) -> Vector:
        return Vector(r[j] for r in self._rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self._shape[1])]

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            i, j = ij
            return self._rows[i][j]
        return self._rows[ij]

    def __iter__(self) -> Iterator[tuple[Element, ...]]:
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"Matrix([{body}])"

    def __str__(self) -> str:
        return format_stm(self)

    @property
    def T(self) -> Matrix:
        return Matrix._wrap(tuple(zip(*self._rows))) if self._rows else self

    def map(self, fn) -> Matrix:
        return Matrix._wrap(tuple(tuple(fn(x) for x in row) for row in self._rows))

    def nu(self) -> Matrix:
        return self.map(Element.nu)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix._wrap(tuple(tuple(self._rows[i][j] for j in cols) for i in rows))

    def minor(self, i: int, j: int) -> Matrix:
        """Delete row ``i`` and column ``j`` (0-based)."""
        r, c = self._shape
        if r < 2 or c < 2:
            raise ShapeError(f"minor needs at least a 2x2 matrix, got shape {self._shape}")
        if not (0 <= i < r and 0 <= j < c):
            raise IndexError(f"minor index ({i}, {j}) out of range for shape {self._shape}")
        return self.submatrix([k for k in range(r) if k != i], [k for k in range(c) if k != j])

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self._shape != other._shape:
            raise ShapeError(f"cannot add shapes {self._shape} and {other._shape}")
        return Matrix._wrap(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self._shape[1] != other._shape[0]:
                raise ShapeError(f"cannot multiply shapes {self._shape} and {other._shape}")
            cols = tuple(zip(*other._rows))
            return Matrix._wrap(tuple(tuple(_dot(r, c) for c in cols) for r in self._rows))
        if isinstance(other, (Vector, tuple, list)):
            if self._shape[1] != len(other):
                raise ShapeError(f"cannot apply shape {self._shape} to a vector of length {len(other)}")
            v = other if isinstance(other, Vector) else Vector(other)
            return Vector(_dot(r, v) for r in self._rows)
        return NotImplemented

    def __rmul__(self, c) -> Matrix:
        c = as_element(c)
        return self.map(lambda x: c * x)

    def __pow__(self, m: int) -> Matrix:
        n = self.n
        if m < 0:
            raise ValueError("negative matrix powers are not defined")
        result = Matrix.identity(n)
        base = self
        while m:
            if m & 1:
                result = result @ base
            m >>= 1
            if m:
                base = base @ base
        return result


def _dot(r: Sequence[Element], c: Sequence[Element]) -> Element:
    acc = BOTTOM
    for a, b in zip(r, c):
        if a.value is not None and b.value is not None:
            acc = acc + a * b
    return acc


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """Matrix with the one at ``(i, perm[i])`` and bottom elsewhere."""
    n = len(perm)
    return Matrix._wrap(tuple(tuple(ONE if perm[i] == j else BOTTOM for j in range(n)) for i in range(n)))


def m_add(A: Matrix, B: Matrix) -> Matrix:
    return A + B


def m_mul(A: Matrix, B: Matrix) -> Matrix:
    return A @ B


def m_scale(c: Element, A: Matrix) -> Matrix:
    return c * A


def m_apply(A: Matrix, v: Sequence[Element]) -> Vector:
    return A @ Vector(v)


def transpose(A: Matrix) -> Matrix:
    return A.T


# -- determinant -------------------------------------------------------------


class Singularity(str, enum.Enum):
    NONSINGULAR = "nonsingular"
    SINGULAR = "singular"
    STRICTLY_SINGULAR = "strictly_singular"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DetResult:
    value: Element
    witness: tuple[int, ...] | None
    classification: Singularity

    @property
    def is_nonsingular(self) -> bool:
        return self.classification is Singularity.NONSINGULAR


def classify_value(d: Element) -> Singularity:
    if d.is_bottom:
        return Singularity.STRICTLY_SINGULAR
    if d.is_ghost:
        return Singularity.SINGULAR
    return Singularity.NONSINGULAR


def _require_square(A: Matrix, what: str) -> int:
    r, c = A.shape
    if r != c:
        raise ShapeError(f"{what} requires square matrix, got shape {A.shape}")
    return r


def _scaled_weights(A: Matrix) -> tuple[list[list[int | None]], int]:
    """Integer weights ``value * scale`` (``None`` for bottom) and the scale."""
    scale = 1
    for row in A.rows:
        for x in row:
            if x.value is not None and x.value.denominator != 1:
                scale = math.lcm(scale, x.value.denominator)
    w = [
        [None if x.value is None else int(x.value * scale) for x in row]
        for row in A.rows
    ]
    return w, scale


def _has_second_optimum(w, cols: list[int], total: int) -> bool:
    # Any other optimal assignment avoids at least one edge of this one.
    for i, j in enumerate(cols):
        keep = w[i][j]
        w[i][j] = None
        try:
            res = _assignment.max_assignment(w)
        finally:
            w[i][j] = keep
        if res is not None and res[0] == total:
            return True
    return False


def _det(A: Matrix, want_witness: bool) -> tuple[Element, tuple[int, ...] | None]:
    n = A.shape[0]
    if n == 0:
        return ONE, ()
    w, scale = _scaled_weights(A)
    res = _assignment.max_assignment(w)
    if res is None:
        return BOTTOM, None
    total, cols = res
    value = Fraction(total, scale)
    ghost = any(A[i, j].is_ghost for i, j in enumerate(cols)) or _has_second_optimum(w, cols, total)
    witness = None
    if want_witness:
        witness = next(_assignment.optimal_assignments(w, limit=1))
    return Element(value, Layer.GHOST if ghost else Layer.TANGIBLE), witness


def det_value(A: Matrix) -> Element:
    """Tropical determinant (permanent) value only."""
    _require_square(A, "determinant")
    return _det(A, want_witness=False)[0]


def tropical_det(A: Matrix) -> DetResult:
    """Supertropical sum over all permutations of the entry products.

    Computed as a maximum-weight assignment on the nu-values; the result is a
    ghost iff an optimal assignment uses a ghost entry or there are two
    distinct optimal assignments.  The witness is the lexicographically
    smallest attaining permutation (``witness[i]`` is the column of row ``i``).
    """
    _require_square(A, "determinant")
    value, witness = _det(A, want_witness=True)
    return DetResult(value, witness, classify_value(value))


def classify(A: Matrix) -> Singularity:
    return classify_value(det_value(A))


DEFAULT_MAX_ENUM = 8


def attaining_permutations(A: Matrix, max_enum: int = DEFAULT_MAX_ENUM) -> list[tuple[int, ...]]:
    """All permutations whose product reaches the determinant's nu-value, in
    lexicographic order.  Empty when the determinant is bottom.

    Above ``max_enum`` only the solver's witness is returned.
    """
    n = _require_square(A, "determinant")
    if n == 0:
        return [()]
    w, _ = _scaled_weights(A)
    limit = None if n <= max_enum else 1
    return list(_assignment.optimal_assignments(w, limit=limit))


def first_attaining(A: Matrix, count: int) -> list[tuple[int, ...]]:
    """Up to ``count`` attaining permutations, lexicographically smallest first."""
    _require_square(A, "determinant")
    w, _ = _scaled_weights(A)
    return list(_assignment.optimal_assignments(w, limit=count))


def invertible_decomposition(A: Matrix) -> tuple[tuple[int, ...], Matrix] | None:
    """``(perm, D)`` with ``A == permutation_matrix(perm) @ D`` and ``D`` a tangible
    diagonal, or ``None`` when ``A`` has no multiplicative inverse."""
    n = _require_square(A, "invertible decomposition")
    perm = [None] * n
    used = set()
    for i, row in enumerate(A.rows):
        support = [j for j, x in enumerate(row) if not x.is_bottom]
        if len(support) != 1 or support[0] in used or row[support[0]].is_ghost:
            return None
        perm[i] = support[0]
        used.add(support[0])
    diag = [BOTTOM] * n
    for i, j in enumerate(perm):
        diag[j] = A[i, j]
    return tuple(perm), Matrix.diag(diag)


def inverse(A: Matrix) -> Matrix:
    dec = invertible_decomposition(A)
    if dec is None:
        raise SingularMatrixError("matrix is not multiplicatively invertible")
    perm, _ = dec
    n = len(perm)
    rows = [[BOTTOM] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[j][i] = A[i, j].inverse()
    return Matrix(rows)


# -- .stm text format --------------------------------------------------------


def parse_stm(text: str) -> Matrix:
    """Parse ``.stm`` text: one row per line, whitespace-separated scalars.

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        row = []
        pos = 0
        for token in line.split():
            col = line.index(token, pos) + 1
            pos = col - 1 + len(token)
            try:
                row.append(parse_scalar(token))
            except ParseError as exc:
                raise ParseError(str(exc), lineno, col) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", lineno, 1)
        rows.append(row)
    if not rows:
        raise ParseError("no matrix rows found")
    return Matrix(rows)


def format_stm(A: Matrix) -> str:
    cells = [[str(x) for x in row] for row in A.rows]
    if not cells:
        return ""
    widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    return "\n".join(" ".join(c.rjust(wd) for c, wd in zip(r, widths)).rstrip() for r in cells)


def s_dot(u: Sequence[Element], v: Sequence[Element]) -> Element:
    return s_sum(a * b for a, b in zip(u, v))
