"""Adjoint, canonical quasi-inverse and quasi-identities."""

from __future__ import annotations

from dataclasses import dataclass

from .element import ONE, Element, ghost_surpasses
from .matrix import Matrix, ShapeError, SingularMatrixError, Vector, _require_square, det_value

__all__ = [
    "QuasiPair",
    "minor",
    "adjoint",
    "quasi_inverse",
    "quasi_identities",
    "is_quasi_identity",
    "vn_regular",
    "solve_ghost",
    "surpasses_entrywise",
]


@dataclass(frozen=True)
class QuasiPair:
    left: Matrix  # A @ quasi_inverse(A)
    right: Matrix  # quasi_inverse(A) @ A


def minor(A: Matrix, i: int, j: int) -> Matrix:
    _require_square(A, "minor")
    return A.minor(i, j)


def adjoint(A: Matrix) -> Matrix:
    """Transpose of the matrix of minor determinants; ``[[0]]`` for 1x1."""
    n = _require_square(A, "adjoint")
    if n == 0:
        raise ShapeError("adjoint of an empty matrix")
    if n == 1:
        return Matrix([[ONE]])
    cof = [[det_value(A.minor(j, i)) for j in range(n)] for i in range(n)]
    return Matrix(cof)


def _nonbottom_det(A: Matrix) -> Element:
    d = det_value(A)
    if d.is_bottom:
        raise SingularMatrixError("matrix is strictly singular (determinant -inf)")
    return d


def quasi_inverse(A: Matrix) -> Matrix:
    """``adj(A)`` divided by the tangible lift of ``|A|``.

    For a ghost determinant this divides by the tangible element of the same
    nu-value, which is unique in this model.
    """
    d = _nonbottom_det(A)
    inv = d.lift().inverse()
    return inv * adjoint(A)


def quasi_identities(A: Matrix) -> QuasiPair:
    q = quasi_inverse(A)
    return QuasiPair(A @ q, q @ A)


def is_quasi_identity(E: Matrix) -> bool:
    n = _require_square(E, "quasi-identity test")
    for i in range(n):
        for j in range(n):
            x = E[i, j]
            if i == j:
                if x != ONE:
                    return False
            elif not x.in_ghost_ideal:
                return False
    if E @ E != E:
        return False
    return det_value(E).is_tangible


def vn_regular(A: Matrix, exact: bool = False) -> tuple[bool, list[tuple[int, int]]]:
    """Compare ``A adj(A) A`` with ``|A| A`` and list the mismatched positions (0-based).

    Entries are compared by nu-value, so an entry that only picked up a ghost
    layer still matches; ``exact=True`` demands identical entries.
    """
    n = _require_square(A, "von Neumann regularity")
    lhs = A @ adjoint(A) @ A
    rhs = det_value(A) * A
    if exact:
        same = lambda x, y: x == y  # noqa: E731
    else:
        same = lambda x, y: x.nu() == y.nu()  # noqa: E731
    bad = [(i, j) for i in range(n) for j in range(n) if not same(lhs[i, j], rhs[i, j])]
    return not bad, bad


def solve_ghost(A: Matrix, v) -> Vector:
    """``w = quasi_inverse(A) @ v``, so that ``A @ w`` is ``v`` plus ghost."""
    _require_square(A, "solve")
    d = det_value(A)
    if not d.is_tangible:
        kind = "strictly singular" if d.is_bottom else "singular"
        raise SingularMatrixError(f"solve_ghost needs a nonsingular matrix; this one is {kind}")
    return quasi_inverse(A) @ Vector(v)


def surpasses_entrywise(X, Y) -> bool:
    """``X[i] = Y[i] + ghost`` for every entry (matrices or vectors)."""
    if isinstance(X, Matrix):
        if X.shape != Y.shape:
            return False
        return all(ghost_surpasses(a, b) for r, s in zip(X.rows, Y.rows) for a, b in zip(r, s))
    return len(X) == len(Y) and all(ghost_surpasses(a, b) for a, b in zip(X, Y))

