"""Tropical dependence witnesses, rank defect, supertropical eigenvectors,
conjugation and diagonalization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .adjoint import quasi_inverse, surpasses_entrywise
from .charpoly import char_poly, essential_part, tangible_char_poly, tangible_roots
from .digraph import from_matrix, hall_violation
from .element import BOTTOM, ONE, Element, as_element
from .matrix import (
    Matrix,
    ShapeError,
    SingularMatrixError,
    Vector,
    _require_square,
    det_value,
    first_attaining,
)

__all__ = [
    "Witness",
    "EigenPair",
    "rank_defect_cover",
    "dependence_witness",
    "verify_witness",
    "eigen_pairs",
    "is_weak_eigenpair",
    "conjugate",
    "diagonalize",
    "is_separable",
    "vandermonde",
    "normalize",
]


@dataclass(frozen=True)
class Witness:
    """Tangible coefficients whose combination of the vectors is ghost or bottom."""

    coefficients: Vector
    combination: Vector


@dataclass(frozen=True)
class EigenPair:
    eigenvalue: Element
    eigenvector: Vector
    exact: bool


def rank_defect_cover(A: Matrix) -> tuple[list[int], list[int]] | None:
    """Rows ``K`` and columns ``Z`` with ``A[K, Z]`` all bottom and
    ``len(Z) >= n + 1 - len(K)``; ``None`` iff ``|A|`` is not bottom."""
    n = _require_square(A, "rank defect cover")
    hv = hall_violation(from_matrix(A))
    if hv is None:
        return None
    S, N = hv
    return sorted(S), [j for j in range(n) if j not in N]


def _combine(vectors: Sequence[Sequence[Element]], gamma: Sequence[Element]) -> Vector:
    length = len(vectors[0])
    out = [BOTTOM] * length
    for g, v in zip(gamma, vectors):
        if g.is_bottom:
            continue
        for j in range(length):
            out[j] = out[j] + g * v[j]
    return Vector(out)


def _lifted_minor_column(M: Matrix, col: int) -> list[Element]:
    n = M.shape[0]
    if n == 1:
        return [ONE]
    return [det_value(M.minor(i, col)).lift() for i in range(n)]


def _row_coefficients(M: Matrix) -> list[Element] | None:
    """Coefficients of a row dependence of square ``M``, or ``None`` if nonsingular."""
    d = det_value(M)
    if d.is_bottom:
        return _strict_coefficients(M)
    if d.is_tangible:
        return None
    first_two = first_attaining(M, 2)
    sigma = first_two[0]
    if len(first_two) == 2:
        # two attaining permutations: use a column where they pick different rows
        other = first_two[1]
        i0 = next(i for i in range(len(sigma)) if sigma[i] != other[i])
    else:
        # the only attaining permutation must pass through a ghost entry
        i0 = next(i for i in range(len(sigma)) if M[i, sigma[i]].is_ghost)
    return _lifted_minor_column(M, sigma[i0])


def _strict_coefficients(M: Matrix) -> list[Element]:
    """Dependence of the rows of a strictly singular square matrix."""
    n = M.shape[0]
    K, Z = rank_defect_cover(M)
    free = [j for j in range(n) if j not in Z]
    # len(free) < len(K): take len(free)+1 of those rows, which live in a
    # len(free)-dimensional coordinate space.
    rows = K[: len(free) + 1]
    gamma = [BOTTOM] * n
    if not free:
        gamma[rows[0]] = ONE
        return gamma
    sub = M.submatrix(rows, free)  # (f+1) x f
    local = [det_value(sub.submatrix([r for r in range(len(rows)) if r != i], range(len(free)))).lift()
             for i in range(len(rows))]
    if all(x.is_bottom for x in local):
        # every maximal square block is strictly singular: recurse on one of them
        square = sub.submatrix(range(1, len(rows)), range(len(free)))
        inner = _strict_coefficients(square)
        local = [BOTTOM] + inner
    for r, g in zip(rows, local):
        gamma[r] = g
    return gamma


def dependence_witness(vectors: Sequence[Sequence]) -> Witness | None:
    """A tropical dependence among the vectors, or ``None`` if they are independent.

    Needs ``m >= n`` vectors of length ``n``; for ``m > n`` the vectors are padded
    with bottom coordinates, which makes them dependent.
    """
    vecs = [Vector(v) for v in vectors]
    if not vecs:
        raise ShapeError("no vectors given")
    n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise ShapeError("vectors have different lengths")
    m = len(vecs)
    if m < n:
        raise ShapeError(f"need at least {n} vectors of length {n}, got {m}")
    M = Matrix([[BOTTOM] * (m - n) + list(v) for v in vecs])
    gamma = _row_coefficients(M)
    if gamma is None:
        return None
    return Witness(Vector(gamma), _combine(vecs, gamma))


def verify_witness(vectors: Sequence[Sequence], w: Witness) -> bool:
    vecs = [Vector(v) for v in vectors]
    g = w.coefficients
    if len(g) != len(vecs) or any(x.is_ghost for x in g) or all(x.is_bottom for x in g):
        return False
    comb = _combine(vecs, g)
    return comb == w.combination and comb.in_ghost_ideal


def normalize(v: Sequence[Element]) -> Vector:
    """Scale so the smallest non-bottom entry is ``0``."""
    finite = [x.value for x in v if not x.is_bottom]
    if not finite:
        return Vector(v)
    shift = Element(-min(finite))
    return Vector(shift * x for x in v)


def eigen_pairs(A: Matrix) -> list[EigenPair]:
    """One tangible supertropical eigenvector per corner root of the essential
    tangible characteristic polynomial, in decreasing order of eigenvalue.

    The eigenvector is a dependence of the columns of ``A + beta I``.
    """
    n = _require_square(A, "eigenvectors")
    roots = tangible_roots(essential_part(tangible_char_poly(A))).corners
    pairs = []
    for beta in roots:
        B = A + beta * Matrix.identity(n)
        if det_value(B).is_tangible:
            raise AssertionError(f"A + {beta} I is nonsingular although {beta} is a root")
        w = dependence_witness(B.columns())
        v = normalize(w.coefficients)
        Av = A @ v
        pairs.append(EigenPair(beta, v, Av == v.scale(beta)))
    return pairs


def is_weak_eigenpair(A: Matrix, v: Sequence, beta: Element, m: int = 1) -> bool:
    """True iff ``A**m v + beta**m v`` is ghost or bottom in every coordinate."""
    if m < 1:
        raise ValueError("m must be at least 1")
    v = Vector(v)
    return ((A ** m) @ v + v.scale(beta ** m)).in_ghost_ideal


def conjugate(B: Matrix, A: Matrix) -> Matrix:
    """``quasi_inverse(A) @ B @ A`` for nonsingular ``A``."""
    d = det_value(A)
    if not d.is_tangible:
        raise SingularMatrixError("conjugation needs a nonsingular matrix")
    return quasi_inverse(A) @ B @ A


def is_separable(A: Matrix) -> bool:
    """Characteristic polynomial is essential with every coefficient tangible."""
    f = char_poly(A)
    if any(not c.is_tangible for c in f.coeffs) or len(f.coeffs) != A.n + 1:
        return False
    return essential_part(f) == f


def diagonalize(A: Matrix) -> tuple[Matrix, Matrix] | None:
    """``(U, D)`` with ``quasi_inverse(U) @ A @ U = D + ghost``, for separable ``A``
    whose eigenvector matrix ``U`` is nonsingular; ``None`` otherwise."""
    n = _require_square(A, "diagonalization")
    if not is_separable(A):
        return None
    pairs = eigen_pairs(A)
    if len(pairs) != n:
        return None
    U = Matrix.from_columns([p.eigenvector for p in pairs])
    if not det_value(U).is_tangible:
        return None
    D = Matrix.diag([p.eigenvalue for p in pairs])
    if not surpasses_entrywise(conjugate(A, U), D):
        raise AssertionError("conjugated matrix does not surpass the eigenvalue diagonal")
    return U, D


def vandermonde(values: Sequence) -> Matrix:
    """Rows ``(1, a_i, a_i^2, ..., a_i^(n-1))``."""
    a = [as_element(x) for x in values]
    n = len(a)
    return Matrix([[x ** j for j in range(n)] for x in a])
