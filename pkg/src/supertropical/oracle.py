"""Brute-force reference computations.

Everything here is evaluated literally from the definitions with ``Element``
arithmetic, so it shares no code with the assignment solver or the hull logic.
Tests and the CLI's ``--oracle`` flag compare against these.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from .charpoly import Poly
from .element import BOTTOM, ONE, Element, as_element
from .matrix import Matrix, ShapeError

__all__ = ["OracleCapError", "DET_CAP", "CHARPOLY_CAP", "brute_det", "brute_charpoly", "scan_roots"]

DET_CAP = 8
CHARPOLY_CAP = 6


class OracleCapError(ValueError):
    pass


def _square(A: Matrix) -> int:
    rows, cols = A.shape
    if rows != cols:
        raise ShapeError(f"oracle needs a square matrix, got shape {rows}x{cols}")
    return rows


def brute_det(A: Matrix, cap: int = DET_CAP) -> Element:
    """Supertropical sum of all ``n!`` permutation products."""
    n = _square(A)
    if n > cap:
        raise OracleCapError(f"brute_det is capped at n <= {cap}, got n = {n}")
    total = BOTTOM
    for perm in permutations(range(n)):
        term = ONE
        for i, j in enumerate(perm):
            term = term * A[i, j]
            if term.is_bottom:
                break
        total = total + term
    return total


def brute_charpoly(A: Matrix, cap: int = CHARPOLY_CAP) -> Poly:
    """Coefficient of ``l**(n-k)`` is the sum of ``brute_det`` over principal k x k submatrices."""
    n = _square(A)
    if n > cap:
        raise OracleCapError(f"brute_charpoly is capped at n <= {cap}, got n = {n}")
    coeffs = [BOTTOM] * (n + 1)
    coeffs[n] = ONE
    for k in range(1, n + 1):
        acc = BOTTOM
        for S in combinations(range(n), k):
            acc = acc + brute_det(A.submatrix(S, S), cap)
        coeffs[n - k] = acc
    return Poly(coeffs)


def _evaluate(f: Poly, x: Element) -> Element:
    total = BOTTOM
    for i, c in enumerate(f.coeffs):
        total = total + c * x ** i
    return total


def scan_roots(f: Poly, lo, hi, step) -> list[Element]:
    """Grid points of ``[lo, hi]`` where ``f`` evaluates into the ghost ideal,
    together with every pairwise monomial crossing in range that does too."""
    lo, hi, step = (Fraction(as_element(v).value) for v in (lo, hi, step))
    if step <= 0:
        raise ValueError("step must be positive")
    candidates = set()
    x = lo
    while x <= hi:
        candidates.add(x)
        x += step
    terms = [(i, c.value) for i, c in enumerate(f.coeffs) if not c.is_bottom]
    for (i, a), (j, b) in combinations(terms, 2):
        cross = (a - b) / (j - i)
        if lo <= cross <= hi:
            candidates.add(cross)
    found = [Element(v) for v in sorted(candidates)]
    return [e for e in found if _evaluate(f, e).in_ghost_ideal]
