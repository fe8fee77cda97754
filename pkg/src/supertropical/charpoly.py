"""Univariate supertropical polynomials and characteristic polynomials of matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .digraph import DEFAULT_MAX_SUBSETS_N, best_k_multicycle, from_matrix
from .element import BOTTOM, ONE, Element, as_element
from .matrix import Matrix, _require_square

__all__ = [
    "Poly",
    "RootSet",
    "char_poly",
    "tangible_char_poly",
    "essential_part",
    "eval_poly_scalar",
    "eval_poly_matrix",
    "satisfies",
    "tilde_poly",
    "tangible_roots",
    "upper_hull",
]

Interval = tuple[Fraction | None, Fraction | None]


class Poly:
    """Dense coefficient sequence; ``coeffs[i]`` multiplies ``l**i``.

    Trailing bottom coefficients are dropped, so equal polynomials compare equal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        c = [as_element(x) for x in coeffs]
        while c and c[-1].is_bottom:
            c.pop()
        self.coeffs: tuple[Element, ...] = tuple(c)

    @classmethod
    def monomial(cls, coeff, degree: int) -> Poly:
        return cls([BOTTOM] * degree + [as_element(coeff)])

    @classmethod
    def linear(cls, root) -> Poly:
        """``l + root``."""
        return cls([as_element(root), ONE])

    @property
    def degree(self) -> int:
        """Largest exponent with a non-bottom coefficient (-1 for the zero polynomial)."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Element:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else BOTTOM

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def terms(self) -> list[tuple[int, Element]]:
        """Non-bottom ``(exponent, coefficient)`` pairs, highest exponent first."""
        return [(i, c) for i, c in reversed(list(enumerate(self.coeffs))) if not c.is_bottom]

    def lift(self) -> Poly:
        return Poly(c.lift() for c in self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        m = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(m))

    def __mul__(self, other: Poly) -> Poly:
        if not self.coeffs or not other.coeffs:
            return Poly(())
        out = [BOTTOM] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_bottom:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __call__(self, x):
        if isinstance(x, Matrix):
            return eval_poly_matrix(self, x)
        return eval_poly_scalar(self, as_element(x))

    def __str__(self) -> str:
        parts = []
        for i, c in self.terms():
            if i == 0:
                parts.append(str(c))
                continue
            mono = "l" if i == 1 else f"l^{i}"
            parts.append(mono if c == ONE else f"{c} {mono}")
        return " + ".join(parts) if parts else "-inf"

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


@dataclass(frozen=True)
class RootSet:
    """Corner roots (descending) and closed ranges where a ghost coefficient's
    monomial weakly dominates (``None`` marks an unbounded end)."""

    corners: tuple[Element, ...]
    ghost_intervals: tuple[Interval, ...]


def char_poly(A: Matrix, max_n: int = DEFAULT_MAX_SUBSETS_N) -> Poly:
    """``|l I + A|``: the coefficient of ``l**(n-k)`` is the best k-multicycle weight."""
    n = _require_square(A, "characteristic polynomial")
    G = from_matrix(A)
    coeffs = [BOTTOM] * (n + 1)
    coeffs[n] = ONE
    for k in range(1, n + 1):
        coeffs[n - k] = best_k_multicycle(G, k, max_n)
    return Poly(coeffs)


def tangible_char_poly(A: Matrix, max_n: int = DEFAULT_MAX_SUBSETS_N) -> Poly:
    return char_poly(A, max_n).lift()


def upper_hull(points: Sequence[tuple[int, Fraction]]) -> list[tuple[int, Fraction]]:
    """Strict vertices of the upper concave hull of points sorted by x."""
    hull: list[tuple[int, Fraction]] = []
    for p in points:
        while len(hull) >= 2:
            (ox, oy), (ax, ay) = hull[-2], hull[-1]
            # drop hull[-1] unless it lies strictly above the chord hull[-2] -> p
            if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _points(f: Poly) -> list[tuple[int, Fraction]]:
    return [(i, c.value) for i, c in enumerate(f.coeffs) if not c.is_bottom]


def essential_part(f: Poly) -> Poly:
    """Keep the coefficients whose points are strict vertices of the upper hull."""
    keep = {x for x, _ in upper_hull(_points(f))}
    return Poly(c if i in keep else BOTTOM for i, c in enumerate(f.coeffs))


def eval_poly_scalar(f: Poly, a: Element) -> Element:
    total = BOTTOM
    power = ONE
    for i, c in enumerate(f.coeffs):
        if i:
            power = power * a
        total = total + c * power
    return total


def eval_poly_matrix(f: Poly, A: Matrix) -> Matrix:
    """``sum_i coeff_i * A**i`` with ``A**0 = I``."""
    n = _require_square(A, "polynomial evaluation")
    total = Matrix.zeros(n)
    power = Matrix.identity(n)
    for i, c in enumerate(f.coeffs):
        if i:
            power = power @ A
        if not c.is_bottom:
            total = total + c * power
    return total


def satisfies(A: Matrix, f: Poly) -> bool:
    """True iff ``f(A)`` has every entry ghost or bottom."""
    return all(x.in_ghost_ideal for row in eval_poly_matrix(f, A).rows for x in row)


def tilde_poly(f: Poly) -> Poly:
    """Drop the constant term, lower every exponent by one, lift the coefficients."""
    return Poly(c.lift() for c in f.coeffs[1:])


def _ghost_intervals(f: Poly) -> list[Interval]:
    pts = _points(f)
    raw: list[Interval] = []
    for i, c in enumerate(f.coeffs):
        if not c.is_ghost:
            continue
        lo: Fraction | None = None
        hi: Fraction | None = None
        empty = False
        for j, vj in pts:
            if j == i:
                continue
            bound = (vj - c.value) / (i - j)
            if i > j:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            empty = True
        if not empty:
            raw.append((lo, hi))
    raw.sort(key=lambda iv: (iv[0] is not None, iv[0] if iv[0] is not None else 0))
    merged: list[Interval] = []
    for lo, hi in raw:
        if merged:
            plo, phi = merged[-1]
            if phi is None or (lo is not None and lo <= phi) or lo is None:
                new_hi = None if (phi is None or hi is None) else max(phi, hi)
                merged[-1] = (plo, new_hi)
                continue
        merged.append((lo, hi))
    return merged


def tangible_roots(f: Poly) -> RootSet:
    """Corner roots of the tangible lift's upper hull, plus ghost-dominated ranges."""
    hull = upper_hull(_points(f.lift()))
    corners = set()
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        beta = Element((y1 - y2) / (x2 - x1))
        if not eval_poly_scalar(f, beta).in_ghost_ideal:
            raise AssertionError(f"corner {beta} of {f} does not evaluate to a ghost")
        corners.add(beta)
    ordered = tuple(sorted(corners, key=lambda e: e.value, reverse=True))
    return RootSet(ordered, tuple(_ghost_intervals(f)))
