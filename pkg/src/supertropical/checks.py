"""Seeded random property suites, shared by the ``check`` command and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .adjoint import adjoint
from .charpoly import char_poly, satisfies, tangible_char_poly
from .element import BOTTOM, Element, ghost_surpasses
from .matrix import Matrix, det_value
from .oracle import brute_det

__all__ = ["random_scalar", "random_matrix", "SuiteReport", "SUITES", "run_suite"]

INTEGERS = range(-5, 10)


def random_scalar(rng: random.Random, ghost_prob: float = 0.25, bottom_prob: float = 0.1,
                  tangible_only: bool = False) -> Element:
    """A value from ``{-5..9}`` or a third ``k/3`` in the same range; ghost with
    probability ``ghost_prob``; bottom with probability ``bottom_prob``."""
    if rng.random() < bottom_prob:
        return BOTTOM
    if rng.random() < 0.5:
        v = Fraction(rng.choice(INTEGERS))
    else:
        v = Fraction(rng.randint(-15, 27), 3)
    if not tangible_only and rng.random() < ghost_prob:
        return Element.ghost(v)
    return Element(v)


def random_matrix(rng: random.Random, n: int, m: int | None = None, **kw) -> Matrix:
    m = n if m is None else m
    return Matrix([[random_scalar(rng, **kw) for _ in range(m)] for _ in range(n)])


@dataclass
class SuiteReport:
    name: str
    cases: int
    failures: int = 0
    samples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0


# Each case returns None on success, or a short description of the failure.
Case = Callable[[random.Random, int], "str | None"]


def _case_base(rng, n):
    A = random_matrix(rng, n)
    d = det_value(A)
    if d != brute_det(A):
        return f"det {d} != brute force {brute_det(A)} for\n{A}"
    if det_value(A.T) != d:
        return f"det of transpose differs for\n{A}"
    return None


def _case_detmul(rng, n):
    A, B = random_matrix(rng, n), random_matrix(rng, n)
    dab = det_value(A @ B)
    prod = det_value(A) * det_value(B)
    if not ghost_surpasses(dab, prod):
        return f"|AB| = {dab} does not surpass |A||B| = {prod}"
    if dab.is_tangible and dab != prod:
        return f"tangible |AB| = {dab} differs from |A||B| = {prod}"
    return None


def _case_hc(rng, n):
    A = random_matrix(rng, n)
    if not satisfies(A, char_poly(A)):
        return f"A does not satisfy its characteristic polynomial\n{A}"
    if not satisfies(A, tangible_char_poly(A)):
        return f"A does not satisfy its tangible characteristic polynomial\n{A}"
    return None


def _case_adjid(rng, n):
    A = random_matrix(rng, n)
    d = det_value(A)
    adj = adjoint(A)
    P = A @ adj
    if det_value(P) != d ** n:
        return f"|A adj A| = {det_value(P)} but |A|^n = {d ** n}"
    if det_value(adj) != d ** (n - 1):
        return f"|adj A| = {det_value(adj)} but |A|^(n-1) = {d ** (n - 1)}"
    if P @ P != d * P:
        return f"(A adj A)^2 != |A| A adj A for\n{A}"
    return None


def _case_laplace(rng, n):
    A = random_matrix(rng, n)
    d = det_value(A)
    adj = adjoint(A)
    for i in range(n):
        for k in range(n):
            row = BOTTOM
            col = BOTTOM
            for j in range(n):
                row = row + A[i, j] * adj[j, k]
                col = col + adj[i, j] * A[j, k]
            if i == k and (row != d or col != d):
                return f"expansion along row/column {i} gives {row}/{col}, not {d}"
            if i != k and not (row.in_ghost_ideal and col.in_ghost_ideal):
                return f"foreign expansion ({i},{k}) is not ghost: {row}, {col}"
    return None


SUITES: dict[str, tuple[Case, int]] = {
    # name: (case, largest n)
    "base": (_case_base, 7),
    "detmul": (_case_detmul, 5),
    "hc": (_case_hc, 5),
    "adjid": (_case_adjid, 4),
    "laplace": (_case_laplace, 5),
}


def run_suite(name: str, seed: int = 0, cases: int = 500, max_n: int | None = None,
              keep: int = 3) -> SuiteReport:
    """Run ``cases`` random instances with sizes cycling through ``1..max_n``."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    case, default_n = SUITES[name]
    top = default_n if max_n is None else max_n
    rng = random.Random(seed)
    report = SuiteReport(name, cases)
    for t in range(cases):
        msg = case(rng, 1 + t % top)
        if msg is not None:
            report.failures += 1
            if len(report.samples) < keep:
                report.samples.append(msg)
    return report
