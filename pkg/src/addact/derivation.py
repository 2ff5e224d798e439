"""The derivations delta_1 = d/dx + x^n d/dy and delta_2 = d/dy on section spaces.

Matrices act on coordinate columns in the section basis, so a product
``P @ Q`` applies ``Q`` first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotAmple
from .exactlin import Matrix, rank_of_vectors
from .hirzebruch import HDivisor, SectionBasis, is_ample, sections


@dataclass(frozen=True)
class OperatorMatrix:
    basis: SectionBasis
    matrix: Matrix
    label: str  # delta1, delta2, dx or x_n_dy

    def __matmul__(self, other: "OperatorMatrix") -> Matrix:
        return self.matrix @ other.matrix


def _operator(basis: SectionBasis, image, label: str) -> OperatorMatrix:
    """``image(k, m)`` lists (coefficient, k', m') terms of the image of x^k y^m."""
    size = len(basis)
    cols = []
    for k, m in basis.monomials:
        col = [Fraction(0)] * size
        for c, k2, m2 in image(k, m):
            if c == 0:
                continue
            idx = basis.index(k2, m2)
            if idx is None:
                raise ValueError(f"{label} maps x^{k} y^{m} outside the section space")
            col[idx] += c
        cols.append(col)
    return OperatorMatrix(basis, Matrix.from_columns(cols), label)


def split_operators(n: int, a: int, b: int) -> dict[str, OperatorMatrix]:
    """The four operators d/dx, x^n d/dy, delta_1, delta_2 on the sections of aE_inf + bF_0."""
    d = HDivisor(n, a, b)
    if not is_ample(d):
        raise NotAmple(f"{d} is not ample (need a > 0 and b > a n)")
    basis = sections(d)
    dx = _operator(basis, lambda k, m: [(k, k - 1, m)], "dx")
    xdy = _operator(basis, lambda k, m: [(m, k + n, m - 1)], "x_n_dy")
    dy = _operator(basis, lambda k, m: [(m, k, m - 1)], "delta2")
    delta1 = _operator(basis, lambda k, m: [(k, k - 1, m), (m, k + n, m - 1)], "delta1")
    return {"dx": dx, "x_n_dy": xdy, "delta1": delta1, "delta2": dy}


def delta_matrices(n: int, a: int, b: int) -> tuple[OperatorMatrix, OperatorMatrix]:
    ops = split_operators(n, a, b)
    return ops["delta1"], ops["delta2"]


def bch_power_rhs(n: int, a: int, b: int, N: int) -> Matrix:
    """Sum over k = N mod 2 of (dy/2)^((N-k)/2) N!/(k!((N-k)/2)!) sum_r C(k,r) (x dy)^r dx^(k-r)."""
    if n != 1:
        raise ValueError("the power formula is stated for n = 1 only")
    ops = split_operators(n, a, b)
    A = ops["x_n_dy"].matrix
    B = ops["dx"].matrix
    half_dy = ops["delta2"].matrix.scale(Fraction(1, 2))
    size = A.rows
    total = Matrix.zeros(size, size)
    for k in range(N % 2, N + 1, 2):
        j = (N - k) // 2
        inner = Matrix.zeros(size, size)
        for r in range(k + 1):
            inner = inner + (A ** r @ B ** (k - r)).scale(math.comb(k, r))
        coeff = Fraction(math.factorial(N), math.factorial(k) * math.factorial(j))
        total = total + (half_dy ** j @ inner).scale(coeff)
    return total


def bch_power_check(n: int, a: int, b: int, N: int) -> bool:
    if N < 1:
        raise ValueError("N must be positive")
    d1, _ = delta_matrices(n, a, b)
    return d1.matrix ** N == bch_power_rhs(n, a, b, N)


@dataclass
class VanishingReport:
    a: int
    b: int
    delta2_power_vanishes: bool
    boundary_checked: list = field(default_factory=list)  # (l1, l2) pairs
    counterexamples: list = field(default_factory=list)
    top_power_nonzero: bool | None = None  # delta_1^(a+b) != 0, observed only

    @property
    def ok(self) -> bool:
        return self.delta2_power_vanishes and not self.counterexamples


def vanishing_check(a: int, b: int, n: int = 1) -> VanishingReport:
    """delta_2^(a+1) = 0 and delta_1^l1 delta_2^l2 = 0 on l1 + 2 l2 = a + b + 1."""
    if n != 1:
        raise ValueError("the vanishing statements are for n = 1")
    d1, d2 = delta_matrices(1, a, b)
    D1, D2 = d1.matrix, d2.matrix
    report = VanishingReport(a, b, (D2 ** (a + 1)).is_zero())
    if not report.delta2_power_vanishes:
        report.counterexamples.append((0, a + 1))
    for l2 in range(0, a + 1):
        l1 = a + b + 1 - 2 * l2
        if l1 < 0:
            continue
        report.boundary_checked.append((l1, l2))
        if not (D1 ** l1 @ D2 ** l2).is_zero():
            report.counterexamples.append((l1, l2))
    report.top_power_nonzero = not (D1 ** (a + b)).is_zero()
    return report


@dataclass
class SpanReport:
    a: int
    b: int
    l: int
    dim: int
    expected: int
    tail_independent: bool  # the family s = a-l .. a

    @property
    def ok(self) -> bool:
        return self.dim == self.expected and self.tail_independent


def span_family(a: int, b: int, l: int) -> list[Matrix]:
    """delta_1^(a+b-l-2s) delta_2^s for s = 0..a."""
    d1, d2 = delta_matrices(1, a, b)
    return [d1.matrix ** (a + b - l - 2 * s) @ d2.matrix ** s for s in range(a + 1)]


def span_dims(a: int, b: int, l: int) -> SpanReport:
    if not (b >= 2 * a and 0 <= l <= a):
        raise ValueError("need b >= 2a and 0 <= l <= a")
    family = span_family(a, b, l)
    size = family[0].rows * family[0].cols
    dim = rank_of_vectors((m.entries for m in family), size)
    tail = family[a - l:]
    tail_rank = rank_of_vectors((m.entries for m in tail), size)
    return SpanReport(a, b, l, dim, l + 1, tail_rank == len(tail))
