"""Finite-dimensional commutative unital algebras given by structure constants."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ElementNotInMaximalIdeal, FormatError, NotLocal
from .exactlin import (
    Echelon,
    Matrix,
    Subspace,
    as_fraction,
    format_rational,
    inverse,
    kernel_basis,
    unit_vector,
)
from .polys import monomials_of_degree


class AlgebraTable:
    """Commutative algebra with basis ``e_0 .. e_{dim-1}``.

    ``structure`` maps ``(i, j)`` to ``{k: c}`` meaning ``e_i e_j = sum c e_k``.
    A pair listed only as ``(i, j)`` is mirrored to ``(j, i)``.
    """

    def __init__(self, basis_labels: Sequence[str], unit_index: int, structure):
        self.basis_labels = tuple(basis_labels)
        self.dim = len(self.basis_labels)
        if not 0 <= unit_index < self.dim:
            raise ValueError(f"unit index {unit_index} out of range")
        self.unit_index = unit_index
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), prod in structure.items():
            row = {k: as_fraction(c) for k, c in dict(prod).items() if as_fraction(c)}
            if row:
                table[(i, j)] = row
        for (i, j) in list(table):
            if (j, i) not in table:
                table[(j, i)] = dict(table[(i, j)])
        self.structure = table
        self._prod = [[tuple(table.get((i, j), {}).items()) for j in range(self.dim)] for i in range(self.dim)]

    def __repr__(self) -> str:
        return f"AlgebraTable(dim={self.dim}, basis={list(self.basis_labels)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraTable):
            return NotImplemented
        return (
            self.basis_labels == other.basis_labels
            and self.unit_index == other.unit_index
            and self.structure == other.structure
        )

    @property
    def unit(self) -> tuple:
        return unit_vector(self.dim, self.unit_index)

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.dim, i)

    def element(self, label: str) -> tuple:
        return self.basis_vector(self.basis_labels.index(label))

    def zero(self) -> tuple:
        return (Fraction(0),) * self.dim

    def product_of_basis(self, i: int, j: int) -> tuple:
        v = [Fraction(0)] * self.dim
        for k, c in self._prod[i][j]:
            v[k] = c
        return tuple(v)

    def mul(self, u: Sequence, v: Sequence, zero=None):
        """Product of two coordinate vectors.

        Coordinates may be any commutative ring elements (Fractions, polynomials,
        symbolic expressions); ``zero`` is the additive identity to start from.
        """
        if zero is None:
            zero = Fraction(0)
        out = [zero] * self.dim
        nz_v = [(j, y) for j, y in enumerate(v) if y]
        for i, x in enumerate(u):
            if not x:
                continue
            row = self._prod[i]
            for j, y in nz_v:
                prod = row[j]
                if prod:
                    xy = x * y
                    for k, c in prod:
                        out[k] = out[k] + c * xy
        return tuple(out)

    def power(self, u: Sequence, k: int, zero=None, one=None):
        one = Fraction(1) if one is None else one
        zero = Fraction(0) if zero is None else zero
        result = tuple(one if i == self.unit_index else zero for i in range(self.dim))
        for _ in range(k):
            result = self.mul(result, u, zero)
        return result

    def multiplication_matrix(self, u: Sequence) -> Matrix:
        """Matrix of ``x -> u x`` in the algebra basis (column j is ``u e_j``)."""
        cols = [self.mul(u, unit_vector(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(cols)

    def to_dict(self) -> dict:
        mult = []
        for (i, j), prod in sorted(self.structure.items()):
            if i > j:
                continue
            for k, c in sorted(prod.items()):
                mult.append([i, j, k, format_rational(c)])
        return {"dim": self.dim, "basis": list(self.basis_labels), "unit": self.unit_index, "mult": mult}

    @classmethod
    def from_dict(cls, doc: dict) -> "AlgebraTable":
        try:
            dim = int(doc["dim"])
            labels = [str(s) for s in doc.get("basis") or [f"e{i}" for i in range(dim)]]
            unit = int(doc["unit"])
            entries = doc["mult"]
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"algebra document: missing or invalid field ({exc})") from exc
        if len(labels) != dim:
            raise FormatError(f"algebra document: {len(labels)} basis labels for dim {dim}")
        if not 0 <= unit < dim:
            raise FormatError(f"algebra document: unit index {unit} out of range")
        structure: dict = {}
        for n, entry in enumerate(entries):
            try:
                i, j, k, c = entry
                i, j, k = int(i), int(j), int(k)
                c = as_fraction(c)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise FormatError(f"algebra document: bad mult entry #{n}: {entry!r}") from exc
            if not all(0 <= t < dim for t in (i, j, k)):
                raise FormatError(f"algebra document: index out of range in mult entry #{n}")
            row = structure.setdefault((i, j), {})
            row[k] = row.get(k, Fraction(0)) + c
        if not any(unit in key for key in structure):
            for i in range(dim):
                structure[(unit, i)] = {i: Fraction(1)}
        return cls(labels, unit, structure)

    @classmethod
    def from_products(cls, labels: Sequence[str], unit_index: int,
                      product: Callable[[int, int], Sequence]) -> "AlgebraTable":
        n = len(labels)
        structure = {}
        for i in range(n):
            for j in range(i, n):
                v = product(i, j)
                row = {k: c for k, c in enumerate(v) if c}
                if row:
                    structure[(i, j)] = row
        return cls(labels, unit_index, structure)


@dataclass(frozen=True)
class TableViolation:
    kind: str  # "commutativity", "unit" or "associativity"
    indices: tuple

    def __str__(self) -> str:
        return f"{self.kind} fails at basis indices {self.indices}"


def check_table(a: AlgebraTable) -> TableViolation | None:
    """First violated axiom, or None when the table is a commutative unital algebra."""
    n = a.dim
    for i in range(n):
        for j in range(i + 1, n):
            if a.product_of_basis(i, j) != a.product_of_basis(j, i):
                return TableViolation("commutativity", (i, j))
    for i in range(n):
        if a.product_of_basis(a.unit_index, i) != unit_vector(n, i):
            return TableViolation("unit", (a.unit_index, i))
    prods = [[a.product_of_basis(i, j) for j in range(n)] for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        left = a.mul(prods[i][j], unit_vector(n, k))
        right = a.mul(unit_vector(n, i), prods[j][k])
        if left != right:
            return TableViolation("associativity", (i, j, k))
    return None


def verify_table(a: AlgebraTable) -> bool:
    return check_table(a) is None


@dataclass(frozen=True)
class LocalView:
    algebra: AlgebraTable
    maximal_ideal: Subspace
    nilpotency_index: int
    filtration: tuple  # m^0 = A, m^1, ..., m^nilpotency_index = 0

    def power(self, k: int) -> Subspace:
        if k >= len(self.filtration):
            return Subspace.zero(self.algebra.dim)
        return self.filtration[k]

    @property
    def embedding_dim(self) -> int:
        """dim m/m^2, the minimal number of generators."""
        return self.power(1).dim - self.power(2).dim

    def adapted_basis(self) -> list[list[tuple]]:
        """Layers ``V_k`` with ``m^k = V_k + m^(k+1)``; entry k-1 holds layer k."""
        layers = []
        for k in range(1, self.nilpotency_index):
            e = Echelon(self.algebra.dim)
            for v in self.power(k + 1).basis:
                e.add(v)
            layer = [v for v in self.power(k).basis if e.add(v)]
            layers.append(layer)
        return layers


def _trace_form(a: AlgebraTable) -> Matrix:
    n = a.dim
    # tr(L_x L_y) = tr(L_{xy}); only the traces of basis multiplications are needed
    traces = []
    for k in range(n):
        t = Fraction(0)
        for i in range(n):
            for k2, c in a._prod[k][i]:
                if k2 == i:
                    t += c
        traces.append(t)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(sum((c * traces[k] for k, c in a._prod[i][j]), Fraction(0)))
        rows.append(row)
    return Matrix(rows, n)


def ideal_product(a: AlgebraTable, s: Subspace, t: Subspace) -> Subspace:
    e = Echelon(a.dim)
    for u in s.basis:
        for v in t.basis:
            e.add(a.mul(u, v))
    return Subspace._from_echelon(e)


def local_view(a: AlgebraTable) -> LocalView:
    """Local structure via the radical of the trace form (characteristic zero)."""
    radical = kernel_basis(_trace_form(a))
    if radical.dim != a.dim - 1:
        raise NotLocal(radical.dim, a.dim)
    filtration = [Subspace.full(a.dim), radical]
    current = radical
    while current.dim:
        nxt = ideal_product(a, radical, current)
        if nxt.dim == current.dim:
            raise NotLocal(radical.dim, a.dim)
        filtration.append(nxt)
        current = nxt
    return LocalView(a, radical, len(filtration) - 1, tuple(filtration))


def hilbert_samuel(v: LocalView) -> tuple[int, ...]:
    return tuple(v.power(i).dim - v.power(i + 1).dim for i in range(v.nilpotency_index))


def socle(v: LocalView) -> Subspace:
    a = v.algebra
    rows = []
    for m in v.maximal_ideal.basis:
        rows.extend(a.multiplication_matrix(m))
    if not rows:
        return Subspace.full(a.dim)
    return kernel_basis(Matrix(rows, a.dim))


def is_gorenstein(v: LocalView) -> bool:
    return socle(v).dim == 1


def exp_element(v: LocalView, x: Sequence, zero=None, one=None):
    """exp(x) = sum x^k / k!, truncated at the nilpotency index.

    Exact coordinates are checked for membership in the maximal ideal;
    symbolic coordinates (e.g. polynomials) are trusted to lie in it.
    """
    a = v.algebra
    if all(isinstance(c, (int, Fraction)) for c in x):
        if not v.maximal_ideal.contains(x):
            raise ElementNotInMaximalIdeal("exp is only defined on the maximal ideal")
    zero = Fraction(0) if zero is None else zero
    one = Fraction(1) if one is None else one
    term = tuple(one if i == a.unit_index else zero for i in range(a.dim))
    total = term
    for k in range(1, v.nilpotency_index):
        term = a.mul(term, x, zero)
        inv = Fraction(1, math.factorial(k))
        total = tuple(t + c * inv for t, c in zip(total, term))
    return total


def log_element(v: LocalView, y: Sequence) -> tuple:
    """Inverse of :func:`exp_element` on ``1 + m``."""
    a = v.algebra
    x = tuple(c - (1 if i == a.unit_index else 0) for i, c in enumerate(as_fraction(c) for c in y))
    if not v.maximal_ideal.contains(x):
        raise ElementNotInMaximalIdeal("log is only defined on 1 + m")
    total = a.zero()
    term = a.unit
    for k in range(1, v.nilpotency_index):
        term = a.mul(term, x)
        c = Fraction((-1) ** (k + 1), k)
        total = tuple(t + c * s for t, s in zip(total, term))
    return total


@dataclass
class MonomialSpan:
    """Commutative monomials in some generators, reduced against each other.

    ``chosen`` lists (exponent, element) pairs forming a basis of the generated
    subalgebra in first-seen order: degree by degree, descending lexicographic
    exponents within a degree.  ``elements`` records every monomial examined,
    including the dependent ones, up to ``stop_degree`` where nothing new
    appeared.
    """

    ngens: int
    chosen: list
    elements: dict
    stop_degree: int
    _echelon: Echelon = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return len(self.chosen)

    def exponents(self) -> list[tuple[int, ...]]:
        return [e for e, _ in self.chosen]


def monomial_span(gens: Sequence, mul: Callable, one, ambient_dim: int,
                  flatten: Callable = lambda x: x, max_degree: int | None = None) -> MonomialSpan:
    """Span closure of commuting generators, tracking monomial labels."""
    m = len(gens)
    e = Echelon(ambient_dim)
    zero_exp = (0,) * m
    elements = {zero_exp: one}
    chosen = []
    if e.add(flatten(one)):
        chosen.append((zero_exp, one))
    degree = 0
    previous = {zero_exp: one}
    while m:
        degree += 1
        if max_degree is not None and degree > max_degree:
            break
        current = {}
        grew = False
        for exp in monomials_of_degree(m, degree):
            i = next(k for k, x in enumerate(exp) if x)
            lower = list(exp)
            lower[i] -= 1
            elt = mul(gens[i], previous[tuple(lower)])
            current[exp] = elt
            elements[exp] = elt
            if e.add(flatten(elt)):
                chosen.append((exp, elt))
                grew = True
        previous = current
        if not grew:
            break
    return MonomialSpan(m, chosen, elements, degree, e)


def subalgebra_generated(a: AlgebraTable | None, gens: Sequence) -> Subspace:
    """Smallest unital subalgebra containing ``gens``.

    With an :class:`AlgebraTable`, elements are coordinate vectors.  With
    ``a=None`` the generators are square matrices and the result lives in the
    flattened matrix space.  Products need not commute: the span of all words
    is built by left multiplication until the dimension stabilises.
    """
    if a is not None:
        mul = a.mul
        one = a.unit
        flatten = tuple
        ambient = a.dim
    else:
        if not gens:
            raise ValueError("matrix generators required when no algebra is given")
        n = gens[0].rows
        mul = lambda x, y: x @ y
        one = Matrix.identity(n)
        flatten = lambda x: x.entries
        ambient = n * n
    e = Echelon(ambient)
    e.add(flatten(one))
    frontier = [one]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mul(g, x)
                if e.add(flatten(y)):
                    new.append(y)
        frontier = new
    return Subspace._from_echelon(e)


def change_basis(a: AlgebraTable, vectors: Sequence[Sequence], labels: Sequence[str]) -> AlgebraTable:
    """The same algebra written in a new basis (which must contain the unit)."""
    n = a.dim
    if len(vectors) != n:
        raise ValueError("new basis must have dim(A) elements")
    vectors = [tuple(as_fraction(c) for c in v) for v in vectors]
    try:
        unit_index = vectors.index(a.unit)
    except ValueError:
        raise ValueError("new basis must contain the unit") from None
    basis_matrix = Matrix.from_columns(vectors)
    to_new = inverse(basis_matrix)

    def product(i, j):
        return to_new.apply(a.mul(vectors[i], vectors[j]))

    return AlgebraTable.from_products(labels, unit_index, product)


def monomial_label(exponent: Sequence[int], names: Sequence[str]) -> str:
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, exponent) if k]
    return "*".join(parts) if parts else "1"


def presented_by(a: AlgebraTable, gens: Sequence[Sequence], names: Sequence[str]) -> tuple[AlgebraTable, MonomialSpan]:
    """Rewrite ``a`` in the basis of monomials in ``gens`` (which must generate)."""
    ms = monomial_span(gens, a.mul, a.unit, a.dim)
    if ms.dim != a.dim:
        raise ValueError("elements do not generate the algebra")
    labels = [monomial_label(e, names) for e, _ in ms.chosen]
    return change_basis(a, [v for _, v in ms.chosen], labels), ms


def element_to_str(a: AlgebraTable, v: Sequence) -> str:
    parts = []
    for lbl, c in zip(a.basis_labels, v):
        c = as_fraction(c)
        if not c:
            continue
        mag = abs(c)
        body = lbl if mag == 1 and lbl != "1" else (format_rational(mag) if lbl == "1" else f"{format_rational(mag)}*{lbl}")
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out
