"""S-pairs (local algebra, generating subspace of the maximal ideal).

Both directions of the correspondence with induced additive actions live
here: an S-pair gives multiplication matrices and the orbit of 1 under
exp(U); commuting nilpotent operators give back an S-pair through the
algebra they generate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    AlgebraTable,
    LocalView,
    exp_element,
    local_view,
    monomial_label,
    monomial_span,
    subalgebra_generated,
)
from .errors import FormatError, GenerationDefect, NonCommuting, NotMonomialSPair, NotNilpotent
from .exactlin import Coordinates, Matrix, as_fraction, format_rational, rank_of_vectors, unit_vector
from .monomial import MonomialQuotient, to_algebra_table
from .polys import Poly


@dataclass(frozen=True)
class SPair:
    algebra: LocalView
    u_basis: tuple
    quotient: MonomialQuotient | None = None  # set when built from a monomial algebra with U = variables

    @property
    def table(self) -> AlgebraTable:
        return self.algebra.algebra

    @property
    def dim(self) -> int:
        return self.table.dim

    @classmethod
    def from_table(cls, a: AlgebraTable, u_basis: Sequence[Sequence]) -> "SPair":
        return cls(local_view(a), tuple(tuple(as_fraction(c) for c in u) for u in u_basis))

    def to_dict(self) -> dict:
        if self.quotient is not None:
            doc = self.quotient.to_dict()
        else:
            doc = self.table.to_dict()
        doc["U"] = [[format_rational(c) for c in u] for u in self.u_basis]
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "SPair":
        if "vars" in doc:
            q = MonomialQuotient.from_dict(doc)
            if "U" not in doc:
                return monomial_spair(q)
            a = to_algebra_table(q)
        else:
            q = None
            a = AlgebraTable.from_dict(doc)
        try:
            u = [tuple(as_fraction(c) for c in row) for row in doc["U"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"S-pair document: missing or invalid U ({exc})") from exc
        for row in u:
            if len(row) != a.dim:
                raise FormatError(f"S-pair document: U vector of length {len(row)} for dim {a.dim}")
        view = local_view(a)
        if q is not None and u == [unit_vector(a.dim, q.variable_index(i)) for i in range(q.num_vars)]:
            return cls(view, tuple(u), q)
        return cls(view, tuple(u))


def monomial_spair(q: MonomialQuotient) -> SPair:
    """The S-pair (K[x]/I, span of the variables)."""
    a = to_algebra_table(q)
    u = tuple(unit_vector(a.dim, q.variable_index(i)) for i in range(q.num_vars))
    return SPair(local_view(a), u, q)


@dataclass(frozen=True)
class Validation:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate(p: SPair) -> Validation:
    """Check U is an independent family inside m that generates A."""
    a = p.table
    for i, u in enumerate(p.u_basis):
        if len(u) != a.dim:
            return Validation(False, f"membership: U vector {i} has the wrong length")
        if not p.algebra.maximal_ideal.contains(u):
            return Validation(False, f"membership: U vector {i} is not in the maximal ideal")
    if rank_of_vectors(p.u_basis, a.dim) != len(p.u_basis):
        return Validation(False, "independence: U vectors are linearly dependent")
    if subalgebra_generated(a, p.u_basis).dim != a.dim:
        return Validation(False, "generation: U does not generate the algebra")
    return Validation(True)


def ht_matrices(p: SPair) -> list[Matrix]:
    """Multiplication-by-u_i matrices in the algebra basis."""
    return [p.table.multiplication_matrix(u) for u in p.u_basis]


@dataclass(frozen=True)
class ParametrizedOrbit:
    num_params: int
    coords: tuple  # one Poly per algebra basis element
    labels: tuple = ()
    param_names: tuple = ()

    def __post_init__(self):
        if not self.param_names:
            names = ("a", "b") if self.num_params == 2 else tuple(f"a{i + 1}" for i in range(self.num_params))
            object.__setattr__(self, "param_names", names)

    @property
    def num_coords(self) -> int:
        return len(self.coords)

    def point(self, params: Sequence) -> tuple:
        params = [as_fraction(x) for x in params]
        return tuple(as_fraction(c.evaluate(params)) for c in self.coords)

    def format(self) -> list[str]:
        return [c.format(self.param_names) for c in self.coords]


def parametrize_orbit(p: SPair) -> ParametrizedOrbit:
    """Coordinates of exp(a_1 u_1 + ... + a_m u_m) in the algebra basis."""
    m = len(p.u_basis)
    a = p.table
    zero = Poly.zero(m)
    x = [zero] * a.dim
    for i, u in enumerate(p.u_basis):
        var = Poly.variable(m, i)
        x = [xi + var * c if c else xi for xi, c in zip(x, u)]
    coords = exp_element(p.algebra, x, zero=zero, one=Poly.constant(m, 1))
    return ParametrizedOrbit(m, tuple(coords), a.basis_labels)


def torus_equivariance_check(p: SPair) -> bool:
    """Check P_e(t a) = t^e P_e(a) for every standard monomial x^e.

    Works in the polynomial ring in t_1..t_n, a_1..a_n; each side is expanded
    and compared coefficient by coefficient.
    """
    q = p.quotient
    if q is None:
        raise NotMonomialSPair("S-pair does not come from a monomial quotient")
    n = q.num_vars
    variables = tuple(unit_vector(p.dim, q.variable_index(i)) for i in range(n))
    if p.u_basis != variables:
        raise NotMonomialSPair("U is not spanned by the variables in order")
    orbit = parametrize_orbit(p)
    ring = 2 * n  # t_1..t_n then a_1..a_n
    t = [Poly.variable(ring, i) for i in range(n)]
    alpha = [Poly.variable(ring, n + i) for i in range(n)]
    scaled = [ti * ai for ti, ai in zip(t, alpha)]
    for e, coord in zip(q.standard_monomials, orbit.coords):
        lhs = coord.substitute(scaled)
        weight = Poly.constant(ring, 1)
        for ti, k in zip(t, e):
            weight = weight * ti ** k
        rhs = weight * coord.substitute(alpha)
        if lhs != rhs:
            return False
    return True


def spair_from_operators(ops: Sequence[Matrix], names: Sequence[str] | None = None) -> SPair:
    """S-pair of the unital algebra generated by commuting nilpotent operators.

    The basis of the generated algebra is taken in first-seen order: the
    identity, the operators, then monomials degree by degree.
    """
    ops = list(ops)
    if not ops:
        raise GenerationDefect("at least one operator is required")
    n = ops[0].rows
    for i, a in enumerate(ops):
        if a.shape != (n, n):
            raise ValueError("operators must be square matrices of a common size")
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            if not ops[i].commutes_with(ops[j]):
                raise NonCommuting(i, j)
    for i, a in enumerate(ops):
        if not a.is_nilpotent():
            raise NotNilpotent(f"operator {i} is not nilpotent")
    names = list(names) if names else [f"T{i + 1}" for i in range(len(ops))]
    ms = monomial_span(ops, lambda x, y: x @ y, Matrix.identity(n), n * n, flatten=lambda x: x.entries)
    exps = ms.exponents()
    for i in range(len(ops)):
        e = tuple(1 if j == i else 0 for j in range(len(ops)))
        if e not in exps:
            raise GenerationDefect(f"operator {i} lies in the span of the previous ones")
    basis = [m for _, m in ms.chosen]
    coords = Coordinates([m.entries for m in basis], n * n)
    index = {e: k for k, e in enumerate(exps)}

    def product(i, j):
        s = tuple(x + y for x, y in zip(exps[i], exps[j]))
        elt = ms.elements.get(s)
        if elt is None:
            elt = basis[i] @ basis[j]
        return coords.of(elt.entries)

    labels = [monomial_label(e, names) for e in exps]
    table = AlgebraTable.from_products(labels, index[(0,) * len(ops)], product)
    view = local_view(table)
    u = tuple(unit_vector(table.dim, index[tuple(1 if j == i else 0 for j in range(len(ops)))])
              for i in range(len(ops)))
    return SPair(view, u)
