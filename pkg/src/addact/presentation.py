"""Relations between two commuting nilpotent operators.

The kernel of K[u, w] -> K[d1, d2] is computed one graded slice at a time.
Slices are taken for a weighted degree with u of weight 1 and w of weight
``w_weight``.  For the Hirzebruch derivations on Sigma_n, x has weight 1 and
y weight n + 1, so delta_1 lowers degree by 1 and delta_2 by n + 1.  Under
the weights (1, n + 1) the kernel is therefore spanned by homogeneous
relations, and a relation such as u^3 - 3uw sits in a single slice.  With
``w_weight=1`` the slices are the ordinary total-degree ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .derivation import OperatorMatrix, delta_matrices
from .errors import NonCommuting
from .exactlin import Echelon, Matrix, kernel_basis, rank_of_vectors
from .hirzebruch import dimension_formula
from .polys import Poly

BiPoly = Poly  # polynomials in (u, w)
NAMES = ("u", "w")


def _matrix(op) -> Matrix:
    return op.matrix if isinstance(op, OperatorMatrix) else op


def monomial(i: int, j: int, c=1) -> BiPoly:
    return Poly.monomial((i, j), c)


def evaluate(p: BiPoly, d1, d2) -> Matrix:
    """Sum of c_ij d1^i d2^j."""
    D1, D2 = _matrix(d1), _matrix(d2)
    if not D1.commutes_with(D2):
        raise NonCommuting(0, 1)
    n = D1.rows
    total = Matrix.zeros(n, n)
    powers1: dict[int, Matrix] = {}
    powers2: dict[int, Matrix] = {}
    for (i, j), c in p.terms.items():
        if i not in powers1:
            powers1[i] = D1 ** i
        if j not in powers2:
            powers2[j] = D2 ** j
        total = total + (powers1[i] @ powers2[j]).scale(c)
    return total


def slice_monomials(degree: int, w_weight: int) -> list[tuple[int, int]]:
    """Exponents (i, j) with i + w_weight*j = degree, u-degree descending."""
    return [(degree - w_weight * j, j) for j in range(degree // w_weight + 1)]


@dataclass(frozen=True)
class KernelSlice:
    degree: int
    monomials: tuple  # exponents spanning the slice
    basis: tuple  # BiPoly relations, RREF against the monomial order

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def count(self) -> int:
        return len(self.monomials)


class _PowerCache:
    def __init__(self, d1: Matrix, d2: Matrix):
        self.d1, self.d2 = d1, d2
        self._cache: dict[tuple[int, int], Matrix] = {}
        self._p1: dict[int, Matrix] = {0: Matrix.identity(d1.rows)}
        self._p2: dict[int, Matrix] = {0: Matrix.identity(d1.rows)}

    def _pow(self, table: dict, base: Matrix, k: int) -> Matrix:
        if k not in table:
            table[k] = base @ self._pow(table, base, k - 1)
        return table[k]

    def __call__(self, i: int, j: int) -> Matrix:
        key = (i, j)
        if key not in self._cache:
            self._cache[key] = self._pow(self._p1, self.d1, i) @ self._pow(self._p2, self.d2, j)
        return self._cache[key]


def _relations_among(exps: Sequence[tuple[int, int]], powers: _PowerCache) -> list[BiPoly]:
    """RREF basis of the linear relations among d1^i d2^j over ``exps``."""
    if not exps:
        return []
    cols = [powers(i, j).entries for i, j in exps]
    ker = kernel_basis(Matrix.from_columns(cols))
    return [Poly(2, {e: c for e, c in zip(exps, v) if c}) for v in ker.basis]


def kernel_slices(d1, d2, max_degree: int, w_weight: int = 2) -> list[KernelSlice]:
    D1, D2 = _matrix(d1), _matrix(d2)
    if not D1.commutes_with(D2):
        raise NonCommuting(0, 1)
    powers = _PowerCache(D1, D2)
    out = []
    for d in range(max_degree + 1):
        exps = slice_monomials(d, w_weight)
        out.append(KernelSlice(d, tuple(exps), tuple(_relations_among(exps, powers))))
    return out


@dataclass
class RelationsReport:
    a: int
    b: int
    generators: list = field(default_factory=list)  # BiPoly
    checks: dict = field(default_factory=dict)
    quotient_dim: int = 0
    expected_dim: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values()) and self.quotient_dim == self.expected_dim

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "generators": [{"poly": g.format(NAMES)} for g in self.generators],
            "checks": dict(self.checks),
            "quotient_dim": self.quotient_dim,
            "expected_dim": self.expected_dim,
            "failures": list(self.failures),
        }


def _vector(p: BiPoly, exps: Sequence[tuple[int, int]]) -> tuple:
    return tuple(p.coefficient(e) for e in exps)


def verify_allrelations(a: int, b: int, cutoff: int | None = None) -> RelationsReport:
    """Check that the named relation families generate the kernel for n = 1, b >= 2a."""
    if not (a >= 1 and b >= 2 * a):
        raise ValueError("need n = 1 and b >= 2a >= 2")
    d1, d2 = delta_matrices(1, a, b)
    D1, D2 = d1.matrix, d2.matrix
    powers = _PowerCache(D1, D2)
    top = a + b + 1 if cutoff is None else cutoff
    report = RelationsReport(a, b, expected_dim=dimension_formula(1, a, b))

    # (i) the pure power of w
    wpow = monomial(0, a + 1)
    report.checks["item1"] = powers(0, a + 1).is_zero()
    if not report.checks["item1"]:
        report.failures.append(f"w^{a + 1} is not a relation")

    # (ii) every monomial above the boundary; two layers suffice since u, w raise degree by 1, 2
    boundary = [(l1, l2) for deg in (a + b + 1, a + b + 2) for l1, l2 in slice_monomials(deg, 2)]
    bad = [e for e in boundary if not powers(*e).is_zero()]
    report.checks["item2"] = not bad
    report.failures.extend(f"u^{i}*w^{j} is not a relation" for i, j in bad)

    # (iii) a - l relations inside each family, with an independent tail
    family_relations: list[BiPoly] = []
    ok3 = True
    for l in range(a + 1):
        fam = [(a + b - l - 2 * s, s) for s in range(a + 1)]
        rels = _relations_among(fam, powers)
        tail = fam[a - l:]
        tail_rank = rank_of_vectors((powers(*e).entries for e in tail), D1.rows * D1.cols)
        if len(rels) != a - l or tail_rank != len(tail):
            ok3 = False
            report.failures.append(f"family l={l}: {len(rels)} relations, tail rank {tail_rank}")
        family_relations.extend(rels)
    report.checks["item3"] = ok3

    gens: list[BiPoly] = [wpow]
    for e in slice_monomials(a + b + 1, 2):
        m = monomial(*e)
        if e[1] <= a and m not in gens:
            gens.append(m)
    for r in family_relations:
        if r not in gens:
            gens.append(r)
    report.generators = gens

    # (iv) saturation: ideal multiples of the generators fill each kernel slice
    slices = kernel_slices(D1, D2, top)
    ok4 = True
    for sl in slices:
        exps = list(sl.monomials)
        e = Echelon(len(exps))
        for g in gens:
            gd = g.weighted_degree((1, 2))
            if gd > sl.degree:
                continue
            for m in slice_monomials(sl.degree - gd, 2):
                e.add(_vector(g * monomial(*m), exps))
        if len(e) != sl.dim or not all(e.contains(_vector(r, exps)) for r in sl.basis):
            ok4 = False
            report.failures.append(f"degree {sl.degree}: generated {len(e)} of {sl.dim} relations")
    report.checks["item4"] = ok4

    report.quotient_dim = sum(sl.count - sl.dim for sl in slices if sl.degree <= a + b)
    return report


def relation_generators(a: int, b: int) -> list[BiPoly]:
    return verify_allrelations(a, b).generators


def quotient_dimension(d1, d2, max_degree: int, w_weight: int = 2) -> int:
    """dim K[u,w]/I assuming every monomial of degree > max_degree is a relation."""
    return sum(sl.count - sl.dim for sl in kernel_slices(d1, d2, max_degree, w_weight))
