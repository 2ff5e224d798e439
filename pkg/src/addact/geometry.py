"""Fixed-degree implicitization of orbit parametrizations and Jacobian sampling."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import PointNotOnVariety
from .exactlin import Matrix, as_fraction, kernel_basis, rank
from .monomial import quotient_from_generators
from .polys import Poly, monomials_of_degree
from .spair import ParametrizedOrbit, monomial_spair, parametrize_orbit


def form_monomials(num_coords: int, degree: int) -> list[tuple[int, ...]]:
    """Coefficient order for forms: ascending lexicographic exponent.

    Pivots of the RREF then fall on monomials in the later coordinates, so
    a relation like z1^2 - 2 z0 z3 comes out normalized on z1^2.
    """
    return sorted(monomials_of_degree(num_coords, degree))


@dataclass(frozen=True)
class FormSpace:
    num_coords: int
    degree: int
    monomials: tuple
    basis: tuple  # Poly forms in num_coords variables

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vector(self, form: Poly) -> tuple:
        return tuple(form.coefficient(m) for m in self.monomials)

    def contains(self, form: Poly) -> bool:
        from .exactlin import Subspace
        s = Subspace(len(self.monomials), [self.vector(f) for f in self.basis])
        return s.contains(self.vector(form))

    def format(self, names: Sequence[str] | None = None) -> list[str]:
        names = names or [f"z{i}" for i in range(self.num_coords)]
        return [f.format(names) for f in self.basis]


def _coords(orbit) -> tuple:
    return orbit.coords if isinstance(orbit, ParametrizedOrbit) else tuple(orbit)


def pullback(form: Poly, orbit) -> Poly:
    return form.substitute(list(_coords(orbit)))


def implicitize(orbit, degree: int) -> FormSpace:
    """All degree-``degree`` forms vanishing on the parametrized orbit."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    coords = _coords(orbit)
    nc = len(coords)
    monos = form_monomials(nc, degree)
    images = [Poly.monomial(m).substitute(list(coords)) for m in monos]
    param_monos = sorted({e for p in images for e in p.terms})
    if not param_monos:
        ker_vectors = [tuple(Fraction(int(i == j)) for j in range(len(monos))) for i in range(len(monos))]
    else:
        cols = [tuple(p.coefficient(e) for e in param_monos) for p in images]
        ker_vectors = kernel_basis(Matrix.from_columns(cols, len(param_monos))).basis
    basis = tuple(Poly(nc, {m: c for m, c in zip(monos, v) if c}) for v in ker_vectors)
    return FormSpace(nc, degree, tuple(monos), basis)


def coordinate_multiples(space: FormSpace) -> list[Poly]:
    """z_i * f for every basis form f and coordinate z_i."""
    return [f * Poly.variable(space.num_coords, i) for f in space.basis for i in range(space.num_coords)]


def jacobian_rank_at(forms: FormSpace, point: Sequence) -> int:
    point = [as_fraction(x) for x in point]
    if len(point) != forms.num_coords:
        raise ValueError(f"point has {len(point)} coordinates, expected {forms.num_coords}")
    if all(x == 0 for x in point):
        raise ValueError("the zero vector is not a projective point")
    for f in forms.basis:
        if f.evaluate(point) != 0:
            raise PointNotOnVariety(f"form {f.format()} is nonzero at the point")
    if not forms.basis:
        return 0
    jac = Matrix([[as_fraction(f.derivative(i).evaluate(point)) for i in range(forms.num_coords)]
                  for f in forms.basis], forms.num_coords)
    return rank(jac)


# z3 = 1 and z4 in this list, the other coordinates zero
SINGULAR_LINE_SAMPLES = (0, 1, 2, 3, 5)


@dataclass
class NonNormalReport:
    quadric_forms: list  # formatted basis of the degree-2 space
    quadric_dim: int
    line_ranks: list = field(default_factory=list)  # (point, rank)
    orbit_ranks: list = field(default_factory=list)
    pullbacks_vanish: bool = True

    @property
    def singular_samples(self) -> int:
        return sum(1 for _, r in self.line_ranks if r <= 1)

    @property
    def smooth_samples(self) -> int:
        return sum(1 for _, r in self.orbit_ranks if r == 2)

    @property
    def ok(self) -> bool:
        return (self.quadric_dim == 2 and self.pullbacks_vanish
                and self.singular_samples == len(self.line_ranks) >= 5
                and self.smooth_samples == len(self.orbit_ranks) >= 5)

    def to_dict(self) -> dict:
        fmt = lambda p: [str(x) for x in p]  # noqa: E731
        return {
            "quadric_dim": self.quadric_dim,
            "quadric_forms": self.quadric_forms,
            "pullbacks_vanish": self.pullbacks_vanish,
            "line_samples": [{"point": fmt(p), "jacobian_rank": r} for p, r in self.line_ranks],
            "orbit_samples": [{"point": fmt(p), "jacobian_rank": r} for p, r in self.orbit_ranks],
            "singular_samples": self.singular_samples,
            "smooth_samples": self.smooth_samples,
            "evidence": "Jacobian rank drops along the line z0 = z1 = z2 = 0 inside a surface, "
                        "a singular locus of codimension 1",
            "ok": self.ok,
        }


def example_orbit() -> ParametrizedOrbit:
    """Orbit of 1 for K[t,s]/(t^3, ts, s^3) with U = span{t, s}."""
    q = quotient_from_generators(2, [(3, 0), (1, 1), (0, 3)], ("t", "s"))
    return parametrize_orbit(monomial_spair(q))


def verify_nonnormal_example(degree: int = 2, seed: int = 0, samples: int = 5) -> NonNormalReport:
    orbit = example_orbit()
    space = implicitize(orbit, degree)
    report = NonNormalReport(space.format(), space.dim)
    report.pullbacks_vanish = all(pullback(f, orbit).is_zero() for f in space.basis)
    for z4 in SINGULAR_LINE_SAMPLES:
        p = tuple(Fraction(x) for x in (0, 0, 0, 1, z4))
        report.line_ranks.append((p, jacobian_rank_at(space, p)))
    rng = random.Random(seed)
    for _ in range(samples):
        params = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(orbit.num_params)]
        p = orbit.point(params)
        report.orbit_ranks.append((p, jacobian_rank_at(space, p)))
    return report
