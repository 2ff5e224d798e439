"""Isomorphism certificates between local algebras and a monomiality test
for 2-generated local algebras.

The search looks for a morphism psi from a monomial candidate
B = K[z, w]/J into A: images p, q in the maximal ideal of A that kill
every minimal generator of J and are independent modulo m^2.  Such a psi
is surjective onto a 2-generated A and hence bijective when the
dimensions agree.  Unknowns are the coordinates of p and q in a basis
adapted to the m-adic filtration.

Infeasibility is decided with a Groebner basis over Q (sympy).  A reduced
basis equal to {1} means the system has no solution over any extension
field, so such a refutation is sound over an algebraically closed field.
When the system is consistent but no rational point turns up, the
verdict is "undecided" rather than a claim either way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .algebra import AlgebraTable, LocalView, element_to_str, hilbert_samuel, local_view, monomial_span, socle
from .errors import BoundExceeded, NotTwoGenerated
from .exactlin import (Coordinates, Echelon, Matrix, as_fraction, format_rational, inverse,
                       rank_of_vectors, span)
from .monomial import MonomialQuotient, enumerate_quotients_2v, max_dim_bound, to_algebra_table
from .polys import Poly

# trial values for a free unknown, zero first so certificates are reproducible
TRIAL_VALUES = (0, 1, -1, 2, -2, 3, -3)


# ---------------------------------------------------------------- fingerprints

@dataclass(frozen=True)
class SquareZeroType:
    """Squaring map m/m^2 -> m^2/m^3 of a 2-generated algebra.

    ``rank`` is the dimension of the span of the coordinate quadratic forms
    and ``directions`` the number of projective lines v with v^2 in m^3 over
    the algebraic closure (None when there are infinitely many).
    """

    rank: int
    directions: int | None

    def to_dict(self) -> dict:
        return {"rank": self.rank, "directions": "infinite" if self.directions is None else self.directions}


@dataclass(frozen=True)
class Fingerprint:
    hilbert_samuel: tuple
    socle_dim: int
    nilpotency_index: int
    sq_zero_type: SquareZeroType | None

    def differences(self, other: "Fingerprint") -> list[str]:
        out = []
        for name in ("hilbert_samuel", "socle_dim", "nilpotency_index", "sq_zero_type"):
            if getattr(self, name) != getattr(other, name):
                out.append(name)
        return out

    def to_dict(self) -> dict:
        return {
            "hilbert_samuel": list(self.hilbert_samuel),
            "socle_dim": self.socle_dim,
            "nilpotency_index": self.nilpotency_index,
            "sq_zero_type": None if self.sq_zero_type is None else self.sq_zero_type.to_dict(),
        }


class _Adapted:
    """Coordinates in the basis 1, V_1, V_2, ... adapted to the filtration."""

    def __init__(self, v: LocalView):
        a = v.algebra
        self.view = v
        self.layers = v.adapted_basis()
        self.vectors = [a.unit] + [x for layer in self.layers for x in layer]
        coords = Coordinates(self.vectors, a.dim)
        # column k: adapted coordinates of the standard basis vector e_k
        self.columns = [coords.of(tuple(Fraction(int(i == k)) for i in range(a.dim))) for k in range(a.dim)]
        self.offsets = [1]
        for layer in self.layers:
            self.offsets.append(self.offsets[-1] + len(layer))

    def of(self, x: Sequence, zero) -> list:
        """Adapted coordinates of ``x``; entries may be polynomials."""
        out = [zero] * len(self.vectors)
        for k, xk in enumerate(x):
            if not xk:
                continue
            for i, c in enumerate(self.columns[k]):
                if c:
                    out[i] = out[i] + c * xk
        return out

    def layer_slice(self, k: int) -> slice:
        """Positions of layer V_k (k >= 1) in adapted coordinates."""
        return slice(self.offsets[k - 1], self.offsets[k])


def _binary_quadratic_directions(forms: list[tuple]) -> SquareZeroType:
    r = rank_of_vectors(forms, 3)
    if r == 0:
        return SquareZeroType(0, None)
    if r == 3:
        return SquareZeroType(3, 0)
    basis = span(forms, 3).basis
    if r == 1:
        a0, a1, a2 = basis[0]
        return SquareZeroType(1, 1 if a1 * a1 - 4 * a0 * a2 == 0 else 2)
    (a0, a1, a2), (b0, b1, b2) = basis
    sylvester = [[a0, a1, a2, 0], [0, a0, a1, a2], [b0, b1, b2, 0], [0, b0, b1, b2]]
    singular = rank_of_vectors(sylvester, 4) < 4
    return SquareZeroType(2, 1 if singular else 0)


def square_zero_type(v: LocalView) -> SquareZeroType | None:
    if v.embedding_dim != 2 or v.nilpotency_index < 3:
        return None
    a = v.algebra
    ad = _Adapted(v)
    e1, e2 = ad.layers[0]
    sl = ad.layer_slice(2)
    zero = Fraction(0)
    sq = [ad.of(p, zero)[sl] for p in (a.mul(e1, e1), a.mul(e1, e2), a.mul(e2, e2))]
    # (x e1 + y e2)^2 = x^2 e1^2 + 2xy e1e2 + y^2 e2^2, one binary form per coordinate of m^2/m^3
    forms = [(sq[0][i], 2 * sq[1][i], sq[2][i]) for i in range(len(sq[0]))]
    return _binary_quadratic_directions(forms)


def fingerprint(v: LocalView) -> Fingerprint:
    return Fingerprint(hilbert_samuel(v), socle(v).dim, v.nilpotency_index, square_zero_type(v))


# ---------------------------------------------------------------- certificates

@dataclass(frozen=True)
class IsoCertificate:
    """Algebra map source -> target given by images of source generators."""

    source: AlgebraTable
    target: AlgebraTable
    generators: tuple  # source vectors
    images: tuple  # target vectors
    source_u: tuple | None = None
    target_u: tuple | None = None

    @property
    def generator_images(self) -> dict[str, tuple]:
        return {element_to_str(self.source, g): h for g, h in zip(self.generators, self.images)}

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "generator_images": [
                {"source": element_to_str(self.source, g),
                 "image": element_to_str(self.target, h),
                 "coordinates": [format_rational(c) for c in h]}
                for g, h in zip(self.generators, self.images)
            ],
        }


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(c: IsoCertificate) -> CertificateCheck:
    """Independent check that the generator assignment extends to an isomorphism.

    Every monomial in the source generators is reduced to the chosen monomial
    basis of the source; the same linear relation must hold for the images.
    Monomials of degree at least the larger nilpotency index vanish on both
    sides, so checking below that degree covers every relation.
    """
    S, T = c.source, c.target
    if S.dim != T.dim:
        return CertificateCheck(False, f"dimension mismatch {S.dim} vs {T.dim}")
    if len(c.generators) != len(c.images):
        return CertificateCheck(False, "generator and image counts differ")
    vs, vt = local_view(S), local_view(T)
    for g in c.generators:
        if not vs.maximal_ideal.contains(g):
            return CertificateCheck(False, f"source generator {element_to_str(S, g)} is not in the maximal ideal")
    for h in c.images:
        if not vt.maximal_ideal.contains(h):
            return CertificateCheck(False, f"image {element_to_str(T, h)} is not in the maximal ideal")
    k = len(c.generators)
    ms = monomial_span(list(c.generators), S.mul, S.unit, S.dim)
    if ms.dim != S.dim:
        return CertificateCheck(False, f"source generators span only {ms.dim} of {S.dim} dimensions")
    chosen = ms.exponents()
    coords = Coordinates([e for _, e in ms.chosen], S.dim)
    cache_s: dict[tuple, tuple] = {(0,) * k: S.unit}
    cache_t: dict[tuple, tuple] = {(0,) * k: T.unit}
    top = max(vs.nilpotency_index, vt.nilpotency_index)
    for d in range(1, top):
        for m in _exponents(k, d):
            i = next(j for j, x in enumerate(m) if x)
            prev = tuple(x - (j == i) for j, x in enumerate(m))
            cache_s[m] = S.mul(cache_s[prev], c.generators[i])
            cache_t[m] = T.mul(cache_t[prev], c.images[i])
    images_of_chosen = [cache_t[e] for e in chosen]
    for m, sv in cache_s.items():
        if _apply(coords.of(sv), images_of_chosen, T.dim) != cache_t[m]:
            names = [element_to_str(S, g) for g in c.generators]
            return CertificateCheck(False, f"relation at {_mono_str(m, names)} is not preserved")
    if rank_of_vectors(images_of_chosen, T.dim) != T.dim:
        return CertificateCheck(False, "induced linear map is not bijective")
    if c.source_u is not None and c.target_u is not None:
        mapped = [_apply(coords.of(u), images_of_chosen, T.dim) for u in c.source_u]
        if span(mapped, T.dim) != span(c.target_u, T.dim):
            return CertificateCheck(False, "U is not mapped onto U")
    return CertificateCheck(True)


def _exponents(k: int, d: int):
    for combo in itertools.combinations_with_replacement(range(k), d):
        e = [0] * k
        for i in combo:
            e[i] += 1
        yield tuple(e)


def _mono_str(m: tuple, names: Sequence[str]) -> str:
    parts = []
    for name, x in zip(names, m):
        if x:
            base = name if name.isalnum() else f"({name})"
            parts.append(base if x == 1 else f"{base}^{x}")
    return "*".join(parts) or "1"


def _apply(coeffs: Sequence, vectors: Sequence[Sequence], dim: int) -> tuple:
    return tuple(sum((x * y[r] for x, y in zip(coeffs, vectors)), Fraction(0)) for r in range(dim))


def minimal_generators(v: LocalView) -> list[tuple]:
    """Elements of m independent modulo m^2, preferring basis vectors minus their residue."""
    a = v.algebra
    coords = Coordinates([a.unit] + list(v.maximal_ideal.basis), a.dim)
    e = Echelon(a.dim)
    for x in v.power(2).basis:
        e.add(x)
    out = []
    for i in range(a.dim):
        b = a.basis_vector(i)
        residue = coords.of(b)[0]
        x = tuple(c - residue * u for c, u in zip(b, a.unit))
        if any(x) and e.add(x):
            out.append(x)
    return out


# ---------------------------------------------------------------- search

@dataclass(frozen=True)
class Refutation:
    candidate: str
    reason: str
    extension_independent: bool

    def to_dict(self) -> dict:
        return {"candidate": self.candidate, "reason": self.reason,
                "extension_independent": self.extension_independent}


@dataclass
class Verdict:
    verdict: str  # monomial, non_monomial or undecided
    certificate: IsoCertificate | None = None
    candidate: MonomialQuotient | None = None
    refutations: list = field(default_factory=list)
    undecided: list = field(default_factory=list)  # candidate strings

    def to_dict(self) -> dict:
        doc: dict = {"verdict": self.verdict}
        if self.certificate is not None:
            doc["candidate"] = str(self.candidate)
            doc["certificate"] = self.certificate.to_dict()
        doc["refutations"] = [r.to_dict() for r in self.refutations]
        if self.undecided:
            doc["undecided_candidates"] = list(self.undecided)
        return doc


class _System:
    """Polynomial equations for psi: K[z,w]/J -> A in adapted coordinates."""

    def __init__(self, v: LocalView, relations: Sequence[tuple[int, int]], leading_only: bool):
        a = v.algebra
        self.ad = ad = _Adapted(v)
        m = len(ad.vectors) - 1
        self.m = m
        # unknowns: p_1..p_m, q_1..q_m (adapted coordinates in m), then T for the inverse determinant
        self.nvars = 2 * m + 1
        nv = self.nvars
        zero = Poly.zero(nv)
        active = range(len(ad.layers[0])) if leading_only else range(m)

        def element(offset: int) -> list:
            x = [zero] * a.dim
            for k in active:
                var = Poly.variable(nv, offset + k)
                x = [xi + var * c if c else xi for xi, c in zip(x, ad.vectors[k + 1])]
            return x

        p, q = element(0), element(m)
        one = Poly.constant(nv, 1)
        eqs: list[Poly] = []
        for i, j in relations:
            img = a.mul(a.power(p, i, zero, one), a.power(q, j, zero, one), zero)
            coords = ad.of(img, zero)
            if leading_only:
                # component in m^d / m^(d+1) only
                d = i + j
                coords = coords[ad.layer_slice(d)] if d <= len(ad.layers) else []
            eqs.extend(c for c in coords if c)
        # p, q independent modulo m^2: T * det = 1 on the leading layer
        det = Poly.variable(nv, 0) * Poly.variable(nv, m + 1) - Poly.variable(nv, 1) * Poly.variable(nv, m)
        eqs.append(det * Poly.variable(nv, 2 * m) - 1)
        self.equations = eqs
        self.unknowns = [k for k in active] + [m + k for k in active]
        self.symbols = sympy.symbols(f"v0:{nv}")

    def to_sympy(self, eqs: Sequence[Poly]) -> list:
        out = []
        for e in eqs:
            terms = {exp: sympy.Rational(c.numerator, c.denominator) for exp, c in e.terms.items()}
            out.append(sympy.Poly.from_dict(terms, *self.symbols, domain=sympy.QQ))
        return out

    def vector(self, values: dict[int, Fraction], offset: int) -> tuple:
        a = self.ad.view.algebra
        x = [Fraction(0)] * a.dim
        for k in range(self.m):
            c = values.get(offset + k, Fraction(0))
            if c:
                x = [xi + c * b for xi, b in zip(x, self.ad.vectors[k + 1])]
        return tuple(x)


def _inconsistent(polys: list, symbols, order: str = "grevlex") -> bool:
    g = sympy.groebner(polys, *symbols, order=order)
    return any(p.is_ground and not p.is_zero for p in g.polys)


def _rational_roots(polys: list, symbols, var: int) -> list[Fraction] | None:
    """Rational roots of the eliminant in ``var``; None if the projection is infinite."""
    order = [s for i, s in enumerate(symbols) if i != var] + [symbols[var]]
    g = sympy.groebner([p.as_expr() for p in polys], *order, order="lex")
    target = symbols[var]
    for p in g.exprs:
        if p.free_symbols <= {target} and p.free_symbols:
            roots = []
            for fac, _ in sympy.Poly(p, target).factor_list()[1]:
                if fac.degree() == 1:
                    c1, c0 = fac.all_coeffs()
                    r = -c0 / c1
                    roots.append(Fraction(int(r.p), int(r.q)))
            return sorted(roots, key=lambda r: (abs(r), -r))
    return None


def _solve_rational(system: _System) -> dict[int, Fraction] | None | str:
    """A rational point, "refuted" when none exists over any field, or None when undecided."""
    syms = system.symbols
    current = system.to_sympy(system.equations)
    if _inconsistent(current, syms):
        return "refuted"
    values: dict[int, Fraction] = {}
    for var in system.unknowns:
        chosen = None
        for val in TRIAL_VALUES:
            trial = current + system.to_sympy([Poly.variable(system.nvars, var) - val])
            if not _inconsistent(trial, syms):
                chosen = Fraction(val)
                break
        if chosen is None:
            roots = _rational_roots(current, syms, var)
            if not roots:
                return None
            chosen = roots[0]
        values[var] = chosen
        current = current + system.to_sympy([Poly.variable(system.nvars, var) - chosen])
    return values


def _search(v: LocalView, q: MonomialQuotient) -> tuple[str, object]:
    """("certificate", IsoCertificate) | ("refuted", reason) | ("undecided", reason)."""
    b_table = to_algebra_table(q)
    relations = [tuple(g) for g in q.ideal_generators]
    lead = _System(v, relations, leading_only=True)
    if _solve_rational_feasible(lead) is False:
        return "refuted", ("leading-layer system for the generator images has no solution "
                           "over any extension (Groebner basis is {1})")
    system = _System(v, relations, leading_only=False)
    result = _solve_rational(system)
    if result == "refuted":
        return "refuted", ("generator-image system is consistent on the leading layer but has no solution "
                           "over any extension (Groebner basis is {1})")
    if result is None:
        return "undecided", "system is consistent but no rational solution was found"
    p = system.vector(result, 0)
    qv = system.vector(result, system.m)
    cert = _certificate_from_images(v, b_table, q, p, qv)
    check = verify_certificate(cert)
    if not check:
        return "undecided", f"constructed map failed verification: {check.reason}"
    return "certificate", cert


def _solve_rational_feasible(system: _System) -> bool:
    return not _inconsistent(system.to_sympy(system.equations), system.symbols)


def _certificate_from_images(v: LocalView, b: AlgebraTable, q: MonomialQuotient,
                             p: tuple, qv: tuple) -> IsoCertificate:
    """Invert psi: B -> A (z -> p, w -> q) and record images of A's generators."""
    a = v.algebra
    cols = []
    for e in q.standard_monomials:
        cols.append(a.mul(a.power(p, e[0]), a.power(qv, e[1])))
    psi = Matrix.from_columns(cols)
    phi = inverse(psi)
    gens = minimal_generators(v)
    images = tuple(phi.apply(g) for g in gens)
    return IsoCertificate(a, b, tuple(gens), images)


def decide_monomial_2gen(v: LocalView, max_dim: int | None = None) -> Verdict:
    if v.embedding_dim != 2:
        raise NotTwoGenerated(f"embedding dimension is {v.embedding_dim}, expected 2")
    bound = max_dim_bound() if max_dim is None else max_dim
    if v.algebra.dim > bound:
        raise BoundExceeded(f"dimension {v.algebra.dim} exceeds the search bound {bound}")
    hs = hilbert_samuel(v)
    fp = fingerprint(v)
    verdict = Verdict("non_monomial")
    for cand in enumerate_quotients_2v(hs, ("z", "w"), max_dim=bound, up_to_swap=True):
        fc = fingerprint(local_view(to_algebra_table(cand)))
        diff = fp.differences(fc)
        if diff:
            verdict.refutations.append(Refutation(str(cand), "fingerprint mismatch: " + ", ".join(diff), True))
            continue
        kind, payload = _search(v, cand)
        if kind == "certificate":
            verdict.verdict = "monomial"
            verdict.certificate = payload
            verdict.candidate = cand
            return verdict
        if kind == "refuted":
            verdict.refutations.append(Refutation(str(cand), payload, True))
        else:
            verdict.undecided.append(str(cand))
            verdict.refutations.append(Refutation(str(cand), payload, False))
    if verdict.undecided:
        verdict.verdict = "undecided"
    return verdict


def images_certificate(source: AlgebraTable, target: AlgebraTable,
                       assignment: dict[str, Sequence]) -> IsoCertificate:
    """Certificate from a label assignment such as {"d1": z, "d2": w}."""
    gens = tuple(source.element(label) for label in assignment)
    images = tuple(tuple(as_fraction(c) for c in h) for h in assignment.values())
    return IsoCertificate(source, target, gens, images)
