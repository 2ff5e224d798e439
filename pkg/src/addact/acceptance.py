"""Reproduction suite: one function per acceptance criterion.

Each criterion returns a :class:`CriterionResult`; ``run`` collects them in
a fixed order so the JSON output is stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import exp_element, hilbert_samuel, is_gorenstein, local_view, presented_by, subalgebra_generated
from .derivation import bch_power_check, delta_matrices, span_dims, vanishing_check
from .exactlin import Matrix, kernel_basis, rank
from .geometry import implicitize, example_orbit, verify_nonnormal_example
from .hirzebruch import HDivisor, dimension_formula, normalized_spair, sections, twisted_spair
from .isomorphy import IsoCertificate, decide_monomial_2gen, fingerprint, verify_certificate
from .monomial import all_quotients_2v, is_box, partitions, quotient_from_generators, quotient_from_staircase, staircase_from_heights, to_algebra_table
from .polys import Poly
from .presentation import verify_allrelations
from .spair import ht_matrices, monomial_spair, spair_from_operators, torus_equivariance_check

BCH_GRID = ((1, 2), (1, 3), (2, 4), (2, 5), (3, 6))
PROPERTY_CASES = 200


@dataclass
class CriterionResult:
    key: str
    title: str
    passed: bool
    cases: int = 0
    failures: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"key": self.key, "title": self.title, "passed": self.passed, "cases": self.cases,
                "failures": [str(f) for f in self.failures], "detail": self.detail}

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({len(self.failures)} failures)" if self.failures else ""
        return f"[{status}] {self.key:<12} {self.title} [{self.cases} cases]{extra}"


def _result(key: str, title: str, failures: list, cases: int, **detail) -> CriterionResult:
    return CriterionResult(key, title, not failures, cases, failures, detail)


def section_grid():
    for n in range(0, 5):
        for a in range(1, 5):
            for b in range(n * a + 1, n * a + 5):
                yield n, a, b


def operator_grid():
    for n in (1, 2):
        for a in (1, 2, 3):
            for b in range(n * a + 1, n * a + 4):
                yield n, a, b


def check_sections() -> CriterionResult:
    failures, cases = [], 0
    for n, a, b in section_grid():
        cases += 1
        got = len(sections(HDivisor(n, a, b)))
        if got != dimension_formula(n, a, b):
            failures.append((n, a, b, got))
    return _result("sections", "section count equals (a+1)(b+1) - na(a+1)/2", failures, cases)


def check_operator_dim() -> CriterionResult:
    failures, cases = [], 0
    for n, a, b in operator_grid():
        cases += 1
        d1, d2 = delta_matrices(n, a, b)
        got = subalgebra_generated(None, [d1.matrix, d2.matrix]).dim
        if got != dimension_formula(n, a, b):
            failures.append((n, a, b, got))
    return _result("operator_dim", "span closure of id, delta_1, delta_2 has dimension d_{n,a,b}", failures, cases)


def check_bch() -> CriterionResult:
    failures, cases = [], 0
    for a, b in BCH_GRID:
        d1, _ = delta_matrices(1, a, b)
        N = 1
        while True:
            cases += 1
            if not bch_power_check(1, a, b, N):
                failures.append((a, b, N))
            if (d1.matrix ** N).is_zero():
                break
            N += 1
    return _result("bch", "delta_1^N equals the expanded power formula up to nilpotency", failures, cases)


def check_vanishing() -> CriterionResult:
    failures, cases = [], 0
    for a, b in BCH_GRID:
        rep = vanishing_check(a, b)
        cases += 1 + len(rep.boundary_checked)
        if not rep.ok:
            failures.append((a, b, rep.counterexamples))
    return _result("vanishing", "delta_2^(a+1) = 0 and boundary products vanish", failures, cases)


def check_span() -> CriterionResult:
    failures, cases = [], 0
    for a in range(1, 4):
        for b in range(2 * a, 2 * a + 4):
            for l in range(a + 1):
                cases += 1
                rep = span_dims(a, b, l)
                if not rep.ok:
                    failures.append((a, b, l, rep.dim))
    return _result("span", "span of delta_1^(a+b-l-2s) delta_2^s has dimension l + 1", failures, cases)


def check_relations() -> CriterionResult:
    failures, reports = [], {}
    for a, b in BCH_GRID:
        rep = verify_allrelations(a, b)
        reports[f"{a},{b}"] = rep.to_dict()
        if not rep.ok:
            failures.append((a, b, rep.failures or rep.quotient_dim))
    return _result("relations", "named relation families generate the kernel; quotient dim d_{1,a,b}",
                   failures, len(BCH_GRID), reports=reports)


def expected_quadrics() -> set:
    z = [Poly.variable(5, i) for i in range(5)]
    return {z[1] ** 2 - z[0] * z[3] * 2, z[2] ** 2 - z[0] * z[4] * 2}


def check_nonnormal() -> CriterionResult:
    failures = []
    space = implicitize(example_orbit(), 2)
    if set(space.basis) != expected_quadrics():
        failures.append(f"quadric basis {space.format()}")
    rep = verify_nonnormal_example()
    if rep.singular_samples != 5 or len(rep.line_ranks) != 5:
        failures.append(f"line samples {rep.line_ranks}")
    if rep.smooth_samples != 5 or len(rep.orbit_ranks) != 5:
        failures.append(f"orbit samples {rep.orbit_ranks}")
    if not rep.ok:
        failures.append("report not ok")
    return _result("nonnormal", "two quadrics, rank drop on the line, rank 2 on the orbit",
                   failures, 11, report=rep.to_dict())


def check_monomiality() -> CriterionResult:
    failures = []
    a12 = twisted_spair(1, 1, 2)
    v12 = decide_monomial_2gen(a12.algebra)
    target = quotient_from_generators(2, [(4, 0), (1, 1), (0, 2)], ("z", "w"))
    if v12.verdict != "monomial" or v12.candidate != target:
        failures.append(f"A'(1,2): {v12.verdict} {v12.candidate}")
    elif not verify_certificate(v12.certificate):
        failures.append("A'(1,2): certificate rejected by the checker")
    a13 = twisted_spair(1, 1, 3)
    hs = hilbert_samuel(a13.algebra)
    if hs != (1, 2, 2, 1, 1):
        failures.append(f"A'(1,3) Hilbert-Samuel {hs}")
    v13 = decide_monomial_2gen(a13.algebra)
    b1 = str(quotient_from_generators(2, [(5, 0), (1, 1), (0, 3)], ("z", "w")))
    b2 = str(quotient_from_generators(2, [(5, 0), (2, 1), (0, 2)], ("z", "w")))
    refuted = {r.candidate for r in v13.refutations if r.extension_independent}
    if v13.verdict != "non_monomial" or refuted != {b1, b2}:
        failures.append(f"A'(1,3): {v13.verdict}, refuted {sorted(refuted)}")
    return _result("monomiality", "A'(1,2) is monomial, A'(1,3) is not", failures, 3,
                   a12=v12.to_dict()["verdict"], a13=v13.to_dict())


def check_gorenstein() -> CriterionResult:
    failures, cases = [], 0
    for dim in range(1, 9):
        for q in all_quotients_2v(dim):
            cases += 1
            v = local_view(to_algebra_table(q))
            if is_gorenstein(v) != is_box(q)[0]:
                failures.append(str(q))
    return _result("gorenstein", "Gorenstein iff box for 2-variable staircases of dim <= 8", failures, cases)


def check_torus() -> CriterionResult:
    failures, cases = [], 0
    grid = sorted(set(section_grid()) | set(operator_grid()))
    for n, a, b in grid:
        cases += 1
        if not torus_equivariance_check(normalized_spair(n, a, b)):
            failures.append((n, a, b))
    cases += 1
    q = quotient_from_generators(2, [(3, 0), (1, 1), (0, 3)], ("t", "s"))
    if not torus_equivariance_check(monomial_spair(q)):
        failures.append("K[t,s]/(t^3, ts, s^3)")
    return _result("torus", "orbit coordinates are torus-equivariant", failures, cases)


# ---------------------------------------------------------------- property suites

def random_quotient(rng: random.Random, min_dim: int = 3, max_dim: int = 8, two_generated: bool = False):
    """Random 2-variable staircase; with ``two_generated`` both variables survive."""
    while True:
        p = rng.choice(list(partitions(rng.randint(min_dim, max_dim))))
        if not two_generated or (len(p) >= 2 and p[0] >= 2):
            return quotient_from_staircase(2, staircase_from_heights(p), ("z", "w"))


def _random_in_ideal(rng: random.Random, basis, dim: int, scale: int = 3) -> tuple:
    x = [Fraction(0)] * dim
    for b in basis:
        c = Fraction(rng.randint(-scale, scale), rng.randint(1, 3))
        if c:
            x = [xi + c * bi for xi, bi in zip(x, b)]
    return tuple(x)


def prop_exp_additive(rng: random.Random) -> str | None:
    q = random_quotient(rng, 1, 8)
    v = local_view(to_algebra_table(q))
    a = v.algebra
    x = _random_in_ideal(rng, v.maximal_ideal.basis, a.dim)
    y = _random_in_ideal(rng, v.maximal_ideal.basis, a.dim)
    lhs = exp_element(v, tuple(s + t for s, t in zip(x, y)))
    rhs = a.mul(exp_element(v, x), exp_element(v, y))
    return None if lhs == rhs else f"{q}: exp(x+y) != exp(x)exp(y)"


def prop_rank_nullity(rng: random.Random) -> str | None:
    r, c = rng.randint(1, 6), rng.randint(1, 6)
    m = Matrix([[rng.choice((0, 0, 1, -1, 2, Fraction(1, 2))) for _ in range(c)] for _ in range(r)], c)
    k = kernel_basis(m)
    if rank(m) + k.dim != c:
        return f"rank {rank(m)} + nullity {k.dim} != {c}"
    if any(any(x for x in m.apply(v)) for v in k.basis):
        return "kernel vector not annihilated"
    return None


def prop_operator_roundtrip(rng: random.Random) -> str | None:
    q = random_quotient(rng, 3, 8, two_generated=True)
    p = monomial_spair(q)
    back = spair_from_operators(ht_matrices(p), ("z", "w"))
    if back.dim != p.dim:
        return f"{q}: dim {back.dim} != {p.dim}"
    if fingerprint(back.algebra) != fingerprint(p.algebra):
        return f"{q}: invariants differ after the round trip"
    return None


def random_substitution(rng: random.Random, q):
    """Generators z', w' = triangular change of z, w plus random terms in m^2."""
    v = local_view(to_algebra_table(q))
    a = v.algebra
    z, w = a.element("z"), a.element("w")
    sq = v.power(2).basis
    c = [Fraction(rng.choice((1, -1, 2, -2, 3))), Fraction(rng.randint(-3, 3)), Fraction(rng.choice((1, -1, 2, Fraction(1, 2))))]
    g1 = tuple(c[0] * x + c[1] * y + t for x, y, t in zip(z, w, _random_in_ideal(rng, sq, a.dim)))
    g2 = tuple(c[2] * y + t for y, t in zip(w, _random_in_ideal(rng, sq, a.dim)))
    return v, g1, g2


def prop_fingerprint_invariance(rng: random.Random) -> str | None:
    q = random_quotient(rng, 3, 8, two_generated=True)
    v, g1, g2 = random_substitution(rng, q)
    table, _ = presented_by(v.algebra, [g1, g2], ("t", "s"))
    if fingerprint(local_view(table)) != fingerprint(v):
        return f"{q}: fingerprint changed under substitution"
    cert = IsoCertificate(table, v.algebra, (table.element("t"), table.element("s")), (g1, g2))
    check = verify_certificate(cert)
    if not check:
        return f"{q}: substitution certificate rejected ({check.reason})"
    return None


PROPERTIES: dict[str, Callable[[random.Random], str | None]] = {
    "exp_additivity": prop_exp_additive,
    "rank_nullity": prop_rank_nullity,
    "operator_roundtrip": prop_operator_roundtrip,
    "fingerprint_invariance": prop_fingerprint_invariance,
}


def check_properties(cases: int = PROPERTY_CASES, seed: int = 20240501) -> CriterionResult:
    failures, counts = [], {}
    for i, (name, prop) in enumerate(PROPERTIES.items()):
        rng = random.Random(seed + i)
        bad = 0
        for k in range(cases):
            msg = prop(rng)
            if msg:
                bad += 1
                failures.append(f"{name} case {k}: {msg}")
        counts[name] = {"cases": cases, "failures": bad}
    return _result("properties", "randomized property suites", failures, cases * len(PROPERTIES), suites=counts)


CRITERIA: dict[str, tuple[str, Callable[[], CriterionResult]]] = {
    "sections": ("1", check_sections),
    "operator_dim": ("2", check_operator_dim),
    "bch": ("3", check_bch),
    "vanishing": ("4", check_vanishing),
    "span": ("5", check_span),
    "relations": ("6", check_relations),
    "nonnormal": ("7", check_nonnormal),
    "monomiality": ("8", check_monomiality),
    "gorenstein": ("9", check_gorenstein),
    "torus": ("10", check_torus),
    "properties": ("11", check_properties),
}


def run(keys=None) -> list[CriterionResult]:
    selected = list(CRITERIA) if not keys else [k for k in CRITERIA if k in keys]
    out = []
    for key in selected:
        try:
            out.append(CRITERIA[key][1]())
        except Exception as exc:  # a crash counts as a failed criterion, not an aborted run
            out.append(CriterionResult(key, "raised an exception", False, 0, [f"{type(exc).__name__}: {exc}"]))
    return out
