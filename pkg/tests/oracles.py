"""Independent reference computations built on sympy.

Nothing here imports the package: derivations act on actual polynomials,
algebras are truncated polynomial rings, and ranks come from sympy matrices.
"""

from __future__ import annotations

import itertools

import sympy

x, y = sympy.symbols("x y")


def section_monomials(n, a, b):
    return [(k, m) for m in range(a + 1) for k in range(b - n * m + 1)]


def delta1(f, n):
    return sympy.expand(sympy.diff(f, x) + x ** n * sympy.diff(f, y))


def delta2(f):
    return sympy.expand(sympy.diff(f, y))


def operator_matrix(op, n, a, b):
    """Matrix with column j = op(basis_j) written in the section basis."""
    basis = section_monomials(n, a, b)
    index = {km: i for i, km in enumerate(basis)}
    M = sympy.zeros(len(basis), len(basis))
    for j, (k, m) in enumerate(basis):
        img = op(x ** k * y ** m)
        if img == 0:
            continue
        for (i1, i2), c in sympy.Poly(img, x, y).terms():
            M[index[(i1, i2)], j] += c
    return M


def deltas(n, a, b):
    return (operator_matrix(lambda f: delta1(f, n), n, a, b),
            operator_matrix(delta2, n, a, b))


def flat(M):
    return list(M)


def rank_of(mats):
    if not mats:
        return 0
    return sympy.Matrix([flat(M) for M in mats]).rank()


def operator_algebra_hs(D1, D2):
    """Hilbert-Samuel sequence of K[D1, D2] with m^k spanned by words of length >= k."""
    size = D1.shape[0]
    I = sympy.eye(size)
    # every nonzero product vanishes past size steps
    words = {}
    for i in range(2 * size):
        for j in range(2 * size - i):
            M = D1 ** i * D2 ** j if (i or j) else I
            words[(i, j)] = M
    dims = []
    k = 0
    while True:
        mats = [M for (i, j), M in words.items() if i + j >= k]
        r = rank_of(mats)
        dims.append(r)
        if r == 0:
            break
        k += 1
    return tuple(dims[i] - dims[i + 1] for i in range(len(dims) - 1))


def truncated_exp(gens, ideal, params):
    """Coefficients of exp(sum p_i g_i) in K[g]/(monomial ideal), by power series."""
    def reduce(expr):
        p = sympy.Poly(sympy.expand(expr), *gens)
        keep = 0
        for mon, c in p.terms():
            if not any(all(m >= e for m, e in zip(mon, g)) for g in ideal):
                keep += c * sympy.prod([v ** k for v, k in zip(gens, mon)])
        return sympy.expand(keep)

    s = sum(p * g for p, g in zip(params, gens))
    total, term = sympy.Integer(1), sympy.Integer(1)
    for k in range(1, 20):
        term = reduce(term * s / k)
        if term == 0:
            break
        total += term
    return sympy.Poly(total, *gens)


def linear_forms_vanishing(coords):
    """Dimension of the space of linear forms vanishing on a parametrization."""
    syms = sorted(set().union(*[sympy.sympify(c).free_symbols for c in coords]), key=str)
    monos = set()
    polys = [sympy.Poly(c, *syms) for c in coords]
    for p in polys:
        monos.update(m for m, _ in p.terms())
    monos = sorted(monos)
    M = sympy.Matrix([[p.coeff_monomial(m) for p in polys] for m in monos])
    return len(coords) - M.rank()


def cubic_multiples_rank():
    """Rank of z_i q_j for the two quadrics z1^2 - 2 z0 z3, z2^2 - 2 z0 z4."""
    z = sympy.symbols("z0:5")
    qs = [z[1] ** 2 - 2 * z[0] * z[3], z[2] ** 2 - 2 * z[0] * z[4]]
    mults = [sympy.Poly(zi * q, *z) for zi in z for q in qs]
    monos = sorted({m for p in mults for m, _ in p.terms()})
    return sympy.Matrix([[p.coeff_monomial(m) for m in monos] for p in mults]).rank()


def staircase_socle_dim(stair):
    """Socle of a monomial algebra: standard monomials with no standard multiple by a variable."""
    s = set(stair)
    out = 0
    for e in stair:
        if all(tuple(x + (i == j) for j, x in enumerate(e)) not in s for i in range(len(e))):
            out += 1
    return out


def all_staircases(dim):
    for p in sympy.utilities.iterables.partitions(dim):
        heights = sorted(itertools.chain.from_iterable([k] * v for k, v in p.items()), reverse=True)
        yield [(i, j) for i, h in enumerate(heights) for j in range(h)]
