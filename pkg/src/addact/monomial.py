"""Monomial ideals with finite-dimensional quotients (staircases)."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import AlgebraTable, monomial_label
from .errors import BoundExceeded, FormatError, InfiniteQuotient

DEFAULT_MAX_DIM = 12


def max_dim_bound() -> int:
    raw = os.environ.get("ADDACT_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        raise FormatError(f"ADDACT_MAX_DIM must be an integer, got {raw!r}") from None


def default_names(num_vars: int) -> tuple[str, ...]:
    if num_vars == 1:
        return ("x",)
    if num_vars == 2:
        return ("x", "y")
    if num_vars == 3:
        return ("x", "y", "z")
    return tuple(f"x{i + 1}" for i in range(num_vars))


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(exponents: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Minimal elements under divisibility, sorted."""
    exps = sorted(set(tuple(e) for e in exponents), key=lambda e: (sum(e), tuple(-x for x in e)))
    out: list[tuple[int, ...]] = []
    for e in exps:
        if not any(divides(g, e) for g in out):
            out.append(e)
    return tuple(sorted(out, key=lambda e: tuple(-x for x in e)))


def staircase_order(e: Sequence[int]):
    """Basis order: total degree, then descending lexicographic exponent."""
    return (sum(e), tuple(-x for x in e))


@dataclass(frozen=True)
class MonomialQuotient:
    num_vars: int
    ideal_generators: tuple  # minimal generators, sorted descending lexicographically
    standard_monomials: tuple  # the staircase, in staircase_order
    names: tuple = ()

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", default_names(self.num_vars))

    @property
    def dim(self) -> int:
        return len(self.standard_monomials)

    def __contains__(self, exponent) -> bool:
        return tuple(exponent) in self._staircase_set

    @property
    def _staircase_set(self) -> frozenset:
        return frozenset(self.standard_monomials)

    def graded_sequence(self) -> tuple[int, ...]:
        """Number of standard monomials per total degree."""
        top = max(sum(e) for e in self.standard_monomials)
        counts = [0] * (top + 1)
        for e in self.standard_monomials:
            counts[sum(e)] += 1
        return tuple(counts)

    def labels(self) -> list[str]:
        return [monomial_label(e, self.names) for e in self.standard_monomials]

    def ideal_str(self) -> str:
        return "(" + ", ".join(monomial_label(g, self.names) for g in self.ideal_generators) + ")"

    def __str__(self) -> str:
        return f"K[{','.join(self.names)}]/{self.ideal_str()}"

    def variable_index(self, i: int) -> int:
        e = [0] * self.num_vars
        e[i] = 1
        return self.standard_monomials.index(tuple(e))

    def to_dict(self) -> dict:
        return {"vars": list(self.names), "ideal": [list(g) for g in self.ideal_generators]}

    @classmethod
    def from_dict(cls, doc: dict) -> "MonomialQuotient":
        try:
            names = [str(v) for v in doc["vars"]]
            gens = [tuple(int(x) for x in g) for g in doc["ideal"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"monomial document: missing or invalid field ({exc})") from exc
        for g in gens:
            if len(g) != len(names):
                raise FormatError(f"monomial document: generator {list(g)} has wrong length")
            if any(x < 0 for x in g):
                raise FormatError(f"monomial document: negative exponent in {list(g)}")
        return quotient_from_generators(len(names), gens, names)


def quotient_from_generators(num_vars: int, gens: Iterable[Sequence[int]],
                             names: Sequence[str] | None = None) -> MonomialQuotient:
    gens = minimalize(gens)
    if any(sum(g) == 0 for g in gens):
        raise ValueError("the ideal is the whole ring")
    bounds = []
    for i in range(num_vars):
        pure = [g[i] for g in gens if all(x == 0 for j, x in enumerate(g) if j != i)]
        if not pure:
            raise InfiniteQuotient(f"no pure power of variable {i + 1} lies in the ideal")
        bounds.append(min(pure))
    stair = [
        e for e in itertools.product(*(range(b) for b in bounds))
        if not any(divides(g, e) for g in gens)
    ]
    stair.sort(key=staircase_order)
    return MonomialQuotient(num_vars, gens, tuple(stair), tuple(names) if names else ())


def quotient_from_staircase(num_vars: int, staircase: Iterable[Sequence[int]],
                            names: Sequence[str] | None = None) -> MonomialQuotient:
    """Quotient whose standard monomials are ``staircase`` (must be downward closed)."""
    stair = set(tuple(e) for e in staircase)
    if (0,) * num_vars not in stair:
        raise ValueError("staircase must contain the constant monomial")
    for e in stair:
        for i in range(num_vars):
            if e[i]:
                f = list(e)
                f[i] -= 1
                if tuple(f) not in stair:
                    raise ValueError(f"staircase is not downward closed at {e}")
    candidates = set()
    for e in stair:
        for i in range(num_vars):
            f = list(e)
            f[i] += 1
            if tuple(f) not in stair:
                candidates.add(tuple(f))
    gens = minimalize(candidates)
    return MonomialQuotient(
        num_vars, gens, tuple(sorted(stair, key=staircase_order)), tuple(names) if names else ()
    )


def to_algebra_table(q: MonomialQuotient) -> AlgebraTable:
    """Multiply standard monomials by adding exponents; products outside the staircase are 0."""
    index = {e: i for i, e in enumerate(q.standard_monomials)}
    structure = {}
    for i, e in enumerate(q.standard_monomials):
        for j in range(i, len(q.standard_monomials)):
            f = q.standard_monomials[j]
            s = tuple(a + b for a, b in zip(e, f))
            k = index.get(s)
            if k is not None:
                structure[(i, j)] = {k: Fraction(1)}
    return AlgebraTable(q.labels(), index[(0,) * q.num_vars], structure)


def is_box(q: MonomialQuotient) -> tuple[bool, tuple[int, ...] | None]:
    """Whether the staircase is a full box ``0 <= e_j <= k_j``; returns the sides ``k``."""
    sides = tuple(max(e[i] for e in q.standard_monomials) for i in range(q.num_vars))
    size = 1
    for k in sides:
        size *= k + 1
    if size == q.dim:
        return True, sides
    return False, None


def box_quotient(sides: Sequence[int], names: Sequence[str] | None = None) -> MonomialQuotient:
    """The box algebra with standard monomials ``0 <= e_j <= sides[j]``."""
    n = len(sides)
    gens = []
    for i, k in enumerate(sides):
        g = [0] * n
        g[i] = k + 1
        gens.append(g)
    return quotient_from_generators(n, gens, names)


def partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as non-increasing tuples, in descending lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def staircase_from_heights(heights: Sequence[int]) -> list[tuple[int, int]]:
    """Column ``i`` (x-exponent i) holds y-exponents ``0 .. heights[i]-1``."""
    return [(i, j) for i, h in enumerate(heights) for j in range(h)]


def all_quotients_2v(dim: int, names: Sequence[str] | None = None) -> list[MonomialQuotient]:
    """Every 2-variable staircase of the given size."""
    return [quotient_from_staircase(2, staircase_from_heights(p), names) for p in partitions(dim)]


def enumerate_quotients_2v(hs: Sequence[int], names: Sequence[str] | None = None,
                           max_dim: int | None = None, up_to_swap: bool = False) -> list[MonomialQuotient]:
    """2-variable staircases whose degree-graded counts equal ``hs``.

    Staircases come in descending lexicographic order of their column
    heights.  With ``up_to_swap`` only one staircase per orbit of the
    variable swap is kept, the one with the lexicographically smaller heights.
    """
    hs = tuple(hs)
    bound = max_dim_bound() if max_dim is None else max_dim
    total = sum(hs)
    if total > bound:
        raise BoundExceeded(f"dimension {total} exceeds the search bound {bound}")
    if not hs or hs[0] != 1:
        return []
    out = []
    for p in partitions(total):
        q = quotient_from_staircase(2, staircase_from_heights(p), names)
        if q.graded_sequence() != hs:
            continue
        if up_to_swap and conjugate(p) < p:
            continue
        out.append(q)
    return out


def conjugate(p: Sequence[int]) -> tuple[int, ...]:
    """Conjugate partition; it describes the staircase with the variables swapped."""
    return tuple(sum(1 for h in p if h > i) for i in range(p[0])) if p else ()
