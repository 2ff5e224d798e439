"""Divisors, ampleness and global sections on the Hirzebruch surface Sigma_n.

Classes are written as a*E_inf + b*F_0.  Sections of a*E_inf + b*F_0 are
spanned by x^k y^m with k >= 0, 0 <= m <= a and k + n*m <= b, where x and y
are the torus coordinates on the chart {z0 != 0, y1 != 0}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAmple, NZero, SurfaceMismatch
from .monomial import quotient_from_staircase
from .spair import SPair, monomial_spair, spair_from_operators


@dataclass(frozen=True)
class HDivisor:
    n: int
    a: int
    b: int

    def __add__(self, other: "HDivisor") -> "HDivisor":
        _same_surface(self, other)
        return HDivisor(self.n, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "HDivisor") -> "HDivisor":
        _same_surface(self, other)
        return HDivisor(self.n, self.a - other.a, self.b - other.b)

    def __rmul__(self, k: int) -> "HDivisor":
        return HDivisor(self.n, k * self.a, k * self.b)

    def __str__(self) -> str:
        return f"{self.a}*E_inf + {self.b}*F_0 on Sigma_{self.n}"


def E_inf(n: int) -> HDivisor:
    return HDivisor(n, 1, 0)


def F_0(n: int) -> HDivisor:
    return HDivisor(n, 0, 1)


def E_0(n: int) -> HDivisor:
    """E_0 is linearly equivalent to E_inf + n F_0."""
    return HDivisor(n, 1, n)


def F_inf(n: int) -> HDivisor:
    return HDivisor(n, 0, 1)


def _same_surface(d1: HDivisor, d2: HDivisor) -> None:
    if d1.n != d2.n:
        raise SurfaceMismatch(f"divisors on Sigma_{d1.n} and Sigma_{d2.n}")


def intersection(d1: HDivisor, d2: HDivisor) -> int:
    """Bilinear form with F_0^2 = 0, F_0.E_inf = 1, E_inf^2 = -n."""
    _same_surface(d1, d2)
    return -d1.n * d1.a * d2.a + d1.a * d2.b + d1.b * d2.a


def is_ample(d: HDivisor) -> bool:
    # on a smooth complete toric surface ample and very ample coincide
    return d.a > 0 and d.b > d.a * d.n


def dimension_formula(n: int, a: int, b: int) -> int:
    """(a+1)(b+1) - n a (a+1) / 2."""
    return (a + 1) * (b + 1) - n * a * (a + 1) // 2


@dataclass(frozen=True)
class SectionBasis:
    n: int
    a: int
    b: int
    monomials: tuple  # (k, m) for x^k y^m, m ascending then k ascending

    def __len__(self) -> int:
        return len(self.monomials)

    def index(self, k: int, m: int) -> int | None:
        try:
            return self.monomials.index((k, m))
        except ValueError:
            return None

    def labels(self) -> list[str]:
        out = []
        for k, m in self.monomials:
            parts = [s for s in (_pow("x", k), _pow("y", m)) if s]
            out.append("*".join(parts) or "1")
        return out

    def to_dict(self) -> dict:
        return {"n": self.n, "a": self.a, "b": self.b,
                "sections": [list(km) for km in self.monomials], "dim": len(self)}


def _pow(name: str, k: int) -> str:
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


def sections(d: HDivisor) -> SectionBasis:
    """Lattice points k >= 0, 0 <= m <= a, k + n m <= b."""
    pts = []
    for m in range(0, max(d.a, -1) + 1):
        for k in range(0, d.b - d.n * m + 1):
            pts.append((k, m))
    return SectionBasis(d.n, d.a, d.b, tuple(pts))


def _check_ample(n: int, a: int, b: int) -> HDivisor:
    d = HDivisor(n, a, b)
    if not is_ample(d):
        raise NotAmple(f"{d} is not ample (need a > 0 and b > a n)")
    return d


def normalized_spair(n: int, a: int, b: int) -> SPair:
    """Monomial S-pair with staircase = section exponents and U = span{x, y}."""
    d = _check_ample(n, a, b)
    q = quotient_from_staircase(2, sections(d).monomials, ("x", "y"))
    return monomial_spair(q)


def twisted_spair(n: int, a: int, b: int) -> SPair:
    """S-pair of the algebra generated by delta_1 = d/dx + x^n d/dy, delta_2 = d/dy."""
    from .derivation import delta_matrices

    _check_ample(n, a, b)
    if n == 0:
        raise NZero("Sigma_0 carries only the normalized additive action")
    d1, d2 = delta_matrices(n, a, b)
    return spair_from_operators([d1.matrix, d2.matrix], ("d1", "d2"))
