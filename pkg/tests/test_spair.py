import math
from fractions import Fraction

import pytest
import sympy

from addact.algebra import hilbert_samuel, subalgebra_generated
from addact.errors import GenerationDefect, NonCommuting, NotMonomialSPair, NotNilpotent
from addact.exactlin import Matrix
from addact.hirzebruch import normalized_spair
from addact.monomial import box_quotient, quotient_from_generators, to_algebra_table
from addact.derivation import split_operators
from addact.spair import (
    SPair,
    ht_matrices,
    monomial_spair,
    parametrize_orbit,
    spair_from_operators,
    torus_equivariance_check,
    validate,
)

import oracles


def ts_pair() -> SPair:
    return monomial_spair(quotient_from_generators(2, [(3, 0), (1, 1), (0, 3)], ("t", "s")))


def test_validate_examples():
    assert validate(monomial_spair(quotient_from_generators(1, [(3,)])))
    sq = to_algebra_table(quotient_from_generators(2, [(2, 0), (1, 1), (0, 2)]))
    bad = SPair.from_table(sq, [sq.element("x")])
    result = validate(bad)
    assert not result and result.reason.startswith("generation")
    assert validate(normalized_spair(1, 1, 2))


def test_validate_membership_and_independence():
    a = to_algebra_table(quotient_from_generators(1, [(3,)]))
    assert validate(SPair.from_table(a, [a.unit])).reason.startswith("membership")
    x = a.element("x")
    assert validate(SPair.from_table(a, [x, tuple(2 * c for c in x)])).reason.startswith("independence")


def test_ht_matrices_jordan_block():
    (m,) = ht_matrices(monomial_spair(quotient_from_generators(1, [(2,)])))
    assert m == Matrix([[0, 0], [1, 0]])


def test_ht_matrices_ts():
    tm, sm = ht_matrices(ts_pair())
    assert tm.commutes_with(sm)
    assert (tm @ sm).is_zero()
    assert tm.is_nilpotent() and sm.is_nilpotent()
    assert subalgebra_generated(None, [tm, sm]).dim == 5


def test_orbit_of_ts_pair_matches_series_oracle():
    orbit = parametrize_orbit(ts_pair())
    assert orbit.format() == ["1", "a", "b", "1/2*a^2", "1/2*b^2"]
    t, s, a, b = sympy.symbols("t s a b")
    ref = oracles.truncated_exp([t, s], [(3, 0), (1, 1), (0, 3)], [a, b])
    for (i, j), p in zip(((0, 0), (1, 0), (0, 1), (2, 0), (0, 2)), orbit.coords):
        c = ref.coeff_monomial(t ** i * s ** j)
        assert sympy.expand(c - sympy.sympify(p.format(["a", "b"]).replace("^", "**"))) == 0


def test_orbit_at_zero_is_unit():
    assert parametrize_orbit(ts_pair()).point([0, 0]) == (1, 0, 0, 0, 0)


def test_orbit_coordinates_of_section_algebra():
    p = normalized_spair(1, 1, 2)
    orbit = parametrize_orbit(p)
    q = p.quotient
    alpha, beta = Fraction(3), Fraction(-2, 5)
    point = orbit.point([alpha, beta])
    for (i, j), c in zip(q.standard_monomials, point):
        # exp gives alpha^i beta^j / (i! j!); scaling by (i+j)! gives the multinomial form
        assert c == alpha ** i * beta ** j / (math.factorial(i) * math.factorial(j))
        multinomial = Fraction(math.factorial(i + j), math.factorial(i) * math.factorial(j))
        assert c * math.factorial(i + j) == multinomial * alpha ** i * beta ** j


def test_torus_equivariance_examples():
    assert torus_equivariance_check(normalized_spair(1, 1, 2))
    assert torus_equivariance_check(monomial_spair(quotient_from_generators(1, [(3,)])))
    assert torus_equivariance_check(monomial_spair(box_quotient((1, 1))))


def test_torus_equivariance_needs_monomial_pair():
    a = to_algebra_table(quotient_from_generators(1, [(3,)]))
    with pytest.raises(NotMonomialSPair):
        torus_equivariance_check(SPair.from_table(a, [a.element("x")]))


def test_from_jordan_block():
    p = spair_from_operators([Matrix([[0, 1], [0, 0]])], ["x"])
    assert p.dim == 2
    assert p.table.basis_labels == ("1", "x")
    assert validate(p)


def test_from_twisted_operators():
    ops = split_operators(1, 1, 2)
    p = spair_from_operators([ops["delta1"].matrix, ops["delta2"].matrix])
    assert p.dim == 5 and validate(p)


def test_partial_derivatives_give_the_monomial_algebra():
    ops = split_operators(1, 1, 2)
    p = spair_from_operators([ops["dx"].matrix, ops["delta2"].matrix], ["x", "y"])
    assert p.dim == 5
    assert hilbert_samuel(p.algebra) == hilbert_samuel(normalized_spair(1, 1, 2).algebra)
    assert set(p.table.basis_labels) == {"1", "x", "y", "x^2", "x*y"}


def test_operator_errors():
    a = Matrix([[0, 1], [0, 0]])
    b = Matrix([[0, 0], [1, 0]])
    with pytest.raises(NonCommuting) as err:
        spair_from_operators([a, b])
    assert err.value.pair == (0, 1)
    with pytest.raises(NotNilpotent):
        spair_from_operators([Matrix.identity(2)])
    with pytest.raises(GenerationDefect):
        spair_from_operators([a, a.scale(2)])


def test_document_roundtrip():
    p = normalized_spair(1, 1, 2)
    back = SPair.from_dict(p.to_dict())
    assert back.quotient == p.quotient and back.u_basis == p.u_basis
    ops = split_operators(1, 1, 2)
    q = spair_from_operators([ops["delta1"].matrix, ops["delta2"].matrix])
    back = SPair.from_dict(q.to_dict())
    assert back.table == q.table and back.u_basis == q.u_basis
