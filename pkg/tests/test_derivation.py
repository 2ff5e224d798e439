import pytest
import sympy

from addact.derivation import (
    bch_power_check,
    bch_power_rhs,
    delta_matrices,
    span_dims,
    span_family,
    split_operators,
    vanishing_check,
)
from addact.errors import NotAmple
from addact.exactlin import Matrix
from addact.hirzebruch import sections, HDivisor

import oracles


def as_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])


def test_delta2_on_112():
    basis = sections(HDivisor(1, 1, 2))
    _, d2 = delta_matrices(1, 1, 2)
    y, xy, one, x = basis.index(0, 1), basis.index(1, 1), basis.index(0, 0), basis.index(1, 0)
    assert d2.matrix.column(y) == tuple(int(i == one) for i in range(5))
    assert d2.matrix.column(xy) == tuple(int(i == x) for i in range(5))
    for k in (one, x, basis.index(2, 0)):
        assert not any(d2.matrix.column(k))


def test_delta1_on_xy():
    basis = sections(HDivisor(1, 1, 2))
    d1, _ = delta_matrices(1, 1, 2)
    col = d1.matrix.column(basis.index(1, 1))
    expected = [0] * 5
    expected[basis.index(0, 1)] = 1
    expected[basis.index(2, 0)] = 1
    assert col == tuple(expected)


@pytest.mark.parametrize("nab", [(1, 1, 2), (1, 2, 5), (2, 1, 4), (3, 2, 7), (1, 3, 4)])
def test_matrices_match_polynomial_oracle(nab):
    d1, d2 = delta_matrices(*nab)
    r1, r2 = oracles.deltas(*nab)
    assert as_sympy(d1.matrix) == r1
    assert as_sympy(d2.matrix) == r2


def test_closure_commutativity_nilpotency_grid():
    for n in range(1, 4):
        for a in range(1, 4):
            for b in range(n * a + 1, n * a + 4):
                d1, d2 = delta_matrices(n, a, b)
                assert d1.matrix.commutes_with(d2.matrix)
                assert d1.matrix.is_nilpotent() and d2.matrix.is_nilpotent()
                assert (d2.matrix ** (a + 1)).is_zero()
                if n == 1:
                    assert (d1.matrix ** (a + b + 1)).is_zero()


def test_delta2_square_vanishes_for_a_one():
    for n, b in [(1, 2), (2, 3), (3, 5)]:
        _, d2 = delta_matrices(n, 1, b)
        assert (d2.matrix ** 2).is_zero()


def test_requires_ample():
    with pytest.raises(NotAmple):
        delta_matrices(1, 1, 1)


def test_bch_small_powers():
    ops = split_operators(1, 1, 3)
    A, B = ops["x_n_dy"].matrix, ops["dx"].matrix
    C = A @ B - B @ A
    assert bch_power_rhs(1, 1, 3, 1) == ops["delta1"].matrix
    assert bch_power_rhs(1, 1, 3, 2) == A @ A + (A @ B).scale(2) + B @ B - C
    assert C == ops["delta2"].matrix.scale(-1)


def test_bch_all_powers_13():
    d1, _ = delta_matrices(1, 1, 3)
    N = 1
    while True:
        assert bch_power_check(1, 1, 3, N)
        if (d1.matrix ** N).is_zero():
            break
        N += 1
    assert N == 5


def test_bch_restricted_to_n_one():
    with pytest.raises(ValueError):
        bch_power_rhs(2, 1, 3, 2)


def test_vanishing_112():
    d1, d2 = delta_matrices(1, 1, 2)
    D1, D2 = d1.matrix, d2.matrix
    assert (D1 ** 4).is_zero() and (D1 ** 2 @ D2).is_zero() and (D2 ** 2).is_zero()
    cube = D1 ** 3
    basis = sections(HDivisor(1, 1, 2))
    assert cube.column(basis.index(1, 1))[basis.index(0, 0)] == 3
    rep = vanishing_check(1, 2)
    assert rep.ok and rep.top_power_nonzero


def test_vanishing_delta2_grid():
    for a, b in [(1, 2), (1, 4), (2, 4), (2, 6), (3, 7)]:
        assert vanishing_check(a, b).delta2_power_vanishes


def test_span_dims_examples():
    assert span_dims(1, 2, 0).dim == 1
    rep = span_dims(1, 2, 1)
    assert rep.dim == 2 and rep.ok
    d1, d2 = delta_matrices(1, 1, 2)
    fam = span_family(1, 2, 1)
    assert fam == [d1.matrix ** 2, d2.matrix]
    assert span_dims(2, 4, 2).dim == 3


def test_span_dims_against_sympy_rank():
    for a, b, l in [(2, 5, 1), (3, 6, 2), (2, 4, 0)]:
        fam = [as_sympy(m) for m in span_family(a, b, l)]
        assert span_dims(a, b, l).dim == oracles.rank_of(fam) == l + 1
