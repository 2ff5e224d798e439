import pytest

from addact.algebra import hilbert_samuel, is_gorenstein
from addact.errors import NotAmple, NZero, SurfaceMismatch
from addact.hirzebruch import (
    E_0,
    E_inf,
    F_0,
    HDivisor,
    dimension_formula,
    intersection,
    is_ample,
    normalized_spair,
    sections,
    twisted_spair,
)
from addact.monomial import box_quotient, is_box
from addact.spair import validate

import oracles


def test_intersection_examples():
    assert intersection(E_inf(2), E_inf(2)) == -2
    assert intersection(F_0(3), F_0(3)) == 0
    for n in range(5):
        assert intersection(E_0(n), E_0(n)) == n
        assert intersection(E_inf(n), E_0(n)) == 0


def test_intersection_symmetric_bilinear():
    d1, d2, d3 = HDivisor(2, 1, 3), HDivisor(2, -2, 5), HDivisor(2, 4, 1)
    assert intersection(d1, d2) == intersection(d2, d1)
    assert intersection(d1 + d2, d3) == intersection(d1, d3) + intersection(d2, d3)
    assert intersection(3 * d1, d2) == 3 * intersection(d1, d2)


def test_intersection_needs_same_surface():
    with pytest.raises(SurfaceMismatch):
        intersection(E_inf(1), E_inf(2))


def test_ampleness():
    assert is_ample(HDivisor(1, 1, 2))
    assert not is_ample(HDivisor(1, 1, 1))
    assert is_ample(HDivisor(0, 1, 1))
    assert not is_ample(HDivisor(2, 0, 5))


def test_sections_example():
    s = sections(HDivisor(1, 1, 2))
    assert s.monomials == ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1))


def test_sections_single_row():
    assert sections(HDivisor(3, 0, 4)).monomials == tuple((k, 0) for k in range(5))


@pytest.mark.parametrize("n", range(5))
def test_section_count_formula(n):
    for a in range(0, 5):
        for b in range(n * a, n * a + 5):
            basis = sections(HDivisor(n, a, b))
            assert len(basis) == dimension_formula(n, a, b)
            assert list(basis.monomials) == oracles.section_monomials(n, a, b)


def test_normalized_spair_example():
    p = normalized_spair(1, 1, 2)
    assert p.quotient.ideal_generators == ((3, 0), (2, 1), (0, 2))
    assert validate(p)
    assert sum(hilbert_samuel(p.algebra)) == dimension_formula(1, 1, 2)


def test_normalized_spair_on_sigma0_is_box():
    for k1, k2 in [(1, 1), (1, 3), (2, 2)]:
        p = normalized_spair(0, k1, k2)
        assert p.quotient.standard_monomials == box_quotient((k2, k1)).standard_monomials


def test_normalized_requires_ample():
    with pytest.raises(NotAmple):
        normalized_spair(1, 1, 1)


def test_twisted_examples():
    p = twisted_spair(1, 1, 2)
    assert p.dim == 5 and hilbert_samuel(p.algebra) == (1, 2, 1, 1)
    q = twisted_spair(1, 1, 3)
    assert q.dim == 7 and hilbert_samuel(q.algebra) == (1, 2, 2, 1, 1)


@pytest.mark.parametrize("nab", [(1, 1, 2), (1, 1, 3), (1, 2, 4), (2, 1, 3), (2, 2, 6)])
def test_twisted_hs_matches_operator_oracle(nab):
    assert hilbert_samuel(twisted_spair(*nab).algebra) == oracles.operator_algebra_hs(*oracles.deltas(*nab))


def test_twisted_dimension_grid():
    for n in (1, 2, 3):
        for a in (1, 2):
            for b in range(n * a + 1, n * a + 3):
                p = twisted_spair(n, a, b)
                assert p.dim == dimension_formula(n, a, b)
                assert validate(p)


def test_twisted_errors():
    with pytest.raises(NZero):
        twisted_spair(0, 1, 1)
    with pytest.raises(NotAmple):
        twisted_spair(1, 2, 2)


def test_gorenstein_iff_box_for_normalized():
    for n in range(0, 3):
        for a in range(1, 3):
            for b in range(n * a + 1, n * a + 3):
                p = normalized_spair(n, a, b)
                assert is_gorenstein(p.algebra) == is_box(p.quotient)[0] == (n == 0)
