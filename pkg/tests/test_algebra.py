from fractions import Fraction

import pytest

from addact.algebra import (
    AlgebraTable,
    check_table,
    exp_element,
    hilbert_samuel,
    is_gorenstein,
    local_view,
    log_element,
    socle,
    subalgebra_generated,
    verify_table,
)
from addact.derivation import delta_matrices
from addact.errors import ElementNotInMaximalIdeal, FormatError, NotLocal
from addact.exactlin import span
from addact.hirzebruch import twisted_spair
from addact.monomial import quotient_from_generators, to_algebra_table


def truncated(k: int) -> AlgebraTable:
    """K[x]/(x^k)."""
    return to_algebra_table(quotient_from_generators(1, [(k,)]))


def ts_algebra() -> AlgebraTable:
    return to_algebra_table(quotient_from_generators(2, [(3, 0), (1, 1), (0, 3)], ("t", "s")))


def test_verify_table_examples():
    assert verify_table(truncated(2))
    assert verify_table(AlgebraTable(["1"], 0, {(0, 0): {0: 1}}))


def test_non_associative_table_has_witness():
    # basis 1, x, y with x*x = y, x*y = x, y*y = 0
    a = AlgebraTable(["1", "x", "y"], 0, {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1},
        (1, 1): {2: 1}, (1, 2): {1: 1},
    })
    v = check_table(a)
    assert v is not None and v.kind == "associativity"
    i, j, k = v.indices
    # recheck the witness by hand
    left = a.mul(a.mul(a.basis_vector(i), a.basis_vector(j)), a.basis_vector(k))
    right = a.mul(a.basis_vector(i), a.mul(a.basis_vector(j), a.basis_vector(k)))
    assert left != right


def test_local_view_truncated():
    v = local_view(truncated(3))
    assert v.maximal_ideal == span([(0, 1, 0), (0, 0, 1)], 3)
    assert v.nilpotency_index == 3


def test_product_of_fields_is_not_local():
    kk = AlgebraTable(["1", "e"], 0, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 1): {1: 1}})
    with pytest.raises(NotLocal):
        local_view(kk)


def test_ts_algebra_local_structure():
    a = ts_algebra()
    v = local_view(a)
    assert a.basis_labels == ("1", "t", "s", "t^2", "s^2")
    assert v.maximal_ideal.dim == 4 and not v.maximal_ideal.contains(a.unit)
    assert v.nilpotency_index == 3


def test_hilbert_samuel_examples():
    assert hilbert_samuel(local_view(truncated(4))) == (1, 1, 1, 1)
    assert hilbert_samuel(twisted_spair(1, 1, 3).algebra) == (1, 2, 2, 1, 1)
    assert hilbert_samuel(twisted_spair(1, 1, 2).algebra) == (1, 2, 1, 1)


def test_socle_examples():
    box = to_algebra_table(quotient_from_generators(2, [(3, 0), (0, 2)]))
    s = socle(local_view(box))
    assert s.dim == 1 and s.contains(box.element("x^2*y"))
    sq = to_algebra_table(quotient_from_generators(2, [(2, 0), (1, 1), (0, 2)]))
    assert socle(local_view(sq)) == span([sq.element("x"), sq.element("y")], 3)
    a = ts_algebra()
    assert socle(local_view(a)) == span([a.element("t^2"), a.element("s^2")], 5)


def test_gorenstein_examples():
    box = to_algebra_table(quotient_from_generators(2, [(2, 0), (0, 3)]))
    assert is_gorenstein(local_view(box))
    sq = to_algebra_table(quotient_from_generators(2, [(2, 0), (1, 1), (0, 2)]))
    assert not is_gorenstein(local_view(sq))
    assert is_gorenstein(local_view(truncated(5)))


def test_exp_examples():
    v = local_view(ts_algebra())
    assert exp_element(v, (0,) * 5) == (1, 0, 0, 0, 0)
    assert exp_element(v, (0, 2, 3, 0, 0)) == (1, 2, 3, 2, Fraction(9, 2))
    assert exp_element(local_view(truncated(3)), (0, 1, 0)) == (1, 1, Fraction(1, 2))


def test_exp_rejects_units():
    with pytest.raises(ElementNotInMaximalIdeal):
        exp_element(local_view(truncated(3)), (1, 0, 0))


def test_log_inverts_exp():
    v = local_view(ts_algebra())
    x = (0, Fraction(1, 3), -2, 5, 7)
    assert log_element(v, exp_element(v, x)) == x


def test_subalgebra_generated_examples():
    a = truncated(4)
    assert subalgebra_generated(a, []).dim == 1
    assert subalgebra_generated(a, [a.element("x")]).dim == 4
    d1, d2 = delta_matrices(1, 1, 2)
    assert subalgebra_generated(None, [d1.matrix, d2.matrix]).dim == 5


def test_table_roundtrip_and_format_errors():
    a = ts_algebra()
    assert AlgebraTable.from_dict(a.to_dict()) == a
    with pytest.raises(FormatError):
        AlgebraTable.from_dict({"dim": 2, "unit": 5, "mult": []})
    with pytest.raises(FormatError):
        AlgebraTable.from_dict({"dim": 2, "unit": 0, "mult": [[0, 1, 7, "1"]]})
    with pytest.raises(FormatError):
        AlgebraTable.from_dict({"dim": 2})
