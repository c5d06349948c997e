from math import comb

import pytest
from hypothesis import given, strategies as st

from depthlab.bounds import (
    bound_rows,
    bound_table_csv,
    f_closed_form,
    f_value,
    factorial_reduction_holds,
    g_lower,
    g_upper,
    path_order_bracket,
    verify_f_closed_form,
)
from depthlab.errors import InvalidInputError


def test_f_examples():
    for k in range(1, 15):
        assert f_value(k, 3) == k
        assert f_value(k, 2) == 1
    assert f_value(2, 4) == 3 == f_closed_form(2, 4)
    assert f_value(3, 6) == 11 == f_value(3, 4) + f_value(2, 6) + 1
    assert f_closed_form(3, 6) == 2 * comb(4, 2) - 1


def test_g_examples():
    for k in range(1, 15):
        assert g_lower(k, 5) == comb(k + 1, 2)
        assert g_lower(k, 4) == k and g_upper(k, 4) == 2 * k
        assert g_lower(k, 2) == 1


def test_domain():
    with pytest.raises(InvalidInputError):
        f_value(0, 4)
    with pytest.raises(InvalidInputError):
        g_lower(2, 1)
    with pytest.raises(InvalidInputError):
        factorial_reduction_holds(1, 3, shift=1)


def test_closed_form_report():
    report = verify_f_closed_form(12, 24)
    assert report.ok and report.checked > 0
    assert verify_f_closed_form(12, 12).ok


@given(st.integers(1, 40), st.integers(2, 60))
def test_recursion_properties(k, t):
    f = f_value(k, t)
    assert g_lower(k, t) <= f < g_upper(k, t)
    assert f <= f_value(k, t + 1)
    if t % 2 == 0:
        assert f == f_closed_form(k, t)


def test_big_values_are_exact():
    # far past 64 bits; Python integers keep this exact
    k, t = 60, 200
    assert f_value(k, t) == f_closed_form(k, t)
    assert f_value(k, t) > 2 ** 64


def test_table():
    rows = bound_rows(3, 6)
    assert len(rows) == 3 * 5
    text = bound_table_csv(3, 6)
    lines = text.strip().splitlines()
    assert lines[0] == "k,t,f,g_lower,g_upper,closed_form,conjectured_g"
    assert lines[1:] == [",".join(str(r[c]) for c in ("k", "t", "f", "g_lower", "g_upper", "closed_form", "conjectured_g")) for r in rows]


def test_reduction_arithmetic():
    for k in range(1, 5):
        for ell in range(1, 31):
            assert factorial_reduction_holds(k, ell)
            if k >= 2:
                assert factorial_reduction_holds(k, ell, shift=1)
    assert list(path_order_bracket(3, 2)) == [4, 5, 6]
