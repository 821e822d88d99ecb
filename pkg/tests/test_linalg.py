"""Exact linear algebra over expression entries."""
import pytest

from parageo.expr import Expr, parse_expr
from parageo.linalg import (mat_adjugate, mat_det, mat_identity, mat_mul,
                            solve_exact)

XY = ("x", "y")


def e(text):
    return parse_expr(text, XY)


def test_det_identity():
    assert mat_det(mat_identity(XY, 3)) == Expr.one(XY)


def test_det_with_function_entries():
    A = [[e("x"), e("1")], [e("y"), e("x")]]
    assert mat_det(A) == e("x^2 - y")


def test_det_singular():
    A = [[e("x"), e("x")], [e("y"), e("y")]]
    assert mat_det(A).is_zero


def test_adjugate_identity_property():
    A = [[e("x"), e("1"), e("0")],
         [e("0"), e("y"), e("2")],
         [e("1"), e("0"), e("x + y")]]
    det = mat_det(A)
    prod = mat_mul(A, mat_adjugate(A))
    for i in range(3):
        for j in range(3):
            want = det if i == j else Expr.zero(XY)
            assert prod[i][j] == want


def test_adjugate_of_1x1():
    assert mat_adjugate([[e("x")]])[0][0] == Expr.one(XY)


def test_solve_unique():
    rows = [([e("1"), e("1")], e("3")),
            ([e("1"), e("-1")], e("1"))]
    sol = solve_exact(rows, 2)
    assert sol.status == "unique"
    assert sol.solution[0] == e("2")
    assert sol.solution[1] == e("1")


def test_solve_function_coefficients():
    rows = [([e("x")], e("x^2"))]
    sol = solve_exact(rows, 1)
    assert sol.status == "unique"
    assert sol.solution[0] == e("x")


def test_solve_underdetermined_pins_free_unknowns():
    rows = [([e("1"), e("0")], e("2"))]
    sol = solve_exact(rows, 2)
    assert sol.status == "underdetermined"
    assert sol.free_columns == [1]
    assert sol.solution[0] == e("2")
    assert sol.solution[1].is_zero


def test_solve_inconsistent_reports_witness():
    rows = [([e("1"), e("0")], e("1")),
            ([e("2"), e("0")], e("2")),
            ([e("1"), e("0")], e("5"))]
    sol = solve_exact(rows, 2)
    assert sol.status == "inconsistent"
    assert sol.witness_row == 2
    assert sol.witness_residual == e("4")


def test_solve_all_zero_rows_with_zero_rhs():
    rows = [([e("0")], e("0"))]
    sol = solve_exact(rows, 1)
    assert sol.status == "underdetermined"
    assert sol.solution[0].is_zero


def test_solve_empty_system_rejected():
    with pytest.raises(ValueError):
        solve_exact([], 1)
