from fractions import Fraction

import pytest
import sympy

import legproj

x = sympy.symbols("x")


def legendre_coeffs(expr, degree):
    """Legendre coefficients of a polynomial by orthogonal projection."""
    out = []
    for j in range(degree + 1):
        c = sympy.Rational(2 * j + 1, 2) * sympy.integrate(expr * sympy.legendre(j, x), (x, -1, 1))
        out.append(Fraction(int(c.p), int(c.q)))
    while out and out[-1] == 0:
        out.pop()
    return out


def from_coeffs(coeffs):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.legendre(j, x) for j, c in enumerate(coeffs))


def test_psi_matches_repeated_integration():
    for i, n in [(1, 1), (3, 2), (5, 3), (6, 0)]:
        expr = sympy.legendre(i, x)
        for _ in range(n):
            expr = sympy.integrate(expr, (x, -1, x))
        assert legproj.psi(i, n) == legendre_coeffs(sympy.expand(expr), i + n)


def test_psi_rejects_below_diagonal():
    with pytest.raises(ValueError):
        legproj.psi(0, 1)
    assert legproj.primitive(0, 1) == [Fraction(1), Fraction(1)]


def test_norms_and_spot_values():
    assert legproj.psi_norm_sq_closed(1, 1) == Fraction(4, 15)
    assert legproj.q_norm_sq(1, 1) == Fraction(26, 35)
    for p in range(0, 8):
        assert legproj.psi_norm_sq_closed(p, 0) == Fraction(2, 2 * p + 1)
    for p in range(1, 10):
        assert legproj.q_norm_sq(p, 1) == legproj.q1_norm_sq_closed(p)


def test_q_poly_interface_conditions():
    for p, nu in [(2, 1), (5, 2), (7, 3)]:
        q = from_coeffs(legproj.q_poly(p, nu))
        assert q.subs(x, 1) == 1
        assert q.subs(x, -1) == 0
        for k in range(1, nu + 1):
            d = sympy.diff(q, x, k)
            assert d.subs(x, 1) == 0
            assert d.subs(x, -1) == 0
    assert legproj.q_poly(2, 1)[1:] == [Fraction(3, 5), Fraction(5, 7), Fraction(-1, 10), Fraction(-3, 14)]


def test_wz_and_growth():
    for p in range(3, 12):
        for nu in range(1, 4):
            assert legproj.wz_sum(p, nu) == legproj.wz_sum_closed(p, nu)
    rows = legproj.growth_scan(1, 1, 3)
    assert [r[0] for r in rows] == [1, 2, 3]
    assert rows[0][1] == Fraction(26, 35)


def test_bound_check_and_cli():
    r = legproj.check_bound("exp", "L2_PROJ", 6, 2)
    assert r["pass"] and 0 < r["ratio"] <= 1
    with pytest.raises(ValueError):
        legproj.check_bound("exp", "NOPE", 6, 2)
    code, out, _ = legproj.run_cli(["emit-poly", "psi", "--i", "1", "--n", "1"])
    assert code == 0
    assert out == "0\t-1/3\n2\t1/3\n"
    code, _, _ = legproj.run_cli(["emit-poly", "psi", "--i", "0", "--n", "1"])
    assert code == 2
