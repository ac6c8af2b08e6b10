from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import gaussian, matpolys, matrices, nonzero_gaussian, polys
from domp.exactnum import (
    ExactMatrix,
    GaussianRational,
    MatPoly,
    MatRatFun,
    Poly,
    RatFun,
    ZeroDeterminant,
    count_real_roots,
    gr,
    hermitian_conjugate,
    mat_inverse,
    matpoly_from_json,
    matpoly_to_json,
    nonnegative_integer_roots,
    poly_gcd_reduce,
)
from oracles import to_sym, x

I2 = ExactMatrix.identity(2)


# ------------------------------------------------------------ scalars


@given(gaussian, gaussian, gaussian)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == GaussianRational(0)
    if not b.is_zero():
        assert (a / b) * b == a


@given(gaussian)
def test_conjugation_and_modulus(z):
    assert z.conj().conj() == z
    m = z * z.conj()
    assert m.im == 0 and m == z.abs2()


@given(gaussian)
def test_lowest_terms_positive_denominators(z):
    assert z.re.denominator > 0 and z.im.denominator > 0
    assert Fraction(z.re.numerator, z.re.denominator) == z.re


@given(gaussian)
def test_string_round_trip(z):
    assert GaussianRational.parse(str(z)) == z


def test_string_format():
    z = GaussianRational(Fraction(1, 2), Fraction(-3, 4))
    assert GaussianRational.parse(str(z)) == z
    assert str(z) == "1/2-3/4 i"
    assert str(GaussianRational(0, 1)) == "1 i"
    assert str(GaussianRational(3)) == "3"
    assert GaussianRational.parse("i") == GaussianRational(0, 1)
    assert GaussianRational.parse("-2/3") == GaussianRational(Fraction(-2, 3))


@given(gaussian, gaussian)
def test_scalar_agrees_with_sympy(a, b):
    assert to_sym(a * b) == sp.expand(to_sym(a) * to_sym(b))
    if not b.is_zero():
        assert sp.simplify(to_sym(a / b) - to_sym(a) / to_sym(b)) == 0


# -------------------------------------------------------- polynomials


@given(polys(), polys())
def test_poly_ring_against_sympy(p, q):
    assert sp.expand(to_sym(p * q) - to_sym(p) * to_sym(q)) == 0
    assert sp.expand(to_sym(p + q) - to_sym(p) - to_sym(q)) == 0


@given(polys(4), polys(2))
def test_divmod_identity(p, q):
    assume(not q.is_zero())
    d, r = p.divmod(q)
    assert d * q + r == p
    assert r.is_zero() or r.degree < q.degree


@given(polys(3), polys(2), polys(2))
def test_gcd_divides(p, q, g):
    assume(not g.is_zero() and not (p.is_zero() and q.is_zero()))
    h = (p * g).gcd(q * g)
    assert ((p * g) % h).is_zero() and ((q * g) % h).is_zero()
    assert (h % g.monic()).is_zero()


def test_poly_gcd_reduce_examples():
    assert poly_gcd_reduce(Poly([-1, 0, 1]), Poly([-1, 1])) == (Poly([1, 1]), Poly([1]))
    assert poly_gcd_reduce(Poly([0, 2]), Poly([2])) == (Poly([0, 1]), Poly([1]))
    assert poly_gcd_reduce(Poly([0, 1]), Poly([0, 0, 1])) == (Poly([1]), Poly([0, 1]))


@given(polys(3), polys(2, nonzero_gaussian))
def test_ratfun_reduced_monic(p, q):
    assume(not q.is_zero())
    f = RatFun(p * q, q * q)
    assert f.den.lc() == GaussianRational(1)
    assert f.num.gcd(f.den).degree == 0 or f.num.is_zero()
    assert sp.simplify(to_sym(f) - to_sym(p) / to_sym(q)) == 0


@given(polys(2), polys(2, nonzero_gaussian), polys(2), polys(2, nonzero_gaussian))
def test_ratfun_field_ops(a, b, c, d):
    assume(not b.is_zero() and not d.is_zero())
    f, g = RatFun(a, b), RatFun(c, d)
    assert sp.simplify(to_sym(f + g) - (to_sym(f) + to_sym(g))) == 0
    assert sp.simplify(to_sym(f * g) - to_sym(f) * to_sym(g)) == 0
    assert sp.simplify(to_sym(f.deriv()) - sp.diff(to_sym(f), x)) == 0


def test_count_real_roots():
    p = Poly([-1, 0, 1])  # x^2 - 1
    assert count_real_roots(p) == 2
    assert count_real_roots(p, Fraction(-1), Fraction(1)) == 0
    assert count_real_roots(p, Fraction(0), float("inf")) == 1
    assert count_real_roots(Poly([1, 0, 1])) == 0
    assert count_real_roots(Poly([0, 0, 1])) == 1  # double root counted once


def test_nonnegative_integer_roots():
    p = Poly([-6, 11, -6, 1])  # (n-1)(n-2)(n-3)
    assert nonnegative_integer_roots(p) == [1, 2, 3]
    assert nonnegative_integer_roots(Poly([1, 2])) == []


# ----------------------------------------------------------- matrices


@given(matrices())
def test_matrix_hermitian_involution_and_identity(m):
    assert m.H().H() == m
    assert m * I2 == m and I2 * m == m


@given(matrices())
def test_matrix_inverse_against_sympy(m):
    if m.det().is_zero():
        with pytest.raises(ZeroDeterminant):
            m.inverse()
        return
    inv = m.inverse()
    assert inv * m == I2
    assert sp.simplify(to_sym(inv) - to_sym(m).inv()) == sp.zeros(2, 2)


@given(matrices(3))
def test_rank_against_sympy(m):
    assert m.rank() == to_sym(m).rank()


def test_positive_definite():
    assert ExactMatrix([[2, 1], [1, 2]]).is_positive_definite()
    assert not ExactMatrix([[1, 2], [2, 1]]).is_positive_definite()
    assert not ExactMatrix([[1, GaussianRational(0, 1)], [GaussianRational(0, -1), 1]]).is_positive_definite()
    assert ExactMatrix([[3, GaussianRational(0, 1)], [GaussianRational(0, -1), 1]]).is_positive_definite()


# ------------------------------------------------------ matrix polynomials


@given(matpolys(), matpolys(), gaussian)
def test_evaluation_is_ring_homomorphism(a, b, z):
    assert (a * b)(z) == a(z) * b(z)
    assert (a + b)(z) == a(z) + b(z)


@given(matpolys())
def test_matpoly_hermitian_conjugate_involution(m):
    assert hermitian_conjugate(hermitian_conjugate(m)) == m


def test_matpoly_degree_sentinel():
    z = MatPoly.zero(2)
    assert z.degree < 0 and z.degree == float("-inf")
    assert MatPoly([I2, ExactMatrix.zeros(2)]).degree == 0


def test_hermitian_conjugate_examples():
    m = MatPoly.const(ExactMatrix.unit(2, 0, 1, GaussianRational(1, 2)))
    assert hermitian_conjugate(m) == MatPoly.const(ExactMatrix.unit(2, 1, 0, GaussianRational(1, -2)))
    c = GaussianRational(2, 1)
    v = MatPoly.const(ExactMatrix([[0, c], [c.conj(), 0]]))
    assert hermitian_conjugate(v) == v


def test_mat_inverse_examples():
    assert mat_inverse(MatPoly.identity(2)) == MatRatFun.identity(2)
    v1 = MatPoly([ExactMatrix([[0, 1], [1, 0]]), ExactMatrix([[0, 0], [0, -2]])])
    inv = mat_inverse(v1)
    assert inv.is_polynomial()
    assert inv.to_matpoly() == MatPoly([ExactMatrix([[0, 1], [1, 0]]), ExactMatrix([[2, 0], [0, 0]])])
    assert MatRatFun._lift(v1) * inv == MatRatFun.identity(2)
    xi = mat_inverse(MatPoly.x_times(I2))
    assert xi.common_denominator() == Poly([0, 1])
    assert xi == MatRatFun.scalar(RatFun(Poly([1]), Poly([0, 1])), 2)


@given(matpolys(2, 1))
def test_mat_inverse_against_sympy(m):
    assume(not m.det().is_zero())
    inv = mat_inverse(m)
    assert MatRatFun._lift(m) * inv == MatRatFun.identity(2)
    assert sp.simplify(to_sym(inv) - to_sym(m).inv()) == sp.zeros(2, 2)


@given(matpolys())
def test_matpoly_json_round_trip(m):
    assert matpoly_from_json(matpoly_to_json(m), 2) == m


@given(st.integers(0, 5), gaussian)
def test_shift_var(k, z):
    p = MatPoly.x_times(I2, k)
    assert p.shift_var(z)(gr(0)) == I2.scale(z ** k)
