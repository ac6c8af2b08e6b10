"""
Right-action matrix Weyl algebra.

An operator is stored as sum_i d^i a_i(x) with d = d/dx on the left and the
coefficient on the right, acting on row-type matrix functions by
f . (d^i a) = f^(i) a. Products follow a d = d a + a', equivalently
x d - d x = 1, and multiply(a, b) applies a first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence, Union

from .exactnum import (
    I_UNIT,
    NEG_INF,
    ONE,
    ZERO,
    ExactArithmeticError,
    ExactMatrix,
    GaussianRational,
    MatPoly,
    MatRatFun,
    Poly,
    falling_factorial,
    gr,
    matpoly_from_json,
    matpoly_to_json,
)

Coeff = Union[MatPoly, MatRatFun]


class NotFiltrationPreserving(ExactArithmeticError):
    def __init__(self, index: int, degree: int):
        super().__init__(f"deg a_{index} = {degree} exceeds {index}")
        self.index = index
        self.degree = degree


class UnsupportedWeight(ExactArithmeticError):
    pass


class SingularLeadingCoefficient(ExactArithmeticError):
    pass


def _is_rat(c) -> bool:
    return isinstance(c, MatRatFun)


def _zero_like(n: int, rational: bool) -> Coeff:
    return MatRatFun.zero(n) if rational else MatPoly.zero(n)


class MatDiffOp:
    """sum_i d^i a_i with MatPoly (or MatRatFun) coefficients."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs: Sequence[Coeff], n: Optional[int] = None):
        cs = list(coeffs)
        if n is None:
            if not cs:
                raise ValueError("dimension needed for the zero operator")
            n = cs[0].shape[0]
        if any(_is_rat(c) for c in cs):
            cs = [c if _is_rat(c) else MatRatFun._lift(c) for c in cs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self.n = n

    # constructors
    @classmethod
    def zero(cls, n: int) -> "MatDiffOp":
        return cls([], n)

    @classmethod
    def const(cls, m: Union[ExactMatrix, MatPoly, MatRatFun]) -> "MatDiffOp":
        if isinstance(m, ExactMatrix):
            m = MatPoly.const(m)
        return cls([m], m.shape[0])

    @classmethod
    def identity(cls, n: int) -> "MatDiffOp":
        return cls.const(ExactMatrix.identity(n))

    @classmethod
    def d(cls, n: int = 1) -> "MatDiffOp":
        return cls([MatPoly.zero(n), MatPoly.identity(n)], n)

    @classmethod
    def x(cls, n: int = 1) -> "MatDiffOp":
        return cls([MatPoly.x_times(ExactMatrix.identity(n))], n)

    @classmethod
    def scalar(cls, ops: Sequence[Poly], n: int) -> "MatDiffOp":
        """sum_i d^i p_i(x) I for scalar polynomials p_i."""
        return cls([MatPoly.scalar_poly(p, n) for p in ops], n)

    @property
    def order(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def rational(self) -> bool:
        return bool(self.coeffs) and _is_rat(self.coeffs[0])

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_polynomial(self) -> bool:
        return all(not _is_rat(c) or c.is_polynomial() for c in self.coeffs)

    def to_poly(self) -> "MatDiffOp":
        return MatDiffOp([c.to_matpoly() if _is_rat(c) else c for c in self.coeffs], self.n)

    def to_rational(self) -> "MatDiffOp":
        return MatDiffOp([MatRatFun._lift(c) for c in self.coeffs], self.n)

    def coeff(self, i: int) -> Coeff:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _zero_like(self.n, self.rational)

    # ring structure
    def __add__(self, other: "MatDiffOp") -> "MatDiffOp":
        other = _as_op(other, self.n)
        a, b = list(self.coeffs), list(other.coeffs)
        if self.rational != other.rational:
            a = [MatRatFun._lift(c) for c in a]
            b = [MatRatFun._lift(c) for c in b]
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return MatDiffOp(out, self.n)

    __radd__ = __add__

    def __neg__(self) -> "MatDiffOp":
        return MatDiffOp([-c for c in self.coeffs], self.n)

    def __sub__(self, other: "MatDiffOp") -> "MatDiffOp":
        return self + (-_as_op(other, self.n))

    def __rsub__(self, other) -> "MatDiffOp":
        return _as_op(other, self.n) - self

    def scale(self, s) -> "MatDiffOp":
        return MatDiffOp([c.scale(s) for c in self.coeffs], self.n)

    def __mul__(self, other) -> "MatDiffOp":
        if isinstance(other, (int, GaussianRational)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        return multiply(self, _as_op(other, self.n))

    def __rmul__(self, other) -> "MatDiffOp":
        if isinstance(other, (int, GaussianRational)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        return multiply(_as_op(other, self.n), self)

    def __pow__(self, k: int) -> "MatDiffOp":
        out = MatDiffOp.identity(self.n)
        for _ in range(k):
            out = multiply(out, self)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatDiffOp):
            return NotImplemented
        if self.n != other.n or len(self.coeffs) != len(other.coeffs):
            return False
        if self.rational == other.rational:
            return self.coeffs == other.coeffs
        return all(MatRatFun._lift(a) == MatRatFun._lift(b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((self.n, tuple(MatRatFun._lift(c) for c in self.coeffs)))

    def __repr__(self) -> str:
        return f"MatDiffOp({list(self.coeffs)!r})"

    def to_json(self) -> dict:
        return {"dcoeffs": [matpoly_to_json(c) for c in self.to_poly().coeffs]}

    @classmethod
    def from_json(cls, data: dict, n: Optional[int] = None) -> "MatDiffOp":
        cs = [matpoly_from_json(c, n) for c in data["dcoeffs"]]
        if not cs:
            if n is None:
                raise ValueError("empty operator needs a dimension")
            return cls.zero(n)
        return cls(cs, cs[0].shape[0])


def _as_op(v, n: int) -> MatDiffOp:
    if isinstance(v, MatDiffOp):
        return v
    if isinstance(v, (ExactMatrix, MatPoly, MatRatFun)):
        return MatDiffOp.const(v)
    if isinstance(v, Poly):
        return MatDiffOp.const(MatPoly.scalar_poly(v, n))
    return MatDiffOp.const(ExactMatrix.scalar(n, gr(v)))


def multiply(a: MatDiffOp, b: MatDiffOp) -> MatDiffOp:
    """Composite operator: apply(multiply(a, b), f) = apply(b, apply(a, f))."""
    n = a.n
    if a.is_zero() or b.is_zero():
        return MatDiffOp.zero(n)
    rational = a.rational or b.rational
    lift = MatRatFun._lift if rational else (lambda c: c)
    acoef = [lift(c) for c in a.coeffs]
    bcoef = [lift(c) for c in b.coeffs]
    top_j = len(bcoef) - 1
    # derivatives of each a_i up to the order of b
    derivs = []
    for c in acoef:
        ds = [c]
        for _ in range(top_j):
            ds.append(ds[-1].deriv())
        derivs.append(ds)
    out: list = [None] * (len(acoef) + len(bcoef) - 1)
    for i, ds in enumerate(derivs):
        for j, bj in enumerate(bcoef):
            if bj.is_zero():
                continue
            for k in range(j + 1):
                ak = ds[k]
                if ak.is_zero():
                    continue
                term = ak * bj
                c = comb(j, k)
                if c != 1:
                    term = term.scale(c)
                idx = i + j - k
                out[idx] = term if out[idx] is None else out[idx] + term
    zero = _zero_like(n, rational)
    return MatDiffOp([c if c is not None else zero for c in out], n)


def apply(op: MatDiffOp, f):
    """Right action f . op = sum_i f^(i) a_i."""
    n = op.n
    if op.is_zero():
        return MatPoly.zero(f.shape[0], n) if isinstance(f, MatPoly) else MatRatFun.zero(n)
    acc = None
    g = f
    for i, a in enumerate(op.coeffs):
        if i:
            g = g.deriv()
        if g.is_zero():
            break
        if a.is_zero():
            continue
        if _is_rat(a) and not _is_rat(g):
            term = MatRatFun._lift(g) * a
        else:
            term = g * a
        acc = term if acc is None else acc + term
    if acc is None:
        return MatPoly.zero(f.shape[0], n) if not op.rational else MatRatFun.zero(n)
    return acc


def star_adjoint(op: MatDiffOp) -> MatDiffOp:
    """Anti-involution with d* = -d, x* = x, extending Hermitian conjugation."""
    n = op.n
    if op.is_zero():
        return op
    out: list = [None] * len(op.coeffs)
    for i, a in enumerate(op.coeffs):
        h = a.hermitian_conjugate()
        sign = -1 if i % 2 else 1
        for k in range(i + 1):
            term = h.scale(sign * comb(i, k))
            idx = i - k
            out[idx] = term if out[idx] is None else out[idx] + term
            h = h.deriv()
    zero = _zero_like(n, op.rational)
    return MatDiffOp([c if c is not None else zero for c in out], n)


def formal_w_adjoint(op: MatDiffOp, w) -> MatDiffOp:
    """w op* w^-1 for a weight P(x) r(x); coefficients are MatRatFun.

    Uses w d w^-1 = d + w'w^-1 and w a w^-1 = P a P^-1; the scalar base
    cancels. The result reports is_polynomial().
    """
    try:
        L = w.log_derivative()
        P = MatRatFun._lift(w.envelope)
    except AttributeError as exc:
        raise UnsupportedWeight("weight has no Pearson or envelope data") from exc
    n = op.n
    Pinv = P.inverse()
    star = star_adjoint(op)
    shifted = MatDiffOp([L, MatRatFun.identity(n)], n)
    acc = MatDiffOp.zero(n).to_rational()
    power = MatDiffOp.identity(n).to_rational()
    for i, b in enumerate(star.coeffs):
        if i:
            power = multiply(power, shifted)
        if b.is_zero():
            continue
        conj = P * MatRatFun._lift(b) * Pinv
        acc = acc + multiply(power, MatDiffOp.const(conj))
    return acc.to_rational() if not acc.is_zero() else acc


def symmetrize(op: MatDiffOp, w) -> tuple[MatDiffOp, MatDiffOp]:
    """(op + op^dag, i (op - op^dag)), both w-symmetric."""
    dag = formal_w_adjoint(op, w)
    if not dag.is_polynomial():
        raise ValueError("formal adjoint has non-polynomial coefficients")
    dag = dag.to_poly()
    return op + dag, (op - dag).scale(I_UNIT)


# ------------------------------------------------------------------- s-form


@dataclass(frozen=True)
class SFormOp:
    """sum_i d^i A_i(s) with s = d x; each A_i a matrix polynomial in s."""

    coeffs: tuple
    n: int

    @property
    def order(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def to_json(self) -> dict:
        return {"scoeffs": [matpoly_to_json(c) for c in self.coeffs]}

    @classmethod
    def build(cls, coeffs: Sequence[MatPoly], n: int) -> "SFormOp":
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        return cls(tuple(cs), n)


def to_s_form(op: MatDiffOp) -> SFormOp:
    """Rewrite a filtration-preserving operator using d^j x^j = s(s-1)...(s-j+1)."""
    n = op.n
    if op.rational:
        if not op.is_polynomial():
            raise ValueError("s-form needs polynomial coefficients")
        op = op.to_poly()
    for i, a in enumerate(op.coeffs):
        if a.degree > i:
            raise NotFiltrationPreserving(i, int(a.degree))
    order = len(op.coeffs)
    out = []
    for j in range(order):
        acc = MatPoly.zero(n)
        for k in range(order - j):
            c = op.coeffs[j + k].coeff(k)
            if c.is_zero():
                continue
            acc = acc + MatPoly.scalar_poly(falling_factorial(k), n) * c
        out.append(acc)
    return SFormOp.build(out, n)


_S_POWERS: dict = {}


def _s_power(m: int) -> MatDiffOp:
    """(d x)^m in d-normal form, scalar (N = 1)."""
    if m not in _S_POWERS:
        if m == 0:
            _S_POWERS[m] = MatDiffOp.identity(1)
        else:
            s = MatDiffOp([MatPoly.zero(1), MatPoly.x_times(ExactMatrix.identity(1))], 1)
            _S_POWERS[m] = multiply(_s_power(m - 1), s)
    return _S_POWERS[m]


def from_s_form(sop: SFormOp) -> MatDiffOp:
    n = sop.n
    acc = MatDiffOp.zero(n)
    for j, A in enumerate(sop.coeffs):
        for m, C in enumerate(A.coeffs):
            if C.is_zero():
                continue
            base = _s_power(m)
            cs = [MatPoly.zero(n)] * j + [MatPoly.scalar_poly(c.entry(0, 0), n) * C for c in base.coeffs]
            acc = acc + MatDiffOp(cs, n)
    return acc


def s_multiply(a: SFormOp, b: SFormOp) -> SFormOp:
    """Product in s-form using A(s) d^j = d^j A(s + j)."""
    n = a.n
    out: list = [MatPoly.zero(n)] * max(0, len(a.coeffs) + len(b.coeffs) - 1)
    for i, A in enumerate(a.coeffs):
        for j, B in enumerate(b.coeffs):
            out[i + j] = out[i + j] + A.shift_var(j) * B
    return SFormOp.build(out, n)


def eigenvalue_map(op: MatDiffOp) -> MatPoly:
    """Lambda(n): the s-free coefficient A_0 of the s-form, a matrix polynomial in n."""
    s = to_s_form(op)
    return s.coeffs[0] if s.coeffs else MatPoly.zero(op.n)


# -------------------------------------------------------- conjugation solver


def left_divide(y: MatDiffOp, nu: MatDiffOp) -> tuple[MatDiffOp, MatDiffOp]:
    """(X, R) with y = nu X + R and order(R) < order(nu), over MatRatFun."""
    n = nu.n
    r = nu.order
    if r == NEG_INF or r < 1:
        raise ValueError("divisor must have order at least 1")
    lead_inv = MatRatFun._lift(nu.coeffs[-1]).inverse()
    rem = y.to_rational()
    q = [MatRatFun.zero(n)] * max(0, int(rem.order) - r + 1) if not rem.is_zero() else []
    while not rem.is_zero() and rem.order >= r:
        m = int(rem.order)
        xk = lead_inv * rem.coeffs[-1]
        q[m - r] = q[m - r] + xk
        mono = MatDiffOp([MatRatFun.zero(n)] * (m - r) + [xk], n)
        rem = rem - multiply(nu, mono)
    return MatDiffOp(q, n) if q else MatDiffOp.zero(n), rem


def conjugate_solver(eta: MatDiffOp, nu: MatDiffOp, max_order: Optional[int] = None) -> Optional[MatDiffOp]:
    """X with eta nu = nu X and polynomial coefficients, or None.

    The coefficient-matching system for X is triangular in the d-order
    once the leading coefficient of nu is invertible over rational
    functions, so it is solved by back substitution (left division).
    """
    y = multiply(eta, nu)
    if nu.order < 1:
        raise ValueError("nu must have order at least 1")
    q, rem = left_divide(y, nu)
    if not rem.is_zero() or not q.is_polynomial():
        return None
    x = q.to_poly()
    if max_order is not None and x.order > max_order:
        return None
    return x


# ------------------------------------------------------------ kernel series


def _series_from(c: Union[MatPoly, ExactMatrix], K: int, n: int) -> list:
    if isinstance(c, ExactMatrix):
        c = MatPoly.const(c)
    return [c.coeff(k) if k <= c.degree else ExactMatrix.zeros(n) for k in range(K)]


def series_mul(a: list, b: list, K: int) -> list:
    out = []
    for k in range(K):
        acc = None
        for j in range(k + 1):
            if j < len(a) and k - j < len(b):
                if a[j].is_zero() or b[k - j].is_zero():
                    continue
                t = a[j] * b[k - j]
                acc = t if acc is None else acc + t
        out.append(acc if acc is not None else ExactMatrix.zeros(a[0].shape[0], b[0].shape[1]))
    return out


def series_deriv(a: list) -> list:
    return [a[k].scale(k) for k in range(1, len(a))]


def series_inverse(a: list, K: int) -> list:
    """Two-sided inverse of a matrix power series with invertible constant term."""
    a0inv = a[0].inverse()
    b = [a0inv]
    for k in range(1, K):
        acc = ExactMatrix.zeros(a[0].shape[0])
        for j in range(1, k + 1):
            if j < len(a) and not a[j].is_zero():
                acc = acc + a[j] * b[k - j]
        b.append(-(a0inv * acc))
    return b


def apply_series(op: MatDiffOp, psi: list) -> list:
    """psi . op truncated to the orders where it is exact."""
    K = len(psi)
    n = op.n
    acc = [ExactMatrix.zeros(psi[0].shape[0], n) for _ in range(K)]
    g = list(psi)
    for i, a in enumerate(op.to_poly().coeffs):
        if i:
            g = series_deriv(g)
        if not g:
            break
        prod = series_mul(g, _series_from(a, len(g), n), len(g))
        for k, m in enumerate(prod):
            acc[k] = acc[k] + m
    return acc[: max(0, K - int(op.order))] if op.order != NEG_INF else acc


@dataclass(frozen=True)
class KernelBasis:
    expansion_order: int
    elements: tuple  # each a tuple of K ExactMatrix coefficients

    def residual(self, op: MatDiffOp) -> list:
        return [apply_series(op, list(e)) for e in self.elements]


def kernel_series(op: MatDiffOp, K: int = 32) -> KernelBasis:
    """Truncated power-series basis of ker(op) at x = 0 (psi . op = 0)."""
    op = op.to_poly()
    r = int(op.order)
    n = op.n
    if r < 1:
        raise ValueError("kernel series needs an operator of order >= 1")
    if K < r:
        raise ValueError("expansion order below the operator order")
    lead = op.coeffs[-1]
    if lead(ZERO).det().is_zero():
        raise SingularLeadingCoefficient("leading coefficient is singular at 0")
    lead_inv = series_inverse(_series_from(lead, K, n), K)
    b = [series_mul(_series_from(op.coeff(i), K, n), lead_inv, K) for i in range(r)]
    # companion block matrix U(x) = sum_m U_m x^m for Y' = Y U, Y = (psi, ..., psi^(r-1))
    size = r * n
    U = []
    for m in range(K):
        rows = [[ZERO] * size for _ in range(size)]
        for i in range(r):
            if m == 0 and i >= 1:
                for t in range(n):
                    rows[i * n + t][(i - 1) * n + t] = ONE
            bm = b[i][m]
            for s in range(n):
                for t in range(n):
                    rows[i * n + s][(r - 1) * n + t] = -bm.e[s][t]
        U.append(ExactMatrix._of(tuple(tuple(rw) for rw in rows)))
    elements = []
    for e in range(r):
        row0 = [[ZERO] * size for _ in range(n)]
        for blk in range(e + 1):
            for t in range(n):
                row0[t][blk * n + t] = ONE
        c = [ExactMatrix._of(tuple(tuple(rw) for rw in row0))]
        for j in range(K - 1):
            acc = ExactMatrix.zeros(n, size)
            for i in range(j + 1):
                if not U[j - i].is_zero():
                    acc = acc + c[i] * U[j - i]
            c.append(acc.scale(GaussianRational(1) / (j + 1)))
        psi = tuple(ExactMatrix._of(tuple(tuple(rw[:n]) for rw in ck.e)) for ck in c)
        elements.append(psi)
    return KernelBasis(K, tuple(elements))
