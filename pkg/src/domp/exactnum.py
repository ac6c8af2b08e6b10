"""
Exact arithmetic over the Gaussian rationals Q(i).

Scalars, dense matrices, matrix polynomials in x and entrywise reduced
matrix rational functions. Every value is immutable; every operation
returns a fresh value.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

NEG_INF = float("-inf")  # degree of the zero polynomial


class ExactArithmeticError(ArithmeticError):
    pass


class ZeroDeterminant(ExactArithmeticError):
    pass


class ZeroDenominator(ExactArithmeticError):
    pass


Scalar = Union["GaussianRational", int, Fraction]

_TERM = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class GaussianRational:
    """(a + b i) / d with integers a, b and d > 0, gcd(a, b, d) = 1."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction] = 0):
        if isinstance(re, str):
            z = GaussianRational.parse(re)
            self._a, self._b, self._d = z._a, z._b, z._d
            return
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        g = math.gcd(a, b, d)
        self._a, self._b, self._d = a // g, b // g, d // g

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g != 1:
            a, b, d = a // g, b // g, d // g
        z = object.__new__(cls)
        z._a, z._b, z._d = a, b, d
        return z

    @staticmethod
    def coerce(v: Scalar) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, int):
            return GaussianRational._raw(v, 0, 1)
        if isinstance(v, Fraction):
            return GaussianRational._raw(v.numerator, 0, v.denominator)
        if isinstance(v, str):
            return GaussianRational.parse(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to GaussianRational")

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conj(self) -> "GaussianRational":
        if self._b == 0:
            return self
        return GaussianRational._raw(self._a, -self._b, self._d)

    def abs2(self) -> "GaussianRational":
        """|z|^2 as a real GaussianRational."""
        return GaussianRational._raw(self._a * self._a + self._b * self._b, 0, self._d * self._d)

    def __neg__(self) -> "GaussianRational":
        z = object.__new__(GaussianRational)
        z._a, z._b, z._d = -self._a, -self._b, self._d
        return z

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other: Scalar) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return GaussianRational._raw(self._a + other._a, self._b + other._b, d1)
        return GaussianRational._raw(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        if b1 == 0 and b2 == 0:
            return GaussianRational._raw(a1 * a2, 0, self._d * other._d)
        return GaussianRational._raw(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * other._d)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero GaussianRational")
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        n = a2 * a2 + b2 * b2
        return GaussianRational._raw((a1 * a2 + b1 * b2) * other._d, (b1 * a2 - a1 * b2) * other._d, self._d * n)

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int) -> "GaussianRational":
        if k < 0:
            return ONE / (self ** (-k))
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            o = GaussianRational.coerce(other)
            return self._a == o._a and self._b == 0 and self._d == o._d
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __complex__(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    def __float__(self) -> float:
        if self._b:
            raise TypeError("complex value has no float conversion")
        return self._a / self._d

    def real_sign(self) -> int:
        """Sign of a real value; raises for non-real input."""
        if self._b:
            raise ValueError("sign of a non-real value")
        return (self._a > 0) - (self._a < 0)

    def __str__(self) -> str:
        re_, im_ = self.re, self.im
        if im_ == 0:
            return str(re_)
        im_txt = f"{im_} i"
        if re_ == 0:
            return im_txt
        sign = "-" if im_ < 0 else "+"
        return f"{re_}{sign}{abs(im_)} i"

    def __repr__(self) -> str:
        return f"GaussianRational('{self}')"

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Parse "a/b+c/d i" (either part optional, "i" alone allowed)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar string")
        if not s.endswith("i"):
            m = _TERM.match(s)
            if not m:
                raise ValueError(f"bad scalar {text!r}")
            return GaussianRational(Fraction(int(m.group(1)), int(m.group(2) or 1)))
        body = s[:-1]
        # split at the last sign that is not the leading one
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        re_txt, im_txt = (body[:cut], body[cut:]) if cut > 0 else ("", body)
        if im_txt in ("", "+"):
            im_txt = "1"
        elif im_txt == "-":
            im_txt = "-1"
        m = _TERM.match(im_txt)
        if not m:
            raise ValueError(f"bad imaginary part in {text!r}")
        im = Fraction(int(m.group(1)), int(m.group(2) or 1))
        re_ = Fraction(0)
        if re_txt:
            m = _TERM.match(re_txt)
            if not m:
                raise ValueError(f"bad real part in {text!r}")
            re_ = Fraction(int(m.group(1)), int(m.group(2) or 1))
        return GaussianRational(re_, im)


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I_UNIT = GaussianRational._raw(0, 1, 1)

gr = GaussianRational.coerce


# ---------------------------------------------------------------- polynomials


class Poly:
    """Scalar polynomial, coefficients low to high, trailing zeros trimmed."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [gr(v) for v in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.c: tuple = tuple(c)

    @classmethod
    def _of(cls, c: list) -> "Poly":
        while c and c[-1].is_zero():
            c.pop()
        p = object.__new__(cls)
        p.c = tuple(c)
        return p

    @classmethod
    def const(cls, v: Scalar) -> "Poly":
        return cls._of([gr(v)])

    @classmethod
    def x(cls) -> "Poly":
        return cls._of([ZERO, ONE])

    @classmethod
    def monomial(cls, k: int, v: Scalar = 1) -> "Poly":
        return cls._of([ZERO] * k + [gr(v)])

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else NEG_INF

    def is_zero(self) -> bool:
        return not self.c

    def lc(self) -> GaussianRational:
        return self.c[-1] if self.c else ZERO

    def coeff(self, k: int) -> GaussianRational:
        return self.c[k] if 0 <= k < len(self.c) else ZERO

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return Poly._of(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._of([-v for v in self.c])

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            s = gr(other)
            if s.is_zero():
                return Poly._of([])
            return Poly._of([v * s for v in self.c])
        a, b = self.c, other.c
        if not a or not b:
            return Poly._of([])
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u.is_zero():
                continue
            for j, v in enumerate(b):
                out[i + j] = out[i + j] + u * v
        return Poly._of(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.c == other.c
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.c == Poly.const(other).c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.c)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        db = len(other.c) - 1
        lead = other.c[-1]
        if len(r) - 1 < db:
            return Poly._of([]), self
        q = [ZERO] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            t = r[k + db] / lead
            q[k] = t
            if t.is_zero():
                continue
            for j, v in enumerate(other.c):
                r[k + j] = r[k + j] - t * v
        return Poly._of(q), Poly._of(r[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if not self.c:
            return self
        lc = self.c[-1]
        if lc == ONE:
            return self
        return Poly._of([v / lc for v in self.c])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def deriv(self) -> "Poly":
        return Poly._of([v * k for k, v in enumerate(self.c)][1:])

    def __call__(self, x: Scalar) -> GaussianRational:
        x = gr(x)
        acc = ZERO
        for v in reversed(self.c):
            acc = acc * x + v
        return acc

    def eval_float(self, x: complex) -> complex:
        acc = 0j
        for v in reversed(self.c):
            acc = acc * x + complex(v)
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly._of([])
        for v in reversed(self.c):
            acc = acc * inner + Poly.const(v)
        return acc

    def shift(self, j: Scalar) -> "Poly":
        """p(s + j)."""
        return self.compose(Poly._of([gr(j), ONE]))

    def conj(self) -> "Poly":
        return Poly._of([v.conj() for v in self.c])

    def is_real(self) -> bool:
        return all(v.is_real() for v in self.c)

    def __repr__(self) -> str:
        if not self.c:
            return "Poly(0)"
        terms = []
        for k, v in enumerate(self.c):
            if v.is_zero():
                continue
            coef = f"({v})" if not v.is_real() else str(v)
            terms.append(coef if k == 0 else f"{coef}*x^{k}")
        return "Poly(" + " + ".join(terms) + ")"


def falling_factorial(k: int) -> Poly:
    """s (s-1) ... (s-k+1) as a polynomial in s."""
    out = Poly.const(1)
    for j in range(k):
        out = out * Poly([-j, 1])
    return out


def poly_gcd_reduce(n: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Cancel gcd(n, d) and normalise d to be monic."""
    if d.is_zero():
        raise ZeroDenominator("denominator is the zero polynomial")
    if n.is_zero():
        return n, Poly.const(1)
    if d.degree == 0:
        return n * (ONE / d.c[0]), Poly.const(1)
    g = n.gcd(d)
    if g.degree > 0:
        n, d = n // g, d // g
    lc = d.lc()
    if lc != ONE:
        inv = ONE / lc
        n, d = n * inv, d * inv
    return n, d


class RatFun:
    """Reduced scalar rational function num/den with monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
            reduced = True
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if not reduced:
            num, den = poly_gcd_reduce(num, den)
        self.num, self.den = num, den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other) -> "RatFun":
        if not isinstance(other, RatFun):
            other = RatFun(other)
        if self.den == other.den:
            if self.den.degree == 0:
                return RatFun(self.num + other.num, self.den, reduced=True)
            return RatFun(self.num + other.num, self.den)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den, reduced=True)

    def __sub__(self, other) -> "RatFun":
        if not isinstance(other, RatFun):
            other = RatFun(other)
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        return (-self) + other

    def __mul__(self, other) -> "RatFun":
        if not isinstance(other, RatFun):
            if isinstance(other, Poly):
                other = RatFun(other)
            else:
                return RatFun(self.num * gr(other), self.den, reduced=True)
        if self.num.is_zero() or other.num.is_zero():
            return RatFun(Poly())
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFun(self.num * other.num, reduced=True)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other) -> "RatFun":
        if not isinstance(other, RatFun):
            other = RatFun(other)
        return self * other.inverse()

    def deriv(self) -> "RatFun":
        if self.den.degree == 0:
            return RatFun(self.num.deriv(), reduced=True)
        return RatFun(self.num.deriv() * self.den - self.num * self.den.deriv(), self.den * self.den)

    def conj(self) -> "RatFun":
        return RatFun(self.num.conj(), self.den.conj(), reduced=True)

    def __call__(self, x: Scalar) -> GaussianRational:
        d = self.den(x)
        if d.is_zero():
            raise ZeroDivisionError("pole of rational function")
        return self.num(x) / d

    def eval_float(self, x: complex) -> complex:
        return self.num.eval_float(x) / self.den.eval_float(x)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction, GaussianRational)):
            return self == RatFun(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.den.degree == 0:
            return f"RatFun({self.num!r})"
        return f"RatFun({self.num!r} / {self.den!r})"


# ------------------------------------------------------------------- matrices


def _dot(row, col) -> GaussianRational:
    acc = ZERO
    for u, v in zip(row, col):
        if u._a or u._b:
            acc = acc + u * v
    return acc


class ExactMatrix:
    """Dense matrix of GaussianRational."""

    __slots__ = ("rows", "cols", "e")

    def __init__(self, entries: Sequence[Sequence[Scalar]]):
        e = tuple(tuple(gr(v) for v in row) for row in entries)
        if not e or any(len(r) != len(e[0]) for r in e):
            raise ValueError("ragged or empty matrix")
        self.e = e
        self.rows, self.cols = len(e), len(e[0])

    @classmethod
    def _of(cls, e: tuple) -> "ExactMatrix":
        m = object.__new__(cls)
        m.e, m.rows, m.cols = e, len(e), len(e[0])
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls._of(tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.scalar(n, ONE)

    @classmethod
    def scalar(cls, n: int, v: Scalar) -> "ExactMatrix":
        v = gr(v)
        return cls._of(tuple(tuple(v if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, *vals: Scalar) -> "ExactMatrix":
        n = len(vals)
        return cls._of(tuple(tuple(gr(vals[i]) if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int, v: Scalar = 1) -> "ExactMatrix":
        rows = [[ZERO] * n for _ in range(n)]
        rows[i][j] = gr(v)
        return cls._of(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> GaussianRational:
        return self.e[ij[0]][ij[1]]

    def is_zero(self) -> bool:
        return all(v.is_zero() for r in self.e for v in r)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix._of(tuple(tuple(u + v for u, v in zip(r, s)) for r, s in zip(self.e, other.e)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix._of(tuple(tuple(u - v for u, v in zip(r, s)) for r, s in zip(self.e, other.e)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._of(tuple(tuple(-u for u in r) for r in self.e))

    def scale(self, s: Scalar) -> "ExactMatrix":
        s = gr(s)
        return ExactMatrix._of(tuple(tuple(u * s for u in r) for r in self.e))

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in matrix product")
            cols = tuple(zip(*other.e))
            return ExactMatrix._of(tuple(tuple(_dot(r, c) for c in cols) for r in self.e))
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.e == other.e

    def __hash__(self) -> int:
        return hash(self.e)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._of(tuple(zip(*self.e)))

    def conj(self) -> "ExactMatrix":
        return ExactMatrix._of(tuple(tuple(u.conj() for u in r) for r in self.e))

    def H(self) -> "ExactMatrix":
        """Hermitian conjugate."""
        return ExactMatrix._of(tuple(tuple(u.conj() for u in r) for r in zip(*self.e)))

    def is_hermitian(self) -> bool:
        return self == self.H()

    def trace(self) -> GaussianRational:
        acc = ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.e[i][i]
        return acc

    def _gauss(self, rhs: "ExactMatrix | None" = None):
        """Row reduce [self | rhs]; returns (rank, det sign-tracked det, reduced rows, pivots)."""
        n, m = self.rows, self.cols
        k = rhs.cols if rhs is not None else 0
        a = [list(r) + (list(rhs.e[i]) if rhs is not None else []) for i, r in enumerate(self.e)]
        det = ONE
        pivots = []
        row = 0
        for col in range(m):
            piv = next((i for i in range(row, n) if not a[i][col].is_zero()), None)
            if piv is None:
                det = ZERO
                continue
            if piv != row:
                a[row], a[piv] = a[piv], a[row]
                det = -det
            p = a[row][col]
            det = det * p
            inv = ONE / p
            a[row] = [v * inv for v in a[row]]
            for i in range(n):
                if i != row and not a[i][col].is_zero():
                    f = a[i][col]
                    a[i] = [u - f * v for u, v in zip(a[i], a[row])]
            pivots.append(col)
            row += 1
            if row == n:
                break
        if row < m:
            det = ZERO
        return row, det, a, pivots, k

    def rank(self) -> int:
        return self._gauss()[0]

    def det(self) -> GaussianRational:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return self._gauss()[1]

    def inverse(self) -> "ExactMatrix":
        n = self.rows
        rank, det, a, _, _ = self._gauss(ExactMatrix.identity(n))
        if rank < n or self.rows != self.cols:
            raise ZeroDeterminant("singular constant matrix")
        return ExactMatrix._of(tuple(tuple(r[n:]) for r in a))

    def solve_left(self, rhs: "ExactMatrix") -> "ExactMatrix":
        """X with X * self = rhs (self square, invertible)."""
        return rhs * self.inverse()

    def leading_minors(self) -> list[GaussianRational]:
        out = []
        for k in range(1, self.rows + 1):
            out.append(ExactMatrix._of(tuple(r[:k] for r in self.e[:k])).det())
        return out

    def is_positive_definite(self) -> bool:
        if not self.is_hermitian():
            return False
        return all(m.is_real() and m.real_sign() > 0 for m in self.leading_minors())

    def to_complex(self) -> list[list[complex]]:
        return [[complex(v) for v in r] for r in self.e]

    def tolist(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.e]

    def __repr__(self) -> str:
        return "ExactMatrix(" + repr(self.tolist()) + ")"


def nullspace(rows: Sequence[Sequence[GaussianRational]], ncols: int) -> list[list[GaussianRational]]:
    """Basis of {v : A v = 0} for the exact matrix with the given rows."""
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    rank, _, a, pivots, _ = ExactMatrix._of(tuple(tuple(r) for r in rows))._gauss()
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][f]
        basis.append(v)
    return basis


def solve_linear(rows: Sequence[Sequence[GaussianRational]], rhs: Sequence[GaussianRational], ncols: int):
    """One solution of A v = b, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if not aug:
        return [ZERO] * ncols
    rank, _, a, pivots, _ = ExactMatrix._of(tuple(tuple(r) for r in aug))._gauss()
    if ncols in pivots:
        return None
    v = [ZERO] * ncols
    for r, pc in enumerate(pivots):
        v[pc] = a[r][ncols]
    return v


# -------------------------------------------------------- matrix polynomials


class MatPoly:
    """Matrix polynomial sum_k C_k x^k with ExactMatrix coefficients."""

    __slots__ = ("coeffs", "shape")

    def __init__(self, coeffs: Sequence[ExactMatrix], shape: tuple[int, int] | None = None):
        cs = list(coeffs)
        if shape is None:
            if not cs:
                raise ValueError("shape needed for an empty MatPoly")
            shape = cs[0].shape
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self.shape = shape

    @classmethod
    def const(cls, m: ExactMatrix) -> "MatPoly":
        return cls([m], m.shape)

    @classmethod
    def identity(cls, n: int) -> "MatPoly":
        return cls.const(ExactMatrix.identity(n))

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> "MatPoly":
        return cls([], (n, n if m is None else m))

    @classmethod
    def scalar_poly(cls, p: Poly, n: int) -> "MatPoly":
        return cls([ExactMatrix.scalar(n, v) for v in p.c], (n, n))

    @classmethod
    def from_entries(cls, grid: Sequence[Sequence[Poly]]) -> "MatPoly":
        rows, cols = len(grid), len(grid[0])
        grid = [[g if isinstance(g, Poly) else Poly.const(g) for g in r] for r in grid]
        deg = max((g.degree for r in grid for g in r), default=NEG_INF)
        if deg == NEG_INF:
            return cls([], (rows, cols))
        cs = [ExactMatrix._of(tuple(tuple(grid[i][j].coeff(k) for j in range(cols)) for i in range(rows)))
              for k in range(int(deg) + 1)]
        return cls(cs, (rows, cols))

    @classmethod
    def x_times(cls, m: ExactMatrix, k: int = 1) -> "MatPoly":
        return cls([ExactMatrix.zeros(*m.shape)] * k + [m], m.shape)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def n(self) -> int:
        return self.shape[0]

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> ExactMatrix:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ExactMatrix.zeros(*self.shape)

    def lc(self) -> ExactMatrix:
        return self.coeff(len(self.coeffs) - 1)

    def entry(self, i: int, j: int) -> Poly:
        return Poly._of([c.e[i][j] for c in self.coeffs])

    def entries(self) -> list[list[Poly]]:
        return [[self.entry(i, j) for j in range(self.shape[1])] for i in range(self.shape[0])]

    def __add__(self, other: "MatPoly") -> "MatPoly":
        if isinstance(other, ExactMatrix):
            other = MatPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, m in enumerate(b):
            out[k] = out[k] + m
        return MatPoly(out, self.shape)

    def __neg__(self) -> "MatPoly":
        return MatPoly([-m for m in self.coeffs], self.shape)

    def __sub__(self, other: "MatPoly") -> "MatPoly":
        if isinstance(other, ExactMatrix):
            other = MatPoly.const(other)
        return self + (-other)

    def scale(self, s: Scalar) -> "MatPoly":
        return MatPoly([m.scale(s) for m in self.coeffs], self.shape)

    def __mul__(self, other) -> "MatPoly":
        if isinstance(other, MatPoly):
            shape = (self.shape[0], other.shape[1])
            if not self.coeffs or not other.coeffs:
                return MatPoly([], shape)
            out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    p = a * b
                    out[i + j] = p if out[i + j] is None else out[i + j] + p
            zero = ExactMatrix.zeros(*shape)
            return MatPoly([m if m is not None else zero for m in out], shape)
        if isinstance(other, ExactMatrix):
            return MatPoly([m * other for m in self.coeffs], (self.shape[0], other.cols))
        if isinstance(other, Poly):
            return self * MatPoly.scalar_poly(other, self.shape[1])
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "MatPoly":
        if isinstance(other, ExactMatrix):
            return MatPoly([other * m for m in self.coeffs], (other.rows, self.shape[1]))
        if isinstance(other, Poly):
            return MatPoly.scalar_poly(other, self.shape[0]) * self
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "MatPoly":
        out = MatPoly.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatPoly):
            return NotImplemented
        return self.shape == other.shape and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.shape, self.coeffs))

    def deriv(self, k: int = 1) -> "MatPoly":
        cs = list(self.coeffs)
        for _ in range(k):
            cs = [m.scale(j) for j, m in enumerate(cs)][1:]
        return MatPoly(cs, self.shape)

    def __call__(self, x0: Scalar) -> ExactMatrix:
        x0 = gr(x0)
        acc = ExactMatrix.zeros(*self.shape)
        for m in reversed(self.coeffs):
            acc = acc.scale(x0) + m
        return acc

    def eval_float(self, x0: complex):
        import numpy as np

        acc = np.zeros(self.shape, dtype=complex)
        for m in reversed(self.coeffs):
            acc = acc * x0 + np.array(m.to_complex())
        return acc

    def hermitian_conjugate(self) -> "MatPoly":
        return MatPoly([m.H() for m in self.coeffs], (self.shape[1], self.shape[0]))

    def is_hermitian(self) -> bool:
        return self == self.hermitian_conjugate()

    def shift_var(self, j: Scalar) -> "MatPoly":
        """M(s + j)."""
        return MatPoly.from_entries([[p.shift(j) for p in r] for r in self.entries()])

    def det(self) -> Poly:
        return _det_poly(self.entries())

    def trace(self) -> Poly:
        acc = Poly()
        for i in range(self.shape[0]):
            acc = acc + self.entry(i, i)
        return acc

    def tolist(self) -> list:
        return [m.tolist() for m in self.coeffs]

    def __repr__(self) -> str:
        return f"MatPoly({self.tolist()!r}, shape={self.shape})"


def _det_poly(grid: list[list[Poly]]) -> Poly:
    n = len(grid)
    if n == 1:
        return grid[0][0]
    if n == 2:
        return grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0]
    acc = Poly()
    for j in range(n):
        if grid[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in grid[1:]]
        term = grid[0][j] * _det_poly(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def hermitian_conjugate(m: MatPoly) -> MatPoly:
    return m.hermitian_conjugate()


# ------------------------------------------------- matrix rational functions


class MatRatFun:
    """Matrix of reduced scalar rational functions."""

    __slots__ = ("e", "shape")

    def __init__(self, grid: Sequence[Sequence[RatFun]]):
        self.e = tuple(tuple(g if isinstance(g, RatFun) else RatFun(g) for g in r) for r in grid)
        self.shape = (len(self.e), len(self.e[0]))

    @classmethod
    def _of(cls, e: tuple) -> "MatRatFun":
        m = object.__new__(cls)
        m.e, m.shape = e, (len(e), len(e[0]))
        return m

    @classmethod
    def from_matpoly(cls, m: MatPoly) -> "MatRatFun":
        return cls._of(tuple(tuple(RatFun(p) for p in r) for r in m.entries()))

    @classmethod
    def identity(cls, n: int) -> "MatRatFun":
        return cls.from_matpoly(MatPoly.identity(n))

    @classmethod
    def zero(cls, n: int) -> "MatRatFun":
        z = RatFun(Poly())
        return cls._of(tuple((z,) * n for _ in range(n)))

    @classmethod
    def scalar(cls, f: RatFun, n: int) -> "MatRatFun":
        z = RatFun(Poly())
        return cls._of(tuple(tuple(f if i == j else z for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return self.shape[0]

    def is_zero(self) -> bool:
        return all(g.is_zero() for r in self.e for g in r)

    def is_polynomial(self) -> bool:
        return all(g.is_polynomial() for r in self.e for g in r)

    def to_matpoly(self) -> MatPoly:
        if not self.is_polynomial():
            raise ValueError("matrix rational function has non-polynomial entries")
        return MatPoly.from_entries([[g.num * (ONE / g.den.c[0]) for g in r] for r in self.e])

    @staticmethod
    def _lift(other) -> "MatRatFun":
        if isinstance(other, MatRatFun):
            return other
        if isinstance(other, MatPoly):
            return MatRatFun.from_matpoly(other)
        if isinstance(other, ExactMatrix):
            return MatRatFun.from_matpoly(MatPoly.const(other))
        raise TypeError(f"cannot lift {type(other).__name__} to MatRatFun")

    def __add__(self, other) -> "MatRatFun":
        o = MatRatFun._lift(other)
        return MatRatFun._of(tuple(tuple(u + v for u, v in zip(r, s)) for r, s in zip(self.e, o.e)))

    __radd__ = __add__

    def __neg__(self) -> "MatRatFun":
        return MatRatFun._of(tuple(tuple(-u for u in r) for r in self.e))

    def __sub__(self, other) -> "MatRatFun":
        return self + (-MatRatFun._lift(other))

    def __rsub__(self, other) -> "MatRatFun":
        return MatRatFun._lift(other) - self

    def scale(self, s) -> "MatRatFun":
        return MatRatFun._of(tuple(tuple(u * s for u in r) for r in self.e))

    def __mul__(self, other) -> "MatRatFun":
        if isinstance(other, (int, Fraction, GaussianRational, RatFun, Poly)):
            return self.scale(other)
        o = MatRatFun._lift(other)
        cols = tuple(zip(*o.e))
        out = []
        zero = RatFun(Poly())
        for r in self.e:
            row = []
            for c in cols:
                acc = zero
                for u, v in zip(r, c):
                    if not u.is_zero() and not v.is_zero():
                        acc = acc + u * v
                row.append(acc)
            out.append(tuple(row))
        return MatRatFun._of(tuple(out))

    def __rmul__(self, other) -> "MatRatFun":
        if isinstance(other, (int, Fraction, GaussianRational, RatFun, Poly)):
            return self.scale(other)
        return MatRatFun._lift(other) * self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (MatPoly, ExactMatrix)):
            other = MatRatFun._lift(other)
        if not isinstance(other, MatRatFun):
            return NotImplemented
        return self.e == other.e

    def __hash__(self) -> int:
        return hash(self.e)

    def deriv(self, k: int = 1) -> "MatRatFun":
        out = self
        for _ in range(k):
            out = MatRatFun._of(tuple(tuple(u.deriv() for u in r) for r in out.e))
        return out

    def hermitian_conjugate(self) -> "MatRatFun":
        return MatRatFun._of(tuple(tuple(u.conj() for u in r) for r in zip(*self.e)))

    def is_hermitian(self) -> bool:
        return self == self.hermitian_conjugate()

    def trace(self) -> RatFun:
        acc = RatFun(Poly())
        for i in range(self.shape[0]):
            acc = acc + self.e[i][i]
        return acc

    def common_denominator(self) -> Poly:
        d = Poly.const(1)
        for r in self.e:
            for g in r:
                if g.den.degree > 0:
                    d = d * (g.den // g.den.gcd(d))
        return d

    def __call__(self, x0: Scalar) -> ExactMatrix:
        return ExactMatrix._of(tuple(tuple(u(x0) for u in r) for r in self.e))

    def eval_float(self, x0: complex):
        import numpy as np

        return np.array([[u.eval_float(x0) for u in r] for r in self.e])

    def det(self) -> RatFun:
        n = self.shape[0]
        if n == 2:
            (a, b), (c, d) = self.e
            return a * d - b * c
        a = [list(r) for r in self.e]
        det = RatFun(Poly.const(1))
        for col in range(n):
            piv = next((i for i in range(col, n) if not a[i][col].is_zero()), None)
            if piv is None:
                return RatFun(Poly())
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            p = a[col][col]
            det = det * p
            for i in range(col + 1, n):
                if not a[i][col].is_zero():
                    f = a[i][col] / p
                    a[i] = [u - f * v for u, v in zip(a[i], a[col])]
        return det

    def inverse(self) -> "MatRatFun":
        n = self.shape[0]
        if n == 2:
            (a, b), (c, d) = self.e
            det = a * d - b * c
            if det.is_zero():
                raise ZeroDeterminant("determinant is identically zero")
            inv = det.inverse()
            return MatRatFun._of(((d * inv, -b * inv), (-c * inv, a * inv)))
        one, zero = RatFun(Poly.const(1)), RatFun(Poly())
        a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.e)]
        for col in range(n):
            piv = next((i for i in range(col, n) if not a[i][col].is_zero()), None)
            if piv is None:
                raise ZeroDeterminant("determinant is identically zero")
            a[col], a[piv] = a[piv], a[col]
            pinv = a[col][col].inverse()
            a[col] = [v * pinv for v in a[col]]
            for i in range(n):
                if i != col and not a[i][col].is_zero():
                    f = a[i][col]
                    a[i] = [u - f * v for u, v in zip(a[i], a[col])]
        return MatRatFun._of(tuple(tuple(r[n:]) for r in a))

    def __repr__(self) -> str:
        return f"MatRatFun({[list(r) for r in self.e]!r})"


def mat_inverse(m: MatPoly) -> MatRatFun:
    """Inverse of a square matrix polynomial as a matrix of rational functions."""
    if m.shape[0] != m.shape[1]:
        raise ValueError("inverse of a non-square matrix polynomial")
    if m.det().is_zero():
        raise ZeroDeterminant("determinant is identically zero")
    return MatRatFun.from_matpoly(m).inverse()


def as_matrat(v) -> MatRatFun:
    return MatRatFun._lift(v)


# ------------------------------------------------------------- serialisation


def matrix_from_json(rows) -> ExactMatrix:
    return ExactMatrix([[GaussianRational.parse(str(v)) for v in r] for r in rows])


def matpoly_from_json(data, n: int | None = None) -> MatPoly:
    """A MatPoly is a list of coefficient matrices, index = power of x."""
    if not isinstance(data, list):
        raise ValueError("MatPoly must be a list of matrices")
    cs = [matrix_from_json(m) for m in data]
    if not cs:
        if n is None:
            raise ValueError("empty MatPoly needs a dimension")
        return MatPoly.zero(n)
    if any(c.shape != cs[0].shape for c in cs):
        raise ValueError("MatPoly coefficients differ in shape")
    return MatPoly(cs, cs[0].shape)


def matpoly_to_json(m: MatPoly) -> list:
    return m.tolist()


def ratfun_to_json(f: RatFun) -> dict:
    return {"num": [str(v) for v in f.num.c], "den": [str(v) for v in f.den.c]}


def matrat_to_json(m: MatRatFun) -> list:
    return [[ratfun_to_json(g) for g in r] for r in m.e]


# ------------------------------------------------------------- real roots


def vanishing_order(p: Poly, e: Scalar) -> int:
    """Multiplicity of e as a root of p (0 if p(e) != 0); p must be nonzero."""
    if p.is_zero():
        raise ValueError("vanishing order of the zero polynomial")
    lin = Poly([-gr(e), 1])
    k = 0
    while True:
        q, r = p.divmod(lin)
        if not r.is_zero():
            return k
        p, k = q, k + 1


def _real_part_gcd(p: Poly) -> Poly:
    """Real polynomial whose real roots are exactly the real roots of p."""
    re = Poly([gr(c.re) for c in p.c])
    im = Poly([gr(c.im) for c in p.c])
    if im.is_zero():
        return re
    if re.is_zero():
        return im
    return re.gcd(im)


def _sign_at(p: Poly, x) -> int:
    if isinstance(x, float):
        if p.degree == 0:
            return p.c[0].real_sign()
        s = p.lc().real_sign()
        if x < 0 and int(p.degree) % 2:
            s = -s
        return s
    return p(x).real_sign()


def count_real_roots(p: Poly, lo=float("-inf"), hi=float("inf")) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    Endpoints are rationals or +-inf; Sturm sequences on the real part of p.
    """
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    r = _real_part_gcd(p)
    if r.degree <= 0:
        return 0
    for e in (lo, hi):
        if not isinstance(e, float):
            k = vanishing_order(r, e)
            if k:
                r = r // (Poly([-gr(e), 1]) ** k)
    if r.degree <= 0:
        return 0
    r = r // r.gcd(r.deriv())  # square-free part
    seq = [r, r.deriv()]
    while seq[-1].degree > 0:
        rem = seq[-2] % seq[-1]
        if rem.is_zero():
            break
        seq.append(-rem)

    def changes(x) -> int:
        signs = [s for s in (_sign_at(q, x) for q in seq) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return changes(lo) - changes(hi)


def nonnegative_integer_roots(p: Poly) -> list[int]:
    """All n in {0, 1, 2, ...} with p(n) = 0, for nonzero p."""
    if p.is_zero():
        raise ValueError("every integer is a root of the zero polynomial")
    if p.degree <= 0:
        return []
    lc = p.lc()
    bound = Fraction(1)
    for c in p.c[:-1]:
        a = (c / lc).abs2().re
        bound = max(bound, Fraction(math.isqrt(math.ceil(a)) + 1))
    top = int(bound) + 1
    return [n for n in range(top + 1) if p(n).is_zero()]
