"""Weight matrices w = P(x) r(x): classical scalar base times Hermitian envelope."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exactnum import (
    ONE,
    ExactArithmeticError,
    ExactMatrix,
    GaussianRational,
    MatPoly,
    MatRatFun,
    Poly,
    RatFun,
    matpoly_from_json,
    matpoly_to_json,
)
from .reports import FAIL, PASS, Check, Report, status_of

INF = math.inf
Endpoint = Union[Fraction, float]

FAMILIES = ("hermite", "laguerre", "gegenbauer", "jacobi")


class UnsupportedFamily(ExactArithmeticError):
    pass


class InvalidWeight(ValueError):
    pass


def _frac(v) -> Fraction:
    if isinstance(v, GaussianRational):
        if not v.is_real():
            raise InvalidWeight(f"parameter {v} is not real")
        return v.re
    if isinstance(v, str):
        return _frac(GaussianRational.parse(v))
    return Fraction(v)


def _endpoint(v) -> Endpoint:
    if isinstance(v, str) and v.strip() in ("inf", "+inf", "-inf"):
        return -INF if v.strip().startswith("-") else INF
    if isinstance(v, float) and math.isinf(v):
        return v
    return _frac(v)


def _endpoint_json(v: Endpoint) -> str:
    if isinstance(v, float):
        return "-inf" if v < 0 else "inf"
    return str(GaussianRational(v))


@dataclass(frozen=True)
class ScalarClassicalWeight:
    """Classical scalar weight r(x) with its Pearson data q r'/r = l."""

    family: str
    params: tuple = ()  # sorted (name, Fraction) pairs
    support: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedFamily(f"unknown family {self.family!r}")
        p = dict(self.params)
        need = {"hermite": set(), "laguerre": {"b"}, "gegenbauer": {"r"}, "jacobi": {"a", "b"}}[self.family]
        if set(p) != need:
            raise InvalidWeight(f"{self.family} needs parameters {sorted(need)}, got {sorted(p)}")
        if self.family == "laguerre" and not p["b"] > -1:
            raise InvalidWeight("Laguerre needs b > -1")
        if self.family == "jacobi" and not (p["a"] > -1 and p["b"] > -1):
            raise InvalidWeight("Jacobi needs a, b > -1")
        if self.family == "gegenbauer" and not p["r"] > -2:
            raise InvalidWeight("Gegenbauer needs r > -2")
        if not self.support:
            object.__setattr__(self, "support", self.natural_support)
        if len(self.support) != 2 or not self.support[0] < self.support[1]:
            raise InvalidWeight(f"bad support {self.support}")

    # constructors
    @classmethod
    def make(cls, family: str, support=None, **params) -> "ScalarClassicalWeight":
        ps = tuple(sorted((k, _frac(v)) for k, v in params.items()))
        sup = tuple(_endpoint(e) for e in support) if support is not None else ()
        return cls(family, ps, sup)

    @classmethod
    def hermite(cls) -> "ScalarClassicalWeight":
        return cls.make("hermite")

    @classmethod
    def laguerre(cls, b=0) -> "ScalarClassicalWeight":
        return cls.make("laguerre", b=b)

    @classmethod
    def gegenbauer(cls, r) -> "ScalarClassicalWeight":
        return cls.make("gegenbauer", r=r)

    @classmethod
    def jacobi(cls, a, b) -> "ScalarClassicalWeight":
        return cls.make("jacobi", a=a, b=b)

    def param(self, name: str) -> Fraction:
        return dict(self.params)[name]

    @property
    def natural_support(self) -> tuple:
        if self.family == "hermite":
            return (-INF, INF)
        if self.family == "laguerre":
            return (Fraction(0), INF)
        return (Fraction(-1), Fraction(1))

    @property
    def pearson_q(self) -> Poly:
        if self.family == "hermite":
            return Poly([1])
        if self.family == "laguerre":
            return Poly([0, 1])
        return Poly([1, 0, -1])

    @property
    def pearson_l(self) -> Poly:
        if self.family == "hermite":
            return Poly([0, -2])
        if self.family == "laguerre":
            return Poly([self.param("b"), -1])
        if self.family == "gegenbauer":
            return Poly([0, -self.param("r")])
        a, b = self.param("a"), self.param("b")
        return Poly([b - a, -(a + b)])

    def log_ratio(self) -> RatFun:
        """r'/r = l/q."""
        return RatFun(self.pearson_l, self.pearson_q)

    def endpoint_exponent(self, e: Fraction) -> Fraction:
        """alpha with r(x) ~ |x - e|^alpha near a finite point e."""
        if self.family == "laguerre" and e == 0:
            return self.param("b")
        if self.family == "gegenbauer" and e in (1, -1):
            return self.param("r") / 2
        if self.family == "jacobi":
            if e == 1:
                return self.param("a")
            if e == -1:
                return self.param("b")
        return Fraction(0)

    def decays_at_infinity(self, sign: int) -> bool:
        """Exponential decay beats every polynomial at +inf (sign 1) or -inf (sign -1)."""
        return self.family == "hermite" or (self.family == "laguerre" and sign > 0)

    def times_q_power(self, k: int) -> "ScalarClassicalWeight":
        """The base q^k r with the same support, as a classical weight."""
        if self.family == "hermite":
            return self
        if self.family == "laguerre":
            return ScalarClassicalWeight.make("laguerre", self.support, b=self.param("b") + k)
        if self.family == "gegenbauer":
            return ScalarClassicalWeight.make("gegenbauer", self.support, r=self.param("r") + 2 * k)
        return ScalarClassicalWeight.make(
            "jacobi", self.support, a=self.param("a") + k, b=self.param("b") + k
        )

    def density(self, x: float) -> float:
        """Unnormalized r(x) in floating point."""
        if self.family == "hermite":
            return math.exp(-x * x)
        if self.family == "laguerre":
            return x ** float(self.param("b")) * math.exp(-x)
        if self.family == "gegenbauer":
            return (1 - x * x) ** (float(self.param("r")) / 2)
        return (1 - x) ** float(self.param("a")) * (1 + x) ** float(self.param("b"))

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": {k: str(GaussianRational(v)) for k, v in self.params},
            "support": [_endpoint_json(e) for e in self.support],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ScalarClassicalWeight":
        return cls.make(data["family"], data.get("support"), **data.get("params", {}))


# ------------------------------------------------------------------ moments

_MOMENTS: dict = {}
_MOMENT_LOCK = threading.Lock()


def _moment_list(base: ScalarClassicalWeight, n: int) -> list:
    key = (base.family, base.params)
    table = _MOMENTS.get(key)
    if table is not None and len(table) > n:
        return table
    with _MOMENT_LOCK:
        table = list(_MOMENTS.get(key, [ONE]))
        q, l = base.pearson_q, base.pearson_l
        q0, q1, q2 = q.coeff(0), q.coeff(1), q.coeff(2)
        l0, l1 = l.coeff(0), l.coeff(1)
        # integrate (q r x^k)' = 0 using q r' = l r
        while len(table) <= n:
            k = len(table) - 1
            den = l1 + q2 * (k + 2)
            if den.is_zero():
                raise UnsupportedFamily(f"moment recurrence degenerates at n = {k + 1}")
            acc = (l0 + q1 * (k + 1)) * table[k]
            if k >= 1:
                acc = acc + q0 * k * table[k - 1]
            table.append(-acc / den)
        _MOMENTS[key] = table
        return table


def scalar_moment(base: ScalarClassicalWeight, n: int) -> GaussianRational:
    """Normalized moment int x^n r / int r over the natural support."""
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    return _moment_list(base, n)[n]


# ------------------------------------------------------------- weight spec


def _probe_points(support: tuple) -> list:
    x0, x1 = support
    lo_inf = isinstance(x0, float)
    hi_inf = isinstance(x1, float)
    if lo_inf and hi_inf:
        return [Fraction(k) for k in (-3, -2, -1, 0, 1, 2, 3)]
    steps = [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), Fraction(5), Fraction(8)]
    if hi_inf:
        return [x0 + s for s in steps]
    if lo_inf:
        return [x1 - s for s in steps]
    return [x0 + (x1 - x0) * Fraction(k, 8) for k in range(1, 8)]


@dataclass(frozen=True)
class WeightSpec:
    base: ScalarClassicalWeight
    envelope: MatPoly

    def __post_init__(self):
        if self.envelope.shape[0] != self.envelope.shape[1]:
            raise InvalidWeight("envelope must be square")
        if not self.envelope.is_hermitian():
            raise InvalidWeight("envelope is not Hermitian")

    @classmethod
    def scalar(cls, base: ScalarClassicalWeight, n: int = 1) -> "WeightSpec":
        return cls(base, MatPoly.identity(n))

    @property
    def dimension(self) -> int:
        return self.envelope.shape[0]

    @property
    def support(self) -> tuple:
        return self.base.support

    def probe_points(self) -> list:
        return _probe_points(self.support)

    def positive_definite_on_probes(self) -> tuple[bool, Optional[Fraction]]:
        for x0 in self.probe_points():
            if not self.envelope(x0).is_positive_definite():
                return False, x0
        return True, None

    def validate(self) -> None:
        ok, bad = self.positive_definite_on_probes()
        if not ok:
            raise InvalidWeight(f"envelope not positive definite at x = {bad}")

    def log_derivative(self) -> MatRatFun:
        return log_derivative(self)

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "envelope": matpoly_to_json(self.envelope)}

    @classmethod
    def from_json(cls, data: dict) -> "WeightSpec":
        return cls(ScalarClassicalWeight.from_json(data["base"]), matpoly_from_json(data["envelope"]))


def matrix_moment(w: WeightSpec, n: int) -> ExactMatrix:
    """int x^n P(x) r(x) dx / int r, i.e. sum_k P_k mu_{n+k}."""
    acc = ExactMatrix.zeros(w.dimension)
    for k, Pk in enumerate(w.envelope.coeffs):
        if Pk.is_zero():
            continue
        acc = acc + Pk.scale(scalar_moment(w.base, n + k))
    return acc


def inner_product(p: MatPoly, q: MatPoly, w: WeightSpec) -> ExactMatrix:
    """<p, q>_w = int p w q^* (normalized by int r)."""
    moments: dict = {}

    def M(k):
        if k not in moments:
            moments[k] = matrix_moment(w, k)
        return moments[k]

    acc = ExactMatrix.zeros(p.shape[0], q.shape[0])
    for i, pi in enumerate(p.coeffs):
        if pi.is_zero():
            continue
        for j, qj in enumerate(q.coeffs):
            if qj.is_zero():
                continue
            acc = acc + pi * M(i + j) * qj.H()
    return acc


def log_derivative(w: WeightSpec) -> MatRatFun:
    """w' w^-1 = (l/q) I + P' P^-1."""
    P = MatRatFun.from_matpoly(w.envelope)
    Pinv = P.inverse()
    n = w.dimension
    return MatRatFun.scalar(w.base.log_ratio(), n) + MatRatFun.from_matpoly(w.envelope.deriv()) * Pinv


def pearson_residual(w: WeightSpec, a1: MatPoly, a2: MatPoly) -> MatRatFun:
    """2(a2' + a2 w'w^-1) - a1 - P a1^* P^-1, zero iff 2(a2 w)' = a1 w + w a1^*."""
    P = MatRatFun.from_matpoly(w.envelope)
    L = log_derivative(w)
    A2 = MatRatFun.from_matpoly(a2)
    lhs = (MatRatFun.from_matpoly(a2.deriv()) + A2 * L).scale(2)
    conj = P * MatRatFun.from_matpoly(a1.hermitian_conjugate()) * P.inverse()
    return lhs - MatRatFun.from_matpoly(a1) - conj


def pearson_check(w: WeightSpec, a1: MatPoly, a2: MatPoly) -> Check:
    from .exactnum import matrat_to_json

    res = pearson_residual(w, a1, a2)
    if res.is_zero():
        return Check("pearson", PASS)
    return Check("pearson", FAIL, "2(a2 w)' != a1 w + w a1^*", matrat_to_json(res))


def _vanishing_order(f: MatPoly, e: Fraction) -> int:
    """Smallest order of vanishing at e among nonzero entries of f."""
    best = None
    xe = Poly([-e, 1])
    for row in f.entries():
        for p in row:
            if p.is_zero():
                continue
            k = 0
            while True:
                qt, r = p.divmod(xe)
                if not r.is_zero():
                    break
                p, k = qt, k + 1
            best = k if best is None else min(best, k)
    return 0 if best is None else best


def boundary_check(w: WeightSpec, f1: MatPoly) -> Report:
    """f1(x) w(x) -> 0 (with polynomial factors) at each endpoint of the support."""
    rep = Report()
    prod = f1 * w.envelope
    for side, e in (("lower", w.support[0]), ("upper", w.support[1])):
        name = f"boundary_{side}"
        if prod.is_zero():
            rep.add(Check(name, PASS, "f1 w vanishes identically"))
            continue
        if isinstance(e, float):
            sign = 1 if e > 0 else -1
            ok = w.base.decays_at_infinity(sign)
            detail = "exponential decay" if ok else f"{w.base.family} base does not decay at {_endpoint_json(e)}"
            rep.add(Check(name, status_of(ok), detail))
            continue
        alpha = w.base.endpoint_exponent(e) + _vanishing_order(prod, e)
        ok = alpha > 0
        detail = f"f1 w ~ |x - ({e})|^{alpha} at the endpoint"
        rep.add(Check(name, status_of(ok), detail))
    return rep


@dataclass(frozen=True)
class IndicatorWeight:
    """The weight 1_(x0, x1)(x) I: zero log-derivative, identity envelope."""

    n: int = 1
    support: tuple = (-INF, INF)

    @property
    def dimension(self) -> int:
        return self.n

    @property
    def envelope(self) -> MatPoly:
        return MatPoly.identity(self.n)

    def log_derivative(self) -> MatRatFun:
        return MatRatFun.zero(self.n)
