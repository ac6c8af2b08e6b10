"""Worked Darboux data: a Hermite-type family and a Jacobi-type family (N = 2)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .darboux import BochnerPair, DarbouxFactorization, build_factorization
from .exactnum import ExactMatrix, GaussianRational, MatPoly, Poly, gr
from .weights import ScalarClassicalWeight, WeightSpec
from .weyl import MatDiffOp


def _op(a0: MatPoly, a1: Poly, a2: Poly, n: int) -> MatDiffOp:
    return MatDiffOp([a0, MatPoly.scalar_poly(a1, n), MatPoly.scalar_poly(a2, n)], n)


@dataclass(frozen=True)
class HermiteExample:
    """delta = -d^2 + d 2x + diag(|c|^2 + 2, |c|^2) on e^{-x^2} I, c in Q(i) nonzero."""

    c: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "c", gr(self.c))
        if self.c.is_zero():
            raise ValueError("c must be nonzero")

    kind = "hermite"

    @property
    def beta(self) -> GaussianRational:
        return self.c.abs2()

    @property
    def points(self) -> tuple:
        """Eigenvalue points (lambda1, lambda2) of the scalar operator eps."""
        return (self.beta + 2, self.beta)

    @property
    def B(self) -> ExactMatrix:
        return ExactMatrix.diag(self.beta + 2, self.beta)

    def weight(self) -> WeightSpec:
        return WeightSpec.scalar(ScalarClassicalWeight.hermite(), 2)

    def delta(self) -> MatDiffOp:
        return _op(MatPoly.const(self.B), Poly([0, 2]), Poly([-1]), 2)

    def pair(self) -> BochnerPair:
        return BochnerPair(self.weight(), self.delta())

    @property
    def v0(self) -> MatPoly:
        return MatPoly.identity(2)

    @property
    def v1(self) -> MatPoly:
        c = self.c
        const = ExactMatrix([[0, 1 / c.conj()], [1 / c, 0]])
        lin = ExactMatrix([[0, 0], [0, -2 / self.beta]])
        return MatPoly([const, lin])

    @property
    def gauge(self) -> Optional[ExactMatrix]:
        return None

    def eps(self) -> MatDiffOp:
        """Scalar classical operator d^2 - 2 d x, with delta = -eps I + B."""
        return MatDiffOp.scalar([Poly(), Poly([0, -2]), Poly([1])], 1)

    @cached_property
    def factorization(self) -> DarbouxFactorization:
        return build_factorization(self.pair(), self.v0, self.v1, self.gauge)

    def to_json(self) -> dict:
        return {"family": "hermite", "c": str(self.c)}


@dataclass(frozen=True)
class JacobiExample:
    """delta = -d^2 (1-x^2) + d (r+2) x + B on (1-x^2)^{r/2} I with S^2 = p, T^2 = r - p.

    The data is carried in the gauge Q = diag(p, r - p) so that everything
    stays rational: v0 = diag(p, r - p), v1 = -[[x, 1], [1, x]].
    """

    r: GaussianRational
    p: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "r", gr(self.r))
        object.__setattr__(self, "p", gr(self.p))
        r, p = self.r, self.p
        if not (r.is_real() and p.is_real()):
            raise ValueError("r and p must be real")
        if not (p.re > 0 and p.re < r.re):
            raise ValueError("need 0 < p < r")

    kind = "jacobi"

    @property
    def points(self) -> tuple:
        r, p = self.r, self.p
        return (p * (r - p + 1), (r - p) * (p + 1))

    @property
    def B(self) -> ExactMatrix:
        return ExactMatrix.diag(*self.points)

    def weight(self) -> WeightSpec:
        return WeightSpec.scalar(ScalarClassicalWeight.gegenbauer(self.r.re), 2)

    def delta(self) -> MatDiffOp:
        return _op(MatPoly.const(self.B), Poly([0, self.r + 2]), Poly([-1, 0, 1]), 2)

    def pair(self) -> BochnerPair:
        return BochnerPair(self.weight(), self.delta())

    @property
    def v0(self) -> MatPoly:
        return MatPoly.const(ExactMatrix.diag(self.p, self.r - self.p))

    @property
    def v1(self) -> MatPoly:
        return MatPoly([ExactMatrix([[0, -1], [-1, 0]]), ExactMatrix([[-1, 0], [0, -1]])])

    @property
    def gauge(self) -> ExactMatrix:
        return ExactMatrix.diag(self.p, self.r - self.p)

    def eps(self) -> MatDiffOp:
        """Scalar classical operator d^2 (1-x^2) - d (r+2) x, with delta = -eps I + B."""
        return MatDiffOp.scalar([Poly(), Poly([0, -(self.r + 2)]), Poly([1, 0, -1])], 1)

    @cached_property
    def factorization(self) -> DarbouxFactorization:
        return build_factorization(self.pair(), self.v0, self.v1, self.gauge)

    def to_json(self) -> dict:
        return {"family": "jacobi", "r": str(self.r), "p": str(self.p)}


def example_from_json(data: dict):
    fam = data.get("family")
    if fam == "hermite":
        return HermiteExample(GaussianRational.parse(str(data["c"])))
    if fam in ("jacobi", "gegenbauer"):
        return JacobiExample(GaussianRational.parse(str(data["r"])), GaussianRational.parse(str(data["p"])))
    raise ValueError(f"unsupported example family {fam!r}")
