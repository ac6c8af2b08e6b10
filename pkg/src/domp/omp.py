"""Monic orthogonal matrix polynomials from moments."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .exactnum import ExactArithmeticError, ExactMatrix, MatPoly, Poly, ZeroDeterminant
from .weights import ScalarClassicalWeight, WeightSpec, inner_product, matrix_moment, scalar_moment
from .weyl import MatDiffOp, NotFiltrationPreserving, apply, eigenvalue_map

DEFAULT_NMAX = 12


class SingularMomentMatrix(ExactArithmeticError):
    pass


class RecurrenceResidual(ExactArithmeticError):
    pass


@dataclass(frozen=True)
class OMPSequence:
    weight: WeightSpec
    polys: tuple

    @property
    def computed_to(self) -> int:
        return len(self.polys) - 1

    def __getitem__(self, n: int) -> MatPoly:
        return self.polys[n]

    def norm(self, n: int) -> ExactMatrix:
        return inner_product(self.polys[n], self.polys[n], self.weight)

    def to_json(self) -> dict:
        from .exactnum import matpoly_to_json

        return {"n_max": self.computed_to, "polys": [matpoly_to_json(p) for p in self.polys]}


def _block(rows: list) -> ExactMatrix:
    """Assemble a block matrix from a grid of ExactMatrix blocks."""
    out = []
    for brow in rows:
        for i in range(brow[0].shape[0]):
            line = []
            for blk in brow:
                line.extend(blk.e[i])
            out.append(tuple(line))
    return ExactMatrix._of(tuple(out))


def monic_omp(w: WeightSpec, n_max: int = DEFAULT_NMAX, order: Optional[list] = None) -> OMPSequence:
    """Solve <x^n I + sum_k g_k x^k, x^m I>_w = 0 for m < n by a block Hankel system.

    ``order`` optionally permutes the block equations (used to check that the
    result does not depend on pivoting).
    """
    N = w.dimension
    M = [matrix_moment(w, k) for k in range(2 * n_max + 1)]
    polys = [MatPoly.identity(N)]
    for n in range(1, n_max + 1):
        cols = list(range(n))
        if order is not None:
            cols = [m for m in order if m < n]
        H = _block([[M[k + m] for m in cols] for k in range(n)])
        R = _block([[-M[n + m] for m in cols]])
        try:
            G = H.inverse()
        except ZeroDeterminant as exc:
            raise SingularMomentMatrix(f"block moment matrix of size {n} is singular") from exc
        gamma = R * G
        coeffs = []
        for k in range(n):
            coeffs.append(ExactMatrix._of(tuple(tuple(r[k * N:(k + 1) * N]) for r in gamma.e)))
        coeffs.append(ExactMatrix.identity(N))
        polys.append(MatPoly(coeffs))
    return OMPSequence(w, tuple(polys))


def scalar_monic_ops(base: ScalarClassicalWeight, n_max: int) -> list:
    """Monic scalar orthogonal polynomials of a classical base by the Stieltjes procedure."""
    mu = [scalar_moment(base, k) for k in range(2 * n_max + 2)]

    def ip(f: Poly, g: Poly):
        acc = mu[0] * 0
        for i, fi in enumerate(f.c):
            for j, gj in enumerate(g.c):
                acc = acc + fi * gj.conj() * mu[i + j]
        return acc

    x = Poly.x()
    polys = [Poly([1])]
    norms = [ip(polys[0], polys[0])]
    prev = Poly()
    for n in range(n_max):
        p = polys[-1]
        b = ip(x * p, p) / norms[-1]
        nxt = (x - Poly([b])) * p
        if n:
            nxt = nxt - prev * (norms[-1] / norms[-2])
        prev = p
        polys.append(nxt)
        norms.append(ip(nxt, nxt))
        if norms[-1].is_zero():
            raise SingularMomentMatrix(f"scalar norm vanishes at degree {n + 1}")
    return polys


def source_sequence(w: WeightSpec, n_max: int) -> OMPSequence:
    """Monic OMP of w; uses the scalar recurrence when the envelope is I."""
    N = w.dimension
    if w.envelope == MatPoly.identity(N):
        return OMPSequence(w, tuple(MatPoly.scalar_poly(p, N) for p in scalar_monic_ops(w.base, n_max)))
    return monic_omp(w, n_max)


def recurrence_coeffs(seq: OMPSequence, n: int) -> tuple[ExactMatrix, ExactMatrix]:
    """(s_n, t_n) with x p_n = p_{n+1} + s_n p_n + t_n p_{n-1}."""
    if n + 1 > seq.computed_to:
        raise ValueError(f"need polynomials up to degree {n + 1}")
    N = seq.weight.dimension
    p = seq.polys
    r = MatPoly.x_times(ExactMatrix.identity(N)) * p[n] - p[n + 1]
    s = r.coeff(n)
    r = r - s * p[n]
    if n == 0:
        t = ExactMatrix.zeros(N)
    else:
        t = r.coeff(n - 1)
        r = r - t * p[n - 1]
    if not r.is_zero():
        raise RecurrenceResidual(f"no exact recurrence at n = {n}")
    return s, t


@dataclass(frozen=True)
class EigenResult:
    lam: Optional[MatPoly]
    failed_at: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.lam is not None


def verify_eigen(seq: OMPSequence, op: MatDiffOp, n_max: Optional[int] = None) -> EigenResult:
    """Lambda(n) if p_n . op = Lambda(n) p_n for all n <= n_max, else the first failing n."""
    n_max = seq.computed_to if n_max is None else min(n_max, seq.computed_to)
    if op.rational:
        if not op.is_polynomial():
            return EigenResult(None, 0)
        op = op.to_poly()
    for n in range(n_max + 1):
        p = seq.polys[n]
        img = apply(op, p)
        if img.degree > n:
            return EigenResult(None, n)
        lam_n = img.coeff(n)
        if img != lam_n * p:
            return EigenResult(None, n)
    try:
        lam = eigenvalue_map(op)
    except NotFiltrationPreserving:
        return EigenResult(None, n_max)
    return EigenResult(lam)
