"""Darboux transformations of matrix Bochner pairs by first-order factorization."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .exactnum import (
    ONE,
    ExactArithmeticError,
    ExactMatrix,
    MatPoly,
    MatRatFun,
    Poly,
    RatFun,
    ZeroDeterminant,
    count_real_roots,
    gr,
    matpoly_to_json,
    matrat_to_json,
    nonnegative_integer_roots,
    vanishing_order,
)
from .omp import OMPSequence, monic_omp, source_sequence, verify_eigen
from .reports import FAIL, PASS, UNDETERMINED, Check, Report, status_of
from .weights import (
    InvalidWeight,
    WeightSpec,
    boundary_check,
    inner_product,
    pearson_residual,
)
from .weyl import MatDiffOp, NotFiltrationPreserving, apply, eigenvalue_map, formal_w_adjoint, multiply


class FactorizationMismatch(ExactArithmeticError):
    pass


class NonPolynomialMu(ExactArithmeticError):
    pass


class DegenerateLeadingCoefficient(ExactArithmeticError):
    def __init__(self, n: int):
        super().__init__(f"leading coefficient n V1 - V0 is singular at n = {n}")
        self.n = n


class NotPolynomialEnvelope(ExactArithmeticError):
    pass


# ------------------------------------------------------------------ pairs


@dataclass(frozen=True)
class BochnerPair:
    """A weight with a second-order operator a0 + d a1 + d^2 a2 I (a2 scalar)."""

    weight: WeightSpec
    op: MatDiffOp

    def __post_init__(self):
        if self.op.order != 2:
            raise ValueError("Bochner pair operator must have order 2")
        if self.op.rational:
            object.__setattr__(self, "op", self.op.to_poly())

    @property
    def dimension(self) -> int:
        return self.weight.dimension

    def a(self, i: int) -> MatPoly:
        return self.op.coeff(i)

    @cached_property
    def a2_scalar(self) -> Optional[Poly]:
        """a2 as a scalar polynomial, or None if a2 is not a multiple of I."""
        a2 = self.a(2)
        p = a2.entry(0, 0)
        if a2 != MatPoly.scalar_poly(p, self.dimension):
            return None
        return p

    @cached_property
    def lam(self) -> MatPoly:
        return eigenvalue_map(self.op)

    def to_json(self) -> dict:
        return {"weight": self.weight.to_json(), "op": self.op.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "BochnerPair":
        w = WeightSpec.from_json(data["weight"])
        return cls(w, MatDiffOp.from_json(data["op"], w.dimension))


def _support_sign(p: Poly, w: WeightSpec) -> int:
    """Sign of a real polynomial without roots on the support (0 if it has roots)."""
    if not p.is_real() or count_real_roots(p, *w.support) > 0:
        return 0
    return p(w.probe_points()[3]).real_sign()


def degree_certificate(V1: ExactMatrix, V0: ExactMatrix) -> tuple[Poly, list]:
    """det(n V1 - V0) as a polynomial in n and its nonnegative integer roots."""
    c = MatPoly([-V0, V1])
    d = c.det()
    if d.is_zero():
        return d, [0]
    return d, nonnegative_integer_roots(d)


def lambda_certificate(lam: MatPoly) -> tuple[Poly, list]:
    d = lam.det()
    if d.is_zero():
        return d, [0]
    return d, nonnegative_integer_roots(d)


def bochner_checks(pair: BochnerPair, n_max: int = 12) -> Report:
    """Symmetry, Pearson, boundary, and eigenfunction checks for a claimed Bochner pair."""
    rep = Report()
    w = pair.weight
    ok, bad = w.positive_definite_on_probes()
    rep.add(Check("weight_positive", status_of(ok), "" if ok else f"envelope not positive definite at {bad}"))
    dag = formal_w_adjoint(pair.op, w)
    diff = dag - pair.op
    if diff.is_zero():
        rep.add(Check("symmetry", PASS))
    else:
        rep.add(
            Check(
                "symmetry",
                FAIL,
                "formal w-adjoint differs from the operator",
                [matrat_to_json(MatRatFun._lift(c)) for c in diff.coeffs],
            )
        )
    res = pearson_residual(w, pair.a(1), pair.a(2))
    rep.add(
        Check(
            "pearson",
            status_of(res.is_zero()),
            "" if res.is_zero() else "2(a2 w)' - a1 w - w a1* is nonzero",
            None if res.is_zero() else matrat_to_json(res),
        )
    )
    f1 = pair.a(2)
    b = boundary_check(w, f1)
    rep.add(Check("boundary", PASS if b.all_pass else FAIL, "; ".join(c.detail for c in b.checks)))
    seq = source_sequence(w, n_max)
    ev = verify_eigen(seq, pair.op, n_max)
    if ev.ok:
        rep.add(Check("eigenfunctions", PASS, f"p_n . op = Lambda(n) p_n for n <= {n_max}"))
    else:
        rep.add(Check("eigenfunctions", FAIL, f"first failure at n = {ev.failed_at}"))
    return rep


# -------------------------------------------------------------- hypotheses


def _gauge(pair: BochnerPair, gauge: Optional[ExactMatrix]) -> ExactMatrix:
    return ExactMatrix.identity(pair.dimension) if gauge is None else gauge


def gauge_check(pair: BochnerPair, Q: ExactMatrix) -> Check:
    """Q must be Hermitian positive definite and commute with the data of delta and w."""
    if not Q.is_positive_definite():
        return Check("gauge", FAIL, "gauge is not Hermitian positive definite")
    mats = [c for a in pair.op.coeffs for c in a.coeffs] + list(pair.weight.envelope.coeffs)
    for m in mats:
        if Q * m != m * Q:
            return Check("gauge", FAIL, "gauge does not commute with the operator or envelope")
    return Check("gauge", PASS)


def factorization_equation_residual(op: MatDiffOp, M: MatRatFun) -> MatRatFun:
    """M^2 a2 + M' a2 + M a1 + a0 for M = v0 v1^-1."""
    a0, a1, a2 = (MatRatFun._lift(op.coeff(i)) for i in range(3))
    return M * M * a2 + M.deriv() * a2 + M * a1 + a0


def _l2_against_trace(f: RatFun, w: WeightSpec) -> tuple[str, str]:
    """Decide f in L^2(tr(w) dx) for rational f against a built-in base."""
    if f.is_zero():
        return PASS, "integrand vanishes"
    lo, hi = w.support
    if count_real_roots(f.den, lo, hi) > 0:
        return FAIL, "pole inside the support"
    trP = w.envelope.trace()
    notes = []
    status = PASS
    for e in (lo, hi):
        if isinstance(e, float):
            if w.base.decays_at_infinity(1 if e > 0 else -1):
                notes.append(f"{'+' if e > 0 else '-'}inf: exponential decay")
            else:
                status = UNDETERMINED if status == PASS else status
                notes.append(f"{'+' if e > 0 else '-'}inf: no decay certificate")
            continue
        m = vanishing_order(f.num, e) - vanishing_order(f.den, e)
        t = vanishing_order(trP, e)
        alpha = w.base.endpoint_exponent(e)
        expo = 2 * m + t + alpha
        ok = expo > -1
        note = f"x={e}: f^2 tr(w) ~ |x-e|^({expo}) {'>' if ok else '<='} -1"
        need = -1 - 2 * m - t  # condition on the base exponent alpha
        if w.base.family == "gegenbauer":
            note += f", i.e. r > {2 * need}"
        elif w.base.family == "jacobi" or (w.base.family == "laguerre" and e == 0):
            note += f", i.e. exponent > {need}"
        notes.append(note)
        if not ok:
            status = FAIL
    return status, "; ".join(notes)


def check_hypotheses(
    pair: BochnerPair, v0: MatPoly, v1: MatPoly, gauge: Optional[ExactMatrix] = None
) -> Report:
    """Check the factorization hypotheses in order and report each one."""
    rep = Report()
    w = pair.weight
    N = pair.dimension
    Q = _gauge(pair, gauge)
    if gauge is not None:
        rep.add(gauge_check(pair, Q))

    # the pair itself
    a2 = pair.a2_scalar
    if a2 is None:
        rep.add(Check("pair_form", FAIL, "a2 is not scalar"))
        return rep
    sign = _support_sign(a2, w)
    a1 = MatRatFun._lift(pair.a(1))
    P = MatRatFun._lift(w.envelope)
    a1_sym = P * MatRatFun._lift(pair.a(1).hermitian_conjugate()) * P.inverse() == a1
    ok = sign != 0 and a1_sym
    detail = []
    if sign == 0:
        detail.append("a2 vanishes on the support or is not real")
    if not a1_sym:
        detail.append("a1 is not w-Hermitian")
    rep.add(Check("pair_form", status_of(ok), "; ".join(detail)))
    try:
        lam = pair.lam
        d, roots = lambda_certificate(lam)
        ok = not roots
        rep.add(Check("pair_degree_preserving", status_of(ok), "" if ok else f"Lambda(n) singular at n = {roots}"))
    except NotFiltrationPreserving as exc:
        rep.add(Check("pair_degree_preserving", FAIL, str(exc)))

    # (1) degrees and determinants
    problems = []
    if v0.degree != 0:
        problems.append(f"deg v0 = {v0.degree}")
    if v1.degree != 1:
        problems.append(f"deg v1 = {v1.degree}")
    d0 = v0.det()
    if d0.is_zero():
        problems.append("det v0 = 0")
    d1 = v1.det()
    if d1.is_zero():
        problems.append("det v1 = 0")
    elif count_real_roots(d1, *w.support) > 0:
        problems.append("det v1 vanishes inside the support")
    rep.add(Check("degrees_and_determinants", status_of(not problems), "; ".join(problems)))
    if d1.is_zero():
        return rep
    v1inv = MatRatFun._lift(v1).inverse()
    M = MatRatFun._lift(v0) * v1inv

    # (2) w-symmetry of v0 v1^-1 (in the gauge Q)
    MQ = M * MatRatFun._lift(Q)
    dag = formal_w_adjoint(MatDiffOp.const(MQ), w)
    sym = dag == MatDiffOp.const(MQ)
    rep.add(Check("adjoint_symmetry", status_of(sym), "" if sym else "(v0 v1^-1 Q) is not w-symmetric"))

    # (3) integrability of tr(v_i^-1 a2 Q v_i^-*) against tr(w)
    A2 = MatRatFun.scalar(RatFun(a2), N)
    QM = MatRatFun._lift(Q)
    f1 = (v1inv * A2 * QM * v1inv.hermitian_conjugate()).trace()
    s1, n1 = _l2_against_trace(f1, w)
    notes = [f"v1: {n1}"]
    status = s1
    if not d0.is_zero():
        v0inv = MatRatFun._lift(v0).inverse()
        f0 = (v0inv * A2 * QM * v0inv.hermitian_conjugate()).trace()
        s0, n0 = _l2_against_trace(f0, w)
        notes.append(f"v0: {n0}")
        if s0 == FAIL or (s0 == UNDETERMINED and status == PASS):
            status = s0
    rep.add(Check("integrability", status, " | ".join(notes)))

    # (4) the first-order factorization equation
    res = factorization_equation_residual(pair.op, M)
    rep.add(
        Check(
            "factorization_equation",
            status_of(res.is_zero()),
            "" if res.is_zero() else "(v0 v1^-1)^2 a2 + (v0 v1^-1)' a2 + v0 v1^-1 a1 + a0 != 0",
            None if res.is_zero() else matrat_to_json(res),
        )
    )

    # (5) boundary decay of w
    b = boundary_check(w, MatPoly.identity(N))
    rep.add(Check("boundary_decay", PASS if b.all_pass else FAIL, "; ".join(c.detail for c in b.checks)))
    return rep


# ----------------------------------------------------------- construction


def transformed_weight(
    pair: BochnerPair, v1: MatPoly, gauge: Optional[ExactMatrix] = None
) -> WeightSpec:
    """sigma v1^-1 a2 Q w v1^-*, refactored as envelope times a classical base."""
    w = pair.weight
    a2 = pair.a2_scalar
    if a2 is None:
        raise ValueError("a2 must be scalar")
    sign = _support_sign(a2, w)
    if sign == 0:
        raise ValueError("a2 must be real and nonvanishing on the support")
    Q = _gauge(pair, gauge)
    v1inv = MatRatFun._lift(v1).inverse()
    core = v1inv * MatRatFun._lift(Q) * MatRatFun._lift(w.envelope) * v1inv.hermitian_conjugate()
    E = core * RatFun(a2 * sign)
    den = E.common_denominator()
    if den.degree == 0:
        return WeightSpec(w.base, E.to_matpoly())
    q = w.base.pearson_q
    qm = q * (ONE / q.lc())
    k, rest = 0, den
    while rest.degree > 0:
        quo, rem = rest.divmod(qm)
        if not rem.is_zero():
            raise NotPolynomialEnvelope(f"denominator {den!r} is not a power of the base's q")
        rest, k = quo, k + 1
    env = (E * RatFun(q ** k)).to_matpoly()
    try:
        base = w.base.times_q_power(-k)
    except InvalidWeight as exc:
        raise NotPolynomialEnvelope(str(exc)) from exc
    return WeightSpec(base, env)


@dataclass(frozen=True)
class DarbouxFactorization:
    source: BochnerPair
    v0: MatPoly
    v1: MatPoly
    nu: MatDiffOp
    mu: MatDiffOp
    target: BochnerPair
    gauge: Optional[ExactMatrix] = None

    @property
    def V1(self) -> ExactMatrix:
        return self.v1.coeff(1)

    @property
    def V0(self) -> ExactMatrix:
        return self.v0.coeff(0)

    def leading_coeff(self, n: int) -> ExactMatrix:
        """Leading coefficient n V1 - V0 of p_n . nu."""
        return self.V1.scale(n) - self.V0

    def leading_coeffs(self, n_max: int) -> list:
        return [self.leading_coeff(n) for n in range(n_max + 1)]

    def to_json(self) -> dict:
        out = {
            "source": self.source.to_json(),
            "v0": matpoly_to_json(self.v0),
            "v1": matpoly_to_json(self.v1),
            "nu": self.nu.to_json(),
            "mu": self.mu.to_json(),
            "target": self.target.to_json(),
            "lambda": matpoly_to_json(self.target.lam),
        }
        if self.gauge is not None:
            out["gauge"] = self.gauge.tolist()
        return out


def build_factorization(
    pair: BochnerPair, v0: MatPoly, v1: MatPoly, gauge: Optional[ExactMatrix] = None
) -> DarbouxFactorization:
    """nu = d v1 - v0, mu = d v1^-1 a2 - v0^-1 a0, delta~ = mu nu, and w~."""
    N = pair.dimension
    a2 = pair.a2_scalar
    if a2 is None:
        raise ValueError("a2 must be scalar")
    nu = MatDiffOp([-v0, v1], N)
    try:
        v1inv = MatRatFun._lift(v1).inverse()
        v0inv = MatRatFun._lift(v0).inverse()
    except (ZeroDeterminant, ZeroDivisionError) as exc:
        raise NonPolynomialMu("v0 or v1 is singular") from exc
    m1 = v1inv * MatRatFun.scalar(RatFun(a2), N)
    m0 = -(v0inv * MatRatFun._lift(pair.a(0)))
    if not (m1.is_polynomial() and m0.is_polynomial()):
        raise NonPolynomialMu("mu has non-polynomial coefficients")
    mu = MatDiffOp([m0.to_matpoly(), m1.to_matpoly()], N)
    if multiply(nu, mu) != pair.op:
        raise FactorizationMismatch("nu mu differs from delta")
    V1, V0 = v1.coeff(1), v0.coeff(0)
    _, roots = degree_certificate(V1, V0)
    if roots:
        raise DegenerateLeadingCoefficient(roots[0])
    w_t = transformed_weight(pair, v1, gauge)
    delta_t = multiply(mu, nu)
    target = BochnerPair(w_t, delta_t)
    return DarbouxFactorization(pair, v0, v1, nu, mu, target, gauge)


def transformed_omp(fact: DarbouxFactorization, n_max: int = 12, source: Optional[OMPSequence] = None) -> OMPSequence:
    """Monic p~_n = c_n^-1 (p_n . nu) with c_n = n V1 - V0."""
    src = source if source is not None else source_sequence(fact.source.weight, n_max)
    polys = []
    for n in range(n_max + 1):
        c = fact.leading_coeff(n)
        try:
            cinv = c.inverse()
        except ZeroDeterminant as exc:
            raise DegenerateLeadingCoefficient(n) from exc
        raw = apply(fact.nu, src[n])
        polys.append(cinv * raw)
    return OMPSequence(fact.target.weight, tuple(polys))


def verify_factorization(fact: DarbouxFactorization, n_max: int = 12) -> Report:
    """Every conclusion of the construction, checked exactly."""
    rep = Report()
    src, tgt = fact.source, fact.target
    rep.add(Check("factorization", status_of(multiply(fact.nu, fact.mu) == src.op)))
    inter = multiply(src.op, fact.nu) == multiply(fact.nu, tgt.op)
    rep.add(Check("intertwining", status_of(inter), "" if inter else "delta nu != nu delta~"))
    d, roots = degree_certificate(fact.V1, fact.V0)
    rep.add(
        Check(
            "degree_preserving",
            status_of(not roots),
            f"det(n V1 - V0) = {d!r}" + (f", singular at n = {roots}" if roots else ""),
        )
    )
    ok, bad = tgt.weight.positive_definite_on_probes()
    rep.add(Check("transformed_weight_positive", status_of(ok), "" if ok else f"not positive definite at {bad}"))
    sym = formal_w_adjoint(tgt.op, tgt.weight) == tgt.op
    rep.add(Check("transformed_symmetry", status_of(sym)))
    same = eigenvalue_map(tgt.op) == eigenvalue_map(src.op)
    rep.add(Check("eigenvalue_preservation", status_of(same)))
    res = pearson_residual(tgt.weight, tgt.a(1), tgt.a(2))
    rep.add(Check("transformed_pearson", status_of(res.is_zero()), "", None if res.is_zero() else matrat_to_json(res)))

    seq = transformed_omp(fact, n_max)
    w_t = tgt.weight
    bad_pairs = []
    for n in range(n_max + 1):
        for m in range(n):
            if not inner_product(seq[m], seq[n], w_t).is_zero():
                bad_pairs.append((m, n))
    rep.add(Check("orthogonality", status_of(not bad_pairs), f"pairs m < n <= {n_max}" if not bad_pairs else f"nonzero at {bad_pairs[:5]}"))
    pd = [n for n in range(n_max + 1) if not seq.norm(n).is_positive_definite()]
    rep.add(Check("norms_positive", status_of(not pd), "" if not pd else f"not positive definite at n = {pd}"))
    direct = monic_omp(w_t, n_max)
    agree = direct.polys == seq.polys
    rep.add(Check("matches_monic_omp", status_of(agree)))
    ev = verify_eigen(seq, tgt.op, n_max)
    rep.add(Check("transformed_eigenfunctions", status_of(ev.ok), "" if ev.ok else f"first failure at n = {ev.failed_at}"))
    return rep


# ---------------------------------------------------------------- ansatz

ANSATZ_FAMILIES = ("hermite", "laguerre", "jacobi")


def family_operator(family: str, B: ExactMatrix, params: dict) -> MatDiffOp:
    """The classical second-order operator with constant term B."""
    N = B.shape[0]
    Bp = MatPoly.const(B)
    if family == "hermite":
        a2, a1 = Poly([-1]), Poly([0, 2])
    elif family == "laguerre":
        b = gr(params["b"])
        a2, a1 = Poly([0, -1]), Poly([-(b + 1), 1])
    elif family in ("jacobi", "gegenbauer"):
        r = gr(params["r"])
        a2, a1 = Poly([-1, 0, 1]), Poly([0, r + 2])
    else:
        raise ValueError(f"unknown ansatz family {family!r}")
    return MatDiffOp([Bp, MatPoly.scalar_poly(a1, N), MatPoly.scalar_poly(a2, N)], N)


def ansatz_quotient(family: str, A0: ExactMatrix, A1: ExactMatrix) -> MatRatFun:
    """v0 v1^-1 in the ansatz form (A1 x + A0) / d(x)."""
    N = A0.shape[0]
    num = MatRatFun._lift(MatPoly([A0, A1]))
    if family == "hermite":
        return num
    den = Poly([0, 1]) if family == "laguerre" else Poly([1, 0, -1])
    return num * MatRatFun.scalar(RatFun(Poly([1]), den), N)


@dataclass(frozen=True)
class AnsatzReport:
    family: str
    relations: tuple  # (label, residual ExactMatrix)
    B: ExactMatrix
    quotient: MatRatFun

    @property
    def ok(self) -> bool:
        return all(r.is_zero() for _, r in self.relations)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "status": PASS if self.ok else FAIL,
            "relations": [{"relation": lbl, "residual": r.tolist(), "holds": r.is_zero()} for lbl, r in self.relations],
            "B": self.B.tolist(),
            "v0_v1inv": matrat_to_json(self.quotient),
        }


def ansatz_relations(family: str, A0: ExactMatrix, A1: ExactMatrix, params: Optional[dict] = None) -> AnsatzReport:
    """Closed-form constraints on (A0, A1) and the induced constant term B."""
    params = params or {}
    N = A0.shape[0]
    I = ExactMatrix.identity(N)
    fam = "jacobi" if family == "gegenbauer" else family
    if fam == "hermite":
        rel = [
            ("(A1 - 2I) A1", (A1 - I.scale(2)) * A1),
            ("A1 A0 + A0 A1 - 2 A0", A1 * A0 + A0 * A1 - A0.scale(2)),
        ]
        B = A0 * A0 + A1
    elif fam == "laguerre":
        b = gr(params["b"])
        rel = [
            ("A1 (A1 - I)", A1 * (A1 - I)),
            ("A0 (A0 + b I)", A0 * (A0 + I.scale(b))),
        ]
        B = A1 * A0 + A0 * A1 + A1.scale(b + 1) - A0
    elif fam == "jacobi":
        r = gr(params["r"])
        rel = [
            ("A1^2 - r A1 + A0^2", A1 * A1 - A1.scale(r) + A0 * A0),
            ("A1 A0 + A0 A1 - r A0", A1 * A0 + A0 * A1 - A0.scale(r)),
        ]
        B = A1 + A0 * A0
    else:
        raise ValueError(f"unknown ansatz family {family!r}")
    return AnsatzReport(fam, tuple(rel), B, ansatz_quotient(fam, A0, A1))


def ansatz_operator_residual(family: str, A0: ExactMatrix, A1: ExactMatrix, B: ExactMatrix, params: Optional[dict] = None) -> MatRatFun:
    """Direct residual of the factorization equation for the ansatz quotient."""
    fam = "jacobi" if family == "gegenbauer" else family
    op = family_operator(fam, B, params or {})
    return factorization_equation_residual(op, ansatz_quotient(fam, A0, A1))


# ------------------------------------------------------ generating functions


@dataclass(frozen=True)
class GenfunReport:
    family: str
    samples: tuple  # (x, t, residual, in_region)
    tol: float

    @property
    def max_residual(self) -> float:
        return max((s[2] for s in self.samples), default=0.0)

    @property
    def ok(self) -> bool:
        return all(s[3] and s[2] < self.tol for s in self.samples)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "tol": self.tol,
            "max_residual": self.max_residual,
            "status": PASS if self.ok else FAIL,
            "samples": [
                {"x": x, "t": t, "residual": r, "status": (PASS if r < self.tol else FAIL) if inside else "out_of_region"}
                for x, t, r, inside in self.samples
            ],
        }


GENFUN_RADIUS = 0.5


def _genfun_family(base) -> str:
    if base.family == "hermite":
        return "hermite"
    if base.family == "gegenbauer" or (base.family == "jacobi" and base.param("a") == base.param("b")):
        return "gegenbauer"
    raise ValueError(f"no closed-form generating function for the {base.family} base")


def genfun_weights(family: str, alpha, n_max: int) -> list:
    """Exact kappa_n with sum kappa_n h_n t^n = psi(x, t) for the monic family h_n."""
    out = [ONE]
    for n in range(1, n_max + 1):
        if family == "hermite":
            out.append(out[-1] / n)
        else:
            a = gr(alpha)
            out.append(out[-1] * (a * 2 + (2 * n - 1)) * (a + n) / ((a * 2 + n) * n))
    return out


def _psi(family: str, alpha: float, x: float, t: float) -> tuple[complex, complex]:
    """psi and d psi / dx in closed form."""
    if family == "hermite":
        v = math.exp(x * t - t * t / 4)
        return v, t * v
    phi = math.sqrt(1 - 2 * x * t + t * t)
    g = (1 + phi) ** 2 - t * t
    c = 2 ** (2 * alpha)
    psi = c / phi * g ** (-alpha)
    dphi = -t / phi
    dpsi = c * (-dphi / phi ** 2 * g ** (-alpha) + (-alpha) * g ** (-alpha - 1) * 2 * (1 + phi) * dphi / phi)
    return psi, dpsi


def genfun_check(
    fact: DarbouxFactorization,
    samples: Sequence[tuple],
    trunc: int = 40,
    tol: float = 1e-8,
    family: Optional[str] = None,
    seq: Optional[OMPSequence] = None,
) -> GenfunReport:
    """Compare sum kappa_n c_n p~_n t^n with psi_x v1 - psi v0 at float samples."""
    import numpy as np

    base = fact.source.weight.base
    fam = family or _genfun_family(base)
    alpha = 0
    if fam == "gegenbauer":
        alpha = base.param("r") / 2 if base.family == "gegenbauer" else base.param("a")
    if seq is None:
        seq = transformed_omp(fact, trunc - 1)
    kappa = genfun_weights(fam, alpha, trunc - 1)
    terms = [(fact.leading_coeff(n) * seq[n]).scale(kappa[n]) for n in range(trunc)]
    out = []
    for x, t in samples:
        x, t = float(x), float(t)
        lhs = sum(terms[n].eval_float(x) * t ** n for n in range(trunc))
        psi, dpsi = _psi(fam, float(alpha), x, t)
        rhs = dpsi * fact.v1.eval_float(x) - psi * fact.v0.eval_float(x)
        r = float(np.max(np.abs(lhs - rhs)))
        if not math.isfinite(r):
            r = math.inf
        out.append((x, t, r, abs(t) <= GENFUN_RADIUS))
    return GenfunReport(fam, tuple(out), tol)
