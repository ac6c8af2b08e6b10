"""Acceptance suite: one PASS/FAIL line per criterion.

Run with pytest -s for the lines, or directly:
    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import json
import random
import sys
import tempfile
import time
from fractions import Fraction
from importlib import resources
from pathlib import Path

import pytest

from domp.cli import quadrature_oracle
from domp.darboux import build_factorization, check_hypotheses, genfun_check, transformed_omp
from domp.dwalgebra import (
    EpsPolyMatrix,
    center_relation_check,
    conjugate_element,
    delta_as_eps,
    filtration_profile,
    kernel_invariance,
    membership_conditions,
    random_eps_matrix,
)
from domp.omp import verify_eigen
from domp.exactnum import ExactMatrix, GaussianRational, MatPoly, MatRatFun, Poly, gr
from domp.presets import HermiteExample, JacobiExample
from domp.weights import ScalarClassicalWeight, WeightSpec, inner_product, pearson_check, scalar_moment
from domp.weyl import (
    MatDiffOp,
    eigenvalue_map,
    formal_w_adjoint,
    kernel_series,
    multiply,
    star_adjoint,
)

I2 = ExactMatrix.identity(2)
CRITERIA: dict = {}


def criterion(number: int, title: str):
    def register(fn):
        CRITERIA[number] = (title, fn)
        return fn

    return register


def _within(seconds: float, limit: float, what: str) -> None:
    assert seconds < limit, f"{what} took {seconds:.2f} s (limit {limit} s)"


def _examples():
    return HermiteExample(gr(1)), JacobiExample(gr(4), gr(1))


# ---------------------------------------------------------------- criteria


@criterion(1, "golden factorization, Hermite c = 1")
def golden_hermite() -> str:
    t0 = time.perf_counter()
    ex = HermiteExample(gr(1))
    f = build_factorization(ex.pair(), ex.v0, ex.v1)
    v1 = ex.v1
    assert f.nu == MatDiffOp([-MatPoly.identity(2), v1], 2), "nu != d v1 - I"
    v1_inv = MatRatFun._lift(v1).inverse()
    assert v1_inv.is_polynomial(), "v1 is not unimodular"
    assert f.mu == MatDiffOp([MatPoly.const(-ex.B), -v1_inv.to_matpoly()], 2), "mu != -d v1^-1 - B"
    delta = MatDiffOp([MatPoly.const(ExactMatrix.diag(3, 1)), MatPoly.x_times(I2.scale(2)), MatPoly.const(-I2)], 2)
    assert multiply(f.nu, f.mu) == delta, "nu mu != delta"
    env = MatPoly([I2, ExactMatrix([[0, 2], [2, 0]]), ExactMatrix([[4, 0], [0, 0]])])
    assert f.target.weight.envelope == env, "envelope differs from [[4x^2+1, 2x], [2x, 1]]"
    dt = time.perf_counter() - t0
    _within(dt, 1.0, "construction")
    return f"{dt:.3f} s"


@criterion(2, "golden factorization, Jacobi r = 4, p = 1")
def golden_jacobi() -> str:
    t0 = time.perf_counter()
    ex = JacobiExample(gr(4), gr(1))
    rep = check_hypotheses(ex.pair(), ex.v0, ex.v1, ex.gauge)
    assert rep.all_pass, f"hypotheses failed: {rep.failed()}"
    assert "r > 2" in rep.get("integrability").detail
    f = build_factorization(ex.pair(), ex.v0, ex.v1, ex.gauge)
    # S^2 x^2 + T^2 - 4x J with S^2 = diag(1, 3), T^2 = diag(3, 1), J the swap
    S2, T2 = ExactMatrix.diag(1, 3), ExactMatrix.diag(3, 1)
    J = ExactMatrix([[0, 1], [1, 0]])
    assert f.target.weight.envelope == MatPoly([T2, J.scale(-4), S2]), "envelope block pattern"
    assert f.target.weight.base == ScalarClassicalWeight.gegenbauer(2), "base is not (1 - x^2)^(r/2 - 1)"
    dt = time.perf_counter() - t0
    _within(dt, 1.0, "construction")
    return f"{dt:.3f} s"


@criterion(3, "orthogonality through n = 12")
def orthogonality() -> str:
    t0 = time.perf_counter()
    pairs = 0
    for ex in _examples():
        f = ex.factorization
        w = f.target.weight
        seq = transformed_omp(f, 12)
        for n in range(13):
            for m in range(n):
                assert inner_product(seq[m], seq[n], w).is_zero(), f"<p{m}, p{n}> != 0"
                pairs += 1
            assert inner_product(seq[n], seq[n], w).is_positive_definite(), f"norm {n} not positive definite"
    dt = time.perf_counter() - t0
    _within(dt, 30.0, "orthogonality")
    return f"{pairs} pairs, {dt:.2f} s"


@criterion(4, "eigenfunctions and intertwining")
def eigen_intertwining() -> str:
    for ex in _examples():
        f = ex.factorization
        seq = transformed_omp(f, 12)
        res = verify_eigen(seq, f.target.op, 12)
        assert res.ok, f"eigen fails at n = {res.failed_at}"
        assert res.lam == eigenvalue_map(f.source.op), "Lambda(delta~) != Lambda(delta)"
        assert multiply(f.source.op, f.nu) == multiply(f.nu, f.target.op), "delta nu != nu delta~"
    return "both examples"


def _random_op(rng: random.Random, order: int = 2, degree: int = 2) -> MatDiffOp:
    def scalar():
        return GaussianRational(Fraction(rng.randint(-3, 3), rng.randint(1, 3)), rng.choice([0, 0, 1, -1]))

    coeffs = []
    for _ in range(rng.randint(1, order + 1)):
        coeffs.append(MatPoly([ExactMatrix([[scalar(), scalar()], [scalar(), scalar()]]) for _ in range(rng.randint(1, degree + 1))]))
    return MatDiffOp(coeffs, 2)


@criterion(5, "symmetry suite")
def symmetry() -> str:
    for ex in _examples():
        f = ex.factorization
        assert formal_w_adjoint(f.source.op, f.source.weight) == f.source.op, "delta not symmetric"
        assert formal_w_adjoint(f.target.op, f.target.weight) == f.target.op, "delta~ not symmetric"
    rng = random.Random(2024)
    w = HermiteExample(gr(1)).factorization.target.weight
    for _ in range(100):
        a, b = _random_op(rng), _random_op(rng)
        assert star_adjoint(star_adjoint(a)) == a, "star adjoint is not an involution"
        assert star_adjoint(multiply(a, b)) == multiply(star_adjoint(b), star_adjoint(a)), "star anti-homomorphism"
        da, db = formal_w_adjoint(a, w), formal_w_adjoint(b, w)
        assert formal_w_adjoint(da, w) == a.to_rational(), "formal adjoint is not an involution"
        assert formal_w_adjoint(multiply(a, b), w) == multiply(db, da), "formal anti-homomorphism"
    return "100 random operator pairs"


@criterion(6, "Pearson equation on four pairs")
def pearson() -> str:
    names = []
    for ex in _examples():
        f = ex.factorization
        for label, pair in (("source", f.source), ("target", f.target)):
            assert pearson_check(pair.weight, pair.a(1), pair.a(2)).ok, f"{ex.kind} {label}"
            names.append(f"{ex.kind}.{label}")
    return ", ".join(names)


@criterion(7, "structure of the conjugated algebra")
def dw_structure() -> str:
    for ex in _examples():
        prof = filtration_profile(ex, 8)
        assert prof.dims == (1, 0, 4, 0, 4, 0, 4, 0, 4), f"{ex.kind} profile {prof.dims}"
        assert prof.agree, f"{ex.kind} profile routes disagree"
        rng = random.Random(0)
        nu = ex.factorization.nu
        for i in range(200):
            f = random_eps_matrix(rng, ex, max_degree=3)
            assert f.degree <= 3
            member = membership_conditions(f, ex).member
            assert member == (conjugate_element(f, nu) is not None), f"{ex.kind} sample {i} disagrees"
        rep = center_relation_check(ex)
        assert rep.get("center_cubic").status == "pass", f"{ex.kind} cubic residual {rep.get('center_cubic').residual}"
        assert rep.get("torsion_identity").status == "pass", f"{ex.kind} torsion identity"
        assert rep.all_pass, rep.failed()
    return "profile, 2 x 200 samples, cubic, torsion"


@criterion(8, "kernel coherence")
def kernel_coherence() -> str:
    checked = 0
    for ex in _examples():
        nu = ex.factorization.nu
        basis = kernel_series(nu, 16)
        for res in basis.residual(nu):
            assert len(res) >= 15 and all(r.is_zero() for r in res[:15]), "psi . nu != 0 through x^14"
        eps = ex.eps()
        l1, l2 = ex.points
        e = Poly.x()
        members = [
            delta_as_eps(ex),
            EpsPolyMatrix.make([[e - Poly([l1]), Poly()], [Poly(), e - Poly([l2])]], eps),
            EpsPolyMatrix.make([[Poly(), (e - Poly([l1])) * (e - Poly([l2]))], [Poly(), Poly()]], eps),
        ]
        rng = random.Random(1)
        while len(members) < 8:
            f = random_eps_matrix(rng, ex, max_degree=2, member_bias=1.0)
            if membership_conditions(f, ex).member:
                members.append(f)
        for f in members:
            assert conjugate_element(f, nu) is not None
            ok, _ = kernel_invariance(f.realize(), nu, max(16, 2 * f.degree + 4))
            assert ok, f"{ex.kind}: kernel not invariant"
            checked += 1
    return f"{checked} certified members"


@criterion(9, "generating functions")
def generating_functions() -> str:
    out = []
    grids = [
        (HermiteExample(gr(1)), [-1, -0.5, 0, 0.5, 1], [-0.3, -0.2, -0.1, 0.1, 0.2, 0.3], 1e-8),
        (JacobiExample(gr(4), gr(1)), [-0.5, 0, 0.25, 0.5], [-0.1, -0.05, 0.05, 0.1], 1e-7),
    ]
    for ex, xs, ts, tol in grids:
        t0 = time.perf_counter()
        rep = genfun_check(ex.factorization, [(x, t) for x in xs for t in ts], 40, tol)
        dt = time.perf_counter() - t0
        assert rep.ok and rep.max_residual < tol, f"{ex.kind} residual {rep.max_residual:.2e}"
        _within(dt, 10.0, f"{ex.kind} generating function")
        out.append(f"{ex.kind} {rep.max_residual:.1e}")
    return ", ".join(out)


@criterion(10, "moment oracle")
def moment_oracle() -> str:
    bases = [
        ScalarClassicalWeight.hermite(),
        ScalarClassicalWeight.laguerre(0),
        ScalarClassicalWeight.laguerre(Fraction(1, 2)),
        ScalarClassicalWeight.laguerre(2),
        ScalarClassicalWeight.gegenbauer(4),
        ScalarClassicalWeight.gegenbauer(1),
        ScalarClassicalWeight.gegenbauer(Fraction(-1, 2)),
        ScalarClassicalWeight.jacobi(1, 2),
        ScalarClassicalWeight.jacobi(Fraction(1, 2), Fraction(-1, 2)),
    ]
    worst = 0.0
    for base in bases:
        w = WeightSpec.scalar(base, 1)
        for n in range(11):
            exact = complex(scalar_moment(base, n)).real
            approx = quadrature_oracle(w, n)
            if exact == 0:
                assert abs(approx) < 1e-12, f"{base.family} mu_{n} = {approx}"
                continue
            rel = abs(approx - exact) / abs(exact)
            worst = max(worst, rel)
            assert rel < 1e-10, f"{base.family}{dict(base.params)} mu_{n}: relative error {rel:.1e}"
    return f"{len(bases)} weights, worst relative error {worst:.1e}"


def _golden(name: str) -> dict:
    return json.loads(resources.files("domp").joinpath("data", name).read_text())


@criterion(11, "negative controls")
def negative_controls() -> str:
    from click.testing import CliRunner

    from domp.cli import main

    v0_zero = _golden("hermite_c1.json")
    v0_zero["v0"] = [[["0", "0"], ["0", "0"]]]
    support = _golden("hermite_c1.json")
    support["support"] = ["0", "inf"]
    a1_zero = _golden("hermite_c1.json")
    a1_zero["pair"]["op"]["dcoeffs"][1] = [[["0", "0"], ["0", "0"]]]
    eps_i = _golden("hermite_c1.json")
    eps_i["elements"] = [{"name": "eps_I", "entries": [[["0", "1"], []], [[], ["0", "1"]]]}]
    cases = [
        ("v0 = 0", "darboux", v0_zero, "hypothesis.factorization_equation"),
        ("wrong support", "darboux", support, "hypothesis.boundary_decay"),
        ("a1 = 0", "verify-bochner", a1_zero, "pearson"),
        ("f = eps I", "dw-explore", eps_i, "membership:eps_I"),
    ]
    runner = CliRunner()
    with tempfile.TemporaryDirectory() as tmp:
        for label, command, problem, check in cases:
            path = Path(tmp) / "problem.json"
            path.write_text(json.dumps(problem))
            res = runner.invoke(main, [command, "--input", str(path)])
            assert res.exit_code != 0, f"{label}: exit status 0"
            doc = json.loads(res.stdout)
            failed = [c["name"] for c in doc["checks"] if c["status"] == "fail"]
            assert check in failed, f"{label}: {check} did not fail (failed: {failed})"
    return "4 inputs rejected"


# ------------------------------------------------------------------ runner


def run_criterion(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    t0 = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        ok = False
    dt = time.perf_counter() - t0
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail} [{dt:.2f} s]"
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = run_criterion(number)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
