"""Command-line front end: JSON problem files in, JSON verification reports out."""

from __future__ import annotations

import json
import math
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Optional

import click

from .darboux import (
    BochnerPair,
    ansatz_operator_residual,
    ansatz_relations,
    bochner_checks,
    build_factorization,
    check_hypotheses,
    genfun_check,
    transformed_omp,
    verify_factorization,
)
from .dwalgebra import (
    EpsPolyMatrix,
    UnsupportedExample,
    center_relation_check,
    conjugate_element,
    eps_matrix_from_json,
    filtration_profile,
    kernel_invariance,
    membership_conditions,
    random_eps_matrix,
    verify_in_Dw,
)
from .exactnum import ExactArithmeticError, GaussianRational, matpoly_from_json, matpoly_to_json, matrix_from_json
from .omp import SingularMomentMatrix, monic_omp, source_sequence
from .presets import example_from_json
from .reports import FAIL, PASS, UNDETERMINED, Check, Report, status_of
from .weights import FAMILIES, WeightSpec, inner_product
from .weyl import formal_w_adjoint

SCHEMA_VERSION = 1
DEFAULT_NMAX = 12


class SchemaError(ValueError):
    pass


class NonConvergence(ArithmeticError):
    pass


# ----------------------------------------------------------------- schema

_GR = "exact scalar string"


def _need(cond: bool, where: str, msg: str) -> None:
    if not cond:
        raise SchemaError(f"{where}: {msg}")


def _keys(obj: Any, where: str, required: set, optional: set = frozenset()) -> None:
    _need(isinstance(obj, dict), where, "expected an object")
    extra = set(obj) - required - set(optional)
    _need(not extra, where, f"unknown fields {sorted(extra)}")
    missing = required - set(obj)
    _need(not missing, where, f"missing fields {sorted(missing)}")


def _scalar(v: Any, where: str) -> None:
    _need(isinstance(v, (str, int)) and not isinstance(v, bool), where, f"expected an {_GR}")
    try:
        GaussianRational.parse(str(v))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _matrix(v: Any, where: str) -> None:
    _need(isinstance(v, list) and v and all(isinstance(r, list) for r in v), where, "expected a matrix")
    _need(len({len(r) for r in v}) == 1, where, "ragged matrix")
    for i, r in enumerate(v):
        for j, e in enumerate(r):
            _scalar(e, f"{where}[{i}][{j}]")


def _matpoly(v: Any, where: str) -> None:
    _need(isinstance(v, list), where, "expected a list of coefficient matrices")
    for k, m in enumerate(v):
        _matrix(m, f"{where}[{k}]")
    _need(len({(len(m), len(m[0])) for m in v}) <= 1, where, "coefficient shapes differ")


def _int(v: Any, where: str, lo: int = 0) -> None:
    _need(isinstance(v, int) and not isinstance(v, bool) and v >= lo, where, f"expected an integer >= {lo}")


def _number(v: Any, where: str) -> None:
    _need(isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v), where, "expected a number")


def _weight(v: Any, where: str) -> None:
    _keys(v, where, {"base", "envelope"})
    _keys(v["base"], f"{where}.base", {"family"}, {"params", "support"})
    base = v["base"]
    _need(base["family"] in FAMILIES, f"{where}.base.family", f"expected one of {list(FAMILIES)}")
    for k, p in base.get("params", {}).items():
        _scalar(p, f"{where}.base.params.{k}")
    if "support" in base:
        sup = base["support"]
        _need(isinstance(sup, list) and len(sup) == 2, f"{where}.base.support", "expected [x0, x1]")
        for e in sup:
            if e not in ("-inf", "inf"):
                _scalar(e, f"{where}.base.support")
    _matpoly(v["envelope"], f"{where}.envelope")
    _need(len(v["envelope"]) > 0, f"{where}.envelope", "envelope must be nonzero")


def _op(v: Any, where: str) -> None:
    _keys(v, where, {"dcoeffs"})
    _need(isinstance(v["dcoeffs"], list), f"{where}.dcoeffs", "expected a list")
    for i, c in enumerate(v["dcoeffs"]):
        _matpoly(c, f"{where}.dcoeffs[{i}]")


def _pair(v: Any, where: str) -> None:
    _keys(v, where, {"weight", "op"})
    _weight(v["weight"], f"{where}.weight")
    _op(v["op"], f"{where}.op")


def _example(v: Any, where: str) -> None:
    _need(isinstance(v, dict) and "family" in v, where, "expected an object with a family")
    fam = v["family"]
    if fam == "hermite":
        _keys(v, where, {"family", "c"})
        _scalar(v["c"], f"{where}.c")
    elif fam in ("jacobi", "gegenbauer"):
        _keys(v, where, {"family", "r", "p"})
        _scalar(v["r"], f"{where}.r")
        _scalar(v["p"], f"{where}.p")
    else:
        raise SchemaError(f"{where}.family: unsupported example family {fam!r}")


def _elements(v: Any, where: str) -> None:
    _need(isinstance(v, list), where, "expected a list")
    for i, el in enumerate(v):
        w = f"{where}[{i}]"
        _keys(el, w, {"name", "entries"})
        _need(isinstance(el["name"], str), f"{w}.name", "expected a string")
        ent = el["entries"]
        _need(isinstance(ent, list) and len(ent) == 2 and all(isinstance(r, list) and len(r) == 2 for r in ent), f"{w}.entries", "expected a 2 x 2 grid")
        for r in ent:
            for g in r:
                _need(isinstance(g, list), f"{w}.entries", "each entry is a coefficient list in eps")
                for c in g:
                    _scalar(c, f"{w}.entries")


def _genfun(v: Any, where: str) -> None:
    _keys(v, where, set(), {"grid", "samples", "trunc", "tol"})
    if "grid" in v:
        _keys(v["grid"], f"{where}.grid", {"x", "t"})
        for k in ("x", "t"):
            _need(isinstance(v["grid"][k], list), f"{where}.grid.{k}", "expected a list")
            for s in v["grid"][k]:
                _number(s, f"{where}.grid.{k}")
    if "samples" in v:
        _need(isinstance(v["samples"], list), f"{where}.samples", "expected a list of [x, t]")
        for s in v["samples"]:
            _need(isinstance(s, list) and len(s) == 2, f"{where}.samples", "expected [x, t]")
            _number(s[0], f"{where}.samples")
            _number(s[1], f"{where}.samples")
    if "trunc" in v:
        _int(v["trunc"], f"{where}.trunc", 1)
    if "tol" in v:
        _number(v["tol"], f"{where}.tol")


def _ansatz(v: Any, where: str) -> None:
    _keys(v, where, {"family", "A0", "A1"}, {"params"})
    _need(v["family"] in ("hermite", "laguerre", "jacobi", "gegenbauer"), f"{where}.family", "unsupported family")
    _matrix(v["A0"], f"{where}.A0")
    _matrix(v["A1"], f"{where}.A1")
    for k, p in v.get("params", {}).items():
        _scalar(p, f"{where}.params.{k}")


_FIELDS: dict[str, Callable] = {
    "description": lambda v, w: _need(isinstance(v, str), w, "expected a string"),
    "pair": _pair,
    "weight": _weight,
    "example": _example,
    "support": lambda v, w: _need(isinstance(v, list) and len(v) == 2, w, "expected [x0, x1]"),
    "v0": _matpoly,
    "v1": _matpoly,
    "gauge": _matrix,
    "n_max": _int,
    "max_order": _int,
    "elements": _elements,
    "agreement_samples": _int,
    "genfun": _genfun,
    "ansatz": _ansatz,
    "factorization": lambda v, w: _need(isinstance(v, dict), w, "expected an object"),
}


def validate_problem(data: Any) -> dict:
    """Strict schema check; unknown fields are rejected before any computation."""
    _need(isinstance(data, dict), "problem", "expected a JSON object")
    _need(data.get("version") == SCHEMA_VERSION, "problem.version", f"expected {SCHEMA_VERSION}")
    for k, v in data.items():
        if k == "version":
            continue
        _need(k in _FIELDS, "problem", f"unknown field {k!r}")
        _FIELDS[k](v, k)
    return data


def _require(data: dict, command: str, *alternatives: tuple) -> tuple:
    for alt in alternatives:
        if all(k in data for k in alt):
            return alt
    opts = " or ".join("+".join(a) for a in alternatives)
    raise SchemaError(f"{command} needs {opts}")


# ----------------------------------------------------------- problem data


def _example_of(data: dict):
    return example_from_json(data["example"])


def _with_support(pair: BochnerPair, data: dict) -> BochnerPair:
    """Apply a top-level support override to the pair's base weight."""
    if "support" in data:
        base = pair.weight.base
        base = type(base).make(base.family, data["support"], **dict(base.params))
        pair = BochnerPair(WeightSpec(base, pair.weight.envelope), pair.op)
    return pair


def _darboux_data(data: dict):
    """(pair, v0, v1, gauge) from an explicit problem or a built-in example."""
    if "pair" in data:
        pair = _with_support(BochnerPair.from_json(data["pair"]), data)
        N = pair.dimension
        gauge = matrix_from_json(data["gauge"]) if "gauge" in data else None
        return pair, matpoly_from_json(data["v0"], N), matpoly_from_json(data["v1"], N), gauge
    ex = _example_of(data)
    return _with_support(ex.pair(), data), ex.v0, ex.v1, ex.gauge


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("DOMP_THREADS", "") or os.cpu_count() or 1))
    except ValueError:
        return 1


def _run_all(tasks: list) -> list:
    """Run independent zero-argument tasks; results come back in declaration order."""
    n = min(_threads(), len(tasks))
    if n <= 1:
        return [t() for t in tasks]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(lambda t: t(), tasks))


def _prefixed(rep: Report, prefix: str) -> list:
    return [Check(f"{prefix}{c.name}", c.status, c.detail, c.residual) for c in rep.checks]


# --------------------------------------------------------------- commands


def cmd_verify_bochner(data: dict, n_max: Optional[int] = None) -> tuple[Report, dict]:
    alt = _require(data, "verify-bochner", ("pair",), ("example",))
    n = n_max if n_max is not None else data.get("n_max", DEFAULT_NMAX)
    rep = Report()
    if alt == ("pair",):
        pair = _with_support(BochnerPair.from_json(data["pair"]), data)
        rep.extend(bochner_checks(pair, n).checks)
        return rep, {"lambda": matpoly_to_json(pair.lam)}
    ex = _example_of(data)
    src = _with_support(ex.pair(), data)
    fact = build_factorization(src, ex.v0, ex.v1, ex.gauge)
    a, b = _run_all([lambda: bochner_checks(src, n), lambda: bochner_checks(fact.target, n)])
    rep.extend(_prefixed(a, "source."))
    rep.extend(_prefixed(b, "target."))
    return rep, {"lambda": matpoly_to_json(src.lam)}


def cmd_darboux(data: dict, n_max: Optional[int] = None) -> tuple[Report, dict]:
    alt = _require(data, "darboux", ("ansatz",), ("pair", "v0", "v1"), ("example",))
    if alt == ("ansatz",):
        return _ansatz_report(data["ansatz"])
    n = n_max if n_max is not None else data.get("n_max", DEFAULT_NMAX)
    pair, v0, v1, gauge = _darboux_data(data)
    rep = Report()
    hyp = check_hypotheses(pair, v0, v1, gauge)
    rep.extend(_prefixed(hyp, "hypothesis."))
    if not hyp.ok:
        return rep, {}
    try:
        fact = build_factorization(pair, v0, v1, gauge)
    except (ExactArithmeticError, ValueError) as exc:
        rep.add(Check("construction", FAIL, f"{type(exc).__name__}: {exc}"))
        return rep, {}
    rep.add(Check("construction", PASS))
    rep.extend(verify_factorization(fact, n).checks)
    return rep, {"factorization": fact.to_json(), "pair": fact.target.to_json()}


def _ansatz_report(a: dict) -> tuple[Report, dict]:
    A0, A1 = matrix_from_json(a["A0"]), matrix_from_json(a["A1"])
    params = {k: GaussianRational.parse(str(v)) for k, v in a.get("params", {}).items()}
    rel = ansatz_relations(a["family"], A0, A1, params)
    rep = Report()
    for label, r in rel.relations:
        rep.add(Check(f"ansatz.{label}", status_of(r.is_zero()), "", None if r.is_zero() else r.tolist()))
    res = ansatz_operator_residual(a["family"], A0, A1, rel.B, params)
    rep.add(Check("ansatz.factorization_equation", status_of(res.is_zero())))
    return rep, {"ansatz": rel.to_json()}


def cmd_omp(data: dict, n_max: Optional[int] = None) -> tuple[Report, dict]:
    alt = _require(data, "omp", ("weight",), ("pair",), ("example",))
    n = n_max if n_max is not None else data.get("n_max", DEFAULT_NMAX)
    if alt == ("weight",):
        w = WeightSpec.from_json(data["weight"])
    elif alt == ("pair",):
        w = BochnerPair.from_json(data["pair"]).weight
    else:
        w = _example_of(data).factorization.target.weight
    rep = Report()
    try:
        seq = monic_omp(w, n) if w.envelope != type(w.envelope).identity(w.dimension) else source_sequence(w, n)
    except SingularMomentMatrix as exc:
        rep.add(Check("moment_matrix", FAIL, str(exc)))
        return rep, {}
    rep.add(Check("moment_matrix", PASS))
    bad = [(m, k) for k in range(n + 1) for m in range(k) if not inner_product(seq[m], seq[k], w).is_zero()]
    rep.add(Check("orthogonality", status_of(not bad), "" if not bad else f"nonzero at {bad[:5]}"))
    pd = [k for k in range(n + 1) if not seq.norm(k).is_positive_definite()]
    rep.add(Check("norms_positive", status_of(not pd), "" if not pd else f"n = {pd}"))
    return rep, {"omp": seq.to_json(), "norms": [seq.norm(k).tolist() for k in range(n + 1)]}


def _element(el: dict, ex) -> EpsPolyMatrix:
    return eps_matrix_from_json(el["entries"], ex.eps())


def cmd_dw_explore(data: dict, n_max: Optional[int] = None) -> tuple[Report, dict]:
    _require(data, "dw-explore", ("example",))
    ex = _example_of(data)
    max_order = data.get("max_order", 8)
    fact = ex.factorization
    nu = fact.nu
    rep = Report()
    result: dict = {}
    members: list = []

    def profile():
        return filtration_profile(ex, max_order)

    def center():
        return center_relation_check(ex) if max_order >= 6 else None

    prof, cen = _run_all([profile, center])
    result["profile"] = list(prof.dims)
    result["solver_profile"] = list(prof.solver_dims)
    rep.add(Check("filtration_profile", status_of(prof.agree), f"dims {list(prof.dims)}"))
    if cen is None:
        rep.add(Check("center_relation", UNDETERMINED, f"center generators have orders 4 and 6; max_order {max_order} is too low"))
    else:
        rep.extend(cen.checks)

    for el in data.get("elements", []):
        f = _element(el, ex)
        name = el["name"]
        mem = membership_conditions(f, ex)
        X = conjugate_element(f, nu)
        agree = mem.member == (X is not None)
        if not agree:
            rep.add(Check(f"membership:{name}", FAIL, "membership conditions and solver disagree", mem.witness.tolist()))
            continue
        if not mem.member:
            rep.add(Check(f"membership:{name}", FAIL, "not in the conjugated subalgebra", mem.witness.tolist()))
            continue
        rep.add(Check(f"membership:{name}", PASS, f"conjugate has order {X.order}"))
        order = int(f.realize().order) if not f.is_zero() else 0
        K = max(16, order + 4)
        ok, through = kernel_invariance(f.realize(), nu, K)
        rep.add(Check(f"kernel_invariance:{name}", status_of(ok), f"checked through x^{through - 1}"))
        members.append((name, X))

    if members:
        n_check = n_max if n_max is not None else data.get("n_max", DEFAULT_NMAX)
        w_t = fact.target.weight
        seq = transformed_omp(fact, n_check)
        for name, X in members:
            rep.add(Check(f"in_transformed_algebra:{name}", status_of(verify_in_Dw(X, seq, n_check)), f"eigen through n = {n_check}"))
            dag = formal_w_adjoint(X, w_t)
            ok = dag.is_polynomial() and verify_in_Dw(dag, seq, n_check)
            rep.add(Check(f"adjoint_closure:{name}", status_of(ok), "formal adjoint of the conjugate is again in the algebra"))

    samples = data.get("agreement_samples", 0)
    if samples:
        rng = random.Random(0)
        bad = 0
        for _ in range(samples):
            f = random_eps_matrix(rng, ex)
            bad += membership_conditions(f, ex).member != (conjugate_element(f, nu) is not None)
        rep.add(Check("membership_agreement", status_of(bad == 0), f"{samples - bad}/{samples} samples agree"))
    return rep, result


_GENFUN_DEFAULTS = {
    "hermite": ({"x": [-1, -0.5, 0, 0.5, 1], "t": [-0.3, -0.2, -0.1, 0.1, 0.2, 0.3]}, 1e-8),
    "gegenbauer": ({"x": [-0.5, 0, 0.25, 0.5], "t": [-0.1, -0.05, 0.05, 0.1]}, 1e-7),
}


def cmd_genfun(data: dict, n_max: Optional[int] = None, tol: Optional[float] = None) -> tuple[Report, dict]:
    _require(data, "genfun", ("pair", "v0", "v1"), ("example",))
    pair, v0, v1, gauge = _darboux_data(data)
    fact = build_factorization(pair, v0, v1, gauge)
    spec = data.get("genfun", {})
    fam = "hermite" if pair.weight.base.family == "hermite" else "gegenbauer"
    grid, default_tol = _GENFUN_DEFAULTS[fam]
    grid = spec.get("grid", grid)
    samples = spec.get("samples") or [(x, t) for x in grid["x"] for t in grid["t"]]
    trunc = n_max + 1 if n_max is not None else spec.get("trunc", 40)
    use_tol = tol if tol is not None else spec.get("tol", default_tol)
    gr_ = genfun_check(fact, samples, trunc, use_tol)
    rep = Report()
    outside = [s for s in gr_.samples if not s[3]]
    inside = [s for s in gr_.samples if s[3]]
    worst = max((s[2] for s in inside), default=0.0)
    rep.add(Check("genfun_residual", status_of(worst < use_tol), f"max residual {worst:.3e} (tol {use_tol:g}, {len(inside)} samples)"))
    if outside:
        rep.add(Check("genfun_region", FAIL, f"{len(outside)} samples outside |t| <= 0.5 are out_of_region"))
    return rep, {"genfun": gr_.to_json()}


# ----------------------------------------------------------- float oracle


def quadrature_oracle(weight: WeightSpec, n: int, tol: float = 1e-12) -> float:
    """Normalized trace moment int x^n tr(P) r / int r by adaptive quadrature."""
    import numpy as np
    from scipy import integrate

    if tol < 1e-13:
        raise ValueError("tol must be at least 1e-13")
    base = weight.base
    fam = base.family
    env = weight.envelope

    def tr(x: float) -> float:
        return float(np.real(np.trace(env.eval_float(x))))

    def integrate_piece(f, lo, hi, **kw):
        try:
            val, err, *rest = integrate.quad(f, lo, hi, epsabs=tol * 1e-2, epsrel=tol, limit=400, full_output=1, **kw)
        except OverflowError as exc:
            raise NonConvergence("integrand overflows") from exc
        if not (math.isfinite(val) and math.isfinite(err)):
            raise NonConvergence("non-finite integral")
        if len(rest) > 1 and "roundoff" not in str(rest[1]) and err > tol * max(1.0, abs(val)):
            raise NonConvergence(str(rest[1]))
        if err > tol * max(1.0, abs(val)):
            raise NonConvergence(f"error estimate {err:.2e} exceeds tolerance")
        return val

    def total(g) -> float:
        if fam == "hermite":
            return integrate_piece(lambda x: g(x) * math.exp(-x * x), -math.inf, math.inf)
        if fam == "laguerre":
            b = float(base.param("b"))
            head = integrate_piece(lambda x: g(x) * math.exp(-x), 0.0, 1.0, weight="alg", wvar=(b, 0.0))
            tail = integrate_piece(lambda x: g(x) * x ** b * math.exp(-x), 1.0, math.inf)
            return head + tail
        if fam == "gegenbauer":
            a = b = float(base.param("r")) / 2
        else:
            a, b = float(base.param("a")), float(base.param("b"))
        # weight='alg' integrates g(x) (x + 1)^b (1 - x)^a
        return integrate_piece(g, -1.0, 1.0, weight="alg", wvar=(b, a))

    norm = total(lambda x: 1.0)
    return total(lambda x: x ** n * tr(x)) / norm


# -------------------------------------------------------------------- I/O


COMMANDS = {
    "verify-bochner": cmd_verify_bochner,
    "darboux": cmd_darboux,
    "omp": cmd_omp,
    "dw-explore": cmd_dw_explore,
    "genfun": cmd_genfun,
}


def run_command(name: str, data: Any, n_max: Optional[int] = None, tol: Optional[float] = None) -> dict:
    """Validate, run, and assemble the report document (timing is the only nondeterministic field)."""
    start = time.perf_counter()
    data = validate_problem(data)
    fn = COMMANDS[name]
    if name == "genfun":
        rep, result = fn(data, n_max, tol)
    else:
        rep, result = fn(data, n_max)
    if any(c.status == FAIL for c in rep.checks):
        status = FAIL
    elif any(c.status == UNDETERMINED for c in rep.checks):
        status = UNDETERMINED
    else:
        status = PASS
    doc = {"version": SCHEMA_VERSION, "command": name, "status": status, "checks": rep.to_json()}
    doc.update(result)
    doc["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return doc


def result_as_problem(doc: dict) -> dict:
    """The transformed pair of a darboux report as a verify-bochner problem file."""
    return {"version": SCHEMA_VERSION, "pair": doc["pair"], "factorization": doc["factorization"]}


def _emit(doc: dict, output: Optional[str]) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _common(fn):
    fn = click.option("--tol", type=float, default=None, help="Float tolerance (genfun).")(fn)
    fn = click.option("--nmax", type=int, default=None, help="Verification depth n_max.")(fn)
    fn = click.option("--output", "output", type=click.Path(dir_okay=False), default=None, help="Report file (default stdout).")(fn)
    fn = click.option("--input", "input_", type=click.Path(exists=True, dir_okay=False), required=True, help="Problem file.")(fn)
    return fn


def _invoke(name: str, input_: str, output: Optional[str], nmax: Optional[int], tol: Optional[float]) -> None:
    with open(input_, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise click.ClickException(f"invalid JSON: {exc}")
    try:
        doc = run_command(name, data, nmax, tol)
    except SchemaError as exc:
        click.echo(f"schema error: {exc}", err=True)
        sys.exit(2)
    except UnsupportedExample as exc:
        click.echo(f"unsupported example: {exc}", err=True)
        sys.exit(2)
    if name == "darboux" and output and "factorization" in doc:
        # the result file doubles as a verify-bochner problem for the transformed pair
        root, ext = os.path.splitext(output)
        with open(f"{root}.result{ext or '.json'}", "w", encoding="utf-8") as fh:
            fh.write(json.dumps(result_as_problem(doc), indent=2) + "\n")
    _emit(doc, output)
    for c in doc["checks"]:
        if c["status"] == FAIL:
            click.echo(f"FAIL {c['name']}: {c.get('detail', '')}", err=True)
    sys.exit(1 if doc["status"] == FAIL else 0)


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Exact verification of Darboux transformations of matrix Bochner pairs."""


@main.command("verify-bochner")
@_common
def verify_bochner_cmd(input_, output, nmax, tol):
    """Symmetry, Pearson, boundary, and eigenfunction checks for a pair."""
    _invoke("verify-bochner", input_, output, nmax, tol)


@main.command("darboux")
@_common
def darboux_cmd(input_, output, nmax, tol):
    """Check hypotheses, build the factorization, and verify its conclusions."""
    _invoke("darboux", input_, output, nmax, tol)


@main.command("omp")
@_common
def omp_cmd(input_, output, nmax, tol):
    """Monic orthogonal matrix polynomials of a weight."""
    _invoke("omp", input_, output, nmax, tol)


@main.command("dw-explore")
@_common
def dw_explore_cmd(input_, output, nmax, tol):
    """Filtration profile, membership, and center relations of the conjugated algebra."""
    _invoke("dw-explore", input_, output, nmax, tol)


@main.command("genfun")
@_common
def genfun_cmd(input_, output, nmax, tol):
    """Float check of the transformed generating function."""
    _invoke("genfun", input_, output, nmax, tol)


if __name__ == "__main__":
    main()
