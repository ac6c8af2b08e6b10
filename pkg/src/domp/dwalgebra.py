"""The conjugated subalgebra nu^-1 M_N(C[eps]) nu intersected with differential operators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactnum import (
    ZERO,
    ExactArithmeticError,
    ExactMatrix,
    GaussianRational,
    MatPoly,
    Poly,
    RatFun,
    matpoly_to_json,
)
from .omp import OMPSequence, verify_eigen
from .reports import FAIL, PASS, Check, Report, status_of
from .weyl import (
    MatDiffOp,
    apply_series,
    conjugate_solver,
    eigenvalue_map,
    kernel_series,
    left_divide,
    multiply,
)


class UnsupportedExample(ExactArithmeticError):
    pass


_EPS_POWERS: dict = {}


def _eps_power(eps: MatDiffOp, m: int) -> MatDiffOp:
    key = (eps, m)
    if key not in _EPS_POWERS:
        _EPS_POWERS[key] = MatDiffOp.identity(1) if m == 0 else multiply(_eps_power(eps, m - 1), eps)
    return _EPS_POWERS[key]


def _scalar_of(f: Poly, eps: MatDiffOp) -> MatDiffOp:
    """f(eps) for a scalar polynomial f and a scalar (N = 1) operator eps."""
    acc = MatDiffOp.zero(1)
    for m, c in enumerate(f.c):
        if not c.is_zero():
            acc = acc + _eps_power(eps, m).scale(c)
    return acc


@dataclass(frozen=True)
class EpsPolyMatrix:
    """A matrix (f_jk(eps)) of scalar polynomials in a bound scalar operator eps."""

    entries: tuple  # tuple of tuples of Poly
    eps: MatDiffOp

    @classmethod
    def make(cls, grid: Sequence[Sequence], eps: MatDiffOp) -> "EpsPolyMatrix":
        rows = tuple(tuple(g if isinstance(g, Poly) else Poly([g]) for g in r) for r in grid)
        return cls(rows, eps)

    @classmethod
    def scalar(cls, f: Poly, n: int, eps: MatDiffOp) -> "EpsPolyMatrix":
        return cls.make([[f if i == j else Poly() for j in range(n)] for i in range(n)], eps)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def degree(self) -> int:
        return max((int(g.degree) for r in self.entries for g in r if not g.is_zero()), default=-1)

    def is_zero(self) -> bool:
        return all(g.is_zero() for r in self.entries for g in r)

    def __add__(self, other: "EpsPolyMatrix") -> "EpsPolyMatrix":
        return EpsPolyMatrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)), self.eps
        )

    def __mul__(self, other: "EpsPolyMatrix") -> "EpsPolyMatrix":
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Poly()
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(tuple(row))
        return EpsPolyMatrix(tuple(out), self.eps)

    def realize(self) -> MatDiffOp:
        """Substitute the bound operator and assemble the matrix operator."""
        n = self.n
        ops = [[_scalar_of(g, self.eps) for g in r] for r in self.entries]
        order = max((len(o.coeffs) for r in ops for o in r), default=0)
        coeffs = []
        for i in range(order):
            grid = []
            for r in ops:
                grid.append([o.coeffs[i].entry(0, 0) if i < len(o.coeffs) else Poly() for o in r])
            coeffs.append(MatPoly.from_entries(grid))
        return MatDiffOp(coeffs, n) if coeffs else MatDiffOp.zero(n)

    def to_json(self) -> list:
        return [[[str(c) for c in g.c] for g in r] for r in self.entries]


def eps_matrix_from_json(data, eps: MatDiffOp) -> EpsPolyMatrix:
    """Entries are coefficient lists in eps (index = power)."""
    return EpsPolyMatrix.make(
        [[Poly([GaussianRational.parse(str(c)) for c in g]) for g in r] for r in data], eps
    )


# --------------------------------------------------------------- membership


def _points(example) -> tuple:
    if getattr(example, "kind", None) not in ("hermite", "jacobi"):
        raise UnsupportedExample(f"no membership conditions for {example!r}")
    return example.points


@dataclass(frozen=True)
class Membership:
    member: bool
    witness: ExactMatrix  # F_jk = f_jk(lambda_j); member iff F is scalar

    def to_json(self) -> dict:
        return {"member": self.member, "witness": self.witness.tolist()}


def membership_conditions(f: EpsPolyMatrix, example) -> Membership:
    """f12(l1) = 0, f21(l2) = 0, f11(l1) = f22(l2) for the eigenvalue points (l1, l2)."""
    lams = _points(example)
    if f.n != 2:
        raise UnsupportedExample("membership conditions are for 2 x 2 matrices")
    F = ExactMatrix([[f.entries[j][k](lams[j]) for k in range(2)] for j in range(2)])
    member = F.e[0][1].is_zero() and F.e[1][0].is_zero() and F.e[0][0] == F.e[1][1]
    return Membership(member, F)


def conjugate_element(f: EpsPolyMatrix, nu: MatDiffOp) -> Optional[MatDiffOp]:
    """nu^-1 f(eps) nu when it is a differential operator, else None."""
    eta = f.realize()
    if eta.is_zero():
        return MatDiffOp.zero(nu.n)
    return conjugate_solver(eta, nu, int(eta.order))


def example_eps_matrix(example, grid) -> EpsPolyMatrix:
    return EpsPolyMatrix.make(grid, example.eps())


def delta_as_eps(example) -> EpsPolyMatrix:
    """delta = -eps I + B with B = diag(l1, l2)."""
    l1, l2 = example.points
    return example_eps_matrix(example, [[Poly([l1, -1]), Poly()], [Poly(), Poly([l2, -1])]])


# ------------------------------------------------------------- filtration


@dataclass(frozen=True)
class FiltrationProfile:
    dims: tuple
    solver_dims: tuple

    @property
    def agree(self) -> bool:
        return self.dims == self.solver_dims

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "solver_dims": list(self.solver_dims), "agree": self.agree}


def _basis(example, d: int) -> list:
    """(j, k, m) labels for the monomial basis E_jk eps^m of M_2(C[eps]) at eps-degree <= d."""
    return [(j, k, m) for m in range(d + 1) for j in range(2) for k in range(2)]


def _condition_rank(example, d: int) -> int:
    """Rank of the three membership functionals on eps-degree <= d."""
    l1, l2 = example.points
    rows = []
    basis = _basis(example, d)
    # f12(l1), f21(l2), f11(l1) - f22(l2)
    for kind in range(3):
        row = []
        for j, k, m in basis:
            if kind == 0:
                v = l1 ** m if (j, k) == (0, 1) else ZERO
            elif kind == 1:
                v = l2 ** m if (j, k) == (1, 0) else ZERO
            else:
                v = l1 ** m if (j, k) == (0, 0) else (-(l2 ** m) if (j, k) == (1, 1) else ZERO)
            row.append(v)
        rows.append(row)
    return ExactMatrix(rows).rank()


def _obstruction(eta: MatDiffOp, nu: MatDiffOp) -> list:
    """Rational functions whose vanishing means nu^-1 eta nu is a polynomial operator."""
    q, rem = left_divide(multiply(eta, nu), nu)
    out = []
    for c in rem.coeffs:
        out.extend(g for r in c.e for g in r)
    for c in q.coeffs:
        for r in c.e:
            for g in r:
                # proper part of g: (num mod den) / den
                if g.den.degree > 0:
                    out.append(RatFun(g.num % g.den, g.den))
    return out


def _rank_of_rational_rows(rows: list) -> int:
    """Rank of rows of rational functions, as vectors of numerator coefficients over a common denominator."""
    den = Poly([1])
    for row in rows:
        for g in row:
            if g.den.degree > 0:
                den = den * (g.den // g.den.gcd(den))
    vecs = []
    for row in rows:
        vec = []
        for g in row:
            num = g.num * (den // g.den)
            vec.append(num)
        vecs.append(vec)
    width = [max((len(v[i].c) for v in vecs), default=0) for i in range(len(vecs[0]))] if vecs else []
    mat = []
    for v in vecs:
        flat = []
        for i, p in enumerate(v):
            flat.extend(p.coeff(k) for k in range(width[i]))
        mat.append(flat)
    if not mat or not mat[0]:
        return 0
    return ExactMatrix(mat).rank()


def filtration_profile(example, max_order: int) -> FiltrationProfile:
    """dim D_i / D_{i-1} for i <= max_order, by the closed-form conditions and by the solver."""
    nu = example.factorization.nu
    eps = example.eps()
    dmax = max_order // 2
    closed = []
    for d in range(dmax + 1):
        closed.append(4 * (d + 1) - _condition_rank(example, d))
    # solver route: obstruction map on the monomial basis
    solver = []
    rows = []
    for d in range(dmax + 1):
        for j in range(2):
            for k in range(2):
                grid = [[Poly(), Poly()], [Poly(), Poly()]]
                grid[j][k] = Poly.monomial(d)
                eta = EpsPolyMatrix.make(grid, eps).realize()
                rows.append(_obstruction(eta, nu))
        # pad rows to a common length (obstruction lists differ by operator order)
        width = max(len(r) for r in rows)
        padded = [r + [RatFun(Poly())] * (width - len(r)) for r in rows]
        solver.append(len(rows) - _rank_of_rational_rows(padded))
    return FiltrationProfile(_increments(closed, max_order), _increments(solver, max_order))


def _increments(dims_by_degree: list, max_order: int) -> tuple:
    """Members of order <= i are those of eps-degree <= i // 2."""
    out = []
    prev = 0
    for i in range(max_order + 1):
        cur = dims_by_degree[i // 2]
        out.append(cur - prev)
        prev = cur
    return tuple(out)


# ------------------------------------------------------------ center


def _lam_of(f: EpsPolyMatrix, nu: MatDiffOp) -> Optional[MatPoly]:
    x = conjugate_element(f, nu)
    return None if x is None else eigenvalue_map(x)


def center_relation_check(example) -> Report:
    """Cubic relation, commutativity, and the torsion identity in the eigenvalue image."""
    rep = Report()
    nu = example.factorization.nu
    l1, l2 = example.points
    e = Poly.x()
    z = (e - Poly([l1])) * (e - Poly([l2]))
    fX = EpsPolyMatrix.scalar(z, 2, example.eps())
    fY = EpsPolyMatrix.scalar(e * z, 2, example.eps())
    X = conjugate_element(fX, nu)
    Y = conjugate_element(fY, nu)
    if X is None or Y is None:
        rep.add(Check("center_members", FAIL, "center generators are not conjugable"))
        return rep
    rep.add(Check("center_members", PASS, f"orders {X.order}, {Y.order}"))
    LX, LY = eigenvalue_map(X), eigenvalue_map(Y)
    s, p = l1 + l2, l1 * l2
    cubic = LY * LY - (LX * LY).scale(s) + (LX * LX).scale(p) - LX * LX * LX
    rep.add(
        Check(
            "center_cubic",
            status_of(cubic.is_zero()),
            f"y^2 - ({s}) x y + ({p}) x^2 - x^3",
            None if cubic.is_zero() else matpoly_to_json(cubic),
        )
    )
    comm = LX * LY - LY * LX
    rep.add(Check("center_commutes", status_of(comm.is_zero())))
    # torsion identity: E21 p1 * (p1 p2^2 I) + E21 p1 p2 * (-p1 p2 I) = 0 with p1 = eps - l2, p2 = eps - l1
    p1 = e - Poly([l2])
    p2 = e - Poly([l1])
    eps = example.eps()
    zero = Poly()
    A = EpsPolyMatrix.make([[zero, zero], [p1, zero]], eps)
    Bm = EpsPolyMatrix.scalar(p1 * p2 * p2, 2, eps)
    C = EpsPolyMatrix.make([[zero, zero], [p1 * p2, zero]], eps)
    D = EpsPolyMatrix.scalar(-(p1 * p2), 2, eps)
    ops = [conjugate_element(m, nu) for m in (A, Bm, C, D)]
    if any(o is None for o in ops):
        rep.add(Check("torsion_identity", FAIL, "a factor of the identity is not conjugable"))
        return rep
    total = multiply(ops[0], ops[1]) + multiply(ops[2], ops[3])
    nonzero = [not o.is_zero() for o in ops]
    ok = total.is_zero() and all(nonzero)
    rep.add(Check("torsion_identity", status_of(ok), "nonzero members a, b, c, d with a b + c d = 0"))
    return rep


# ---------------------------------------------------------- kernel checks


def verify_in_Dw(X: MatDiffOp, seq: OMPSequence, n_max: Optional[int] = None) -> bool:
    return verify_eigen(seq, X, n_max).ok


def kernel_invariance(eta: MatDiffOp, nu: MatDiffOp, K: int = 16) -> tuple[bool, int]:
    """psi . eta = C psi through the exact truncation order, C = (psi . eta)(0).

    Returns (holds, number of orders checked).
    """
    basis = kernel_series(nu, K)
    psi = list(basis.elements[0])
    img = apply_series(eta, psi)
    C = img[0]
    ok = all((img[k] - C * psi[k]).is_zero() for k in range(len(img)))
    return ok, len(img)


def random_eps_matrix(rng, example, max_degree: int = 3, member_bias: float = 0.5) -> EpsPolyMatrix:
    """Random 2 x 2 eps-polynomial matrix; about half are projected onto the member conditions."""
    l1, l2 = example.points

    def rp():
        deg = rng.randint(0, max_degree)
        return Poly([GaussianRational(rng.randint(-3, 3), rng.choice([0, 0, 1])) for _ in range(deg + 1)])

    f = [[rp(), rp()], [rp(), rp()]]
    if rng.random() < member_bias:
        f[0][1] = f[0][1] - Poly([f[0][1](l1)])
        f[1][0] = f[1][0] - Poly([f[1][0](l2)])
        f[1][1] = f[1][1] + Poly([f[0][0](l1) - f[1][1](l2)])
    return EpsPolyMatrix.make(f, example.eps())
