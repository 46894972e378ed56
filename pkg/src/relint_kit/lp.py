"""Exact rational linear programming with self-validating certificates.

A dense two-phase tableau simplex over `Fraction`, using Bland's pivoting
rule throughout, which guarantees termination and makes every outcome
deterministic for a fixed input.  Outcomes carry checkable evidence:
optimal points satisfy the constraints exactly, infeasibility comes with
Farkas multipliers, and unboundedness comes with a feasible point plus an
improving recession direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InputError, TheoremViolation
from .rational import (
    Mat,
    ONE,
    Rat,
    Vec,
    ZERO,
    check_dims,
    dot,
    vneg,
    zeros,
)


@dataclass(frozen=True)
class LPProblem:
    """max/min objective·x subject to ineq_lhs·x <= ineq_rhs, eq_lhs·x = eq_rhs.

    All variables are free; empty constraint blocks are legal and mean the
    whole space.
    """

    objective: Vec
    sense: str
    ineq_lhs: Mat = ()
    ineq_rhs: Vec = ()
    eq_lhs: Mat = ()
    eq_rhs: Vec = ()

    def __post_init__(self):
        if self.sense not in ("max", "min"):
            raise InputError(f"unknown sense {self.sense!r}")
        n = len(self.objective)
        check_dims(self.ineq_lhs, self.ineq_rhs, n, "inequalities")
        check_dims(self.eq_lhs, self.eq_rhs, n, "equalities")

    @property
    def dim(self) -> int:
        return len(self.objective)

    @classmethod
    def maximize(cls, objective, ineq=((), ()), eq=((), ())) -> "LPProblem":
        return cls(tuple(objective), "max", tuple(ineq[0]), tuple(ineq[1]),
                   tuple(eq[0]), tuple(eq[1]))

    @classmethod
    def minimize(cls, objective, ineq=((), ()), eq=((), ())) -> "LPProblem":
        return cls(tuple(objective), "min", tuple(ineq[0]), tuple(ineq[1]),
                   tuple(eq[0]), tuple(eq[1]))


@dataclass(frozen=True)
class FarkasCertificate:
    """Multipliers proving Ax <= b, Ex = d infeasible.

    Nonnegative multipliers on the inequalities plus free multipliers on
    the equalities combine to 0·x <= c with c < 0.
    """

    multipliers_ineq: Vec
    multipliers_eq: Vec


@dataclass(frozen=True)
class Optimal:
    point: Vec
    value: Rat
    # Dual multipliers in maximize normalization: dual_ineq >= 0 and
    # dual_ineq·A + dual_eq·E equals the maximized objective vector.
    dual_ineq: Vec
    dual_eq: Vec
    pivots: int = 0


@dataclass(frozen=True)
class Infeasible:
    certificate: FarkasCertificate
    pivots: int = 0


@dataclass(frozen=True)
class Unbounded:
    ray: Vec
    feasible_point: Vec
    pivots: int = 0


LPOutcome = Optimal | Infeasible | Unbounded


class _Simplex:
    """Tableau simplex: maximize c·x, rows·x <= rhs, trailing vars nonnegative.

    Variables 0..n_free-1 are free (internally split into +/- parts),
    variables n_free..n_free+n_nonneg-1 are nonnegative.
    """

    def __init__(self, c: Vec, rows, rhs, n_free: int, n_nonneg: int):
        self.n_free = n_free
        self.n_nonneg = n_nonneg
        self.m = len(rows)
        self.struct = 2 * n_free + n_nonneg
        self.total = self.struct + self.m
        self.pivots = 0
        # Bland's rule visits each basis at most once.
        self.pivot_limit = comb(self.total + 1, self.m) if self.m else 1
        self.cost = [ZERO] * self.total
        for j in range(n_free):
            self.cost[2 * j] = c[j]
            self.cost[2 * j + 1] = -c[j]
        for j in range(n_nonneg):
            self.cost[2 * n_free + j] = c[n_free + j]
        self.tab: list[list[Rat]] = []
        for i, (row, beta) in enumerate(zip(rows, rhs)):
            t = [ZERO] * (self.total + 1)
            for j in range(n_free):
                t[2 * j] = row[j]
                t[2 * j + 1] = -row[j]
            for j in range(n_nonneg):
                t[2 * n_free + j] = row[n_free + j]
            t[self.struct + i] = ONE
            t[self.total] = beta
            self.tab.append(t)
        self.basis = [self.struct + i for i in range(self.m)]

    def _pivot(self, r: int, col: int) -> None:
        self.pivots += 1
        if self.pivots > self.pivot_limit:
            raise TheoremViolation("simplex exceeded its combinatorial pivot bound")
        row = self.tab[r]
        pv = row[col]
        inv = ONE / pv
        self.tab[r] = row = [a * inv for a in row]
        for i in range(self.m):
            if i == r:
                continue
            other = self.tab[i]
            f = other[col]
            if f:
                self.tab[i] = [a - f * b for a, b in zip(other, row)]
        f = self.obj[col]
        if f:
            self.obj = [a - f * b for a, b in zip(self.obj, row)]
        self.basis[r] = col

    def _rebuild_objective(self, cost, width: int) -> None:
        # obj[j] = (reduced cost z_j - c_j); last entry carries the value.
        obj = [-cj for cj in cost] + [ZERO] * (width - len(cost) + 1)
        obj[width] = ZERO
        for i, b in enumerate(self.basis):
            cb = cost[b] if b < len(cost) else ZERO
            if cb:
                row = self.tab[i]
                obj = [a + cb * t for a, t in zip(obj, row)]
        self.obj = obj

    def _bland(self, width: int):
        """Run simplex iterations; returns None at optimality or the
        entering column on unboundedness."""
        while True:
            enter = None
            for j in range(width):
                if self.obj[j] < 0:
                    enter = j
                    break
            if enter is None:
                return None
            leave = None
            best = None
            for i in range(self.m):
                a = self.tab[i][enter]
                if a > 0:
                    ratio = self.tab[i][width] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave is None:
                return enter
            self._pivot(leave, enter)

    def solve(self):
        """Returns (status, data); status in {"optimal", "infeasible", "unbounded"}."""
        width = self.total
        if any(self.tab[i][width] < 0 for i in range(self.m)):
            status = self._phase_one()
            if status is not None:
                return status
        self._rebuild_objective(self.cost, width)
        enter = self._bland(width)
        if enter is not None:
            return "unbounded", (self._extract_ray(enter), self._extract_point())
        return "optimal", (self._extract_point(), self._duals())

    def _phase_one(self):
        width = self.total + 1
        for row in self.tab:
            row.insert(self.total, -ONE)
        aux_cost = [ZERO] * width
        aux_cost[self.total] = -ONE
        # Drive the auxiliary variable in at the most negative row.
        r0 = min(range(self.m), key=lambda i: (self.tab[i][width], i))
        self._rebuild_objective(aux_cost, width)
        self._pivot(r0, self.total)
        enter = self._bland(width)
        assert enter is None, "auxiliary objective is bounded by construction"
        if self.obj[width] < 0:
            farkas = tuple(self.obj[self.struct + i] for i in range(self.m))
            return "infeasible", farkas
        if self.total in self.basis:
            r = self.basis.index(self.total)
            for j in range(self.total):
                if j != self.basis[r] and self.tab[r][j] != 0 and j not in self.basis:
                    self._pivot(r, j)
                    break
            else:
                raise TheoremViolation("auxiliary variable stuck in the basis")
        for row in self.tab:
            del row[self.total]
        return None

    def _extract_point(self) -> Vec:
        vals = [ZERO] * self.struct
        for i, b in enumerate(self.basis):
            if b < self.struct:
                vals[b] = self.tab[i][-1]
        return self._to_vars(vals)

    def _extract_ray(self, enter: int) -> Vec:
        vals = [ZERO] * self.struct
        if enter < self.struct:
            vals[enter] = ONE
        for i, b in enumerate(self.basis):
            if b < self.struct:
                vals[b] = -self.tab[i][enter]
        return self._to_vars(vals)

    def _to_vars(self, vals) -> Vec:
        out = []
        for j in range(self.n_free):
            out.append(vals[2 * j] - vals[2 * j + 1])
        for j in range(self.n_nonneg):
            out.append(vals[2 * self.n_free + j])
        return tuple(out)

    def _duals(self) -> Vec:
        return tuple(self.obj[self.struct + i] for i in range(self.m))


def simplex_max(c: Vec, rows, rhs, n_free: int, n_nonneg: int = 0):
    """Low-level entry: maximize c·x with rows·x <= rhs and trailing
    nonnegative variables.  Returns (status, payload, pivots)."""
    sx = _Simplex(tuple(c), rows, rhs, n_free, n_nonneg)
    status, data = sx.solve()
    return status, data, sx.pivots


def lp_solve(p: LPProblem) -> LPOutcome:
    """Solve an LP exactly; deterministic for a fixed input."""
    n = p.dim
    flip = p.sense == "min"
    c = vneg(p.objective) if flip else p.objective
    m1 = len(p.ineq_lhs)
    m2 = len(p.eq_lhs)
    rows = list(p.ineq_lhs) + list(p.eq_lhs) + [vneg(r) for r in p.eq_lhs]
    rhs = list(p.ineq_rhs) + list(p.eq_rhs) + [-v for v in p.eq_rhs]
    status, data, pivots = simplex_max(c, rows, rhs, n, 0)
    if status == "infeasible":
        y = data
        mult_eq = tuple(y[m1 + j] - y[m1 + m2 + j] for j in range(m2))
        cert = FarkasCertificate(tuple(y[:m1]), mult_eq)
        return Infeasible(cert, pivots)
    if status == "unbounded":
        ray, point = data
        return Unbounded(ray, point, pivots)
    point, y = data
    value = dot(p.objective, point)
    dual_eq = tuple(y[m1 + j] - y[m1 + m2 + j] for j in range(m2))
    return Optimal(point, value, tuple(y[:m1]), dual_eq, pivots)


def verify_farkas(p: LPProblem, cert: FarkasCertificate) -> bool:
    """Check that the multipliers really combine the constraints into
    0·x <= negative; False for malformed certificates, never an error."""
    lam, mu = cert.multipliers_ineq, cert.multipliers_eq
    if len(lam) != len(p.ineq_lhs) or len(mu) != len(p.eq_lhs):
        return False
    if any(v < 0 for v in lam):
        return False
    combo = list(zeros(p.dim))
    for coeff, row in zip(lam, p.ineq_lhs):
        if coeff:
            combo = [a + coeff * r for a, r in zip(combo, row)]
    for coeff, row in zip(mu, p.eq_lhs):
        if coeff:
            combo = [a + coeff * r for a, r in zip(combo, row)]
    if any(a != 0 for a in combo):
        return False
    const = dot(lam, p.ineq_rhs) + dot(mu, p.eq_rhs)
    return const < 0
