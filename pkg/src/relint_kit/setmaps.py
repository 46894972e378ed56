"""Set-valued mappings with polyhedral graphs and piecewise-linear convex
functions, plus the product-rule checkers for their interiors.

The graph formula states that a pair belongs to the relative interior of
the graph exactly when its first component is interior to the domain and
its second component is interior to the image slice.  The epigraph analog
replaces the slice by the strict-majorization condition.  Each checker
evaluates both sides independently and reports every asserted equality
and one-sided inclusion separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import EmptySetError, InputError
from .lp import LPProblem, Optimal, lp_solve
from .polyhedra import (
    HPolyhedron,
    h_to_v,
    implicit_rows,
    is_empty,
    linear_image,
    product,
)
from .relint import (
    in_iri,
    in_qri,
    in_ri,
    quasi_regularity_report,
    ri_membership,
    ri_point,
)
from .rational import Mat, ONE, Rat, Vec, ZERO, dot, matvec, unit, vadd, vscale, zeros


@dataclass(frozen=True)
class PolyhedralMap:
    """Set-valued mapping x -> {y : (x, y) in graph} with a polyhedral
    graph in R^(m+n)."""

    graph: HPolyhedron
    m: int
    n: int

    def __post_init__(self):
        if self.graph.dim != self.m + self.n:
            raise InputError(
                f"graph dimension {self.graph.dim} is not {self.m} + {self.n}")


@dataclass(frozen=True)
class PLConvexFunction:
    """max of affine pieces restricted to a polyhedral domain; proper as
    long as the domain is nonempty."""

    pieces: tuple[tuple[Vec, Rat], ...]
    domain: HPolyhedron

    def __post_init__(self):
        if not self.pieces:
            raise InputError("a piecewise-linear function needs at least one piece")
        for slope, _ in self.pieces:
            if len(slope) != self.domain.dim:
                raise InputError("piece slope of wrong dimension")

    def value(self, x: Vec) -> Rat:
        if not self.domain.contains(x):
            raise InputError("function evaluated outside its domain")
        return max(dot(slope, x) + intercept for slope, intercept in self.pieces)


@dataclass(frozen=True)
class GraphRIReport:
    """Both sides of the graph product rule at one pair, with the
    quasi-regularity side conditions and every implication separately."""

    x: Vec
    y: Vec
    lhs: bool
    rhs: bool
    quasi_reg_graph: bool
    quasi_reg_dom: bool

    @property
    def product_rule_holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def graph_regular_inclusion_ok(self) -> bool:
        return not self.quasi_reg_graph or not self.lhs or self.rhs

    @property
    def domain_regular_inclusion_ok(self) -> bool:
        return not self.quasi_reg_dom or not self.rhs or self.lhs

    @property
    def both_regular_equality_ok(self) -> bool:
        return not (self.quasi_reg_graph and self.quasi_reg_dom) or self.lhs == self.rhs


@dataclass(frozen=True)
class EpiRelintReport:
    """Interior membership of (x, level) in the epigraph versus the
    domain-plus-strict-majorization description, for all three interior
    notions; single-piece instances are tagged because their equality is
    unconditional."""

    x: Vec
    level: Rat
    lhs_ri: bool
    rhs_ri: bool
    lhs_iri: bool
    rhs_iri: bool
    lhs_qri: bool
    rhs_qri: bool
    epi_quasi_regular: bool
    single_affine_piece: bool

    @property
    def ri_formula_holds(self) -> bool:
        return self.lhs_ri == self.rhs_ri

    @property
    def iri_formula_holds(self) -> bool:
        return self.lhs_iri == self.rhs_iri

    @property
    def qri_superset_holds(self) -> bool:
        return not self.rhs_qri or self.lhs_qri

    @property
    def qri_equality_under_regularity_ok(self) -> bool:
        return not self.epi_quasi_regular or self.lhs_qri == self.rhs_qri

    @property
    def affine_piece_equality_ok(self) -> bool:
        return not self.single_affine_piece or self.lhs_qri == self.rhs_qri

    @property
    def all_asserted_hold(self) -> bool:
        return (
            self.ri_formula_holds
            and self.iri_formula_holds
            and self.qri_superset_holds
            and self.qri_equality_under_regularity_ok
            and self.affine_piece_equality_ok
        )


@dataclass(frozen=True)
class EpiDomainRegularityReport:
    epi_quasi_regular: bool
    dom_quasi_regular: bool

    @property
    def implication_holds(self) -> bool:
        return not self.epi_quasi_regular or self.dom_quasi_regular


@dataclass(frozen=True)
class CommutationReport:
    """Two-sided sampled check that a linear map commutes with taking
    relative interiors: forward pushes interior samples into the image's
    interior, backward lifts the image's interior point to an interior
    preimage."""

    forward_ok: bool
    backward_ok: bool
    forward_samples: int
    lifted_point: Vec | None

    @property
    def holds(self) -> bool:
        return self.forward_ok and self.backward_ok


@lru_cache(maxsize=None)
def map_domain(F: PolyhedralMap) -> HPolyhedron:
    """Projection of the graph onto the first m coordinates."""
    if is_empty(F.graph):
        return HPolyhedron.empty(F.m)
    proj = tuple(unit(F.m + F.n, j) for j in range(F.m))
    return linear_image(proj, F.graph)


def image_at(F: PolyhedralMap, x: Vec) -> HPolyhedron:
    """The slice {y : (x, y) in graph}; empty when x is outside the domain."""
    if len(x) != F.m:
        raise InputError(f"slice point of length {len(x)}, expected {F.m}")
    g = F.graph
    A = tuple(row[F.m:] for row in g.A)
    b = tuple(beta - dot(row[: F.m], x) for row, beta in zip(g.A, g.b))
    E = tuple(row[F.m:] for row in g.E)
    d = tuple(delta - dot(row[: F.m], x) for row, delta in zip(g.E, g.d))
    return HPolyhedron(A, b, E, d, F.n)


def graph_ri_check(F: PolyhedralMap, x: Vec, y: Vec) -> GraphRIReport:
    """Evaluate both sides of the graph product rule at (x, y)."""
    if len(x) != F.m or len(y) != F.n:
        raise InputError("pair dimensions do not match the mapping")
    if is_empty(F.graph):
        raise EmptySetError("the product rule requires a nonempty graph")
    pair = x + y
    lhs = in_ri(F.graph, pair)
    dom = map_domain(F)
    rhs = in_ri(dom, x) and in_ri(image_at(F, x), y)
    qr_graph = quasi_regularity_report(F.graph).verdict
    qr_dom = quasi_regularity_report(dom).verdict
    return GraphRIReport(x, y, lhs, rhs, qr_graph, qr_dom)


@lru_cache(maxsize=None)
def epi_polyhedron(f: PLConvexFunction) -> HPolyhedron:
    """{(x, alpha) : x in dom, alpha >= every affine piece} in R^(m+1)."""
    if is_empty(f.domain):
        raise EmptySetError("a proper function needs a nonempty domain")
    m = f.domain.dim
    A = [row + (ZERO,) for row in f.domain.A]
    b = list(f.domain.b)
    for slope, intercept in f.pieces:
        A.append(slope + (Rat(-1),))
        b.append(-intercept)
    E = tuple(row + (ZERO,) for row in f.domain.E)
    return HPolyhedron(tuple(A), tuple(b), E, f.domain.d, m + 1)


def epi_relint_report(f: PLConvexFunction, x: Vec, level: Rat) -> EpiRelintReport:
    """Both sides of the epigraph interior description at (x, level)."""
    if len(x) != f.domain.dim:
        raise InputError("evaluation point of wrong dimension")
    epi = epi_polyhedron(f)
    point = x + (level,)
    lhs_ri = in_ri(epi, point)
    lhs_iri = in_iri(epi, point)
    lhs_qri = in_qri(epi, point)
    in_dom = f.domain.contains(x)
    strict = in_dom and level > f.value(x)
    rhs_ri = strict and in_ri(f.domain, x)
    rhs_iri = strict and in_iri(f.domain, x)
    rhs_qri = strict and in_qri(f.domain, x)
    qr = quasi_regularity_report(epi).verdict
    return EpiRelintReport(
        x, level, lhs_ri, rhs_ri, lhs_iri, rhs_iri, lhs_qri, rhs_qri,
        qr, len(f.pieces) == 1)


def epi_quasireg_implies_dom(f: PLConvexFunction) -> EpiDomainRegularityReport:
    """Machine-check that epigraph quasi-regularity forces domain
    quasi-regularity (one direction only; the converse is not asserted)."""
    epi_rep = quasi_regularity_report(epi_polyhedron(f))
    dom_rep = quasi_regularity_report(f.domain)
    return EpiDomainRegularityReport(epi_rep.verdict, dom_rep.verdict)


def _interior_samples(P: HPolyhedron) -> list[Vec]:
    """ri_point plus its midpoints with the generator points; each sample
    lies in the relative interior by the line-segment principle."""
    center = ri_point(P)
    samples = [center]
    for p in h_to_v(P).points:
        samples.append(vscale(Rat(1, 2), vadd(center, p)))
    return samples


def linear_image_ri_commutes(M: Mat, P: HPolyhedron) -> CommutationReport:
    """Sampled two-sided check that the image of the relative interior is
    the relative interior of the image."""
    if is_empty(P):
        raise EmptySetError("commutation check requires a nonempty set")
    if any(len(row) != P.dim for row in M):
        raise InputError("matrix columns do not match the set dimension")
    Q = linear_image(M, P)
    samples = _interior_samples(P)
    forward_ok = all(in_ri(Q, matvec(M, p)) for p in samples)
    q = ri_point(Q)
    lifted = _strict_preimage(M, P, q)
    backward_ok = lifted is not None and ri_membership(P, lifted).member
    return CommutationReport(forward_ok, backward_ok, len(samples), lifted)


def _strict_preimage(M: Mat, P: HPolyhedron, q: Vec) -> Vec | None:
    """x in P with Mx = q and positive slack on all non-implicit rows."""
    n = P.dim
    imp = implicit_rows(P)
    rows, rhs = [], []
    for i, (row, beta) in enumerate(zip(P.A, P.b)):
        rows.append(row + (ZERO if i in imp else ONE,))
        rhs.append(beta)
    rows.append(zeros(n) + (ONE,))
    rhs.append(ONE)
    eqs = [row + (ZERO,) for row in P.E]
    eqr = list(P.d)
    for mrow, val in zip(M, q):
        eqs.append(mrow + (ZERO,))
        eqr.append(val)
    out = lp_solve(LPProblem.maximize(
        zeros(n) + (ONE,), (tuple(rows), tuple(rhs)), (tuple(eqs), tuple(eqr))))
    if isinstance(out, Optimal) and out.value > 0:
        return out.point[:n]
    return None


def set_difference_ri_commutes(P1: HPolyhedron, P2: HPolyhedron) -> CommutationReport:
    """The difference-of-sets analog, run as the linear image of the
    product under (x, y) -> x - y."""
    if P1.dim != P2.dim:
        raise InputError("set difference requires matching dimensions")
    if is_empty(P1) or is_empty(P2):
        raise EmptySetError("commutation check requires nonempty sets")
    n = P1.dim
    M = tuple(
        tuple(ONE if k == j else ZERO for k in range(n))
        + tuple(-ONE if k == j else ZERO for k in range(n))
        for j in range(n)
    )
    return linear_image_ri_commutes(M, product(P1, P2))
