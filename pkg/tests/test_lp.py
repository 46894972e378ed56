"""LP solver outcomes and their self-validating certificates."""

import random
from fractions import Fraction
from math import comb

import pytest

from relint_kit.errors import InputError
from relint_kit.lp import (
    Infeasible,
    LPProblem,
    Optimal,
    Unbounded,
    lp_solve,
    verify_farkas,
)
from relint_kit.rational import dot, mat, vec

UNIT_SQUARE = (
    mat([[1, 0], [-1, 0], [0, 1], [0, -1]]),
    vec([1, 0, 1, 0]),
)


def test_optimal_unit_square_against_vertex_enumeration():
    # Independent oracle: the maximum of a linear functional over the unit
    # square is attained at one of its four corners.
    corners = [vec([0, 0]), vec([1, 0]), vec([0, 1]), vec([1, 1])]
    objective = vec([1, 1])
    expected = max(dot(objective, v) for v in corners)
    out = lp_solve(LPProblem.maximize(objective, UNIT_SQUARE))
    assert isinstance(out, Optimal)
    assert out.value == expected == 2
    assert out.point == vec([1, 1])


def test_infeasible_with_verifying_certificate():
    p = LPProblem.maximize(vec([1]), (mat([[1], [-1]]), vec([0, -1])))
    out = lp_solve(p)
    assert isinstance(out, Infeasible)
    assert verify_farkas(p, out.certificate)


def test_unbounded_halfline():
    p = LPProblem.maximize(vec([1]), (mat([[-1]]), vec([0])))
    out = lp_solve(p)
    assert isinstance(out, Unbounded)
    assert out.ray == vec([1])
    assert p.ineq_lhs[0][0] * out.ray[0] <= 0
    assert dot(p.objective, out.ray) > 0


def test_unbounded_invariants_with_equalities():
    # max x + y on the line x = y: improving ray along the diagonal.
    p = LPProblem.maximize(vec([1, 1]), eq=(mat([[1, -1]]), vec([0])))
    out = lp_solve(p)
    assert isinstance(out, Unbounded)
    assert dot(p.eq_lhs[0], out.ray) == 0
    assert dot(p.objective, out.ray) > 0
    assert dot(p.eq_lhs[0], out.feasible_point) == 0


def test_minimize_sense():
    out = lp_solve(LPProblem.minimize(vec([1, 1]), UNIT_SQUARE))
    assert isinstance(out, Optimal)
    assert out.value == 0
    assert out.point == vec([0, 0])


def test_optimal_point_satisfies_constraints_exactly():
    p = LPProblem.maximize(
        vec(["2/3", "-1/7"]),
        (mat([["1/2", 1], [-1, "1/3"], [0, -1]]), vec([3, "5/2", 1])),
    )
    out = lp_solve(p)
    assert isinstance(out, Optimal)
    for row, beta in zip(p.ineq_lhs, p.ineq_rhs):
        assert dot(row, out.point) <= beta
    assert out.value == dot(p.objective, out.point)


def test_empty_constraint_sets_whole_space():
    out = lp_solve(LPProblem.maximize(vec([0, 0])))
    assert isinstance(out, Optimal) and out.value == 0
    out = lp_solve(LPProblem.maximize(vec([1, 0])))
    assert isinstance(out, Unbounded)


def test_verify_farkas_rejects_noncontradiction():
    p = LPProblem.maximize(vec([1]), (mat([[1]]), vec([1])))
    from relint_kit.lp import FarkasCertificate

    assert not verify_farkas(p, FarkasCertificate(vec([1]), ()))


def test_verify_farkas_rejects_negative_multiplier():
    p = LPProblem.maximize(vec([1]), (mat([[1], [-1]]), vec([0, -1])))
    from relint_kit.lp import FarkasCertificate

    assert not verify_farkas(p, FarkasCertificate(vec([-1, -1]), ()))
    assert not verify_farkas(p, FarkasCertificate(vec([1]), ()))


def test_dimension_mismatch_rejected():
    with pytest.raises(InputError):
        LPProblem.maximize(vec([1, 2]), (mat([[1]]), vec([0])))


def _random_feasible_bounded(rng, n, m):
    """Origin-feasible rows plus a box, so the LP is feasible and bounded.

    Equality rows pass through the origin, which keeps feasibility."""
    A, b = [], []
    E, d = [], []
    for _ in range(m):
        row = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        if n > 1 and rng.random() < 0.2:
            E.append(tuple(row))
            d.append(Fraction(0))
        else:
            A.append(tuple(row))
            b.append(Fraction(rng.randint(0, 9)))
    for j in range(n):
        e = [Fraction(0)] * n
        e[j] = Fraction(1)
        A.append(tuple(e))
        b.append(Fraction(rng.randint(1, 9)))
        A.append(tuple(-v for v in e))
        b.append(Fraction(rng.randint(1, 9)))
    c = vec([rng.randint(-9, 9) for _ in range(n)])
    return LPProblem.maximize(c, (tuple(A), tuple(b)), (tuple(E), tuple(d)))


def _dual_problem(p: LPProblem) -> LPProblem:
    """min b·lam + d·mu st A^T lam + E^T mu = c, lam >= 0 as an explicit LP."""
    m1, m2, n = len(p.ineq_lhs), len(p.eq_lhs), p.dim
    eq_rows = tuple(
        tuple(p.ineq_lhs[i][j] for i in range(m1))
        + tuple(p.eq_lhs[i][j] for i in range(m2))
        for j in range(n)
    )
    nonneg = tuple(
        tuple(-Fraction(int(i == k)) for i in range(m1 + m2))
        for k in range(m1)
    )
    return LPProblem.minimize(
        p.ineq_rhs + p.eq_rhs, (nonneg, vec([0] * m1)), (eq_rows, p.objective)
    )


def test_lp_duality_exact_on_random_instances():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 6)
        p = _random_feasible_bounded(rng, n, rng.randint(1, 12))
        primal = lp_solve(p)
        assert isinstance(primal, Optimal)
        dual = lp_solve(_dual_problem(p))
        assert isinstance(dual, Optimal)
        assert primal.value == dual.value
        # The multipliers reported with the primal are dual-feasible too.
        lam, mu = primal.dual_ineq, primal.dual_eq
        assert all(v >= 0 for v in lam)
        combo = [
            sum(lam[i] * p.ineq_lhs[i][j] for i in range(len(lam)))
            + sum(mu[i] * p.eq_lhs[i][j] for i in range(len(mu)))
            for j in range(n)
        ]
        assert vec(combo) == p.objective
        assert dot(lam, p.ineq_rhs) + dot(mu, p.eq_rhs) == primal.value


def test_pivot_counts_stay_within_combinatorial_bound():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = rng.randint(1, 10)
        p = _random_feasible_bounded(rng, n, m)
        out = lp_solve(p)
        rows = m + 2 * n
        assert out.pivots <= comb(2 * n + rows + 1, rows)


def test_deterministic_repeat():
    p = LPProblem.maximize(
        vec([1, 2]), (mat([[1, 1], [1, -1], [-1, 0], [0, -1]]), vec([2, 1, 0, 0]))
    )
    assert lp_solve(p) == lp_solve(p)
