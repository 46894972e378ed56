"""Shared deterministic instance generators for the property suites.

All generators keep coefficient numerators and denominators small (at most
20) and produce nonempty sets by construction: a known integer point is
chosen first and every constraint is built to hold there.
"""

from __future__ import annotations

import random
from fractions import Fraction

from relint_kit.polyhedra import HPolyhedron
from relint_kit.setmaps import PLConvexFunction, PolyhedralMap


def random_nonempty_hpoly(
    rng: random.Random,
    dim: int,
    max_rows: int,
    eq_prob: float = 0.25,
    tight_prob: float = 0.35,
) -> HPolyhedron:
    """A nonempty polyhedron with small integer-or-half-integer data.

    Rows are anchored at a lattice point of {-1, 0, 1}^dim, with zero
    slack on some rows so that boundary and lower-dimensional structure
    shows up often."""
    anchor = [rng.choice((-1, 0, 1)) for _ in range(dim)]
    n_rows = rng.randint(1, max_rows)
    A, b, E, d = [], [], [], []
    for _ in range(n_rows):
        row = [Fraction(rng.randint(-3, 3)) for _ in range(dim)]
        if all(v == 0 for v in row):
            row[rng.randrange(dim)] = Fraction(rng.choice((-1, 1)))
        value = sum(r * a for r, a in zip(row, anchor))
        slack = Fraction(0) if rng.random() < tight_prob else Fraction(rng.randint(1, 5))
        if rng.random() < 0.2:
            row = [r / 2 for r in row]
            value, slack = value / 2, slack / 2
        if rng.random() < eq_prob:
            E.append(tuple(row))
            d.append(value)
        else:
            A.append(tuple(row))
            b.append(value + slack)
    return HPolyhedron(tuple(A), tuple(b), tuple(E), tuple(d), dim)


def random_pair(rng: random.Random, dim: int, max_rows: int):
    return (
        random_nonempty_hpoly(rng, dim, max_rows),
        random_nonempty_hpoly(rng, dim, max_rows),
    )


def random_map(rng: random.Random, max_m: int = 3, max_n: int = 3) -> PolyhedralMap:
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    graph = random_nonempty_hpoly(rng, m + n, m + n + 3)
    return PolyhedralMap(graph, m, n)


def random_plfunction(rng: random.Random, max_m: int = 3, max_pieces: int = 4) -> PLConvexFunction:
    m = rng.randint(1, max_m)
    domain = random_nonempty_hpoly(rng, m, m + 3, eq_prob=0.2)
    pieces = tuple(
        (
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(m)),
            Fraction(rng.randint(-3, 3)),
        )
        for _ in range(rng.randint(1, max_pieces))
    )
    return PLConvexFunction(pieces, domain)


def random_matrix(rng: random.Random, rows: int, cols: int):
    return tuple(
        tuple(Fraction(rng.randint(-2, 2)) for _ in range(cols)) for _ in range(rows)
    )
