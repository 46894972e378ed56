"""Exact rational scalars and dense vector/matrix helpers.

Scalars are `fractions.Fraction` values (arbitrary-precision, canonical
form with positive denominator), re-exported as `Rat`.  Vectors are plain
tuples of `Rat`, matrices are tuples of row vectors.  Everything here is
immutable and hashable, so geometric objects built from these types can be
memoized directly.
"""

from __future__ import annotations

from fractions import Fraction as Rat
from math import gcd

from .errors import InputError

Vec = tuple[Rat, ...]
Mat = tuple[Vec, ...]

ZERO = Rat(0)
ONE = Rat(1)


def rat(p, q=1) -> Rat:
    return Rat(p, q)


def parse_rational(text: str) -> Rat:
    """Parse "p" or "p/q" with integer p, q and q > 0 after normalization."""
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            p, q = int(num), int(den)
        except ValueError:
            raise InputError(f"malformed rational {text!r}") from None
        if q == 0:
            raise InputError(f"zero denominator in rational {text!r}")
        if q < 0:
            raise InputError(f"negative denominator in rational {text!r}")
        return Rat(p, q)
    try:
        return Rat(int(s))
    except ValueError:
        raise InputError(f"malformed rational {text!r}") from None


def format_rational(x: Rat) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(entries) -> Vec:
    return tuple(Rat(e) for e in entries)


def mat(rows) -> Mat:
    return tuple(vec(r) for r in rows)


def zeros(n: int) -> Vec:
    return (ZERO,) * n


def unit(n: int, j: int) -> Vec:
    return tuple(ONE if i == j else ZERO for i in range(n))


def identity(n: int) -> Mat:
    return tuple(unit(n, j) for j in range(n))


def dot(u: Vec, v: Vec) -> Rat:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(t: Rat, u: Vec) -> Vec:
    return tuple(t * a for a in u)


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def matvec(m: Mat, x: Vec) -> Vec:
    return tuple(dot(row, x) for row in m)


def transpose(m: Mat, ncols: int | None = None) -> Mat:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0])))


def primitive_int(v: Vec) -> tuple[int, ...]:
    """Scale a nonzero vector by a positive rational into coprime integers.

    Positive scaling only, so ray directions are preserved.
    """
    denlcm = 1
    for a in v:
        d = a.denominator
        denlcm = denlcm * d // gcd(denlcm, d)
    ints = [int(a * denlcm) for a in v]
    g = 0
    for k in ints:
        g = gcd(g, abs(k))
    if g > 1:
        ints = [k // g for k in ints]
    return tuple(ints)


def check_dims(rows: Mat, rhs: Vec, n: int, what: str) -> None:
    if len(rows) != len(rhs):
        raise InputError(f"{what}: {len(rows)} rows but {len(rhs)} right-hand sides")
    for row in rows:
        if len(row) != n:
            raise InputError(f"{what}: row of length {len(row)}, expected {n}")
