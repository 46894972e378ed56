"""Double description method for polyhedral cones over exact integers.

Computes generators (lineality basis plus extreme rays) of a cone given
as {y : m·y <= 0 for rows m}.  Rows are normalized to coprime integer
vectors and inserted in lexicographic order; adjacency of extreme rays is
decided algebraically by the rank of the common active constraint set.
Working over integers keeps the inner products and rank computations
cheap; directions are rescaled by positive factors only, so ray
orientations are never flipped.
"""

from __future__ import annotations

from math import gcd

from .linalg import int_rank
from .rational import Vec, primitive_int

IVec = tuple[int, ...]


def _idot(u: IVec, v: IVec) -> int:
    return sum(a * b for a, b in zip(u, v))


def _iprimitive(v) -> IVec:
    g = 0
    for k in v:
        g = gcd(g, abs(k))
    if g > 1:
        return tuple(k // g for k in v)
    return tuple(v)


def _sign_canonical(v: IVec) -> IVec:
    """Flip so the first nonzero entry is positive (lineality only)."""
    for k in v:
        if k > 0:
            return v
        if k < 0:
            return tuple(-a for a in v)
    return v


class _Ray:
    __slots__ = ("vec", "mask")

    def __init__(self, vec: IVec, mask: int):
        self.vec = vec
        self.mask = mask


def _mask_of(vec: IVec, processed: list[IVec]) -> int:
    mask = 0
    for idx, row in enumerate(processed):
        if _idot(row, vec) == 0:
            mask |= 1 << idx
    return mask


def dd_cone(rows: list[Vec], dim: int) -> tuple[list[IVec], list[IVec]]:
    """Generators of {y in R^dim : m·y <= 0 for every row m}.

    Returns (lineality basis, extreme rays) as primitive integer vectors;
    the represented cone is span(lineality) + cone(rays).
    """
    unit_rows = sorted({primitive_int(r) for r in rows} - {(0,) * dim})
    lineality: list[IVec] = [
        tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)
    ]
    rays: list[_Ray] = []
    processed: list[IVec] = []
    for m in unit_rows:
        k = len(processed)
        lin_dots = [_idot(m, l) for l in lineality]
        hit = next((j for j, s in enumerate(lin_dots) if s != 0), None)
        if hit is not None:
            l0, s0 = lineality[hit], lin_dots[hit]
            new_lin = []
            for j, l in enumerate(lineality):
                if j == hit:
                    continue
                s = lin_dots[j]
                if s == 0:
                    new_lin.append(l)
                else:
                    new_lin.append(_sign_canonical(_iprimitive(
                        tuple(a * s0 - b * s for a, b in zip(l, l0)))))
            lineality = new_lin
            new_rays = []
            for ray in rays:
                s = _idot(m, ray.vec)
                if s == 0:
                    ray.mask |= 1 << k
                    new_rays.append(ray)
                else:
                    # r - (s/s0) l0, rescaled positively to integers
                    shifted = tuple(a * s0 - b * s for a, b in zip(ray.vec, l0))
                    if s0 < 0:
                        shifted = tuple(-a for a in shifted)
                    vec = _iprimitive(shifted)
                    new_rays.append(_Ray(vec, _mask_of(vec, processed) | (1 << k)))
            r0_vec = l0 if s0 < 0 else tuple(-a for a in l0)
            new_rays.append(_Ray(r0_vec, _mask_of(r0_vec, processed)))
            rays = new_rays
        else:
            pos, zero, neg = [], [], []
            for ray in rays:
                s = _idot(m, ray.vec)
                if s > 0:
                    pos.append((ray, s))
                elif s < 0:
                    neg.append((ray, s))
                else:
                    ray.mask |= 1 << k
                    zero.append(ray)
            kept = zero + [ray for ray, _ in neg]
            if pos and neg:
                # Rank of the shared active set must reach the facet
                # codimension for the pair to be adjacent.
                target = dim - len(lineality) - 2
                seen = {ray.vec for ray in kept}
                for rp, sp in pos:
                    for rn, sn in neg:
                        shared = rp.mask & rn.mask
                        if target > 0:
                            zrows = [processed[i] for i in range(k)
                                     if shared >> i & 1]
                            if int_rank(zrows, limit=target) != target:
                                continue
                        elif target < 0:
                            continue
                        vec = _iprimitive(tuple(
                            sp * bn - sn * bp
                            for bp, bn in zip(rp.vec, rn.vec)))
                        if vec not in seen:
                            seen.add(vec)
                            kept.append(_Ray(vec, _mask_of(vec, processed) | (1 << k)))
            rays = kept
        processed.append(m)
    return lineality, [ray.vec for ray in rays]
