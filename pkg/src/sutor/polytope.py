"""Support (Newton) polytope analysis of the torsion: width bounds, the
difference polytope, symmetry, extremal faces, and the disk-decomposability
obstruction.

Vertex and membership tests use exact rational linear feasibility (a small
phase-1 simplex over Fraction); dimensions here stay tiny.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .abelian import AbElement, AbelianGroup
from .groupring import (
    GroupRingElement,
    NotDivisibleError,
    UnsupportedTorsionError,
    exact_div,
    monomial,
    normalize,
    sim_equal,
)

Point = Tuple[int, ...]


@dataclass(frozen=True)
class Support:
    dim: int
    points: Dict[Point, int]


def support(tau: GroupRingElement) -> Support:
    if tau.group.torsion:
        raise UnsupportedTorsionError("support analysis needs a torsion-free group")
    return Support(tau.group.rank, {h.free: c for h, c in tau.terms.items()})


def width(S: Support, alpha: Sequence[int]) -> int:
    """max <s, alpha> - min <s, alpha> over the support; lower-bounds the
    sutured Thurston norm in direction alpha."""
    if len(alpha) != S.dim:
        raise ValueError("covector length does not match dimension")
    if not S.points:
        raise ValueError("empty support")
    vals = [sum(a * x for a, x in zip(alpha, p)) for p in S.points]
    return max(vals) - min(vals)


def _lp_feasible(A: List[List[int]], b: List[int]) -> bool:
    """Exact feasibility of {x >= 0 : Ax = b} by phase-1 simplex, Bland's rule."""
    m = len(A)
    n = len(A[0]) if m else 0
    T: List[List[Fraction]] = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        T.append(row + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    total = n + m
    # reduced costs for minimizing the sum of artificials
    z = [Fraction(0)] * (total + 1)
    for i in range(m):
        for j in range(total + 1):
            z[j] += T[i][j]
    for j in range(n, total):
        z[j] -= 1
    while True:
        enter = -1
        for j in range(total):
            if z[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best: Optional[Fraction] = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][total] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            # unbounded phase-1 cannot happen; treat defensively
            return False
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [v - f * w for v, w in zip(T[i], T[leave])]
        if z[enter]:
            f = z[enter]
            z = [v - f * w for v, w in zip(z, T[leave])]
        basis[leave] = enter
    return z[total] == 0


def point_in_hull(v: Point, pts: Sequence[Point]) -> bool:
    """Is v a convex combination of pts?  Exact rational test."""
    pts = list(pts)
    if not pts:
        return False
    d = len(v)
    A = [[p[k] for p in pts] for k in range(d)]
    A.append([1] * len(pts))
    b = list(v) + [1]
    return _lp_feasible(A, b)


def hull_vertices(points: Sequence[Point]) -> List[Point]:
    pts = sorted(set(points))
    out = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if not point_in_hull(p, others):
            out.append(p)
    return out


def vertices(S: Support) -> List[Point]:
    if not S.points:
        raise ValueError("empty support")
    return hull_vertices(list(S.points))


def difference_polytope(S: Support) -> List[Point]:
    """Vertex set of conv{x - y : x, y in support}; centrally symmetric."""
    if not S.points:
        raise ValueError("empty support")
    pts = list(S.points)
    diffs = {tuple(a - b for a, b in zip(x, y)) for x in pts for y in pts}
    return hull_vertices(list(diffs))


def is_centrally_symmetric(S: Support) -> bool:
    """Point set symmetric about the bounding-box center, with coefficients
    matching up to one global sign."""
    if not S.points:
        raise ValueError("empty support")
    pts = list(S.points)
    d = S.dim
    # bounding-box center in doubled coordinates
    c2 = tuple(max(p[k] for p in pts) + min(p[k] for p in pts) for k in range(d))
    for sign in (1, -1):
        ok = True
        for p, c in S.points.items():
            partner = tuple(c2[k] - p[k] for k in range(d))
            if S.points.get(partner) != sign * c:
                ok = False
                break
        if ok:
            return True
    return False


def extremal_part(tau: GroupRingElement, alpha: Sequence[int]) -> GroupRingElement:
    """Sub-sum of tau over support points maximizing <., alpha>."""
    if tau.group.torsion:
        raise UnsupportedTorsionError("extremal part needs a torsion-free group")
    if not tau.terms:
        raise ValueError("zero element has no extremal part")
    vals = {h: sum(a * x for a, x in zip(alpha, h.free)) for h in tau.terms}
    top = max(vals.values())
    return GroupRingElement(tau.group, {h: c for h, c in tau.terms.items() if vals[h] == top})


# ---------------------------------------------------------------------------
# Disk-decomposability obstruction

_Z = AbelianGroup(1, ())


def cyclic_sum(p: int) -> GroupRingElement:
    """1 + t + ... + t^(p-1), the torsion of the p-times-twisted solid torus."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return GroupRingElement(_Z, {AbElement((j,), ()): 1 for j in range(p)})


@dataclass(frozen=True)
class DiskCandidate:
    label: str
    element: GroupRingElement
    single_match: Optional[int]
    product_match: Optional[Tuple[int, int]]

    @property
    def matched(self) -> bool:
        return self.single_match is not None or self.product_match is not None


@dataclass(frozen=True)
class DiskReport:
    candidates: Tuple[DiskCandidate, ...]
    obstructed: bool
    p_max: int
    auto_cap: int
    effective_cap: int


def disk_obstruction_report(tau: GroupRingElement, p_max: int) -> DiskReport:
    """Compare tau and its extremal parts against solid-torus torsions
    (t^p-1)/(t-1) and products of two of them (the separating-disk case)."""
    if tau.group != _Z:
        raise ValueError("disk obstruction needs a rank-1 torsion-free group")
    if not tau.terms:
        raise ValueError("zero torsion")
    exps = [h.free[0] for h in tau.terms]
    auto_cap = (max(exps) - min(exps)) + 1
    cap = min(p_max, auto_cap)

    def analyze(label: str, cand: GroupRingElement) -> DiskCandidate:
        single = None
        product = None
        for p in range(1, cap + 1):
            if sim_equal(cand, cyclic_sum(p)):
                single = p
                break
        if single is None:
            nc = normalize(cand)
            for p1 in range(1, cap + 1):
                try:
                    q = exact_div(nc, cyclic_sum(p1))
                except NotDivisibleError:
                    continue
                for p2 in range(p1, cap + 1):
                    if sim_equal(q, cyclic_sum(p2)):
                        product = (p1, p2)
                        break
                if product:
                    break
        return DiskCandidate(label, cand, single, product)

    cands = (
        analyze("tau", tau),
        analyze("extremal(+1)", extremal_part(tau, (1,))),
        analyze("extremal(-1)", extremal_part(tau, (-1,))),
    )
    obstructed = not any(c.matched for c in cands)
    return DiskReport(cands, obstructed, p_max, auto_cap, cap)


# ---------------------------------------------------------------------------
# Emitters

def to_tsv(S: Support) -> str:
    """One support point per line: coordinates, tab, coefficient."""
    lines = []
    for p in sorted(S.points):
        lines.append(" ".join(str(x) for x in p) + "\t" + str(S.points[p]))
    return "\n".join(lines) + "\n"


def convex_hull_2d(points: Sequence[Point]) -> List[Point]:
    """Andrew monotone chain; counterclockwise vertex order, integer exact."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return list(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def edge_lengths_2d(hull: Sequence[Point]) -> List[Tuple[Tuple[int, int], int]]:
    """(direction, lattice length) per hull edge, in hull order."""
    from math import gcd

    out = []
    k = len(hull)
    for i in range(k):
        a, b = hull[i], hull[(i + 1) % k]
        dx, dy = b[0] - a[0], b[1] - a[1]
        g = gcd(abs(dx), abs(dy))
        out.append(((dx // g, dy // g), g))
    return out


def to_svg(S: Support) -> str:
    """Deterministic SVG for dim <= 2: 32 px/unit, labeled lattice points,
    hull drawn as a polygon."""
    if S.dim > 2:
        raise ValueError("SVG emitter supports dimension <= 2 only")
    scale = 32
    pad = 24
    pts2 = {((p[0], p[1]) if S.dim == 2 else (p[0], 0)): c for p, c in S.points.items()}
    xs = [p[0] for p in pts2]
    ys = [p[1] for p in pts2]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    w = (x1 - x0) * scale + 2 * pad
    h = (y1 - y0) * scale + 2 * pad

    def sx(x):
        return pad + (x - x0) * scale

    def sy(y):
        return pad + (y1 - y) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">'
    ]
    hull = convex_hull_2d(list(pts2))
    if len(hull) >= 2:
        coords = " ".join(f"{sx(x)},{sy(y)}" for x, y in hull)
        parts.append(
            f'<polygon points="{coords}" fill="none" stroke="black" stroke-width="1"/>'
        )
    for p in sorted(pts2):
        c = pts2[p]
        parts.append(f'<circle cx="{sx(p[0])}" cy="{sy(p[1])}" r="4" fill="black"/>')
        parts.append(
            f'<text x="{sx(p[0]) + 6}" y="{sy(p[1]) - 6}" font-size="11">{c}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
