"""Exact arithmetic in Z[H] for H a finitely generated abelian group.

Elements are finite integer-coefficient maps on group elements.  The unit
ambiguity +-h is handled by normalize(), which picks a canonical orbit
representative: translate so the lex-least support point is the origin with
positive coefficient, then take the lexicographically least term sequence.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .abelian import (
    AbElement,
    AbelianGroup,
    Projection,
    ab_add,
    ab_neg,
    ab_scale,
    direct_sum,
    zero_element,
)


class GroupMismatchError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


class UnsupportedTorsionError(ValueError):
    pass


@dataclass(frozen=True)
class GroupRingElement:
    group: AbelianGroup
    terms: Dict[AbElement, int]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, neg(other))

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented


def _key(e: AbElement):
    return (e.free, e.tor)


def element(group: AbelianGroup, terms: Dict[AbElement, int]) -> GroupRingElement:
    return GroupRingElement(group, {h: c for h, c in terms.items() if c})


def zero(group: AbelianGroup) -> GroupRingElement:
    return GroupRingElement(group, {})


def one(group: AbelianGroup) -> GroupRingElement:
    return GroupRingElement(group, {zero_element(group): 1})


def monomial(group: AbelianGroup, h: AbElement, c: int = 1) -> GroupRingElement:
    return element(group, {h: c})


def _check(p: GroupRingElement, q: GroupRingElement):
    if p.group != q.group:
        raise GroupMismatchError(f"{p.group} vs {q.group}")


def add(p: GroupRingElement, q: GroupRingElement) -> GroupRingElement:
    _check(p, q)
    out = dict(p.terms)
    for h, c in q.terms.items():
        nc = out.get(h, 0) + c
        if nc:
            out[h] = nc
        else:
            out.pop(h, None)
    return GroupRingElement(p.group, out)


def neg(p: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(p.group, {h: -c for h, c in p.terms.items()})


def scalar_mul(k: int, p: GroupRingElement) -> GroupRingElement:
    if k == 0:
        return zero(p.group)
    return GroupRingElement(p.group, {h: k * c for h, c in p.terms.items()})


def mul(p: GroupRingElement, q: GroupRingElement) -> GroupRingElement:
    _check(p, q)
    G = p.group
    out: Dict[AbElement, int] = {}
    for h1, c1 in p.terms.items():
        for h2, c2 in q.terms.items():
            h = ab_add(G, h1, h2)
            nc = out.get(h, 0) + c1 * c2
            if nc:
                out[h] = nc
            else:
                out.pop(h, None)
    return GroupRingElement(G, out)


def augmentation(p: GroupRingElement) -> int:
    return sum(p.terms.values())


def equal(p: GroupRingElement, q: GroupRingElement) -> bool:
    return p.group == q.group and p.terms == q.terms


def exact_div(p: GroupRingElement, q: GroupRingElement) -> GroupRingElement:
    """Exact quotient p/q in Z[H] for torsion-free H; raises NotDivisibleError
    when no quotient exists.  Both operands are shifted into the non-negative
    cone, then reduced by single-divisor division under graded-lex order."""
    _check(p, q)
    if p.group.torsion:
        raise UnsupportedTorsionError("exact division needs a torsion-free group")
    if not q.terms:
        raise ZeroDivisionError("division by zero in group ring")
    if not p.terms:
        return zero(p.group)
    b = p.group.rank

    def anchored(x: GroupRingElement):
        pts = [h.free for h in x.terms]
        mins = tuple(min(pt[i] for pt in pts) for i in range(b))
        return {tuple(a - m for a, m in zip(h.free, mins)): c for h, c in x.terms.items()}, mins

    P, pmin = anchored(p)
    Q, qmin = anchored(q)

    def grlex(e):
        return (sum(e), e)

    ltq = max(Q, key=grlex)
    cq = Q[ltq]
    R = dict(P)
    quot: Dict[Tuple[int, ...], int] = {}
    while R:
        ltr = max(R, key=grlex)
        cr = R[ltr]
        mono = tuple(a - c for a, c in zip(ltr, ltq))
        if any(x < 0 for x in mono) or cr % cq != 0:
            raise NotDivisibleError("no exact quotient")
        c = cr // cq
        quot[mono] = c
        for e, ce in Q.items():
            k = tuple(a + d for a, d in zip(mono, e))
            nc = R.get(k, 0) - c * ce
            if nc:
                R[k] = nc
            else:
                R.pop(k, None)
    offset = tuple(a - c for a, c in zip(pmin, qmin))
    return GroupRingElement(
        p.group,
        {AbElement(tuple(a + o for a, o in zip(e, offset)), ()): c for e, c in quot.items()},
    )


@dataclass(frozen=True)
class GRMatrix:
    rows: int
    cols: int
    entries: Tuple[Tuple[GroupRingElement, ...], ...]

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[GroupRingElement]]) -> "GRMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        groups = {e.group for row in data for e in row}
        if len(groups) > 1:
            raise GroupMismatchError("matrix entries over different groups")
        return cls(rows, cols, tuple(tuple(row) for row in data))

    @property
    def group(self) -> AbelianGroup:
        return self.entries[0][0].group


def determinant(A: GRMatrix) -> GroupRingElement:
    """Cofactor expansion along the sparsest row or column, memoized on the
    surviving (row-set, column-set)."""
    if A.rows != A.cols:
        raise ValueError("determinant of non-square matrix")
    if A.rows == 0:
        raise ValueError("empty matrix")
    G = A.group
    memo: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], GroupRingElement] = {}

    def det(rows: Tuple[int, ...], cols: Tuple[int, ...]) -> GroupRingElement:
        if len(rows) == 1:
            return A.entries[rows[0]][cols[0]]
        key = (rows, cols)
        if key in memo:
            return memo[key]
        best_row = min(
            range(len(rows)),
            key=lambda ri: sum(1 for c in cols if A.entries[rows[ri]][c].terms),
        )
        best_col = min(
            range(len(cols)),
            key=lambda ci: sum(1 for r in rows if A.entries[r][cols[ci]].terms),
        )
        nz_row = sum(1 for c in cols if A.entries[rows[best_row]][c].terms)
        nz_col = sum(1 for r in rows if A.entries[r][cols[best_col]].terms)
        acc = zero(G)
        if nz_row <= nz_col:
            ri = best_row
            sub_rows = rows[:ri] + rows[ri + 1:]
            for ci in range(len(cols)):
                e = A.entries[rows[ri]][cols[ci]]
                if not e.terms:
                    continue
                minor = det(sub_rows, cols[:ci] + cols[ci + 1:])
                term = mul(e, minor)
                acc = add(acc, term if (ri + ci) % 2 == 0 else neg(term))
        else:
            ci = best_col
            sub_cols = cols[:ci] + cols[ci + 1:]
            for ri in range(len(rows)):
                e = A.entries[rows[ri]][cols[ci]]
                if not e.terms:
                    continue
                minor = det(rows[:ri] + rows[ri + 1:], sub_cols)
                term = mul(e, minor)
                acc = add(acc, term if (ri + ci) % 2 == 0 else neg(term))
        memo[key] = acc
        return acc

    return det(tuple(range(A.rows)), tuple(range(A.cols)))


def normalize(p: GroupRingElement) -> GroupRingElement:
    """Canonical representative of the orbit {+-h*p : h in H}."""
    if not p.terms:
        return p
    G = p.group
    origin = (zero_element(G).free, zero_element(G).tor)
    tor_space = list(itertools.product(*[range(d) for d in G.torsion]))
    best: Optional[Tuple] = None
    for h0 in p.terms:
        for tt in tor_space:
            shift = ab_neg(G, AbElement(h0.free, tt))
            q = mul(monomial(G, shift), p)
            items = sorted((_key(h), c) for h, c in q.terms.items())
            if items[0][0] != origin:
                continue
            if items[0][1] < 0:
                items = [(k, -c) for k, c in items]
            sig = tuple(items)
            if best is None or sig < best:
                best = sig
    assert best is not None
    return GroupRingElement(G, {AbElement(k[0], k[1]): c for k, c in best})


def sim_equal(p: GroupRingElement, q: GroupRingElement) -> bool:
    """True iff p = +-h*q for some h in H."""
    _check(p, q)
    return equal(normalize(p), normalize(q))


def push_forward(p: GroupRingElement, proj: Projection) -> GroupRingElement:
    """Apply a group homomorphism to every term, collecting coefficients."""
    if proj.source != p.group:
        raise GroupMismatchError("projection source does not match element group")
    out: Dict[AbElement, int] = {}
    for h, c in p.terms.items():
        k = proj(h)
        nc = out.get(k, 0) + c
        if nc:
            out[k] = nc
        else:
            out.pop(k, None)
    return GroupRingElement(proj.target, out)


def map_terms(p: GroupRingElement, f, target: AbelianGroup) -> GroupRingElement:
    """push_forward for an arbitrary callable AbElement -> AbElement."""
    out: Dict[AbElement, int] = {}
    for h, c in p.terms.items():
        k = f(h)
        nc = out.get(k, 0) + c
        if nc:
            out[k] = nc
        else:
            out.pop(k, None)
    return GroupRingElement(target, out)


def sum_of_all_elements(G: AbelianGroup) -> GroupRingElement:
    """I_G: the sum of all group elements for finite G, zero otherwise."""
    if G.rank > 0:
        return zero(G)
    terms = {
        AbElement((), tt): 1
        for tt in itertools.product(*[range(d) for d in G.torsion])
    }
    return GroupRingElement(G, terms)


def external_product(p: GroupRingElement, q: GroupRingElement) -> GroupRingElement:
    """Bilinear product into the direct sum of the two groups."""
    G, i1, i2 = direct_sum(p.group, q.group)
    out: Dict[AbElement, int] = {}
    for h1, c1 in p.terms.items():
        for h2, c2 in q.terms.items():
            h = ab_add(G, i1(h1), i2(h2))
            nc = out.get(h, 0) + c1 * c2
            if nc:
                out[h] = nc
            else:
                out.pop(h, None)
    return GroupRingElement(G, out)


def sorted_terms(p: GroupRingElement) -> List[Tuple[AbElement, int]]:
    return sorted(p.terms.items(), key=lambda item: _key(item[0]))


def to_records(p: GroupRingElement) -> dict:
    """Serialized form; bit-exact round-trip with from_records."""
    return {
        "group": {"rank": p.group.rank, "torsion": list(p.group.torsion)},
        "terms": [
            {"coeff": c, "free": list(h.free), "tor": list(h.tor)}
            for h, c in sorted_terms(p)
        ],
    }


def from_records(obj: dict) -> GroupRingElement:
    G = AbelianGroup(obj["group"]["rank"], tuple(obj["group"]["torsion"]))
    terms = {
        AbElement(tuple(t["free"]), tuple(t["tor"])): int(t["coeff"])
        for t in obj["terms"]
    }
    if any(len(h.free) != G.rank or len(h.tor) != len(G.torsion) for h in terms):
        raise ValueError("term coordinates do not match group")
    return element(G, terms)
