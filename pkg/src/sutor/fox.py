"""Abelianized Fox free differential calculus and the torsion matrix.

Derivatives are computed already composed with the abelianization map, so
all values live in Z[H] rather than the noncommutative ring Z[pi_1].
"""
from __future__ import annotations

from typing import Dict, Sequence, Union

from .abelian import AbElement, Cokernel, ab_add, ab_neg, ab_scale, zero_element
from .groupring import GRMatrix, GroupRingElement
from .words import Generator, Word


def fox_derivative(w: Word, gen: Union[Generator, int], ab: Cokernel) -> GroupRingElement:
    """phi(dw/dx) for the generator x, using the closed form for powers:
    d(g^k)/dg = 1 + g + ... + g^(k-1) for k > 0, and the negative mirror."""
    x = gen.index if isinstance(gen, Generator) else gen
    G = ab.group
    terms: Dict[AbElement, int] = {}
    prefix = zero_element(G)
    for g, k in w.letters:
        img = ab.gen_images[g]
        if g == x:
            if k > 0:
                for j in range(k):
                    h = ab_add(G, prefix, ab_scale(G, img, j))
                    c = terms.get(h, 0) + 1
                    if c:
                        terms[h] = c
                    else:
                        terms.pop(h, None)
            else:
                for j in range(1, -k + 1):
                    h = ab_add(G, prefix, ab_scale(G, img, -j))
                    c = terms.get(h, 0) - 1
                    if c:
                        terms[h] = c
                    else:
                        terms.pop(h, None)
        prefix = ab_add(G, prefix, ab_scale(G, img, k))
    return GroupRingElement(G, terms)


def fox_matrix(alphabet: Sequence[Generator], columns: Sequence[Word], ab: Cokernel) -> GRMatrix:
    """Rows indexed by generators, columns by the given words
    (relators first, then the R_- image words)."""
    data = [
        [fox_derivative(w, g.index, ab) for w in columns]
        for g in alphabet
    ]
    return GRMatrix.from_rows(data)
