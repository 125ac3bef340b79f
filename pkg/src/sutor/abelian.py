"""Integer matrix normal forms, abelianization, and quotients of f.g. abelian groups.

Groups are presented in Smith normal form: rank b plus a divisor chain
d_1 | d_2 | ... with every d_i >= 2.  Elements are exponent vectors
(free part) together with reduced torsion residues.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from .words import Generator, Word


class _Infinite:
    """Sentinel for the order of an infinite group."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        flat = []
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(int(x) for x in r)
        return cls(rows, cols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        a, b = self.to_rows(), other.to_rows()
        out = [[sum(a[i][k] * b[k][j] for k in range(self.cols))
                for j in range(other.cols)] for i in range(self.rows)]
        return IntMatrix.from_rows(out) if self.rows else IntMatrix(0, other.cols, ())

    def diagonal(self) -> List[int]:
        return [self.at(i, i) for i in range(min(self.rows, self.cols))]


def det_int(M: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = M.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _smith(data: List[List[int]], m: int, n: int):
    """Return (U, Uinv, D, V) as row-lists with U*M*V = D in Smith form."""
    A = [list(row) for row in data]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    Ui = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in range(m):
            Ui[r][i], Ui[r][j] = Ui[r][j], Ui[r][i]

    def row_add(i, j, c):
        # row_i += c * row_j ; inverse acts on columns of Ui
        for k in range(n):
            A[i][k] += c * A[j][k]
        for k in range(m):
            U[i][k] += c * U[j][k]
        for r in range(m):
            Ui[r][j] -= c * Ui[r][i]

    def row_neg(i):
        for k in range(n):
            A[i][k] = -A[i][k]
        for k in range(m):
            U[i][k] = -U[i][k]
        for r in range(m):
            Ui[r][i] = -Ui[r][i]

    def col_swap(i, j):
        for r in range(m):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def col_add(i, j, c):
        # col_i += c * col_j
        for r in range(m):
            A[r][i] += c * A[r][j]
        for r in range(n):
            V[r][i] += c * V[r][j]

    t = 0
    while t < min(m, n):
        # pick the nonzero entry of minimal absolute value as pivot
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        while True:
            piv = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] != 0 and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv[0] != t:
                row_swap(t, piv[0])
            if piv[1] != t:
                col_swap(t, piv[1])
            if A[t][t] < 0:
                row_neg(t)
            p = A[t][t]
            dirty = False
            for i in range(m):
                if i != t and A[i][t] != 0:
                    q = A[i][t] // p
                    if q:
                        row_add(i, t, -q)
                    if A[i][t] != 0:
                        dirty = True
            for j in range(n):
                if j != t and A[t][j] != 0:
                    q = A[t][j] // p
                    if q:
                        col_add(j, t, -q)
                    if A[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        t += 1
    return U, Ui, A, V


def smith_normal_form(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """U, D, V with U*M*V = D diagonal, d_i | d_{i+1}, d_i >= 0, U and V unimodular."""
    U, _, D, V = _smith(M.to_rows(), M.rows, M.cols)
    mk = lambda rows, r, c: IntMatrix(r, c, tuple(x for row in rows for x in row))
    return (mk(U, M.rows, M.rows), mk(D, M.rows, M.cols), mk(V, M.cols, M.cols))


@dataclass(frozen=True)
class AbelianGroup:
    rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion divisors must form a chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion divisors must be >= 2")

    def describe(self) -> str:
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class AbElement:
    free: Tuple[int, ...] = ()
    tor: Tuple[int, ...] = ()


def zero_element(G: AbelianGroup) -> AbElement:
    return AbElement((0,) * G.rank, (0,) * len(G.torsion))


def ab_add(G: AbelianGroup, x: AbElement, y: AbElement) -> AbElement:
    return AbElement(
        tuple(a + b for a, b in zip(x.free, y.free)),
        tuple((a + b) % d for a, b, d in zip(x.tor, y.tor, G.torsion)),
    )


def ab_neg(G: AbelianGroup, x: AbElement) -> AbElement:
    return AbElement(
        tuple(-a for a in x.free),
        tuple((-a) % d for a, d in zip(x.tor, G.torsion)),
    )


def ab_scale(G: AbelianGroup, x: AbElement, k: int) -> AbElement:
    return AbElement(
        tuple(k * a for a in x.free),
        tuple((k * a) % d for a, d in zip(x.tor, G.torsion)),
    )


def element(G: AbelianGroup, free: Sequence[int] = (), tor: Sequence[int] = ()) -> AbElement:
    free = tuple(free) + (0,) * (G.rank - len(free))
    tor = tuple(tor) + (0,) * (len(G.torsion) - len(tor))
    if len(free) != G.rank or len(tor) != len(G.torsion):
        raise ValueError("coordinate length mismatch")
    return AbElement(free, tuple(t % d for t, d in zip(tor, G.torsion)))


@dataclass(frozen=True)
class Cokernel:
    """The cokernel Z^m / im(M) of a relation matrix, with generator images
    and integer lifts of the canonical factors back to Z^m."""

    group: AbelianGroup
    gen_images: Tuple[AbElement, ...]
    lift_free: Tuple[Tuple[int, ...], ...]
    lift_tor: Tuple[Tuple[int, ...], ...]

    def lift(self, x: AbElement) -> Tuple[int, ...]:
        m = len(self.gen_images)
        v = [0] * m
        for c, col in zip(x.free, self.lift_free):
            for i in range(m):
                v[i] += c * col[i]
        for c, col in zip(x.tor, self.lift_tor):
            for i in range(m):
                v[i] += c * col[i]
        return tuple(v)

    def from_vector(self, v: Sequence[int]) -> AbElement:
        out = zero_element(self.group)
        for c, img in zip(v, self.gen_images):
            if c:
                out = ab_add(self.group, out, ab_scale(self.group, img, c))
        return out


def cokernel(rel_rows: Sequence[Sequence[int]], m: int, n: int) -> Cokernel:
    U, Ui, D, _ = _smith([list(r) for r in rel_rows], m, n)
    diag = [D[i][i] for i in range(min(m, n))]
    tor_rows = [i for i, d in enumerate(diag) if d >= 2]
    free_rows = [i for i, d in enumerate(diag) if d == 0] + list(range(len(diag), m))
    G = AbelianGroup(len(free_rows), tuple(diag[i] for i in tor_rows))
    gen_images = tuple(
        AbElement(
            tuple(U[r][i] for r in free_rows),
            tuple(U[r][i] % diag[r] for r in tor_rows),
        )
        for i in range(m)
    )
    lift_free = tuple(tuple(Ui[i][r] for i in range(m)) for r in free_rows)
    lift_tor = tuple(tuple(Ui[i][r] for i in range(m)) for r in tor_rows)
    return Cokernel(G, gen_images, lift_free, lift_tor)


def abelianize(alphabet: Sequence[Generator], relators: Sequence[Word]) -> Cokernel:
    """H = cokernel of the exponent-sum matrix (rows = generators, cols = relators)."""
    m = len(alphabet)
    rows = [[0] * len(relators) for _ in range(m)]
    for j, w in enumerate(relators):
        for g, e in w.letters:
            rows[g][j] += e
    return cokernel(rows, m, len(relators))


def word_image(ck: Cokernel, w: Word) -> AbElement:
    """phi extended multiplicatively to words."""
    out = zero_element(ck.group)
    for g, e in w.letters:
        out = ab_add(ck.group, out, ab_scale(ck.group, ck.gen_images[g], e))
    return out


@dataclass(frozen=True)
class Projection:
    source: AbelianGroup
    target: AbelianGroup
    images: Tuple[AbElement, ...]  # image of each canonical source factor (free then torsion)

    def __call__(self, x: AbElement) -> AbElement:
        out = zero_element(self.target)
        coords = list(x.free) + list(x.tor)
        for c, img in zip(coords, self.images):
            if c:
                out = ab_add(self.target, out, ab_scale(self.target, img, c))
        return out


def quotient(H: AbelianGroup, killed: Sequence[AbElement]) -> Projection:
    """G = H / <killed>, with the canonical surjection."""
    m = H.rank + len(H.torsion)
    cols: List[List[int]] = []
    for j, d in enumerate(H.torsion):
        col = [0] * m
        col[H.rank + j] = d
        cols.append(col)
    for x in killed:
        if len(x.free) != H.rank or len(x.tor) != len(H.torsion):
            raise ValueError("killed element not in the group")
        cols.append(list(x.free) + list(x.tor))
    rows = [[col[i] for col in cols] for i in range(m)]
    ck = cokernel(rows, m, len(cols))
    return Projection(H, ck.group, ck.gen_images)


def direct_sum(G1: AbelianGroup, G2: AbelianGroup) -> Tuple[AbelianGroup, Projection, Projection]:
    """G1 + G2 in canonical form, with the two inclusion maps."""
    m1 = G1.rank + len(G1.torsion)
    m2 = G2.rank + len(G2.torsion)
    m = m1 + m2
    cols: List[List[int]] = []
    for j, d in enumerate(G1.torsion):
        col = [0] * m
        col[G1.rank + j] = d
        cols.append(col)
    for j, d in enumerate(G2.torsion):
        col = [0] * m
        col[m1 + G2.rank + j] = d
        cols.append(col)
    rows = [[col[i] for col in cols] for i in range(m)]
    ck = cokernel(rows, m, len(cols))
    incl1 = Projection(G1, ck.group, ck.gen_images[:m1])
    incl2 = Projection(G2, ck.group, ck.gen_images[m1:])
    return ck.group, incl1, incl2


def order(G: AbelianGroup):
    """Group order; INFINITE when the rank is positive."""
    if G.rank > 0:
        return INFINITE
    n = 1
    for d in G.torsion:
        n *= d
    return n
