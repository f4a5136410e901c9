"""
Finitely generated abelian groups with exact integer arithmetic.

Every group is stored in invariant-factor normal form

    G = Z^r (+) Z/d_1 (+) ... (+) Z/d_k,     d_1 | d_2 | ... | d_k,  d_i >= 2,

and elements are coordinate vectors in that basis (free coordinates first,
torsion coordinates reduced into [0, d_i)).  Presentations by generators and
relations are brought to this form with the Smith normal form, which also
yields the projection onto the quotient and a set-theoretic section of it.

>>> G = FgAbGroup(2)
>>> Q, proj = quotient(G, [G.element((4, 0))])
>>> Q
FgAbGroup(free_rank=1, torsion=(4,))
>>> proj(G.element((7, -3)))
GroupEl(free=(-3,), tors=(3,))
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: int | None = None) -> Matrix:
    """Integer matrix product.  ``inner`` is only needed when ``a`` has no rows."""
    if inner is None:
        inner = len(b)
    ncols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(ncols)] for row in a]


def matvec(a: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(r * v for r, v in zip(row, x)) for row in a]


def transpose(a: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    if ncols is None:
        ncols = len(a[0]) if a else 0
    return [[a[i][j] for i in range(len(a))] for j in range(ncols)]


def det(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    m = [list(map(int, row)) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# --------------------------------------------------------------------------
# Smith normal form
# --------------------------------------------------------------------------


def _snf(M: Sequence[Sequence[int]], ncols: int | None = None):
    """Returns (U, D, V, U_inv) with U*M*V = D."""
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if m else 0)
    if any(len(row) != n for row in A):
        raise ValueError("ragged matrix")
    U = identity(m)
    Uinv = identity(m)
    V = identity(n)

    def swap_rows(i: int, j: int) -> None:
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i: int, j: int) -> None:
        for mat in (A, V):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]
        for row in Uinv:
            row[src] -= q * row[dst]

    def add_col(dst: int, src: int, q: int) -> None:
        for mat in (A, V):
            for row in mat:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])

        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            # remainders left behind: move the smallest one into the pivot
            rest = [(abs(A[i][t]), 0, i) for i in range(t + 1, m) if A[i][t]]
            rest += [(abs(A[t][j]), 1, j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                _, axis, k = min(rest)
                if axis == 0:
                    swap_rows(t, k)
                else:
                    swap_cols(t, k)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
            for row in Uinv:
                row[t] = -row[t]
    return U, A, V, Uinv


def smith_normal_form(M: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form of an integer matrix.

    Returns ``(U, D, V)`` with ``U @ M @ V == D``, ``U`` and ``V`` unimodular, and
    ``D`` diagonal with nonnegative entries ``d_1 | d_2 | ...`` (zeros last).
    Pass ``ncols`` for matrices with no rows.
    """
    U, D, V, _ = _snf(M, ncols)
    return U, D, V


def diagonal(D: Sequence[Sequence[int]]) -> list[int]:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


# --------------------------------------------------------------------------
# Groups and elements
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class GroupEl:
    """Coordinates of an element; only meaningful together with its group."""

    free: tuple[int, ...] = ()
    tors: tuple[int, ...] = ()

    @property
    def coords(self) -> tuple[int, ...]:
        return self.free + self.tors


@dataclass(frozen=True)
class FgAbGroup:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion coefficient {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def trivial(cls) -> FgAbGroup:
        return cls(0)

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def element(self, free: Iterable[int] = (), tors: Iterable[int] = ()) -> GroupEl:
        free = tuple(int(x) for x in free)
        tors = tuple(int(x) for x in tors)
        if not free and self.free_rank:
            free = (0,) * self.free_rank
        if not tors and self.torsion:
            tors = (0,) * len(self.torsion)
        if len(free) != self.free_rank or len(tors) != len(self.torsion):
            raise ValueError(f"coordinates ({free}, {tors}) do not fit {self}")
        return GroupEl(free, tuple(x % d for x, d in zip(tors, self.torsion)))

    def from_coords(self, vec: Sequence[int]) -> GroupEl:
        r = self.free_rank
        return self.element(vec[:r], vec[r:])

    def zero(self) -> GroupEl:
        return self.element()

    def gens(self) -> list[GroupEl]:
        return [self.from_coords([int(i == j) for j in range(self.ngens)]) for i in range(self.ngens)]

    def contains(self, g: GroupEl) -> bool:
        return (
            len(g.free) == self.free_rank
            and len(g.tors) == len(self.torsion)
            and all(0 <= x < d for x, d in zip(g.tors, self.torsion))
        )

    def add(self, a: GroupEl, b: GroupEl) -> GroupEl:
        return self.from_coords([x + y for x, y in zip(a.coords, b.coords)])

    def neg(self, a: GroupEl) -> GroupEl:
        return self.from_coords([-x for x in a.coords])

    def sub(self, a: GroupEl, b: GroupEl) -> GroupEl:
        return self.from_coords([x - y for x, y in zip(a.coords, b.coords)])

    def scale(self, n: int, a: GroupEl) -> GroupEl:
        return self.from_coords([n * x for x in a.coords])

    def combination(self, coeffs: Sequence[int], elems: Sequence[GroupEl]) -> GroupEl:
        vec = [0] * self.ngens
        for c, g in zip(coeffs, elems):
            for k, x in enumerate(g.coords):
                vec[k] += c * x
        return self.from_coords(vec)

    def order(self, g: GroupEl) -> int:
        """Order of ``g``; 0 for elements of infinite order."""
        if any(g.free):
            return 0
        out = 1
        for x, d in zip(g.tors, self.torsion):
            out = _lcm(out, d // gcd(x, d))
        return out

    def torsion_subgroup(self) -> FgAbGroup:
        return FgAbGroup(0, self.torsion)

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}" if self.free_rank > 1 else "Z"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else 0


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by an integer matrix acting on coordinate columns.

    ``matrix`` has ``codomain.ngens`` rows and ``domain.ngens`` columns; column
    ``j`` is the image of the ``j``-th domain generator.  ``section``, when
    present (quotient maps carry one), has the transposed shape and sends
    codomain coordinates to a preimage.
    """

    domain: FgAbGroup
    codomain: FgAbGroup
    matrix: tuple[tuple[int, ...], ...]
    section: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        if self.section is not None:
            object.__setattr__(self, "section", tuple(tuple(int(x) for x in row) for row in self.section))
        if len(mat) != self.codomain.ngens or any(len(row) != self.domain.ngens for row in mat):
            raise ValueError("matrix shape does not match domain/codomain")
        r = self.domain.free_rank
        for k, d in enumerate(self.domain.torsion):
            image = self.codomain.from_coords([d * row[r + k] for row in mat])
            if image != self.codomain.zero():
                raise ValueError(f"generator of order {d} is sent to an element of larger order")

    def __call__(self, g: GroupEl) -> GroupEl:
        return self.codomain.from_coords(matvec(self.matrix, g.coords))

    def lift(self, q: GroupEl) -> GroupEl:
        """A preimage of ``q`` (requires a stored section)."""
        if self.section is None:
            raise ValueError("homomorphism carries no section")
        return self.domain.from_coords(matvec(self.section, q.coords))

    def then(self, other: GroupHom) -> GroupHom:
        if other.domain != self.codomain:
            raise ValueError("composition of incompatible homomorphisms")
        mat = matmul(other.matrix, self.matrix, inner=self.codomain.ngens)
        if not mat:
            mat = []
        return GroupHom(self.domain, other.codomain, tuple(map(tuple, mat)))

    @classmethod
    def identity(cls, G: FgAbGroup) -> GroupHom:
        eye = tuple(map(tuple, identity(G.ngens)))
        return cls(G, G, eye, eye)


def _relations_of(G: FgAbGroup) -> list[list[int]]:
    r = G.free_rank
    rels = []
    for k, d in enumerate(G.torsion):
        vec = [0] * G.ngens
        vec[r + k] = d
        rels.append(vec)
    return rels


def _row_hermite(F: Matrix, ncols: int) -> tuple[Matrix, Matrix]:
    """Unimodular (H, H^-1) with H @ F in row Hermite normal form."""
    A = [row[:] for row in F]
    r = len(A)
    H = identity(r)
    Hinv = identity(r)

    def add_row(dst: int, src: int, q: int) -> None:
        for M in (A, H):
            M[dst] = [x + q * y for x, y in zip(M[dst], M[src])]
        for row in Hinv:
            row[src] -= q * row[dst]

    def swap(i: int, j: int) -> None:
        for M in (A, H):
            M[i], M[j] = M[j], M[i]
        for row in Hinv:
            row[i], row[j] = row[j], row[i]

    def negate(i: int) -> None:
        for M in (A, H):
            M[i] = [-x for x in M[i]]
        for row in Hinv:
            row[i] = -row[i]

    p = 0
    for j in range(ncols):
        if p == r:
            break
        while True:
            nz = [i for i in range(p, r) if A[i][j]]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(A[i][j]))
            if k != p:
                swap(p, k)
            if all(A[i][j] == 0 for i in range(p + 1, r)):
                break
            for i in range(p + 1, r):
                if A[i][j]:
                    add_row(i, p, -(A[i][j] // A[p][j]))
        if A[p][j] == 0:
            continue
        if A[p][j] < 0:
            negate(p)
        for i in range(p):
            if A[i][j]:
                add_row(i, p, -(A[i][j] // A[p][j]))
        p += 1
    return H, Hinv


def present(ngens: int, relations: Sequence[Sequence[int]]) -> tuple[FgAbGroup, Matrix, Matrix]:
    """Normal form of ``Z^ngens / <relations>``.

    Returns ``(Q, proj, section)``: ``proj`` (Q.ngens x ngens) maps lattice
    vectors to Q-coordinates, and ``section`` (ngens x Q.ngens) maps
    Q-coordinates back to lattice vectors with ``proj @ section`` the identity
    modulo Q's torsion.
    """
    rels = [list(map(int, v)) for v in relations]
    for v in rels:
        if len(v) != ngens:
            raise ValueError("relation vector has wrong length")
    A = transpose(rels, ncols=ngens) if rels else [[] for _ in range(ngens)]
    U, D, _, Uinv = _snf(A, ncols=len(rels))
    diag = diagonal(D) + [0] * max(0, ngens - len(rels))
    free_idx = [i for i, d in enumerate(diag) if d == 0]
    tors_idx = [i for i, d in enumerate(diag) if d > 1]
    keep = free_idx + tors_idx
    Q = FgAbGroup(len(free_idx), tuple(diag[i] for i in tors_idx))
    # any unimodular change of the free coordinates is allowed; Hermite form
    # makes it canonical and leaves untouched generators in place
    H, Hinv = _row_hermite([U[i] for i in free_idx], ngens)
    free_rows = matmul(H, [U[i] for i in free_idx], inner=len(free_idx))
    proj = free_rows + [U[i] for i in tors_idx]
    free_section = matmul([[Uinv[row][i] for i in free_idx] for row in range(ngens)], Hinv, inner=len(free_idx))
    section = [free_section[row] + [Uinv[row][i] for i in tors_idx] for row in range(ngens)]
    return Q, proj, section


def quotient(G: FgAbGroup, gens: Sequence[GroupEl]) -> tuple[FgAbGroup, GroupHom]:
    """``G / <gens>`` together with the projection (which carries a section)."""
    for g in gens:
        if not G.contains(g):
            raise ValueError(f"{g} is not an element of {G}")
    if all(g == G.zero() for g in gens):
        return G, GroupHom.identity(G)
    Q, proj, section = present(G.ngens, _relations_of(G) + [list(g.coords) for g in gens])
    return Q, GroupHom(G, Q, tuple(map(tuple, proj)), tuple(map(tuple, section)))


def express(G: FgAbGroup, gens: Sequence[GroupEl], g: GroupEl) -> list[int] | None:
    """Integers ``c`` with ``sum(c_i * gens_i) == g`` in ``G``, or None if ``g`` is not in the subgroup."""
    rels = [list(h.coords) for h in gens] + _relations_of(G)
    n = G.ngens
    if not rels:
        return [] if g == G.zero() else None
    A = transpose(rels, ncols=n)
    U, D, V = smith_normal_form(A, ncols=len(rels))
    b = matvec(U, g.coords)
    y = [0] * len(rels)
    for i in range(n):
        d = D[i][i] if i < len(rels) else 0
        if d == 0:
            if b[i]:
                return None
        else:
            if b[i] % d:
                return None
            y[i] = b[i] // d
    c = matvec(V, y)
    return c[: len(gens)]


def is_torsion(G: FgAbGroup, g: GroupEl) -> bool:
    if not G.contains(g):
        raise ValueError(f"{g} is not an element of {G}")
    return not any(g.free)


def canonical_rep(proj: GroupHom, q: GroupEl) -> GroupEl:
    """Stored normal form of ``q`` in the codomain of ``proj``."""
    return proj.codomain.element(q.free, q.tors)
