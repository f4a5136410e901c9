"""
Closed oriented 3-orbifolds with circle singular loci and their topological
Picard groups.

Only the cohomological shadow of the orbifold is stored: the second
cohomology of the underlying manifold, the cup products H^1 x H^2 -> Z and
H^1 x H^1 x H^1 -> Z, and for every singular circle its multiplicity alpha_i
together with a carry class kappa_i in H^2(|Y|).

An orbifold line bundle is recorded by its Seifert invariant
(c_1(|L|), beta_1, ..., beta_n) with 0 <= beta_i < alpha_i.  The bundle E_i
(trivial away from l_i, standard isotropy representation along it) has
invariant (0, delta_i), and its alpha_i-th power is the honest line bundle
with first Chern class kappa_i.  Tensor product therefore adds the betas with
carries: each wrap-around past alpha_i contributes kappa_i to c_1.  The
natural choice of kappa_i is the Poincare dual of the singular circle; the
class is supplied with the data so other carry rules can be modelled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import gcd
from typing import Sequence

from .abelian import FgAbGroup, GroupEl, GroupHom, det, matvec, present, smith_normal_form


class OrbifoldError(ValueError):
    pass


@dataclass(frozen=True)
class Locus:
    alpha: int
    kappa: GroupEl


def _tensor3(t, n: int) -> tuple:
    if n == 0:
        return ()
    out = tuple(tuple(tuple(int(t[a][b][c]) for c in range(n)) for b in range(n)) for a in range(n))
    return out


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class Orbifold3:
    """Cohomological data of a closed oriented 3-orbifold.

    ``pairing[a][j]`` evaluates (H^1 generator a) cup (free H^2 generator j) on
    the fundamental class; ``cup11[a][b][c]`` is the triple product of H^1
    generators.  ``cup_h1h1`` optionally gives the classes a cup b in H^2(|Y|)
    directly (needed when those products have torsion parts); by default they
    are recovered from ``cup11`` through the pairing.
    """

    h2: FgAbGroup
    b1: int
    loci: tuple[Locus, ...] = ()
    pairing: tuple[tuple[int, ...], ...] = ()
    cup11: tuple = ()
    cup_h1h1: tuple[tuple[GroupEl, ...], ...] | None = field(default=None)

    def __post_init__(self) -> None:
        n = self.b1
        object.__setattr__(self, "loci", tuple(self.loci))
        if not self.pairing and n:
            object.__setattr__(self, "pairing", tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
        object.__setattr__(self, "pairing", tuple(tuple(int(x) for x in row) for row in self.pairing))
        if not self.cup11 and n:
            object.__setattr__(self, "cup11", _tensor3([[[0] * n] * n] * n, n))
        else:
            object.__setattr__(self, "cup11", _tensor3(self.cup11, n))

        if n < 0:
            raise OrbifoldError("b1 must be nonnegative")
        if self.h2.free_rank != n:
            raise OrbifoldError(f"free rank of H^2 ({self.h2.free_rank}) must equal b1 ({n})")
        if len(self.pairing) != n or any(len(row) != n for row in self.pairing):
            raise OrbifoldError("pairing must be a b1 x b1 matrix")
        if abs(det(self.pairing)) != 1:
            raise OrbifoldError("pairing H^1 x H^2 -> Z is not unimodular")
        for a, b, c in ((a, b, c) for a in range(n) for b in range(n) for c in range(n)):
            v = self.cup11[a][b][c]
            for p in permutations(range(3)):
                idx = (a, b, c)
                if self.cup11[idx[p[0]]][idx[p[1]]][idx[p[2]]] != _perm_sign(p) * v:
                    raise OrbifoldError("cup11 is not totally antisymmetric")
        for i, locus in enumerate(self.loci):
            if locus.alpha < 2:
                raise OrbifoldError(f"locus {i}: multiplicity {locus.alpha} < 2")
            if not self.h2.contains(locus.kappa):
                raise OrbifoldError(f"locus {i}: carry class {locus.kappa} is not in {self.h2}")
        if self.cup_h1h1 is not None:
            table = tuple(tuple(row) for row in self.cup_h1h1)
            object.__setattr__(self, "cup_h1h1", table)
            self._check_cup_table(table)

    def _check_cup_table(self, table) -> None:
        n = self.b1
        if len(table) != n or any(len(row) != n for row in table):
            raise OrbifoldError("cup_h1h1 must be a b1 x b1 table")
        for a in range(n):
            for b in range(n):
                g = table[a][b]
                if not self.h2.contains(g):
                    raise OrbifoldError(f"cup_h1h1[{a}][{b}] is not in {self.h2}")
                if table[b][a] != self.h2.neg(g):
                    raise OrbifoldError("cup_h1h1 is not antisymmetric")
                # consistency with the triple product: <c u (a u b)> = mu(c, a, b)
                for c in range(n):
                    if sum(p * x for p, x in zip(self.pairing[c], g.free)) != self.cup11[c][a][b]:
                        raise OrbifoldError(f"cup_h1h1[{a}][{b}] disagrees with cup11")

    @property
    def n_loci(self) -> int:
        return len(self.loci)

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(l.alpha for l in self.loci)

    def cup_product(self, a: int, b: int) -> GroupEl:
        """The class (H^1 generator a) cup (H^1 generator b) in H^2(|Y|)."""
        if self.cup_h1h1 is not None:
            return self.cup_h1h1[a][b]
        rhs = [self.cup11[c][a][b] for c in range(self.b1)]
        return self.h2.element(_solve_unimodular(self.pairing, rhs))


def _solve_unimodular(P: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int]:
    n = len(P)
    U, D, V = smith_normal_form(P)
    y = matvec(U, rhs)
    return matvec(V, [y[i] // D[i][i] for i in range(n)])


# --------------------------------------------------------------------------
# Picard group in Seifert coordinates
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PicardElem:
    orbifold: Orbifold3
    c: GroupEl
    betas: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        Y = self.orbifold
        object.__setattr__(self, "betas", tuple(int(b) for b in self.betas))
        if not self.betas and Y.n_loci:
            object.__setattr__(self, "betas", (0,) * Y.n_loci)
        if not Y.h2.contains(self.c):
            raise OrbifoldError(f"c_1 = {self.c} is not a canonical element of {Y.h2}")
        if len(self.betas) != Y.n_loci:
            raise OrbifoldError(f"expected {Y.n_loci} betas, got {len(self.betas)}")
        for b, a in zip(self.betas, Y.alphas):
            if not 0 <= b < a:
                raise OrbifoldError(f"beta {b} outside [0, {a})")

    def __add__(self, other: PicardElem) -> PicardElem:
        return pic_add(self, other)

    def __neg__(self) -> PicardElem:
        return pic_neg(self)

    def __sub__(self, other: PicardElem) -> PicardElem:
        return pic_add(self, pic_neg(other))

    def __rmul__(self, n: int) -> PicardElem:
        return pic_scale(n, self)


def pic_identity(Y: Orbifold3) -> PicardElem:
    return PicardElem(Y, Y.h2.zero(), (0,) * Y.n_loci)


def pic_from_lattice(Y: Orbifold3, c_vec: Sequence[int], exps: Sequence[int]) -> PicardElem:
    """Normalize c + sum(exps_i * E_i) into Seifert coordinates."""
    vec = list(c_vec)
    betas = []
    for e, locus in zip(exps, Y.loci):
        carry, beta = divmod(e, locus.alpha)
        betas.append(beta)
        for k, x in enumerate(locus.kappa.coords):
            vec[k] += carry * x
    return PicardElem(Y, Y.h2.from_coords(vec), tuple(betas))


def E(Y: Orbifold3, i: int) -> PicardElem:
    """The basic orbifold line bundle around the i-th singular circle."""
    betas = [0] * Y.n_loci
    betas[i] = 1
    return PicardElem(Y, Y.h2.zero(), tuple(betas))


def pic_add(L1: PicardElem, L2: PicardElem) -> PicardElem:
    if L1.orbifold != L2.orbifold:
        raise OrbifoldError("line bundles over different orbifolds")
    Y = L1.orbifold
    c = [x + y for x, y in zip(L1.c.coords, L2.c.coords)]
    return pic_from_lattice(Y, c, [b1 + b2 for b1, b2 in zip(L1.betas, L2.betas)])


def pic_neg(L: PicardElem) -> PicardElem:
    return pic_from_lattice(L.orbifold, [-x for x in L.c.coords], [-b for b in L.betas])


def pic_scale(n: int, L: PicardElem) -> PicardElem:
    return pic_from_lattice(L.orbifold, [n * x for x in L.c.coords], [n * b for b in L.betas])


@dataclass(frozen=True)
class PicardPresentation:
    """Pic^t(Y) in invariant-factor form.

    ``lattice_map`` sends the lattice of Seifert coordinates
    (h2 generators, E_1, ..., E_n) onto ``group``.
    """

    orbifold: Orbifold3
    group: FgAbGroup
    lattice_map: GroupHom

    def to_group(self, L: PicardElem) -> GroupEl:
        if L.orbifold != self.orbifold:
            raise OrbifoldError("line bundle over a different orbifold")
        return self.lattice_map(self.lattice_map.domain.from_coords(L.c.coords + L.betas))

    def from_group(self, g: GroupEl) -> PicardElem:
        if not self.group.contains(g):
            raise OrbifoldError(f"{g} is not a canonical element of {self.group}")
        x = self.lattice_map.lift(g).coords
        k = self.orbifold.h2.ngens
        return pic_from_lattice(self.orbifold, x[:k], x[k:])


@lru_cache(maxsize=256)
def pic_group(Y: Orbifold3) -> PicardPresentation:
    """Present Pic^t(Y) = (H^2(|Y|) + Z E_1 + ... + Z E_n) / <alpha_i E_i - kappa_i>."""
    h2 = Y.h2
    k = h2.ngens
    N = k + Y.n_loci
    rels = []
    for j, d in enumerate(h2.torsion):
        v = [0] * N
        v[h2.free_rank + j] = d
        rels.append(v)
    for i, locus in enumerate(Y.loci):
        v = [-x for x in locus.kappa.coords] + [0] * Y.n_loci
        v[k + i] = locus.alpha
        rels.append(v)
    G, proj, section = present(N, rels)
    lattice = FgAbGroup(N)
    hom = GroupHom(lattice, G, tuple(map(tuple, proj)), tuple(map(tuple, section)))
    return PicardPresentation(Y, G, hom)


def desingularize(L: PicardElem) -> GroupEl:
    """c_1 of |L|; Seifert coordinates store it directly."""
    return L.c


@dataclass(frozen=True)
class GluingRecord:
    alpha: int
    beta: int
    d: int
    meridian_coeff: int
    fiber_coeff: int


def unit_circle_gluing(L: PicardElem) -> tuple[GluingRecord, ...]:
    """Per locus, the class of the glued-in meridian in terms of the boundary
    section and the fibre: (alpha/d) s[m'] + (beta/d) [f'], d = gcd(alpha, beta)."""
    out = []
    for a, b in zip(L.orbifold.alphas, L.betas):
        d = gcd(a, b)  # gcd(a, 0) == a
        out.append(GluingRecord(a, b, d, a // d, b // d))
    return tuple(out)


def is_smooth_total_space(L: PicardElem) -> bool:
    return all(gcd(a, b) == 1 for a, b in zip(L.orbifold.alphas, L.betas))
