"""4-manifolds X presented as unit circle bundles of orbifold line bundles.

X is determined by the base orbifold Y and the orbifold Euler class chi in
Pic^t(Y).  From the Gysin sequence:

    H^1(X) = H^1(|Y|)            if chi has infinite order
           = H^1(|Y|) + Z        if chi is torsion
    H^2(X) = Pic^t(Y)/<chi>  +  ker(cup chi: H^1(|Y|) -> H^3_V(Y))

with every torsion class of H^2(X) pulled back from Y, signature 0 and
Euler characteristic 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import lcm

from .abelian import FgAbGroup, GroupEl, GroupHom, is_torsion, quotient
from .orbifold import Orbifold3, OrbifoldError, PicardElem, is_smooth_total_space, pic_group


class CohomologyError(ValueError):
    pass


@dataclass(frozen=True)
class CohomologyReport:
    h1: FgAbGroup
    h2: FgAbGroup
    h2_pullback_part: FgAbGroup
    pullback: GroupHom  # Pic^t(Y) -> h2_pullback_part
    h2_kernel_rank: int
    b_plus: int
    b_minus: int
    signature: int
    euler_char: int

    @property
    def b1(self) -> int:
        return self.h1.free_rank

    @property
    def b2(self) -> int:
        return self.h2.free_rank

    @property
    def b3(self) -> int:
        # Poincare duality on the closed oriented 4-manifold
        return self.b1


def rational_euler_class(chi: PicardElem) -> list[int]:
    """Positive multiple of the image of chi in H^2(|Y|; Q), on free coordinates.

    Rationally E_i = kappa_i / alpha_i, so chi = c + sum(beta_i/alpha_i kappa_i);
    the result is that vector scaled by lcm(alpha_i).
    """
    Y = chi.orbifold
    m = lcm(*Y.alphas) if Y.alphas else 1
    vec = [m * x for x in chi.c.free]
    for beta, locus in zip(chi.betas, Y.loci):
        for k, x in enumerate(locus.kappa.free):
            vec[k] += beta * (m // locus.alpha) * x
    return vec


@dataclass(frozen=True)
class CircleFourManifold:
    base: Orbifold3
    chi: PicardElem

    def __post_init__(self) -> None:
        if self.chi.orbifold != self.base:
            raise OrbifoldError("Euler class lives over a different orbifold")
        if not is_smooth_total_space(self.chi):
            raise OrbifoldError(
                "unit circle bundle is not smooth: every beta_i must be coprime to alpha_i"
            )

    @cached_property
    def report(self) -> CohomologyReport:
        return _cohomology(self)

    @property
    def b_plus(self) -> int:
        return self.report.b_plus

    def is_pullback(self, x: GroupEl) -> bool:
        """Whether a class of the full H^2(X) model lies in the pullback summand."""
        rep = self.report
        if not rep.h2.contains(x):
            raise CohomologyError(f"{x} is not a canonical element of H^2(X) = {rep.h2}")
        return not any(x.free[rep.h2_pullback_part.free_rank:])

    def include_pullback(self, y: GroupEl) -> GroupEl:
        """Embed the pullback summand into the full H^2(X) model."""
        rep = self.report
        return rep.h2.element(y.free + (0,) * rep.h2_kernel_rank, y.tors)


def _cohomology(X: CircleFourManifold) -> CohomologyReport:
    Y = X.base
    pres = pic_group(Y)
    g = pres.to_group(X.chi)
    torsion_chi = is_torsion(pres.group, g)

    h1 = FgAbGroup(Y.b1 + (1 if torsion_chi else 0))
    pb_group, pullback = quotient(pres.group, [g])

    # kernel of x -> <x cup chi, [|Y|]> on H^1(|Y|) = Z^b1
    w = rational_euler_class(X.chi)
    functional = [sum(p * x for p, x in zip(row, w)) for row in Y.pairing]
    kernel_rank = Y.b1 - (1 if any(functional) else 0)

    h2 = FgAbGroup(pb_group.free_rank + kernel_rank, pb_group.torsion)
    if h2.free_rank % 2:
        raise CohomologyError(f"odd second Betti number {h2.free_rank}: inconsistent pairing data")
    b_plus = b_minus = h2.free_rank // 2
    b1 = h1.free_rank
    euler = 1 - b1 + h2.free_rank - b1 + 1
    return CohomologyReport(
        h1=h1,
        h2=h2,
        h2_pullback_part=pb_group,
        pullback=pullback,
        h2_kernel_rank=kernel_rank,
        b_plus=b_plus,
        b_minus=b_minus,
        signature=b_plus - b_minus,
        euler_char=euler,
    )


def cohomology(X: CircleFourManifold) -> CohomologyReport:
    return X.report


@dataclass(frozen=True)
class IntersectionFormSummary:
    """Q_X as a sum of blocks [[0, 1], [1, d]] in bases {A, B} with A pulled back.

    The diagonal entries d are not determined by the stored data and are
    reported as None.
    """

    n_blocks: int
    pullback_square: int = 0
    off_diagonal: int = 1
    d: tuple[None, ...] = ()

    def as_dict(self) -> dict:
        return {
            "blocks": self.n_blocks,
            "block_form": [[0, 1], [1, "UNDETERMINED"]],
            "pullback_square": self.pullback_square,
        }


def intersection_form(X: CircleFourManifold) -> IntersectionFormSummary:
    n = X.report.b_plus
    return IntersectionFormSummary(n_blocks=n, d=(None,) * n)


def pullback_map(X: CircleFourManifold) -> GroupHom:
    """pi^*: Pic^t(Y) -> H^2(X), landing in the pullback summand."""
    return X.report.pullback


def square_of_pullback(X: CircleFourManifold, L: PicardElem) -> int:
    """Pulled-back classes square to zero: 2-forms on Y multiply to zero."""
    if L.orbifold != X.base:
        raise OrbifoldError("line bundle over a different orbifold")
    return 0
