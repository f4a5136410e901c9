"""
Seiberg-Witten invariants of circle-bundle 4-manifolds from 3-orbifold data.

SW polynomials are group-ring elements: the coefficient of exp(g) is the
invariant of the Spin^c structure xi_0 + g for a fixed (implicit) basepoint
xi_0.  On Y the exponents live in Pic^t(Y); on X they live in the pulled-back
summand of H^2(X), and the 4-dimensional polynomial is obtained by summing the
3-dimensional one over cosets of the Euler class:

    SW^4_X(pi^* xi_0) = sum over xi' = xi_0 mod chi of SW^3_Y(xi').
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .abelian import FgAbGroup, GroupEl, GroupHom, det
from .fourman import CircleFourManifold, pullback_map, square_of_pullback
from .groupring import Z, GroupRingElem, fold, is_symmetric, pushforward
from .orbifold import Orbifold3, OrbifoldError, PicardElem, pic_group


class SWError(ValueError):
    pass


class ChamberDependenceError(SWError):
    """b_+(X) = 1 and b_1(Y) = 1: the invariant may depend on the chamber."""


class InvalidSeifertMatrix(SWError):
    pass


class ChamberNote(str, enum.Enum):
    UNCONDITIONAL = "UNCONDITIONAL"
    B_PLUS_ONE_PULLBACK_ONLY = "B_PLUS_ONE_PULLBACK_ONLY"


@dataclass(frozen=True)
class SW3Invariant:
    orbifold: Orbifold3
    poly: GroupRingElem

    def __post_init__(self) -> None:
        G = pic_group(self.orbifold).group
        if self.poly.group != G:
            raise SWError(f"SW^3 polynomial must live over Pic^t(Y) = {G}, not {self.poly.group}")

    @classmethod
    def from_seifert_terms(cls, Y: Orbifold3, terms: Sequence[tuple[PicardElem, int]]) -> SW3Invariant:
        """Build from exponents given as Seifert invariants (offsets from the basepoint)."""
        pres = pic_group(Y)
        return cls(Y, GroupRingElem(pres.group, [(pres.to_group(L), c) for L, c in terms]))


@dataclass(frozen=True)
class SW4Invariant:
    manifold: CircleFourManifold
    poly: GroupRingElem
    chamber_note: ChamberNote

    def __post_init__(self) -> None:
        rep = self.manifold.report
        if self.poly.group != rep.h2_pullback_part:
            raise SWError("SW^4 polynomial must be supported on the pulled-back part of H^2(X)")
        expected = ChamberNote.UNCONDITIONAL if rep.b_plus != 1 else ChamberNote.B_PLUS_ONE_PULLBACK_ONLY
        if self.chamber_note != expected:
            raise SWError(f"chamber note must be {expected.value} when b_+ = {rep.b_plus}")


@dataclass(frozen=True)
class SeifertMatrix:
    V: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        V = tuple(tuple(int(x) for x in row) for row in self.V)
        object.__setattr__(self, "V", V)
        n = len(V)
        if any(len(row) != n for row in V) or n % 2:
            raise InvalidSeifertMatrix("Seifert matrix must be square of even size")
        if det(self.form()) != 1:
            raise InvalidSeifertMatrix("det(V - V^T) must be 1")

    @property
    def genus(self) -> int:
        return len(self.V) // 2

    def form(self) -> list[list[int]]:
        """The skew intersection form V - V^T."""
        n = len(self.V)
        return [[self.V[i][j] - self.V[j][i] for j in range(n)] for i in range(n)]


# --------------------------------------------------------------------------
# Alexander polynomials
# --------------------------------------------------------------------------


def _interpolate(points: Sequence[int], values: Sequence[int]) -> list[int]:
    """Integer coefficients (low to high) of the polynomial through the points."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n):
            coeffs[k] += yi * basis[k] / denom
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated polynomial has non-integer coefficients")
    return [int(c) for c in coeffs]


def alexander_from_seifert(V: SeifertMatrix | Sequence[Sequence[int]]) -> GroupRingElem:
    """Symmetrized Alexander polynomial t^(-g) det(tV - V^T), normalized to Delta(1) = 1."""
    if not isinstance(V, SeifertMatrix):
        V = SeifertMatrix(tuple(map(tuple, V)))
    n = len(V.V)
    g = V.genus
    # det(tV - V^T) has degree <= n; sample it at n + 1 integers
    points = list(range(-(n // 2), n - n // 2 + 1))
    values = [
        det([[t * V.V[i][j] - V.V[j][i] for j in range(n)] for i in range(n)]) for t in points
    ]
    coeffs = _interpolate(points, values)
    sign = 1 if sum(coeffs) > 0 else -1
    return GroupRingElem.laurent({k - g: sign * c for k, c in enumerate(coeffs)})


# --------------------------------------------------------------------------
# The Whitehead-link family Y_{K1 K2}
# --------------------------------------------------------------------------


def whitehead_orbifold() -> Orbifold3:
    """Cohomological data of Y_{K1K2}: b1 = 2, H^2 = Z^2 (duals of the meridians), trivial cup products."""
    return Orbifold3(h2=FgAbGroup(2), b1=2)


def _check_alexander(delta: GroupRingElem, name: str) -> None:
    if delta.group != Z:
        raise SWError(f"{name} must be a Laurent polynomial in one variable")
    if not is_symmetric(delta):
        raise SWError(f"{name} is not symmetric under t -> 1/t")
    if delta.total() != 1:
        raise SWError(f"{name} must satisfy Delta(1) = 1")


def whitehead_construction(delta1: GroupRingElem, delta2: GroupRingElem) -> SW3Invariant:
    """SW^3 of Y_{K1K2} as Delta_1(x^2) * Delta_2(y^2).

    The product rule is verified for the 6_3/6_3 pair; for other fibered knot
    pairs it is a generalization hypothesis, not an established formula.
    """
    _check_alexander(delta1, "delta1")
    _check_alexander(delta2, "delta2")
    Y = whitehead_orbifold()
    G = pic_group(Y).group
    sub_x = GroupHom(Z, G, ((2,), (0,)))
    sub_y = GroupHom(Z, G, ((0,), (2,)))
    poly = pushforward(delta1, sub_x) * pushforward(delta2, sub_y)
    return SW3Invariant(Y, poly)


# --------------------------------------------------------------------------
# Folding SW^3 into SW^4 and consequences
# --------------------------------------------------------------------------


def sw4_from_sw3(X: CircleFourManifold, sw3: SW3Invariant) -> SW4Invariant:
    if sw3.orbifold != X.base:
        raise OrbifoldError("SW^3 data belongs to a different orbifold")
    b_plus = X.report.b_plus
    if b_plus == 1 and X.base.b1 == 1:
        raise ChamberDependenceError(
            "b_+(X) = 1 with b_1(Y) = 1: the numerical invariant may depend on the chamber of Y"
        )
    note = ChamberNote.UNCONDITIONAL if b_plus != 1 else ChamberNote.B_PLUS_ONE_PULLBACK_ONLY
    return SW4Invariant(X, fold(sw3.poly, pullback_map(X)), note)


def dimension_of_pullback(X: CircleFourManifold, xi_offset: GroupEl) -> int:
    """Expected dimension c_1(xi)^2 / 4 of a pulled-back Spin^c structure."""
    rep = X.report
    if not rep.h2_pullback_part.contains(xi_offset):
        raise SWError(f"{xi_offset} is not a pulled-back class")
    L = pic_group(X.base).from_group(rep.pullback.lift(xi_offset))
    return square_of_pullback(X, L) // 4


def check_simple_type(sw4: SW4Invariant) -> bool:
    X = sw4.manifold
    return all(dimension_of_pullback(X, g) == 0 for g in sw4.poly)


def wall_crossing_invariant(X: CircleFourManifold) -> bool:
    """b_+ = 1, b_1(Y) = 2 and trivial cup product H^1(X) x H^1(X) -> H^2(X)."""
    Y = X.base
    if X.report.b_plus != 1 or Y.b1 != 2:
        return False
    pres = pic_group(Y)
    proj = pullback_map(X)
    for a in range(Y.b1):
        for b in range(a + 1, Y.b1):
            ab = PicardElem(Y, Y.cup_product(a, b))
            if proj(pres.to_group(ab)) != proj.codomain.zero():
                return False
    return True


@dataclass(frozen=True)
class ValidationResult:
    mode: str  # "strict" or "advisory"
    accepted: bool
    offending: tuple[GroupEl, ...] = ()
    messages: tuple[str, ...] = field(default=())


def theorem_a_validate(X: CircleFourManifold, proposed: Mapping[GroupEl, int]) -> ValidationResult:
    """Check that nonzero invariants sit on pulled-back classes.

    For b_+ != 1 any nonzero value off the pullback summand is rejected.  For
    b_+ = 1 such classes are only flagged: SW^+ must vanish there and the
    other chamber is governed by wall crossing.
    """
    rep = X.report
    offending = tuple(
        sorted(g for g, v in proposed.items() if v and not X.is_pullback(g))
    )
    if rep.b_plus != 1:
        msgs = tuple(f"nonzero invariant on non-pullback class {g.coords}" for g in offending)
        return ValidationResult("strict", not offending, offending, msgs)
    msgs = tuple(
        f"class {g.coords} is not pulled back: SW^+ must vanish; the other chamber follows from wall crossing"
        for g in offending
    )
    return ValidationResult("advisory", True, offending, msgs)


# --------------------------------------------------------------------------
# The worked example: two fibered 6_3 knots, chi = 4 PD(m_1)
# --------------------------------------------------------------------------

DELTA_63 = {-2: 1, -1: -3, 0: 5, 1: -3, 2: 1}


@dataclass(frozen=True)
class Example63:
    sw3: SW3Invariant
    manifold: CircleFourManifold
    sw4: SW4Invariant


def example_63() -> Example63:
    delta = GroupRingElem.laurent(DELTA_63)
    sw3 = whitehead_construction(delta, delta)
    Y = sw3.orbifold
    chi = PicardElem(Y, Y.h2.element((4, 0)))
    X = CircleFourManifold(Y, chi)
    return Example63(sw3, X, sw4_from_sw3(X, sw3))
