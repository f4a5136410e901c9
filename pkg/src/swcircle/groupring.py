"""Sparse integer group rings Z[G] over finitely generated abelian groups.

An element is a finitely supported function G -> Z, written multiplicatively
as a Laurent polynomial in formal exponentials of group elements.  Keys are
always canonical group elements and zero coefficients are never stored.
"""

from __future__ import annotations

from collections import defaultdict
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .abelian import FgAbGroup, GroupEl, GroupHom

Z = FgAbGroup(1)


class GroupMismatchError(ValueError):
    pass


class GroupRingElem:
    __slots__ = ("group", "_terms")

    def __init__(self, group: FgAbGroup, terms: Mapping[GroupEl, int] | Iterable[tuple[GroupEl, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[GroupEl, int] = defaultdict(int)
        for g, c in items:
            if not group.contains(g):
                raise ValueError(f"{g} is not a canonical element of {group}")
            acc[g] += int(c)
        self.group = group
        self._terms = {g: c for g, c in acc.items() if c}

    @classmethod
    def monomial(cls, group: FgAbGroup, g: GroupEl, coef: int = 1) -> GroupRingElem:
        return cls(group, [(g, coef)])

    @classmethod
    def one(cls, group: FgAbGroup) -> GroupRingElem:
        return cls.monomial(group, group.zero())

    @classmethod
    def zero(cls, group: FgAbGroup) -> GroupRingElem:
        return cls(group)

    @classmethod
    def laurent(cls, coeffs: Mapping[int, int]) -> GroupRingElem:
        """Univariate Laurent polynomial over Z from ``{exponent: coefficient}``."""
        return cls(Z, [(Z.element((k,)), c) for k, c in coeffs.items()])

    @property
    def terms(self) -> Mapping[GroupEl, int]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[GroupEl, int]]:
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[GroupEl]:
        return iter(sorted(self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.group == other.group and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.group, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{g.coords}: {c}" for g, c in self.items())
        return f"GroupRingElem({self.group}, {{{body}}})"

    def _check(self, other: GroupRingElem) -> None:
        if self.group != other.group:
            raise GroupMismatchError(f"{self.group} != {other.group}")

    def __add__(self, other: GroupRingElem) -> GroupRingElem:
        self._check(other)
        return GroupRingElem(self.group, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> GroupRingElem:
        return GroupRingElem(self.group, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other: GroupRingElem) -> GroupRingElem:
        return self + (-other)

    def __mul__(self, other: GroupRingElem | int) -> GroupRingElem:
        if isinstance(other, int):
            return GroupRingElem(self.group, {g: other * c for g, c in self._terms.items()})
        self._check(other)
        G = self.group
        acc: dict[GroupEl, int] = defaultdict(int)
        for g1, c1 in self._terms.items():
            for g2, c2 in other._terms.items():
                acc[G.add(g1, g2)] += c1 * c2
        return GroupRingElem(G, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GroupRingElem:
        if n < 0:
            raise ValueError("negative powers are not defined in general")
        out = GroupRingElem.one(self.group)
        for _ in range(n):
            out = out * self
        return out

    def total(self) -> int:
        """Sum of all coefficients (the augmentation)."""
        return sum(self._terms.values())

    def conjugate(self) -> GroupRingElem:
        """Image under g -> -g."""
        G = self.group
        return GroupRingElem(G, {G.neg(g): c for g, c in self._terms.items()})


def add(p: GroupRingElem, q: GroupRingElem) -> GroupRingElem:
    return p + q


def mul(p: GroupRingElem, q: GroupRingElem) -> GroupRingElem:
    return p * q


def pushforward(p: GroupRingElem, hom: GroupHom) -> GroupRingElem:
    """Induced ring map Z[G] -> Z[H] of a homomorphism G -> H."""
    if p.group != hom.domain:
        raise GroupMismatchError(f"polynomial lives over {p.group}, map starts at {hom.domain}")
    return GroupRingElem(hom.codomain, [(hom(g), c) for g, c in p.terms.items()])


def fold(p: GroupRingElem, proj: GroupHom) -> GroupRingElem:
    """Sum coefficients over the fibres of a quotient map.

    The coefficient of ``q`` in the result is the sum of ``p(g)`` over all
    ``g`` with ``proj(g) == q``.
    """
    return pushforward(p, proj)


def is_symmetric(p: GroupRingElem) -> bool:
    return p == p.conjugate()


def coefficient(p: GroupRingElem, g: GroupEl) -> int:
    return p.terms.get(g, 0)


def format_poly(p: GroupRingElem, names: Iterable[str] = ("x", "y", "z", "w")) -> str:
    """Human-readable rendering; coordinate ``k`` of an exponent becomes ``names[k]``."""
    names = list(names)
    out = []
    for g, c in p.items():
        mono = "".join(
            (names[k] if e == 1 else f"{names[k]}^{e}") for k, e in enumerate(g.coords) if e
        )
        if not mono:
            term = str(abs(c))
        elif abs(c) == 1:
            term = mono
        else:
            term = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        out.append((sign, term))
    if not out:
        return "0"
    head = ("-" if out[0][0] == "-" else "") + out[0][1]
    return head + "".join(f" {s} {t}" for s, t in out[1:])
