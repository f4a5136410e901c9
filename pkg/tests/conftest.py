from __future__ import annotations

import math
import random
import re
from collections import defaultdict
from itertools import permutations

import pytest

from swcircle.abelian import FgAbGroup, GroupEl
from swcircle.groupring import GroupRingElem
from swcircle.orbifold import Locus, Orbifold3, PicardElem

# --------------------------------------------------------------------------
# acceptance bookkeeping: one PASS/FAIL line per criterion in the summary
# --------------------------------------------------------------------------

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        prev = _ACCEPTANCE.get(number, (title, "PASS"))[1]
        status = "PASS" if report.passed and prev == "PASS" else "FAIL"
        _ACCEPTANCE[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")


# --------------------------------------------------------------------------
# oracles
# --------------------------------------------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d*)((?:[a-z](?:\^\{?-?\d+\}?)?)*)")
_VAR = re.compile(r"([a-z])(?:\^\{?(-?\d+)\}?)?")


def parse_laurent(text: str, variables: str = "xy") -> dict[tuple[int, ...], int]:
    """Parse a TeX-ish Laurent polynomial, optionally a product of (...) factors.

    Returns {exponent tuple: coefficient}; independent of the library code.
    """
    factors = re.findall(r"\(([^()]*)\)", text) or [text]
    result: dict[tuple[int, ...], int] = {(0,) * len(variables): 1}
    for factor in factors:
        poly: dict[tuple[int, ...], int] = defaultdict(int)
        s = factor.replace(" ", "")
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {s[pos:]!r}")
            sign, num, monos = m.groups()
            coef = int(num) if num else 1
            if sign == "-":
                coef = -coef
            exp = [0] * len(variables)
            for var, e in _VAR.findall(monos):
                exp[variables.index(var)] += int(e) if e else 1
            poly[tuple(exp)] += coef
            pos = m.end()
        result = naive_mul(result, poly)
    return {k: v for k, v in result.items() if v}


def naive_mul(p: dict, q: dict) -> dict:
    out: dict = defaultdict(int)
    for a, c in p.items():
        for b, d in q.items():
            out[tuple(x + y for x, y in zip(a, b))] += c * d
    return {k: v for k, v in out.items() if v}


def free_poly(group: FgAbGroup, terms: dict[tuple[int, ...], int]) -> GroupRingElem:
    return GroupRingElem(group, [(group.from_coords(list(k)), c) for k, c in terms.items()])


# --------------------------------------------------------------------------
# random data
# --------------------------------------------------------------------------


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> list[list[int]]:
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        q = rng.choice([-2, -1, 1, 2])
        M[i] = [a + q * b for a, b in zip(M[i], M[j])]
    if n and rng.random() < 0.5:
        M[0] = [-a for a in M[0]]
    return M


def _sign(p) -> int:
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def random_cup11(rng: random.Random, n: int) -> list:
    T = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                v = rng.randint(-2, 2)
                for p in permutations(range(3)):
                    idx = (a, b, c)
                    T[idx[p[0]]][idx[p[1]]][idx[p[2]]] = _sign(p) * v
    return T


def random_torsion_chain(rng: random.Random) -> tuple[int, ...]:
    k = rng.choice([0, 0, 1, 2])
    chain = []
    d = 1
    for _ in range(k):
        d *= rng.choice([2, 3, 2])
        chain.append(d)
    return tuple(chain)


def random_element(rng: random.Random, G: FgAbGroup, bound: int = 3, free: bool = True) -> GroupEl:
    fr = [rng.randint(-bound, bound) if free else 0 for _ in range(G.free_rank)]
    return G.element(fr, [rng.randrange(d) for d in G.torsion])


def random_orbifold(rng: random.Random, torsion_kappas: bool = False, max_b1: int = 4) -> Orbifold3:
    b1 = rng.randint(0, max_b1)
    h2 = FgAbGroup(b1, random_torsion_chain(rng))
    loci = tuple(
        Locus(rng.randint(2, 6), random_element(rng, h2, free=not torsion_kappas))
        for _ in range(rng.randint(0, 3))
    )
    return Orbifold3(h2=h2, b1=b1, loci=loci, pairing=random_unimodular(rng, b1), cup11=random_cup11(rng, b1))


def random_picard(rng: random.Random, Y: Orbifold3, smooth: bool = False, free: bool = True) -> PicardElem:
    betas = []
    for a in Y.alphas:
        if smooth:
            betas.append(rng.choice([b for b in range(1, a) if math.gcd(a, b) == 1]))
        else:
            betas.append(rng.randrange(a))
    return PicardElem(Y, random_element(rng, Y.h2, free=free), tuple(betas))


def random_circle_bundle_data(rng: random.Random, torsion_branch: bool):
    """(Y, chi) with smooth total space; chi torsion when ``torsion_branch``."""
    Y = random_orbifold(rng, torsion_kappas=torsion_branch)
    return Y, random_picard(rng, Y, smooth=True, free=not torsion_branch)


def random_poly(rng: random.Random, G: FgAbGroup, nterms: int = 4, bound: int = 3) -> GroupRingElem:
    return GroupRingElem(
        G, [(random_element(rng, G, bound), rng.randint(-5, 5)) for _ in range(rng.randint(0, nterms))]
    )


def random_seifert_matrix(rng: random.Random, genus: int) -> list[list[int]]:
    """P^T (S + J_upper) P: V - V^T = P^T J P with det 1."""
    n = 2 * genus
    base = [[0] * n for _ in range(n)]
    for k in range(genus):
        base[2 * k][2 * k + 1] = 1
    for i in range(n):
        for j in range(i, n):
            v = rng.randint(-2, 2)
            base[i][j] += v
            if i != j:
                base[j][i] += v
    P = random_unimodular(rng, n, steps=4)
    PT = [list(r) for r in zip(*P)]
    mm = lambda A, B: [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return mm(mm(PT, base), P)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261016)


# 6_3 data
SW3_DISPLAYED = "(x^{-4} -3x^{-2} +5 -3x^2 + x^4)(y^{-4} -3y^{-2} +5 -3y^2 + y^4)"
SW4_DISPLAYED = "7y^{-4}-6x^2y^{-4}-21y^{-2}+18x^2y^{-2}+35-30x^2-21y^2+18x^2y^2+7y^4-6x^2y^4"
# a genus-2 Seifert matrix with the Alexander polynomial of 6_3 (found by search)
SEIFERT_63 = [[-1, 0, -1, -1], [-1, -1, 0, 0], [-1, 0, 0, 0], [-1, 0, -1, 0]]
TREFOIL = [[-1, 1], [0, -1]]
FIGURE_EIGHT = [[1, 1], [0, -1]]
