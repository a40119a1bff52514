"""Reference computations that avoid the package's algorithms.

Roots come from Weyl orbits of the simple roots, w_0^I from orbit
extremes, dimensions from textbook closed forms, and the printed lists
from a hand-transcribed fixture.
"""
from __future__ import annotations

import json
from collections import deque
from pathlib import Path

FIXTURE = Path(__file__).with_name("fixtures") / "printed_lists.json"


def printed_lists() -> dict:
    return json.loads(FIXTURE.read_text())


# Bourbaki Cartan matrices, a_ij = <alpha_i, alpha_j check>, copied from tables
TEXTBOOK_CARTAN = {
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "C3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    "G2": [[2, -1], [-3, 2]],
    "E6": [
        [2, 0, -1, 0, 0, 0],
        [0, 2, 0, -1, 0, 0],
        [-1, 0, 2, -1, 0, 0],
        [0, -1, -1, 2, -1, 0],
        [0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, -1, 2],
    ],
}


def positive_root_count(family: str, n: int) -> int:
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n),
        "F": 24,
        "G": 6,
    }[family]


def roots_by_orbit(cartan) -> set[tuple[int, ...]]:
    """All roots (simple-root coordinates) as the Weyl orbit of the simple roots."""
    n = len(cartan)
    start = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    seen, todo = set(start), deque(start)
    while todo:
        r = todo.popleft()
        for i in range(n):
            c = sum(r[k] * cartan[k][i] for k in range(n))
            s = tuple(r[k] - (c if k == i else 0) for k in range(n))
            if s not in seen:
                seen.add(s)
                todo.append(s)
    return seen


def _orbit(vec, gens, act):
    seen, todo = {tuple(vec)}, deque([tuple(vec)])
    while todo:
        v = todo.popleft()
        for i in gens:
            w = act(i, v)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def weight_orbit(cartan, w, gens=None):
    n = len(cartan)
    gens = range(n) if gens is None else gens

    def act(i, v):
        return tuple(v[k] - v[i] * cartan[i][k] for k in range(n))

    return _orbit(w, gens, act)


def coweight_orbit(cartan, c, gens):
    n = len(cartan)

    def act(i, v):
        p = sum(cartan[i][k] * v[k] for k in range(n))
        return tuple(v[k] - (p if k == i else 0) for k in range(n))

    return _orbit(c, gens, act)


def w0_levi_on_coweight(cartan, levi0, c):
    """w_0 of the Levi (0-based vertex list) applied to an extreme coweight.

    In a W_I-orbit there is exactly one I-dominant and one I-antidominant
    element and w_0^I swaps them.
    """
    n = len(cartan)
    pair = lambda v, i: sum(cartan[i][k] * v[k] for k in range(n))  # noqa: E731
    orb = coweight_orbit(cartan, c, levi0)
    dom = [v for v in orb if all(pair(v, i) >= 0 for i in levi0)]
    anti = [v for v in orb if all(pair(v, i) <= 0 for i in levi0)]
    assert len(dom) == 1 and len(anti) == 1
    if tuple(c) == dom[0]:
        return anti[0]
    if tuple(c) == anti[0]:
        return dom[0]
    raise ValueError("coweight is not extreme for the Levi")


def w0_levi_on_weight(cartan, levi0, w):
    orb = weight_orbit(cartan, w, levi0)
    dom = [v for v in orb if all(v[i] >= 0 for i in levi0)]
    anti = [v for v in orb if all(v[i] <= 0 for i in levi0)]
    if tuple(w) == dom[0]:
        return anti[0]
    if tuple(w) == anti[0]:
        return dom[0]
    raise ValueError("weight is not extreme for the Levi")


def dominant_in_orbit(cartan, w):
    return next(v for v in weight_orbit(cartan, w) if all(x >= 0 for x in v))


# diagram automorphisms written out by hand, 1-based
def automorphisms(family: str, n: int) -> list[dict[int, int]]:
    ident = {k: k for k in range(1, n + 1)}
    if family == "A":
        return [ident, {k: n + 1 - k for k in ident}]
    if family == "D" and n == 4:
        perms = [(1, 3, 4), (1, 4, 3), (3, 1, 4), (3, 4, 1), (4, 1, 3), (4, 3, 1)]
        return [{1: a, 2: 2, 3: b, 4: c} for a, b, c in perms]
    if family == "D":
        sw = dict(ident)
        sw[n - 1], sw[n] = n, n - 1
        return [ident, sw]
    if family == "E" and n == 6:
        return [ident, {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}]
    return [ident]


def canonical_types(max_rank: int):
    out = []
    for n in range(1, max_rank + 1):
        out.append(("A", n))
    for fam, lo in (("B", 3), ("C", 2), ("D", 4)):
        out += [(fam, n) for n in range(lo, max_rank + 1)]
    out += [("E", n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(("F", 4))
    out.append(("G", 2))
    return out


def _ev(expr: str, m: int, i: int | None) -> int:
    return int(eval(expr, {"__builtins__": {}}, {"m": m, "i": i}))  # fixture text only


def _instances(entry, max_rank, lo_default=1):
    fam = entry["family"]
    lo = entry.get("min_rank", lo_default)
    hi = min(entry.get("max_rank", max_rank), max_rank)
    for m in range(lo, hi + 1):
        if entry["i_range"] is None:
            yield m, None
        else:
            a, b = entry["i_range"]
            for i in range(_ev(str(a), m, None), _ev(str(b), m, None) + 1):
                yield m, i


def expected_special(max_rank: int) -> dict[tuple[str, frozenset], int]:
    """Unordered special pairs (closed under automorphisms) -> case."""
    out = {}
    for entry in printed_lists()["families"]:
        for m, i in _instances(entry, max_rank):
            a, b = _ev(entry["alpha"], m, i), _ev(entry["beta"], m, i)
            for s in automorphisms(entry["family"], m):
                out[(f"{entry['family']}{m}", frozenset((s[a], s[b])))] = entry["case"]
    return out


def expected_intro(max_rank: int) -> set[tuple[str, frozenset]]:
    out = set()
    for entry in printed_lists()["non_homogeneous"]:
        for m, i in _instances(entry, max_rank):
            out.add((f"{entry['family']}{m}", frozenset((_ev(entry["Y"], m, i), _ev(entry["Z"], m, i)))))
    return out


_D3_AS_A3 = {1: 2, 2: 1, 3: 3}


def expected_simple_triples(max_rank: int) -> set[tuple[str, str, int, frozenset]]:
    out = set()
    for entry in printed_lists()["simple_triples"]:
        for m, i in _instances(entry, max_rank):
            fam = entry["family"]
            p = _ev(entry["P"], m, i)
            q = [_ev(x, m, i) for x in entry["Q"]]
            if (fam, m) == ("D", 3):
                fam, p, q = "A", _D3_AS_A3[p], [_D3_AS_A3[x] for x in q]
            for s in automorphisms(fam, m):
                out.add((entry["label"], f"{fam}{m}", s[p], frozenset(s[x] for x in q)))
    return out


def expected_product_triples(max_rank: int) -> set[tuple[str, str, int, frozenset]]:
    out = set()
    for entry in printed_lists()["product_triples"]:
        for m, i in _instances(entry, max_rank):
            p, q = _ev(entry["P"], m, i), _ev(entry["Q"], m, i)
            out.add((entry["label"], f"{entry['family']}{m}xA1", p, frozenset((q, m + 1))))
    return out


def fano_product(a: int, b: int) -> tuple[int, int]:
    """e_a e_b from the cyclic triples (k, k+1, k+3) mod 7: (sign, index), index 0 = 1."""
    if a == b:
        return -1, 0
    for k in range(7):
        t = [(k + d) % 7 + 1 for d in (0, 1, 3)]
        for x, y, z in ((t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])):
            if (a, b) == (x, y):
                return 1, z
            if (a, b) == (y, x):
                return -1, z
    raise AssertionError("unreachable")
