"""Exact root-system arithmetic for the simple types A-G and their products.

Conventions
-----------
* Vertices are numbered ``1..rank`` following Bourbaki.  For a product type
  the factors are concatenated: in ``G2xA1`` vertex 3 is the ``A1`` vertex.
* ``cartan_matrix(t)[i][j] = <alpha_i, alpha_j^vee>`` (Bourbaki).  Hence the
  simple root ``alpha_i`` has fundamental-weight coordinates equal to row ``i``.
* Weights are integer tuples in the fundamental-weight basis, roots are
  integer tuples in the simple-root basis, coweights are integer tuples in the
  simple-coroot basis.  ``<omega_i, alpha_j^vee>`` is the Kronecker delta, so
  the pairing of a weight and a coweight is the plain dot product.
* A Weyl word is a tuple of vertex indices, applied left to right.

Everything here is exact integer arithmetic.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "InvalidTypeError",
    "SimpleType",
    "ProductType",
    "LieType",
    "RootSystem",
    "parse_type",
    "root_system",
    "cartan_matrix",
    "positive_roots",
    "reflect",
    "longest_element_word",
    "act_on_weight",
    "act_on_coweight",
    "pairing",
    "is_dominant",
    "is_antidominant",
    "dominant_representative",
    "dim_flag_variety",
    "fundamental_weight",
    "simple_coroot",
    "simple_types",
]

Weight = tuple[int, ...]
RootVec = tuple[int, ...]
CoweightVec = tuple[int, ...]
WeylWord = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class InvalidTypeError(ValueError):
    """Raised for a family/rank combination that is not a simple Dynkin type."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam in _MIN_RANK:
            ok = isinstance(n, int) and n >= _MIN_RANK[fam]
        elif fam == "E":
            ok = n in (6, 7, 8)
        elif fam == "F":
            ok = n == 4
        elif fam == "G":
            ok = n == 2
        else:
            ok = False
        if not ok:
            raise InvalidTypeError(f"no simple type {fam}{n}")

    @property
    def factors(self) -> tuple["SimpleType", ...]:
        return (self,)

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class ProductType:
    factors: tuple[SimpleType, ...]

    def __post_init__(self):
        if len(self.factors) < 2:
            raise InvalidTypeError("a product type needs at least two factors")

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def __str__(self):
        return "x".join(str(f) for f in self.factors)


LieType = Union[SimpleType, ProductType]

_TYPE_RE = re.compile(r"([A-G])(\d+)")


def parse_type(text: str) -> LieType:
    """Parse ``"B3"`` or ``"G2xA1"`` (also accepts ``"G2*A1"``, ``"B_3"``)."""
    parts = [p.strip().replace("_", "") for p in re.split(r"[x*×]", text)]
    factors = []
    for p in parts:
        m = _TYPE_RE.fullmatch(p)
        if not m:
            raise InvalidTypeError(f"cannot parse type {text!r}")
        factors.append(SimpleType(m.group(1), int(m.group(2))))
    return factors[0] if len(factors) == 1 else ProductType(tuple(factors))


def _simple_cartan(t: SimpleType) -> list[list[int]]:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        # 1-based; aij = <alpha_i, alpha_j^vee>
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    fam = t.family
    if fam in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if fam == "B":
            link(n - 1, n, -2, -1)  # alpha_n short
        elif fam == "C":
            link(n - 1, n, -1, -2)  # alpha_n long
    elif fam == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif fam == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif fam == "F":
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    elif fam == "G":
        link(1, 2, -1, -3)  # alpha_1 short
    return a


class RootSystem:
    """Root datum of a (product of) simple type(s), with cached root data."""

    def __init__(self, t: LieType):
        self.type = t
        n = t.rank
        self.rank = n
        a = [[0] * n for _ in range(n)]
        self.factor_of: list[tuple[int, int]] = []  # flat vertex -> (factor, local)
        offset = 0
        for fi, f in enumerate(t.factors):
            block = _simple_cartan(f)
            for i in range(f.rank):
                self.factor_of.append((fi, i + 1))
                for j in range(f.rank):
                    a[offset + i][offset + j] = block[i][j]
            offset += f.rank
        self.cartan: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in a)
        self._positive: tuple[RootVec, ...] | None = None

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def _check_vertex(self, i: int):
        if not (isinstance(i, int) and 1 <= i <= self.rank):
            raise IndexError(f"vertex {i} out of range for {self.type}")

    def _check_len(self, v: Sequence[int]):
        if len(v) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(v)}")

    # roots -------------------------------------------------------------
    def simple_root_weight(self, i: int) -> Weight:
        self._check_vertex(i)
        return self.cartan[i - 1]

    def root_to_weight(self, r: RootVec) -> Weight:
        self._check_len(r)
        n = self.rank
        return tuple(sum(r[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def root_coroot_pairing(self, r: RootVec, j: int) -> int:
        """<r, alpha_j^vee> for r in simple-root coordinates."""
        return sum(r[i] * self.cartan[i][j - 1] for i in range(self.rank))

    def positive_roots(self) -> tuple[RootVec, ...]:
        """Positive roots by root-string closure, sorted by height then lexicographically."""
        if self._positive is None:
            n = self.rank
            simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
            found = set(simple)
            layer = list(simple)
            while layer:
                nxt = []
                for r in layer:
                    for i in range(n):
                        # p = largest k with r - k alpha_i a root
                        p, s = 0, list(r)
                        while True:
                            s[i] -= 1
                            if tuple(s) in found:
                                p += 1
                            else:
                                break
                        q = p - self.root_coroot_pairing(r, i + 1)
                        if q > 0:
                            up = list(r)
                            up[i] += 1
                            up = tuple(up)
                            if up not in found:
                                found.add(up)
                                nxt.append(up)
                layer = nxt
            self._positive = tuple(sorted(found, key=lambda r: (sum(r), r)))
        return self._positive

    def positive_roots_supported_on(self, subset: Iterable[int]) -> tuple[RootVec, ...]:
        keep = set(subset)
        return tuple(
            r for r in self.positive_roots()
            if all(c == 0 or (i + 1) in keep for i, c in enumerate(r))
        )

    def dim_flag_variety(self, levi: Iterable[int]) -> int:
        """dim G/P_J = #(R+ minus roots supported on the Levi vertices J)."""
        levi = set(levi)
        for i in levi:
            self._check_vertex(i)
        return len(self.positive_roots()) - len(self.positive_roots_supported_on(levi))

    # Weyl group --------------------------------------------------------
    def reflect(self, i: int, w: Sequence[int]) -> Weight:
        """s_i(w) = w - <w, alpha_i^vee> alpha_i."""
        self._check_vertex(i)
        self._check_len(w)
        c = w[i - 1]
        if c == 0:
            return tuple(w)
        row = self.cartan[i - 1]
        return tuple(wk - c * rk for wk, rk in zip(w, row))

    def reflect_coweight(self, i: int, c: Sequence[int]) -> CoweightVec:
        """s_i(c) = c - <alpha_i, c> alpha_i^vee."""
        self._check_vertex(i)
        self._check_len(c)
        row = self.cartan[i - 1]
        k = sum(ck * rk for ck, rk in zip(c, row))
        out = list(c)
        out[i - 1] -= k
        return tuple(out)

    def act_on_weight(self, word: Iterable[int], w: Sequence[int]) -> Weight:
        w = tuple(w)
        for i in word:
            w = self.reflect(i, w)
        return w

    def act_on_coweight(self, word: Iterable[int], c: Sequence[int]) -> CoweightVec:
        c = tuple(c)
        for i in word:
            c = self.reflect_coweight(i, c)
        return c

    def act_on_root(self, word: Iterable[int], r: Sequence[int]) -> RootVec:
        r = tuple(r)
        for i in word:
            k = self.root_coroot_pairing(r, i)
            r = tuple(x - k * (j == i - 1) for j, x in enumerate(r))
        return r

    def longest_element_word(self, subset: Iterable[int]) -> WeylWord:
        """Reduced word for the longest element of the parabolic subgroup W_I.

        Starts from rho_I (sum of the fundamental weights indexed by I) and
        reflects in the smallest i in I with a positive coordinate until the
        weight is I-antidominant.
        """
        subset = sorted(set(subset))
        for i in subset:
            self._check_vertex(i)
        w = tuple(int((k + 1) in subset) for k in range(self.rank))
        word = []
        while True:
            i = next((i for i in subset if w[i - 1] > 0), None)
            if i is None:
                return tuple(word)
            w = self.reflect(i, w)
            word.append(i)

    def dominant_representative(self, w: Sequence[int]) -> tuple[Weight, WeylWord]:
        w = tuple(w)
        self._check_len(w)
        word = []
        while True:
            i = next((k + 1 for k, x in enumerate(w) if x < 0), None)
            if i is None:
                return w, tuple(word)
            w = self.reflect(i, w)
            word.append(i)

    # basis vectors -----------------------------------------------------
    def fundamental_weight(self, i: int) -> Weight:
        self._check_vertex(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def simple_coroot(self, i: int) -> CoweightVec:
        self._check_vertex(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def weight(self, coeffs: dict[int, int]) -> Weight:
        """Build sum(c * omega_i) from ``{i: c}``."""
        out = [0] * self.rank
        for i, c in coeffs.items():
            self._check_vertex(i)
            out[i - 1] += c
        return tuple(out)

    def __repr__(self):
        return f"RootSystem({self.type})"


@lru_cache(maxsize=None)
def root_system(t: LieType | str) -> RootSystem:
    if isinstance(t, str):
        t = parse_type(t)
    return RootSystem(t)


def _rs(t) -> RootSystem:
    return t if isinstance(t, RootSystem) else root_system(t)


def cartan_matrix(t: LieType | str) -> tuple[tuple[int, ...], ...]:
    return _rs(t).cartan


def positive_roots(t: LieType | str) -> tuple[RootVec, ...]:
    return _rs(t).positive_roots()


def reflect(t, i: int, w: Sequence[int]) -> Weight:
    return _rs(t).reflect(i, w)


def longest_element_word(t, subset: Iterable[int]) -> WeylWord:
    return _rs(t).longest_element_word(subset)


def act_on_weight(t, word: Iterable[int], w: Sequence[int]) -> Weight:
    return _rs(t).act_on_weight(word, w)


def act_on_coweight(t, word: Iterable[int], c: Sequence[int]) -> CoweightVec:
    return _rs(t).act_on_coweight(word, c)


def dominant_representative(t, w: Sequence[int]) -> tuple[Weight, WeylWord]:
    return _rs(t).dominant_representative(w)


def dim_flag_variety(t, levi: Iterable[int]) -> int:
    return _rs(t).dim_flag_variety(levi)


def fundamental_weight(t, i: int) -> Weight:
    return _rs(t).fundamental_weight(i)


def simple_coroot(t, i: int) -> CoweightVec:
    return _rs(t).simple_coroot(i)


def simple_types(max_rank: int, canonical: bool = True) -> list[SimpleType]:
    """Simple types of rank <= max_rank, ordered by family then rank.

    With ``canonical`` the isomorphic duplicates B2 (= C2) and D3 (= A3) are
    left out.
    """
    out = []
    for fam in "ABCDEFG":
        for n in range(1, max_rank + 1):
            if canonical and (fam, n) in (("B", 2), ("D", 3)):
                continue
            try:
                out.append(SimpleType(fam, n))
            except InvalidTypeError:
                pass
    return out


def pairing(w: Sequence[int], c: Sequence[int]) -> int:
    if len(w) != len(c):
        raise ValueError(f"dimension mismatch: {len(w)} vs {len(c)}")
    return sum(a * b for a, b in zip(w, c))


def is_dominant(w: Sequence[int]) -> bool:
    return all(x >= 0 for x in w)


def is_antidominant(w: Sequence[int]) -> bool:
    return all(x <= 0 for x in w)
