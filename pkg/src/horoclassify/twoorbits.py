"""Two-orbit varieties whose closed orbit has codimension at least two.

A candidate is a triple (G, P, Q): P maximal parabolic with R(P) in H,
Q the parabolic of the closed orbit.  Parabolics are recorded by the
vertices they omit.  For G = G1 x A1 the A1 vertex is the last one and
plays the role of omega_0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .dynkin import (
    Diagram,
    classify_component,
    components,
    diagram,
    diagram_automorphisms,
    full_subdiagram,
)
from .rootsys import LieType, ProductType, SimpleType, Weight, parse_type, root_system, simple_types

__all__ = [
    "TripleGapError",
    "CandidateTriple",
    "FiberCase",
    "CaseVerdict",
    "LABELS",
    "SIMPLE_LABELS",
    "PRODUCT_LABELS",
    "fiber_case_table",
    "fiber_case",
    "corsmooth_filter",
    "simple_instances",
    "product_instances",
    "enumerate_simple_triples",
    "enumerate_product_triples",
    "allowed_local_model",
    "case_verdict",
    "dim_consistency",
    "isotropic_grassmannian_dim",
    "lemma4cas_table",
]

SIMPLE_LABELS = ("a", "b", "c", "d", "e", "f", "g", "h", "i", "j")
PRODUCT_LABELS = ("a'", "b'", "c'", "d'", "e'", "f'")
LABELS = SIMPLE_LABELS + PRODUCT_LABELS


class TripleGapError(RuntimeError):
    """A filter survivor that carries no label."""


@dataclass(frozen=True)
class CandidateTriple:
    g: LieType
    p_omit: int
    q_omit: frozenset

    def __post_init__(self):
        if isinstance(self.g, str):
            object.__setattr__(self, "g", parse_type(self.g))
        object.__setattr__(self, "q_omit", frozenset(self.q_omit))
        n = self.g.rank
        if not 1 <= self.p_omit <= n:
            raise ValueError("P must omit one vertex of G")
        if not 1 <= len(self.q_omit) <= 2 or not all(1 <= v <= n for v in self.q_omit):
            raise ValueError("Q must omit one or two vertices of G")

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.g.rank + 1))

    @property
    def p_levi(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v != self.p_omit)

    @property
    def q_levi(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v not in self.q_omit)

    def _label(self, v: int) -> str:
        if isinstance(self.g, ProductType) and v == self.g.rank:
            return "w0"
        return f"w{v}"

    def describe(self) -> dict:
        is_prod = isinstance(self.g, ProductType)
        p = f"P({self._label(self.p_omit)})" + (" x A1" if is_prod else "")
        q = " cap ".join(f"P({self._label(v)})" for v in sorted(self.q_omit))
        if is_prod:
            q = q.replace(" cap P(w0)", " x P(w0)")
        return {"G": str(self.g), "P": p, "Q": q}

    def key(self):
        return (str(self.g.factors[0].family), self.g.rank, self.p_omit, tuple(sorted(self.q_omit)))


@dataclass(frozen=True)
class FiberCase:
    row: str
    g_prime: str
    h_prime: str
    x_prime: str
    q_prime: str
    local_weight: dict = field(hash=False)       # fiber fundamental index -> coefficient
    local_weight_n4: Optional[tuple] = field(default=None, hash=False)  # one dict per A1 factor

    def fiber_dim(self, n: Optional[int] = None) -> int:
        """Dimension of X' (equal to that of P/H)."""
        if self.row in ("1a", "1b"):
            return n - 1
        if self.row == "2":
            return 4 * n - 4
        return 7


_FIBERS = (
    FiberCase("1a", "SO(n), n>=4", "SO(n-1)", "Q^(n-1)", "P(w1), or B if n=4",
              {1: -1}, ({1: -1}, {1: -1})),
    FiberCase("1b", "SO(n)/C', n>=4", "S(O(1) x O(n-1))/C'", "P^(n-1)", "P(w1), or B if n=4",
              {1: -2}, ({1: -2}, {1: -2})),
    FiberCase("2", "Sp(2n)/C', n>=2", "(Sp(2n-2) x Sp(2))/C'", "Gr(2,2n)", "P(w2)", {2: -1}),
    FiberCase("3a", "Spin(7)", "G2", "Q^7", "P(w3)", {3: -1}),
    FiberCase("3b", "SO(7)", "G2", "P^7", "P(w3)", {3: -2}),
)


def fiber_case_table() -> list[FiberCase]:
    return list(_FIBERS)


def fiber_case(row: str) -> FiberCase:
    for f in _FIBERS:
        if f.row == row:
            return f
    raise KeyError(row)


def _component(d: Diagram, removed, v: int) -> Diagram:
    sub = full_subdiagram(d, [u for u in d.vertices if u not in removed])
    return next(c for c in components(sub) if v in c.vertices)


def _a_end_or_c_first(d: Diagram, removed, v: int) -> bool:
    ct = classify_component(_component(d, removed, v))
    k = ct.index(v)
    if ct.type.family == "A":
        return k in (1, ct.type.rank)
    return ct.type.family == "C" and k == 1


def corsmooth_filter(gamma: LieType, i: int, j: int) -> bool:
    """Diagram conditions on (P(omega_i), P(omega_j)) forced by smoothness."""
    if i == j:
        raise ValueError("i and j must differ")
    d = diagram(gamma) if not isinstance(gamma, Diagram) else gamma
    ct = classify_component(_component(d, {i}, j))
    fam, n, k = ct.type.family, ct.type.rank, ct.index(j)
    # B2 is reported as C2 and D3 as A3; their first vertex is index 2.
    # A D4 Levi keeps the labelling it inherits, triality is not applied.
    first = (
        (fam == "B" and k == 1)
        or (fam == "D" and k == 1)
        or (fam == "C" and n == 2 and k == 2)
        or (fam == "A" and n == 3 and k == 2)
    )
    shape_ok = first or (fam == "C" and k == 2) or (fam == "B" and n == 3 and k == 3)
    return shape_ok and _a_end_or_c_first(d, {j}, i)


# labelled instances -------------------------------------------------------

def _raw_simple(t: SimpleType) -> list[tuple[str, int, tuple, dict]]:
    fam, n = t.family, t.rank
    out = []
    if fam == "A" and n == 4:
        out += [("a", 1, (3,), {}), ("a", 4, (2,), {})]
    if fam == "A" and n == 3:
        # the D3 instance of the third (b) item
        out.append(("b", 2, (1, 3), {"N": 6, "i": 1}))
    if fam == "B" and n >= 3:
        out += [("b", i, (i + 1,), {"N": 2 * n + 1, "i": i}) for i in range(1, n - 1)]
    if fam == "D" and n >= 4:
        out += [("b", i, (i + 1,), {"N": 2 * n, "i": i}) for i in range(1, n - 2)]
        out.append(("b", n - 2, (n - 1, n), {"N": 2 * n, "i": n - 2}))
    if (fam, n) == ("B", 4):
        out += [("c", 4, (2,), {}), ("d", 1, (4,), {})]
    if (fam, n) == ("B", 3):
        out.append(("e", 2, (1, 3), {}))
    if fam == "C" and n >= 3:
        out.append(("f", 1, (3,), {"n": n}))
    if (fam, n) == ("C", 3):
        out.append(("g", 2, (1, 3), {}))
    if fam == "F":
        out += [("h", 1, (3,), {}), ("i", 4, (1,), {}), ("j", 4, (3,), {})]
    return out


def simple_instances(t: SimpleType) -> list[tuple[str, CandidateTriple, dict, bool]]:
    """Labelled triples for a simple type, closed under diagram automorphisms.

    Each entry is ``(label, triple, params, via_automorphism)``.
    """
    raw = _raw_simple(t)
    seen = {CandidateTriple(t, p, q): (lab, prm, False) for lab, p, q, prm in raw}
    for lab, p, q, prm in raw:
        for sigma in diagram_automorphisms(t):
            seen.setdefault(CandidateTriple(t, sigma[p], frozenset(sigma[v] for v in q)), (lab, prm, True))
    out = [(lab, tr, prm, via) for tr, (lab, prm, via) in seen.items()]
    out.sort(key=lambda e: (e[0], e[1].key()))
    return out


def _raw_product(t: SimpleType) -> list[tuple[str, int, int, dict]]:
    fam, n = t.family, t.rank
    out = []
    if fam == "A" and n >= 2:
        out += [("a'", 2, 1, {"n": n}), ("a'", n - 1, n, {"n": n})]
    if fam == "B" and n >= 3:
        out.append(("b'", n - 1, n, {"n": n}))
    if fam == "C" and n >= 2:
        out += [("c'", n - 1, n, {"n": n}), ("d'", 2, 1, {"n": n})]
    if fam == "G":
        out += [("e'", 1, 2, {}), ("f'", 2, 1, {})]
    return out


def product_instances(t: SimpleType) -> list[tuple[str, CandidateTriple, dict, bool]]:
    g = ProductType((t, SimpleType("A", 1)))
    zero = g.rank
    out, seen = [], set()
    for label, p, j, params in _raw_product(t):
        tr = CandidateTriple(g, p, frozenset({j, zero}))
        if tr not in seen:
            seen.add(tr)
            out.append((label, tr, params, False))
    out.sort(key=lambda e: (e[0], e[1].key()))
    return out


def _lookup(instances, tr: CandidateTriple):
    for entry in instances:
        if entry[1] == tr:
            return entry
    raise TripleGapError(f"unlabelled survivor {tr.describe()}")


def _isolated_pairs(d: Diagram, i: int):
    nb = [w for w in d.neighbors(i) if d.neighbors(w) == [i]]
    for a in range(len(nb)):
        for b in range(a + 1, len(nb)):
            yield nb[a], nb[b]


def enumerate_simple_triples(max_rank: int, types=None) -> list[tuple[str, CandidateTriple, dict, bool]]:
    """Survivors for simple G of rank <= max_rank, labelled (a)-(j).

    Maximal Q passes ``corsmooth_filter``.  Q = P(w_j1) cap P(w_j2) is kept
    when both j's are isolated vertices of the Levi of P (the fiber group is
    A1 x A1) and the component of i once they are removed is of type A with
    i at an end or of type C with i first.
    """
    if types is None:
        types = [t for t in simple_types(max_rank) if t.rank >= 2]
    out = []
    for t in types:
        if isinstance(t, str):
            t = parse_type(t)
        if t.rank > max_rank:
            continue
        d = diagram(t)
        inst = simple_instances(t)
        for i in d.vertices:
            for j in d.vertices:
                if i != j and corsmooth_filter(d, i, j):
                    out.append(_lookup(inst, CandidateTriple(t, i, {j})))
            for j1, j2 in _isolated_pairs(d, i):
                if _a_end_or_c_first(d, {j1, j2}, i):
                    out.append(_lookup(inst, CandidateTriple(t, i, {j1, j2})))
    out.sort(key=lambda e: (e[0], e[1].key()))
    return out


def enumerate_product_triples(max_rank: int, types=None) -> list[tuple[str, CandidateTriple, dict, bool]]:
    """Survivors for G = G1 x A1 with rank(G1) <= max_rank, labelled (a')-(f').

    P = P(w_i) x A1 and Q = P(w_j) x P(w_0).  The fiber group must be the
    A1 x A1 of rows 1a/1b with n = 4, so j is an isolated vertex of the Levi
    of P; smoothness then asks the component of i in G1 minus j to be of
    type A with i at an end or of type C with i first.
    """
    if types is None:
        types = simple_types(max_rank)
    out = []
    for t in types:
        if isinstance(t, str):
            t = parse_type(t)
        if t.rank > max_rank:
            continue
        d = diagram(t)
        g = ProductType((t, SimpleType("A", 1)))
        inst = product_instances(t)
        for i in d.vertices:
            for j in d.neighbors(i):
                if d.neighbors(j) == [i] and _a_end_or_c_first(d, {j}, i):
                    out.append(_lookup(inst, CandidateTriple(g, i, {j, g.rank})))
    out.sort(key=lambda e: (e[0], e[1].key()))
    return out


def allowed_local_model(levi: Diagram, w) -> bool:
    """Whether ``w`` restricted to the Levi is w1/wn of an A or w1 of a C factor.

    ``w`` is in the full group's fundamental coordinates; coordinates off the
    Levi only see the center and are ignored.
    """
    nonzero = []
    for comp in components(levi):
        ct = classify_component(comp)
        r = {ct.index(v): w[v - 1] for v in comp.vertices}
        if any(r.values()):
            nonzero.append((ct, r))
    if len(nonzero) != 1:
        return False
    ct, r = nonzero[0]
    fam, n = ct.type.family, ct.type.rank
    ends = (1, n) if fam == "A" else (1,) if fam == "C" else ()
    return any(r == {k: int(k == e) for k in r} for e in ends)


# verdicts -----------------------------------------------------------------

def isotropic_grassmannian_dim(k: int, n: int) -> int:
    """Dimension of the k-planes isotropic for a nondegenerate quadric in C^n."""
    return k * (n - k) - k * (k + 1) // 2


_DEFAULT = {
    "a": ("A4", 1, (3,)), "b": ("B3", 1, (2,)), "c": ("B4", 4, (2,)), "d": ("B4", 1, (4,)),
    "e": ("B3", 2, (1, 3)), "f": ("C3", 1, (3,)), "g": ("C3", 2, (1, 3)), "h": ("F4", 1, (3,)),
    "i": ("F4", 4, (1,)), "j": ("F4", 4, (3,)),
    "a'": ("A2xA1", 2, (1, 3)), "b'": ("B3xA1", 2, (3, 4)), "c'": ("C2xA1", 1, (2, 3)),
    "d'": ("C2xA1", 2, (1, 3)), "e'": ("G2xA1", 1, (2, 3)), "f'": ("G2xA1", 2, (1, 3)),
}


def _params_for(label: str, tr: CandidateTriple) -> dict:
    base = tr.g.factors[0]
    insts = product_instances(base) if isinstance(tr.g, ProductType) else simple_instances(base)
    for lab, t2, prm, _ in insts:
        if lab == label and t2 == tr:
            return prm
    raise ValueError(f"{tr.describe()} is not an instance of ({label})")


def _fiber(label: str, prm: dict, tr: CandidateTriple) -> tuple[str, Optional[int]]:
    if label == "b":
        return "1a", prm["N"] - 2 * prm["i"] if len(tr.q_omit) == 1 else 4
    if label == "f":
        return "2", prm["n"] - 1
    return {
        "a": ("1b", 6), "c": ("1a", 6), "d": ("3a", None), "e": ("1b", 4), "g": ("1b", 4),
        "h": ("2", 3), "i": ("1a", 7), "j": ("3b", None), "c'": ("1a", 4),
    }.get(label, ("1b", 4))


def _target(label: str, prm: dict) -> tuple[str, int]:
    if label == "a":
        return "P(wedge^2 C^5)", comb(5, 2) - 1
    if label == "b":
        k, n = prm["i"] + 1, prm["N"] + 1
        return f"Gr_q({k},{n})", isotropic_grassmannian_dim(k, n)
    if label == "c":
        return "F4/P(w1)", root_system("F4").dim_flag_variety((2, 3, 4))
    if label == "d":
        return "quadric Q^14", 14
    if label == "f":
        n = prm["n"]
        return f"Gr(3,{2 * n})", 3 * (2 * n - 3)
    if label == "i":
        return "E6/P(w2)", root_system("E6").dim_flag_variety((1, 3, 4, 5, 6))
    n = prm["n"]
    if label == "a'":
        return f"P(C^{n + 1} x C^2)", 2 * (n + 1) - 1
    if label == "b'":
        return f"Gr_q^+({n + 2},{2 * n + 4})", (n + 2) * (n + 1) // 2
    if label == "c'":
        return f"Gr_w({n + 1},{2 * n + 2})", (n + 1) * (n + 2) // 2
    if label == "d'":
        return f"quadric Q^{4 * n - 2}", 4 * n - 2
    raise ValueError(f"({label}) has no homogeneous target")


# local weights on L(Q), in the full group's fundamental coordinates (last = w0)
_LOCAL = {
    "h": ("X1", {1: 1, 3: -1}),
    "f'": ("X2", {2: 1, 1: -2, 3: -2}),
    "e": (None, {2: 2, 1: -2, 3: -2}),
    "g": (None, {2: 3, 1: -2, 3: -2}),
    "j": (None, {4: 3, 3: -2}),
    "e'": (None, {1: 3, 2: -2, 3: -2}),
}


@dataclass(frozen=True)
class CaseVerdict:
    label: str
    triple: CandidateTriple
    outcome: str                        # homogeneous | nonhomogeneous | nonsmooth
    target: Optional[str]
    target_dim: Optional[int]
    dim_GH: int
    fiber_row: str
    fiber_n: Optional[int]
    local_weight: Optional[Weight] = None
    local_model_ok: Optional[bool] = None

    def to_json(self) -> dict:
        d = {"label": self.label, **self.triple.describe(), "outcome": self.outcome}
        d["witness_or_target"] = (
            self.target if self.local_weight is None else list(self.local_weight)
        )
        d["dims"] = {"G/H": self.dim_GH, "target": self.target_dim}
        d["fiber"] = {"row": self.fiber_row, "n": self.fiber_n}
        d["local_model_ok"] = self.local_model_ok
        return d


def case_verdict(label: str, triple: Optional[CandidateTriple] = None) -> CaseVerdict:
    """Outcome for a labelled triple (the smallest instance by default)."""
    if label not in LABELS:
        raise ValueError(f"unknown label {label!r}")
    if triple is None:
        g, p, q = _DEFAULT[label]
        triple = CandidateTriple(g, p, frozenset(q))
    prm = _params_for(label, triple)
    row, n = _fiber(label, prm, triple)
    rs = root_system(triple.g)
    dim_gh = rs.dim_flag_variety(triple.p_levi) + fiber_case(row).fiber_dim(n)
    if label in _LOCAL:
        name, coeffs = _LOCAL[label]
        w = rs.weight(coeffs)
        levi = full_subdiagram(diagram(triple.g), triple.q_levi)
        ok = allowed_local_model(levi, w)
        outcome = "nonhomogeneous" if name else "nonsmooth"
        return CaseVerdict(label, triple, outcome, name, None, dim_gh, row, n, w, ok)
    target, tdim = _target(label, prm)
    return CaseVerdict(label, triple, "homogeneous", target, tdim, dim_gh, row, n)


def dim_consistency(label: str, triple: Optional[CandidateTriple] = None) -> bool:
    """dim G/P + dim P/H equals the dimension of the homogeneous target."""
    v = case_verdict(label, triple)
    if v.outcome != "homogeneous":
        raise ValueError(f"({label}) has no homogeneous target")
    return v.dim_GH == v.target_dim


# the four cases with a Levi subgroup of P inside H ------------------------

def _g2_short_root_stabilizer_codim() -> int:
    # H fixes the line of weight alpha in the adjoint module: its Lie algebra
    # is t plus the root spaces g_beta with alpha + beta neither a root nor 0
    rs = root_system("G2")
    pos = rs.positive_roots()
    roots = set(pos) | {tuple(-x for x in r) for r in pos}
    alpha = (1, 0)
    moving = sum(1 for b in roots if tuple(a + c for a, c in zip(alpha, b)) in roots)
    return moving + 1  # the extra direction is beta = -alpha


def lemma4cas_table(m: int = 3) -> list[dict]:
    """The four rows with their outcomes and two independent dimension counts."""
    if m < 2:
        raise ValueError("m must be at least 2")
    a = root_system(SimpleType("A", m))
    d = root_system(SimpleType("D", m + 1))
    c_flag = root_system(SimpleType("A", 2 * m - 1))
    g2 = root_system("G2")
    rows = [
        {
            "row": "i", "G": f"PSL({m + 1})", "P": "P(w1)", "H": f"GL({m})",
            "outcome": "excluded", "target": f"P^{m} x (P^{m})*",
            "dim_target": 2 * m,
            "dim_count": a.dim_flag_variety(range(2, m + 1)) * 2,
        },
        {
            "row": "ii", "G": f"SO({2 * m + 1})", "P": f"P(w{m})", "H": "Stab(E, v)",
            "outcome": "X~ homogeneous", "target": f"SO({2 * m + 2})/(P(w1) cap P(w{m + 1}))",
            "dim_target": d.dim_flag_variety(range(2, m + 1)),
            "dim_count": m * (m + 1) // 2 + m,
        },
        {
            "row": "iii", "G": f"Sp({2 * m})/{{+-1}}", "P": "P(w1)", "H": "Stab(l, plane)",
            "outcome": "excluded", "target": f"SL({2 * m})/(P(w1) cap P(w2))",
            "dim_target": c_flag.dim_flag_variety(range(3, 2 * m)),
            "dim_count": m * (2 * m + 1) - (2 + (m - 1) * (2 * m - 1)),
        },
        {
            "row": "iv", "G": "G2", "P": "Stab(l), l in V^7", "H": "Stab(l'), l' in V^14",
            "outcome": "X = Gr_q(2,7), two G2-orbits", "target": "Gr_q(2,7)",
            "dim_target": isotropic_grassmannian_dim(2, 7),
            "dim_count": _g2_short_root_stabilizer_codim(),
            "dim_G/P": g2.dim_flag_variety((2,)),
        },
    ]
    for r in rows:
        r["dims_agree"] = r["dim_target"] == r["dim_count"]
    return rows
