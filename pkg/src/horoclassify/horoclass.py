"""Special rank-one horospherical pairs and their two-orbit completions.

A pair ``(Gamma, alpha, beta)`` stands for the horospherical space G/H with
G simple of type Gamma, P = P(omega_alpha) cap P(omega_beta) and lattice
generated by ``omega_alpha - omega_beta``.  Its smooth Picard-one
completion X1 has two closed orbits Y = G/P(omega_alpha) and
Z = G/P(omega_beta).

Borel-Weil convention used throughout: on G/P(omega_s), the normal fiber
coming from the other color has lowest weight
``mu = w_0^{S minus s}(omega_o - omega_s)``.  Sections are nonzero iff ``mu``
is antidominant, and then they form the simple module whose highest weight
is the dominant representative of ``-mu``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .dynkin import classify_component, components, diagram, diagram_automorphisms, full_subdiagram
from .rootsys import (
    SimpleType,
    Weight,
    is_antidominant,
    pairing,
    parse_type,
    root_system,
    simple_types,
)

__all__ = [
    "ClassificationGapError",
    "HoroPair",
    "ClassificationVerdict",
    "projective_space_case",
    "is_special_pair",
    "family_instances",
    "case_label",
    "enumerate_special",
    "aut_stability_pairing",
    "normal_sections_module",
    "homogeneity_verdict",
    "dim_X1",
    "dim_homogeneous_model",
    "HOMOGENEOUS_CASES",
    "NON_HOMOGENEOUS_CASES",
]

HOMOGENEOUS_CASES = frozenset({1, 2, 6})
NON_HOMOGENEOUS_CASES = frozenset({3, 4, 5, 7, 8})


class ClassificationGapError(RuntimeError):
    """A special pair matched none of the eight families."""


@dataclass(frozen=True, order=True)
class HoroPair:
    gamma: SimpleType
    alpha: int
    beta: int

    def __post_init__(self):
        if isinstance(self.gamma, str):
            object.__setattr__(self, "gamma", parse_type(self.gamma))
        if not isinstance(self.gamma, SimpleType):
            raise ValueError("gamma must be a simple type")
        n = self.gamma.rank
        for v in (self.alpha, self.beta):
            if not (isinstance(v, int) and 1 <= v <= n):
                raise ValueError(f"vertex {v} out of range for {self.gamma}")
        if self.alpha == self.beta:
            raise ValueError("alpha and beta must differ")

    def swapped(self) -> "HoroPair":
        return HoroPair(self.gamma, self.beta, self.alpha)

    def __str__(self):
        return f"({self.gamma}, a{self.alpha}, a{self.beta})"


@dataclass(frozen=True)
class ClassificationVerdict:
    pair: HoroPair
    case_label: int
    special: bool
    homogeneous: bool
    pairing_value: Optional[int]
    sections_Y: Optional[Weight]
    sections_Z: Optional[Weight]
    dim_X1: int
    aut_descriptor: Optional[str] = None
    aut: Optional[dict] = field(default=None, compare=False)
    model: Optional[str] = None
    via_automorphism: bool = False

    def __post_init__(self):
        if self.homogeneous != (self.case_label in HOMOGENEOUS_CASES):
            raise ValueError(f"homogeneity inconsistent with case {self.case_label}")
        if (self.pairing_value is not None) != (self.case_label in NON_HOMOGENEOUS_CASES):
            raise ValueError(f"pairing presence inconsistent with case {self.case_label}")

    def to_json(self) -> dict:
        opt = lambda w: None if w is None else list(w)  # noqa: E731
        return {
            "gamma": str(self.pair.gamma),
            "alpha": self.pair.alpha,
            "beta": self.pair.beta,
            "case": self.case_label,
            "special": self.special,
            "homogeneous": self.homogeneous,
            "pairing": self.pairing_value,
            "sections_Y": opt(self.sections_Y),
            "sections_Z": opt(self.sections_Z),
            "dim": self.dim_X1,
            "aut": self.aut_descriptor,
            "model": self.model,
            "via_automorphism": self.via_automorphism,
        }


def projective_space_case(n: int, attached_count: int, two_colors_same_component: bool) -> Optional[str]:
    """Which of the three projective-space situations applies, if any."""
    if attached_count <= n:
        return "i"
    if n >= 2:
        return "ii"
    if n == 1 and not two_colors_same_component:
        return "iii"
    return None


def _end_ok(gamma: SimpleType, removed: int, v: int) -> bool:
    # component of v once `removed` is deleted: A with v at an end, or C with v = omega_1
    d = diagram(gamma)
    sub = full_subdiagram(d, [u for u in d.vertices if u != removed])
    comp = next(c for c in components(sub) if v in c.vertices)
    ct = classify_component(comp)
    k = ct.index(v)
    if ct.type.family == "A":
        return k in (1, ct.type.rank)
    if ct.type.family == "C":
        return k == 1
    return False


def is_special_pair(p: HoroPair) -> bool:
    return _end_ok(p.gamma, p.alpha, p.beta) and _end_ok(p.gamma, p.beta, p.alpha)


def family_instances(gamma: SimpleType) -> list[tuple[int, int, int]]:
    """``(case, alpha, beta)`` for the eight families instantiated at ``gamma``."""
    fam, m = gamma.family, gamma.rank
    out = []
    if fam == "A":
        if m >= 2:
            out.append((1, 1, m))
        if m >= 3:
            out += [(2, i, i + 1) for i in range(1, m)]
    elif fam == "B":
        if m >= 3:
            out.append((3, m - 1, m))
        if m == 3:
            out.append((4, 1, 3))
    elif fam == "C":
        out += [(5, i + 1, i) for i in range(1, m)]
    elif fam == "D" and m >= 4:
        out.append((6, m - 1, m))
    elif fam == "F":
        out.append((7, 2, 3))
    elif fam == "G":
        out.append((8, 2, 1))
    return out


def case_label(p: HoroPair) -> tuple[int, HoroPair, bool]:
    """Match ``p`` (in either orientation) against the families.

    Returns ``(case, oriented pair, via_automorphism)``; the oriented pair
    lists alpha and beta as the family does.  A match that needs a nontrivial
    diagram automorphism (the D4 triality images) is flagged.
    """
    want = {p.alpha, p.beta}
    hits = []
    for case, a, b in family_instances(p.gamma):
        for k, sigma in enumerate(diagram_automorphisms(p.gamma)):
            if {sigma[a], sigma[b]} == want:
                hits.append((k != 0 and {a, b} != want, case, sigma[a], sigma[b]))
    if not hits:
        raise ClassificationGapError(f"{p} matches no family")
    via, case, a, b = min(hits)
    return case, HoroPair(p.gamma, a, b), via


def enumerate_special(max_rank: int, types=None) -> list[tuple[HoroPair, int]]:
    """Special pairs over canonical simple types of rank <= ``max_rank``.

    One entry per unordered pair, oriented as in its family, sorted by
    family, rank, alpha, beta.  ``types`` restricts the search.
    """
    if max_rank < 1:
        raise ValueError("max_rank must be positive")
    if types is None:
        types = simple_types(max_rank)
    out = []
    for t in types:
        if isinstance(t, str):
            t = parse_type(t)
        if t.rank > max_rank:
            continue
        for a in range(1, t.rank + 1):
            for b in range(a + 1, t.rank + 1):
                p = HoroPair(t, a, b)
                if is_special_pair(p):
                    case, oriented, _ = case_label(p)
                    out.append((oriented, case))
    out.sort(key=lambda pc: (pc[0].gamma, min(pc[0].alpha, pc[0].beta), max(pc[0].alpha, pc[0].beta)))
    return out


def _levi_w0(rs, omit: int):
    return rs.longest_element_word([v for v in rs.vertices if v != omit])


def aut_stability_pairing(p: HoroPair) -> int:
    """<omega_alpha - omega_beta, w_0^beta(beta check)>."""
    rs = root_system(p.gamma)
    lam = tuple(a - b for a, b in zip(rs.fundamental_weight(p.alpha), rs.fundamental_weight(p.beta)))
    cow = rs.act_on_coweight(_levi_w0(rs, p.beta), rs.simple_coroot(p.beta))
    return pairing(lam, cow)


def normal_sections_module(p: HoroPair, side: str) -> Optional[Weight]:
    """Highest weight of the sections of the normal bundle of Y or Z, or None."""
    if side not in ("Y", "Z"):
        raise ValueError("side must be 'Y' or 'Z'")
    rs = root_system(p.gamma)
    s, o = (p.alpha, p.beta) if side == "Y" else (p.beta, p.alpha)
    lam = tuple(x - y for x, y in zip(rs.fundamental_weight(o), rs.fundamental_weight(s)))
    mu = rs.act_on_weight(_levi_w0(rs, s), lam)
    if not is_antidominant(mu):
        return None
    dom, _ = rs.dominant_representative(tuple(-x for x in mu))
    return dom


def dim_X1(p: HoroPair) -> int:
    rs = root_system(p.gamma)
    return 1 + rs.dim_flag_variety([v for v in rs.vertices if v not in (p.alpha, p.beta)])


def _params(case: int, p: HoroPair) -> dict:
    m = p.gamma.rank
    if case == 2:
        return {"m": m, "i": min(p.alpha, p.beta)}
    if case == 5:
        return {"m": m, "i": p.beta}
    return {"m": m}


def dim_homogeneous_model(case: int, params: dict) -> int:
    """Closed-form dimension of the model variety of a case."""
    m = params["m"]
    if case == 1:
        return 2 * m
    if case == 2:
        i = params["i"]
        return (i + 1) * (m + 1 - i)
    if case == 5:
        k = params["i"] + 1
        return k * (2 * m + 1 - k) - k * (k - 1) // 2
    if case == 6:
        return root_system(SimpleType("B", m)).dim_flag_variety(range(1, m))
    raise ValueError(f"no closed-form model for case {case}")


def _model_name(case: int, params: dict) -> Optional[str]:
    m, i = params["m"], params.get("i")
    return {
        1: lambda: f"quadric Q^{2 * m}",
        2: lambda: f"Gr({i + 1}, {m + 2})",
        5: lambda: f"odd symplectic Gr_w({i + 1}, {2 * m + 1})",
        6: lambda: f"spinor variety Spin({2 * m + 1})/P(w{m})",
    }.get(case, lambda: None)()


def _reductive_part(case: int, m: int) -> tuple[str, Optional[str]]:
    if case == 3:
        return f"SO({2 * m + 1}) x C*", None
    if case == 4:
        return "SO(7) x C*", None
    if case == 5:
        return f"Sp({2 * m}) x C*", "{+-1}"
    if case == 7:
        return "F4 x C*", None
    return "G2 x C*", None


def _weight_label(w: Weight) -> str:
    terms = []
    for k, c in enumerate(w, 1):
        if c:
            terms.append(f"w{k}" if c == 1 else f"{c}w{k}")
    return " + ".join(terms) or "0"


def homogeneity_verdict(p: HoroPair) -> ClassificationVerdict:
    """Full verdict for a special pair (oriented as in its family)."""
    if not is_special_pair(p):
        raise ValueError(f"{p} is not special")
    case, oriented, via = case_label(p)
    sy = normal_sections_module(oriented, "Y")
    sz = normal_sections_module(oriented, "Z")
    homogeneous = sz is not None
    params = _params(case, oriented)
    pv = None if homogeneous else aut_stability_pairing(oriented)
    desc = aut = None
    if not homogeneous and sy is not None:
        red, quot = _reductive_part(case, params["m"])
        core = f"({red})" if quot is None else f"(({red})/{quot})"
        desc = f"{core} x| V({_weight_label(sy)})"
        aut = {"reductive": red, "quotient": quot, "unipotent": list(sy)}
    return ClassificationVerdict(
        pair=oriented,
        case_label=case,
        special=True,
        homogeneous=homogeneous,
        pairing_value=pv,
        sections_Y=sy,
        sections_Z=sz,
        dim_X1=dim_X1(oriented),
        aut_descriptor=desc,
        aut=aut,
        model=_model_name(case, params),
        via_automorphism=via,
    )
