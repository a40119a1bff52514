"""Dynkin diagram combinatorics: full subdiagrams, components, type recognition.

Edges carry their multiplicity and, for multiple edges, the vertex at the
long end (the arrow points from the long root to the short one).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .rootsys import LieType, SimpleType, root_system

__all__ = [
    "DiagramError",
    "Edge",
    "Diagram",
    "ComponentType",
    "diagram",
    "full_subdiagram",
    "components",
    "classify_component",
    "is_simple_end",
    "positions",
    "diagram_automorphisms",
]


class DiagramError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Edge:
    a: int
    b: int
    mult: int = 1
    long: int | None = None  # long endpoint when mult >= 2

    def other(self, v: int) -> int:
        return self.b if v == self.a else self.a


@dataclass(frozen=True)
class Diagram:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise DiagramError("repeated vertex")
        seen = set()
        for e in self.edges:
            if e.a not in vs or e.b not in vs:
                raise DiagramError(f"edge {e} leaves the vertex set")
            if e.a == e.b:
                raise DiagramError("loop")
            key = frozenset((e.a, e.b))
            if key in seen:
                raise DiagramError("parallel edges")
            seen.add(key)
            if e.mult not in (1, 2, 3):
                raise DiagramError(f"bad multiplicity {e.mult}")
            if (e.mult > 1) != (e.long is not None) or (e.long is not None and e.long not in key):
                raise DiagramError(f"bad arrow data on {e}")

    def neighbors(self, v: int) -> list[int]:
        return sorted(e.other(v) for e in self.edges if v in (e.a, e.b))

    def edge(self, v: int, w: int) -> Edge | None:
        for e in self.edges:
            if {e.a, e.b} == {v, w}:
                return e
        return None

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"a": e.a, "b": e.b, "mult": e.mult, "arrow": e.long} for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        return cls(
            tuple(data["vertices"]),
            tuple(Edge(e["a"], e["b"], e.get("mult", 1), e.get("arrow")) for e in data["edges"]),
        )


@dataclass(frozen=True)
class ComponentType:
    type: SimpleType
    relabel: dict[int, int] = field(hash=False, compare=False)  # vertex -> Bourbaki index

    def index(self, v: int) -> int:
        return self.relabel[v]


def diagram(t: LieType) -> Diagram:
    """The Bourbaki-labelled diagram of ``t`` (vertices 1..rank)."""
    cm = root_system(t).cartan
    n = len(cm)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if cm[i][j]:
                mult = cm[i][j] * cm[j][i]
                long = None
                if mult > 1:
                    long = i + 1 if abs(cm[i][j]) > 1 else j + 1
                edges.append(Edge(i + 1, j + 1, mult, long))
    return Diagram(tuple(range(1, n + 1)), tuple(edges))


def full_subdiagram(d: Diagram, subset) -> Diagram:
    keep = set(subset)
    unknown = keep - set(d.vertices)
    if unknown:
        raise DiagramError(f"unknown vertices {sorted(unknown)}")
    return Diagram(
        tuple(v for v in d.vertices if v in keep),
        tuple(e for e in d.edges if e.a in keep and e.b in keep),
    )


def components(d: Diagram) -> list[Diagram]:
    """Connected components, ordered by smallest vertex id."""
    left = set(d.vertices)
    out = []
    for start in sorted(d.vertices):
        if start not in left:
            continue
        comp, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for w in d.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        left -= comp
        out.append(full_subdiagram(d, comp))
    return out


def _walk(d: Diagram, start: int, avoid: set[int]) -> list[int]:
    """Follow a path (arm) from ``start`` away from ``avoid``."""
    path, prev = [start], set(avoid)
    cur = start
    while True:
        nxt = [w for w in d.neighbors(cur) if w not in prev and w not in path]
        if not nxt:
            return path
        if len(nxt) > 1:
            raise DiagramError("branching arm")
        prev.add(cur)
        cur = nxt[0]
        path.append(cur)


def classify_component(d: Diagram) -> ComponentType:
    """Recognise a connected diagram and give a Bourbaki relabelling.

    Low-rank coincidences are canonicalised: a rank-2 double edge is reported
    as C2 (short root = 1) and the A3-shaped D3 is reported as A3.  Where the
    diagram has automorphisms the relabelling is the one that puts the
    smallest vertex id first.
    """
    vs = list(d.vertices)
    n = len(vs)
    if n == 0:
        raise DiagramError("empty diagram")
    if len(components(d)) != 1:
        raise DiagramError("diagram is not connected")
    if len(d.edges) != n - 1:
        raise DiagramError("Dynkin diagrams are trees")
    deg = {v: len(d.neighbors(v)) for v in vs}
    multi = [e for e in d.edges if e.mult > 1]
    if n == 1:
        return ComponentType(SimpleType("A", 1), {vs[0]: 1})

    if multi:
        if len(multi) > 1 or max(deg.values()) > 2:
            raise DiagramError("not a Dynkin diagram")
        e = multi[0]
        short = e.other(e.long)
        if e.mult == 3:
            if n != 2:
                raise DiagramError("triple edge only in G2")
            return ComponentType(SimpleType("G", 2), {short: 1, e.long: 2})
        if n == 2:
            return ComponentType(SimpleType("C", 2), {short: 1, e.long: 2})
        ends = [v for v in vs if deg[v] == 1]
        if e.long in ends or short in ends:
            end = e.long if e.long in ends else short
            start = next(v for v in ends if v != end)
            path = _walk(d, start, set())
            relabel = {v: k + 1 for k, v in enumerate(path)}
            fam = "C" if end == e.long else "B"
            return ComponentType(SimpleType(fam, n), relabel)
        if n != 4:
            raise DiagramError("interior double edge only in F4")
        path = _walk(d, e.long, {short})[::-1] + _walk(d, short, {e.long})
        return ComponentType(SimpleType("F", 4), {v: k + 1 for k, v in enumerate(path)})

    branch = [v for v in vs if deg[v] == 3]
    if not branch:
        ends = sorted(v for v in vs if deg[v] == 1)
        path = _walk(d, ends[0], set())
        return ComponentType(SimpleType("A", n), {v: k + 1 for k, v in enumerate(path)})
    if len(branch) > 1 or max(deg.values()) > 3:
        raise DiagramError("not a Dynkin diagram")
    c = branch[0]
    arms = sorted((_walk(d, w, {c}) for w in d.neighbors(c)), key=lambda a: (len(a), a[-1]))
    lens = tuple(len(a) for a in arms)
    if lens[:2] == (1, 1):
        # D_n: long arm alpha_1..alpha_{n-3}, branch alpha_{n-2}, leaves alpha_{n-1}, alpha_n
        if lens[2] == 1:
            long_arm, a1, a2 = sorted(arms)
        else:
            a1, a2 = sorted(arms[:2])
            long_arm = arms[2]
        relabel = {v: k + 1 for k, v in enumerate(long_arm[::-1] + [c])}
        relabel[a1[0]] = n - 1
        relabel[a2[0]] = n
        return ComponentType(SimpleType("D", n), relabel)
    if lens in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        short, mid, far = arms
        relabel = {short[0]: 2, c: 4, mid[0]: 3, mid[1]: 1}
        for k, v in enumerate(far):
            relabel[v] = 5 + k
        return ComponentType(SimpleType("E", n), relabel)
    raise DiagramError("not a Dynkin diagram")


def positions(comp: ComponentType, v: int) -> set[int]:
    """Bourbaki indices ``v`` may carry under the diagram automorphisms of its type."""
    t, k = comp.type, comp.relabel[v]
    n = t.rank
    if t.family == "A":
        return {k, n + 1 - k}
    if t.family == "D" and n == 4 and k != 2:
        return {1, 3, 4}
    if t.family == "D" and k >= n - 1:
        return {n - 1, n}
    if t.family == "E" and n == 6:
        swap = {1: 6, 6: 1, 3: 5, 5: 3}
        return {k, swap.get(k, k)}
    return {k}


def is_simple_end(d: Diagram, v: int) -> bool:
    """True iff ``v`` is an end vertex whose edge is single (or d is one vertex)."""
    if v not in d.vertices:
        raise DiagramError(f"unknown vertex {v}")
    nb = d.neighbors(v)
    if not nb:
        return len(d.vertices) == 1
    return len(nb) == 1 and d.edge(v, nb[0]).mult == 1


def diagram_automorphisms(t: SimpleType) -> list[dict[int, int]]:
    """All automorphisms of the Bourbaki diagram of ``t`` as vertex maps."""
    n = t.rank
    ident = {k: k for k in range(1, n + 1)}
    if t.family == "A" and n > 1:
        return [ident, {k: n + 1 - k for k in ident}]
    if t.family == "D" and n == 4:
        out = []
        for a, b, c in itertools.permutations((1, 3, 4)):
            out.append({1: a, 2: 2, 3: b, 4: c})
        return out
    if t.family == "D":
        swap = dict(ident)
        swap[n - 1], swap[n] = n, n - 1
        return [ident, swap]
    if t.family == "E" and n == 6:
        return [ident, {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}]
    return [ident]
