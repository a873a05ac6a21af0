"""Simple graphs, chordality with certificates, and the intersection-graph
construction that ties unmixed height-two monomial ideals to graph theory."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import DomainError, InvariantViolationError
from .monomials import (
    AmbientRing,
    Monomial,
    MonomialIdeal,
    intersect_all,
    minimalize,
    standard_primary_decomposition,
)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on an ordered tuple of labelled vertices."""

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("duplicate vertex labels")
        vs = set(self.vertices)
        for e in self.edges:
            if len(e) != 2:
                raise DomainError(f"not a simple edge: {set(e)}")
            if not e <= vs:
                raise DomainError(f"edge {set(e)} uses unknown vertices")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, u: str) -> set[str]:
        return {next(iter(e - {u})) for e in self.edges if u in e}

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def to_dot(self) -> str:
        lines = ["graph {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for e in sorted(tuple(sorted(e)) for e in self.edges):
            lines.append(f'  "{e[0]}" -- "{e[1]}";')
        lines.append("}")
        return "\n".join(lines)


def graph(vertices, edges) -> SimpleGraph:
    return SimpleGraph(tuple(vertices), frozenset(frozenset(e) for e in edges))


def complement(G: SimpleGraph) -> SimpleGraph:
    edges = set()
    for u, v in itertools.combinations(G.vertices, 2):
        if not G.has_edge(u, v):
            edges.add(frozenset((u, v)))
    return SimpleGraph(G.vertices, frozenset(edges))


def _mcs_order(G: SimpleGraph) -> list[str]:
    """Maximum cardinality search visit order (ties broken by vertex order)."""
    index = {v: i for i, v in enumerate(G.vertices)}
    adj = G.adjacency()
    weight = {v: 0 for v in G.vertices}
    unvisited = set(G.vertices)
    order = []
    while unvisited:
        z = max(unvisited, key=lambda v: (weight[v], -index[v]))
        order.append(z)
        unvisited.remove(z)
        for y in adj[z]:
            if y in unvisited:
                weight[y] += 1
    return order


def is_perfect_elimination_ordering(G: SimpleGraph, order: list[str]) -> bool:
    """Check that each vertex's later neighbors form a clique."""
    pos = {v: i for i, v in enumerate(order)}
    if set(order) != set(G.vertices) or len(order) != G.n:
        return False
    adj = G.adjacency()
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        for a, b in itertools.combinations(later, 2):
            if not G.has_edge(a, b):
                return False
    return True


def _find_induced_long_cycle(G: SimpleGraph) -> list[str] | None:
    """An induced cycle of length >= 4, if one exists.

    For each path u-v-w with u,w non-adjacent, look for a shortest u-w path
    avoiding v and N(v)\\{u,w}; gluing v back in yields an induced cycle.
    """
    adj = G.adjacency()
    for v in G.vertices:
        nb = sorted(adj[v])
        for u, w in itertools.combinations(nb, 2):
            if G.has_edge(u, w):
                continue
            banned = (adj[v] | {v}) - {u, w}
            path = _shortest_path(adj, u, w, banned)
            if path is not None:
                return [v] + path
    return None


def _shortest_path(adj, start, goal, banned) -> list[str] | None:
    prev = {start: None}
    q = deque([start])
    while q:
        x = q.popleft()
        if x == goal:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in adj[x]:
            if y in banned or y in prev:
                continue
            prev[y] = x
            q.append(y)
    return None


def is_induced_cycle(G: SimpleGraph, cycle: list[str]) -> bool:
    """Certificate check: the listed vertices induce exactly one cycle."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i, u in enumerate(cycle):
        for j in range(i + 1, k):
            consecutive = (j - i == 1) or (i == 0 and j == k - 1)
            if G.has_edge(u, cycle[j]) != consecutive:
                return False
    return True


def is_chordal(G: SimpleGraph, certificate: bool = True) -> tuple[bool, list[str]]:
    """Chordality with a certificate.

    Returns ``(True, perfect_elimination_ordering)`` or
    ``(False, induced_cycle_of_length_at_least_4)``; with
    ``certificate=False`` the second component is empty on failure, skipping
    the cycle search.
    """
    order = _mcs_order(G)[::-1]
    if is_perfect_elimination_ordering(G, order):
        return True, order
    if not certificate:
        return False, []
    cycle = _find_induced_long_cycle(G)
    if cycle is None or not is_induced_cycle(G, cycle):
        raise InvariantViolationError("MCS rejected the graph but no induced long cycle found")
    return False, cycle


def is_cochordal(G: SimpleGraph) -> bool:
    return is_chordal(complement(G), certificate=False)[0]


@dataclass(frozen=True)
class EdgeSequenceData:
    """A graph with an ordered edge list and positive exponent sequences a, b.

    Edge ℓ with oriented endpoints (i_ℓ, j_ℓ) contributes the component
    (x_{i_ℓ}^{a_ℓ}, x_{j_ℓ}^{b_ℓ}) to the intersection ideal.
    """

    graph: SimpleGraph
    edge_order: tuple[tuple[str, str], ...]
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        t = len(self.edge_order)
        if not (t == len(self.a) == len(self.b)):
            raise DomainError("edge, a and b sequences must have equal length")
        if t == 0:
            raise DomainError("need at least one edge")
        if any(x < 1 for x in self.a) or any(x < 1 for x in self.b):
            raise DomainError("sequences a and b must be positive")
        seen = set()
        vs = set(self.graph.vertices)
        for i, j in self.edge_order:
            if i == j:
                raise DomainError(f"loop at vertex {i}")
            if i not in vs or j not in vs:
                raise DomainError(f"edge ({i},{j}) uses unknown vertices")
            key = frozenset((i, j))
            if key in seen:
                raise DomainError(f"duplicate edge ({i},{j})")
            seen.add(key)
        if seen != self.graph.edges:
            raise DomainError("edge_order must list exactly the graph's edges")

    @property
    def t(self) -> int:
        return len(self.edge_order)


def edge_data(edges: list[tuple[str, str]], a, b, vertices=None) -> EdgeSequenceData:
    if vertices is None:
        vertices = []
        for i, j in edges:
            for v in (i, j):
                if v not in vertices:
                    vertices.append(v)
    G = graph(vertices, edges)
    return EdgeSequenceData(G, tuple(edges), tuple(int(x) for x in a), tuple(int(x) for x in b))


def build_ideal(data: EdgeSequenceData) -> MonomialIdeal:
    """The unmixed height-two ideal: intersection over edges of
    (x_i^{a_ℓ}, x_j^{b_ℓ})."""
    ambient = AmbientRing(data.graph.vertices)
    idx = {v: k for k, v in enumerate(ambient.variable_names)}
    comps = []
    for (i, j), ae, be in zip(data.edge_order, data.a, data.b):
        ei = [0] * ambient.n
        ei[idx[i]] = ae
        ej = [0] * ambient.n
        ej[idx[j]] = be
        comps.append(minimalize([Monomial(ambient, tuple(ei)), Monomial(ambient, tuple(ej))], ambient))
    return intersect_all(comps)


def intersection_graph(data: EdgeSequenceData) -> SimpleGraph:
    """The expanded graph on variable copies x_{i,p}.

    Edge ℓ contributes a complete bipartite block between copies 1..a_ℓ of
    its first endpoint and copies 1..b_ℓ of its second. Copies not touched
    by any block are dropped (isolated vertices never affect cochordality).
    """
    order = {v: k for k, v in enumerate(data.graph.vertices)}
    copies: set[tuple[str, int]] = set()
    edges: set[frozenset[str]] = set()
    for (i, j), ae, be in zip(data.edge_order, data.a, data.b):
        for p in range(1, ae + 1):
            copies.add((i, p))
            for q in range(1, be + 1):
                copies.add((j, q))
                edges.add(frozenset((f"{i}_{p}", f"{j}_{q}")))
    vertices = tuple(
        f"{v}_{p}" for v, p in sorted(copies, key=lambda c: (order[c[0]], c[1]))
    )
    return SimpleGraph(vertices, frozenset(edges))


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    """Squarefree ideal generated by x_u x_v over the edges of G."""
    ambient = AmbientRing(G.vertices)
    idx = {v: k for k, v in enumerate(G.vertices)}
    gens = []
    for e in G.edges:
        u, v = tuple(e)
        exps = [0] * ambient.n
        exps[idx[u]] = 1
        exps[idx[v]] = 1
        gens.append(Monomial(ambient, tuple(exps)))
    return minimalize(gens, ambient)


@dataclass(frozen=True)
class RecoveryObstruction:
    """Typed failure of :func:`recover_data`: the component that is not of
    the form (x^a, y^b). This is exactly failure of generic Gorensteinness."""

    radical: frozenset[int]
    primary: MonomialIdeal

    def describe(self, ambient: AmbientRing) -> str:
        rad = ", ".join(ambient.variable_names[i] for i in sorted(self.radical))
        return f"component with radical ({rad}) is not generated by two pure powers: {self.primary}"


def recover_data(I: MonomialIdeal) -> EdgeSequenceData | RecoveryObstruction:
    """Reconstruct (G, a, b) from an unmixed height-two ideal, if possible.

    Succeeds exactly when every standard primary component has the form
    (x_i^a, x_j^b); each height-two radical {x_i, x_j} is oriented i < j.
    """
    decomp = standard_primary_decomposition(I)
    if any(len(rad) != 2 for rad in decomp.radicals()):
        raise DomainError("ideal is not unmixed of height two")
    edges = []
    a = []
    b = []
    for rad, primary in decomp.components:
        i, j = sorted(rad)
        ok = primary.mu == 2 and all(len(g.support()) == 1 for g in primary.generators)
        if not ok:
            return RecoveryObstruction(rad, primary)
        by_var = {next(iter(g.support())): g for g in primary.generators}
        edges.append((I.ring.variable_names[i], I.ring.variable_names[j]))
        a.append(by_var[i].exponents[i])
        b.append(by_var[j].exponents[j])
    G = graph(I.ring.variable_names, edges)
    return EdgeSequenceData(G, tuple(edges), tuple(a), tuple(b))
