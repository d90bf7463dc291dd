"""Weighted directed multigraphs, their simple closed curves, curve graphs
and clique polynomials.

An edge of weight ``w`` stands for a directed path of ``w`` unit edges
through ``w - 1`` fresh vertices; an edge of multiplicity ``m`` is ``m``
parallel copies.  For a nonnegative integer matrix ``A`` the clique
polynomial ``Q`` of the curve graph satisfies ``det(tI - A) = t^n Q(1/t)``,
and :func:`duality_check` tests exactly that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import InvalidArgument, ResourceLimit
from .matrix import IntMatrix, char_poly
from .poly import IntPoly, reciprocal_transform

DEFAULT_CYCLE_CAP = 10**6
DEFAULT_CLIQUE_CAP = 10**6


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    weight: int = 1
    multiplicity: int = 1


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgument("negative vertex count")
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        for e in edges:
            if not (0 <= e.src < self.n and 0 <= e.dst < self.n):
                raise InvalidArgument(f"edge {e} leaves the vertex range")
            if e.weight < 1 or e.multiplicity < 1:
                raise InvalidArgument(f"edge {e} needs positive weight and multiplicity")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def parse(cls, text: str) -> Digraph:
        """Lines ``v <count>`` and ``e <src> <dst> <weight> <multiplicity>``."""
        n = None
        edges = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            try:
                if line[0] == "v":
                    n = int(line[1])
                elif line[0] == "e":
                    src, dst = int(line[1]), int(line[2])
                    w = int(line[3]) if len(line) > 3 else 1
                    m = int(line[4]) if len(line) > 4 else 1
                    edges.append(Edge(src, dst, w, m))
                else:
                    raise InvalidArgument(f"unknown record {line[0]!r}")
            except (IndexError, ValueError) as exc:
                raise InvalidArgument(f"malformed digraph line {raw!r}") from exc
        if n is None:
            raise InvalidArgument("missing 'v <count>' line")
        return cls(n, tuple(edges))

    def to_text(self) -> str:
        out = [f"v {self.n}"]
        out += [f"e {e.src} {e.dst} {e.weight} {e.multiplicity}" for e in self.edges]
        return "\n".join(out) + "\n"

    def delete_edge(self, index: int) -> Digraph:
        """Remove one copy of edge ``index``."""
        e = self.edges[index]
        rest = list(self.edges)
        if e.multiplicity > 1:
            rest[index] = Edge(e.src, e.dst, e.weight, e.multiplicity - 1)
        else:
            del rest[index]
        return Digraph(self.n, tuple(rest))

    @cached_property
    def expanded_size(self) -> int:
        return self.n + sum((e.weight - 1) * e.multiplicity for e in self.edges)

    @cached_property
    def _fresh_offsets(self) -> list[int]:
        # first fresh vertex id of each edge; copies follow consecutively
        offs, nxt = [], self.n
        for e in self.edges:
            offs.append(nxt)
            nxt += (e.weight - 1) * e.multiplicity
        return offs

    def edge_copy_mask(self, index: int, copy: int) -> int:
        """Bitmask of the expanded vertices on one copy of an edge."""
        e = self.edges[index]
        mask = (1 << e.src) | (1 << e.dst)
        start = self._fresh_offsets[index] + copy * (e.weight - 1)
        for v in range(start, start + e.weight - 1):
            mask |= 1 << v
        return mask


@dataclass(frozen=True)
class SimpleCycle:
    """A simple closed curve: base vertices in order, and the edge copies used."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    weight: int
    support: int  # bitmask over expanded vertices


def from_matrix(A: IntMatrix) -> Digraph:
    if not A.is_nonnegative():
        raise InvalidArgument("matrix has a negative entry")
    edges = [Edge(i, j, 1, A.rows[i][j]) for i in range(A.n) for j in range(A.n) if A.rows[i][j]]
    return Digraph(A.n, tuple(edges))


def expand(G: Digraph) -> IntMatrix:
    N = G.expanded_size
    m = [[0] * N for _ in range(N)]
    for idx, e in enumerate(G.edges):
        if e.weight == 1:
            m[e.src][e.dst] += e.multiplicity
            continue
        for copy in range(e.multiplicity):
            start = G._fresh_offsets[idx] + copy * (e.weight - 1)
            path = [e.src] + list(range(start, start + e.weight - 1)) + [e.dst]
            for u, v in zip(path, path[1:]):
                m[u][v] += 1
    return IntMatrix(tuple(map(tuple, m)))


def vertex_cycles(succ: Sequence[Sequence[int]], cap: int = DEFAULT_CYCLE_CAP) -> list[tuple[int, ...]]:
    """Johnson's circuit enumeration on a simple digraph given by successor lists.

    Each cycle starts at its minimal vertex; output is sorted lexicographically.
    """
    n = len(succ)
    succ = [sorted(set(s)) for s in succ]
    out: list[tuple[int, ...]] = []
    for s in range(n):
        blocked = [False] * n
        B: list[set[int]] = [set() for _ in range(n)]
        stack: list[int] = []

        def unblock(u: int):
            todo = [u]
            while todo:
                x = todo.pop()
                if blocked[x]:
                    blocked[x] = False
                    todo.extend(B[x])
                    B[x].clear()

        def circuit(v: int) -> bool:
            found = False
            stack.append(v)
            blocked[v] = True
            for w in succ[v]:
                if w < s:
                    continue
                if w == s:
                    out.append(tuple(stack))
                    if len(out) > cap:
                        raise ResourceLimit("simple cycle enumeration", cap)
                    found = True
                elif not blocked[w] and circuit(w):
                    found = True
            if found:
                unblock(v)
            else:
                for w in succ[v]:
                    if w >= s:
                        B[w].add(v)
            stack.pop()
            return found

        circuit(s)
    out.sort()
    return out


def simple_cycles(G: Digraph, cap: int = DEFAULT_CYCLE_CAP) -> list[SimpleCycle]:
    """Every simple closed curve, parallel edges giving distinct curves."""
    between: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for idx, e in enumerate(G.edges):
        for copy in range(e.multiplicity):
            between.setdefault((e.src, e.dst), []).append((idx, copy, e.weight))
    succ = [[] for _ in range(G.n)]
    for (u, v) in between:
        succ[u].append(v)
    out: list[SimpleCycle] = []
    for verts in vertex_cycles(succ, cap):
        hops = [between[(verts[i], verts[(i + 1) % len(verts)])] for i in range(len(verts))]
        for choice in itertools.product(*hops):
            mask = 0
            for idx, copy, _ in choice:
                mask |= G.edge_copy_mask(idx, copy)
            out.append(SimpleCycle(verts, tuple((i, c) for i, c, _ in choice),
                                   sum(w for _, _, w in choice), mask))
            if len(out) > cap:
                raise ResourceLimit("simple cycle enumeration", cap)
    return out


@dataclass(frozen=True)
class CurveGraph:
    """Weighted graph; ``adjacency[i]`` is a bitmask of the neighbours of ``i``."""

    weights: tuple[int, ...]
    adjacency: tuple[int, ...]
    cycles: tuple[SimpleCycle, ...] | None = None

    def __post_init__(self):
        if len(self.weights) != len(self.adjacency):
            raise InvalidArgument("weights and adjacency differ in length")
        if any(w < 1 for w in self.weights):
            raise InvalidArgument("curve-graph weights must be positive")
        for i, a in enumerate(self.adjacency):
            if a >> i & 1:
                raise InvalidArgument(f"vertex {i} is adjacent to itself")
            for j in _bits(a):
                if j >= len(self.weights) or not self.adjacency[j] >> i & 1:
                    raise InvalidArgument("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, weights: Sequence[int], edges: Sequence[tuple[int, int]]) -> CurveGraph:
        adj = [0] * len(weights)
        for i, j in edges:
            if i == j:
                raise InvalidArgument("loops are not allowed in a curve graph")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(tuple(weights), tuple(adj))

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def edges(self) -> Iterator[tuple[int, int]]:
        for i, a in enumerate(self.adjacency):
            for j in _bits(a):
                if j > i:
                    yield (i, j)


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def curve_graph(G: Digraph, cap: int = DEFAULT_CYCLE_CAP) -> CurveGraph:
    """One vertex per simple closed curve; edges join vertex-disjoint curves."""
    cycles = simple_cycles(G, cap)
    classes: dict[int, int] = {}
    for i, c in enumerate(cycles):
        classes[c.support] = classes.get(c.support, 0) | (1 << i)
    masks = list(classes)
    disjoint_of = {m: 0 for m in masks}
    for a, b in itertools.combinations(masks, 2):
        if not a & b:
            disjoint_of[a] |= classes[b]
            disjoint_of[b] |= classes[a]
    adj = tuple(disjoint_of[c.support] for c in cycles)
    return CurveGraph(tuple(c.weight for c in cycles), adj, tuple(cycles))


def iter_cliques(CG: CurveGraph, cap: int = DEFAULT_CLIQUE_CAP) -> Iterator[tuple[int, ...]]:
    """All cliques including the empty one, by ordered extension."""
    count = 0
    adj = CG.adjacency
    stack: list[tuple[tuple[int, ...], int]] = [((), (1 << CG.size) - 1)]
    while stack:
        clique, cand = stack.pop()
        count += 1
        if count > cap:
            raise ResourceLimit("clique enumeration", cap)
        yield clique
        ext = []
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            ext.append((clique + (v,), cand & adj[v]))
        stack.extend(reversed(ext))


def clique_polynomial(CG: CurveGraph, cap: int = DEFAULT_CLIQUE_CAP) -> IntPoly:
    """Sum over cliques K of (-1)^|K| t^w(K)."""
    terms: dict[int, int] = {}
    w = CG.weights
    adj = CG.adjacency
    count = 0

    def extend(cand: int, weight: int, sign: int):
        nonlocal count
        count += 1
        if count > cap:
            raise ResourceLimit("clique enumeration", cap)
        terms[weight] = terms.get(weight, 0) + sign
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            extend(cand & adj[v], weight + w[v], -sign)

    extend((1 << CG.size) - 1, 0, 1)
    return IntPoly.from_terms(terms)


def complement_connected(CG: CurveGraph) -> bool:
    n = CG.size
    if n <= 1:
        return True
    full = (1 << n) - 1
    seen, frontier = 1, 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= full & ~CG.adjacency[v] & ~(1 << v)
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def duality_check(A: IntMatrix, cycle_cap: int = DEFAULT_CYCLE_CAP, clique_cap: int = DEFAULT_CLIQUE_CAP) -> bool:
    """char_poly(A) == t^n Q(1/t) for the clique polynomial of A's curve graph."""
    if not A.is_nonnegative():
        raise InvalidArgument("matrix has a negative entry")
    Q = clique_polynomial(curve_graph(from_matrix(A), cycle_cap), clique_cap)
    return char_poly(A) == reciprocal_transform(Q, A.n)
