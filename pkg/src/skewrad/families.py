"""Named polynomial families, weighted curve-graph shapes, and the two
edge-deletion gadgets used in the even-g irreducible case analysis."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .digraph import CurveGraph, Digraph, Edge
from .errors import InvalidArgument, UnsupportedShape
from .poly import IntPoly


def _require_int(name: str, v, lo: int):
    if isinstance(v, bool) or not isinstance(v, int) or v < lo:
        raise InvalidArgument(f"{name} must be an integer >= {lo}, got {v!r}")


def _sum_terms(*terms: tuple[int, int]) -> IntPoly:
    return sum((IntPoly.monomial(k, c) for k, c in terms), IntPoly())


def trinomial_pair(g: int, d: int) -> IntPoly:
    """t^{2g} - t^{g+d} - t^{g-d} - 1 for 0 <= d <= g."""
    _require_int("g", g, 1)
    if not 0 <= d <= g:
        raise InvalidArgument(f"need 0 <= d <= g, got d={d}")
    return _sum_terms((2 * g, 1), (g + d, -1), (g - d, -1), (0, -1))


def lambda_poly(g: int) -> IntPoly:
    """Minimiser for nonnegative irreducible skew-reciprocal matrices of size 2g."""
    _require_int("g", g, 1)
    if g % 2:
        return IntPoly.from_terms({2 * g: 1, g: -1, 0: -1})
    return trinomial_pair(g, 1)


def mu_poly(g: int) -> IntPoly:
    """Minimiser for primitive skew-reciprocal matrices of size 2g (g >= 2)."""
    _require_int("g", g, 2)
    return trinomial_pair(g, 2 if g % 2 else 1)


@dataclass(frozen=True)
class FamilyId:
    tag: str
    g: int

    def __post_init__(self):
        if self.tag not in ("lambda", "mu"):
            raise InvalidArgument(f"unknown family {self.tag!r}")
        _require_int("g", self.g, 2 if self.tag == "mu" else 1)

    @property
    def poly(self) -> IntPoly:
        return lambda_poly(self.g) if self.tag == "lambda" else mu_poly(self.g)


# shape name -> (vertex count, edges among vertex indices)
_SHAPES = {
    "A2*": (3, ((0, 1),)),
    "A2**": (4, ((0, 1),)),
    "A3*": (4, ((0, 1), (1, 2))),
}
_KNOWN = {"A2*", "A2**", "A2***", "A3*", "Y*", "nA1"}


@dataclass(frozen=True)
class ShapeId:
    """A weighted curve-graph shape.

    Vertex order follows the usual lettering: for ``A2*`` the edge is
    ``a-b`` and ``c`` is isolated; ``A2**`` adds an isolated ``d``;
    ``A3*`` is the path ``a-b-c`` plus isolated ``d``.
    """

    name: str
    weights: tuple[int, ...]

    def __post_init__(self):
        name = self.name
        m = re.fullmatch(r"(\d+)A1", name)
        if m:
            name = "nA1"
            if int(m.group(1)) != len(self.weights):
                raise InvalidArgument(f"{self.name} needs {m.group(1)} weights")
        if name not in _KNOWN:
            raise InvalidArgument(f"unknown shape {self.name!r}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w < 1 for w in self.weights):
            raise InvalidArgument("weights must be positive")
        if name == "nA1":
            if not 2 <= len(self.weights) <= 7:
                raise InvalidArgument("nA1 needs 2 <= n <= 7")
        elif name in _SHAPES and len(self.weights) != _SHAPES[name][0]:
            raise InvalidArgument(f"{name} needs {_SHAPES[name][0]} weights")

    @property
    def label(self) -> str:
        return f"{len(self.weights)}A1" if self.name == "nA1" else self.name


def _require_buildable(s: ShapeId):
    if s.name in ("A2***", "Y*"):
        raise UnsupportedShape(f"shape {s.name} is not constructed by this library")


def shape_curve_graph(s: ShapeId) -> CurveGraph:
    _require_buildable(s)
    edges = () if s.name == "nA1" else _SHAPES[s.name][1]
    return CurveGraph.from_edges(s.weights, edges)


def shape_clique_poly(s: ShapeId) -> IntPoly:
    """Closed-form clique polynomial of a weighted shape."""
    _require_buildable(s)
    terms: dict[int, int] = {0: 1}

    def add(k: int, c: int):
        terms[k] = terms.get(k, 0) + c

    for w in s.weights:
        add(w, -1)
    if s.name in ("A2*", "A2**"):
        a, b = s.weights[:2]
        add(a + b, 1)
    elif s.name == "A3*":
        a, b, c, _ = s.weights
        add(a + b, 1)
        add(b + c, 1)
    return IntPoly.from_terms(terms)


# --------------------------------------------------------------------------
# edge-deletion gadgets


@dataclass(frozen=True)
class Gadget:
    """A digraph with one distinguished unit edge and the expected clique
    polynomials before and after deleting that edge."""

    graph: Digraph
    distinguished: int
    clique_poly: IntPoly
    reduced_clique_poly: IntPoly

    def reduced(self) -> Digraph:
        return self.graph.delete_edge(self.distinguished)


def _petal(edges: list[Edge], at: int, weight: int, fresh: int) -> tuple[int, int]:
    """Attach a cycle of ``weight`` through ``at`` closed by a unit edge.

    Returns (index of the closing unit edge, next free base vertex)."""
    if weight == 1:
        edges.append(Edge(at, at, 1, 1))
        return len(edges) - 1, fresh
    edges.append(Edge(at, fresh, weight - 1, 1))
    edges.append(Edge(fresh, at, 1, 1))
    return len(edges) - 1, fresh + 1


def gamma_abd(a: int, b: int, d: int, g: int | None = None) -> Gadget:
    """Digraph whose curve graph is A2** with weights (a, b, 2g, d).

    Two base vertices x -> y joined by a unit edge, with two return paths
    y -> x of weights 2g - 1 and d - 1 (the 2g- and d-cycles share x and y).
    The a-cycle hangs at x and the b-cycle at y, so they are disjoint from
    each other and meet both long cycles.  The a-cycle is closed by the
    distinguished unit edge.
    """
    for name, v in (("a", a), ("b", b), ("d", d)):
        _require_int(name, v, 1)
    if (b + d) % 2:
        raise InvalidArgument("b + d must be even (b + d = 2g)")
    if g is None:
        g = (b + d) // 2
    elif b + d != 2 * g:
        raise InvalidArgument(f"need b + d = 2g, got b={b}, d={d}, g={g}")
    if not (a < b and a < d and d < a + b and b < a + b <= 2 * g - 2):
        raise InvalidArgument(f"parameters violate 1 <= a < b,d < a+b <= 2g-2: {(a, b, d, g)}")
    x, y = 0, 1
    edges = [Edge(x, y, 1, 1), Edge(y, x, 2 * g - 1, 1), Edge(y, x, d - 1, 1)]
    dist, fresh = _petal(edges, x, a, 2)
    edges.append(Edge(y, fresh, b - 1, 1))
    edges.append(Edge(fresh, y, 1, 1))
    fresh += 1
    graph = Digraph(fresh, tuple(edges))
    Q = shape_clique_poly(ShapeId("A2**", (a, b, 2 * g, d)))
    reduced = _sum_terms((0, 1), (b, -1), (d, -1), (2 * g, -1))
    return Gadget(graph, dist, Q, reduced)


def gamma_prime_abc(a: int, b: int, c: int, g: int) -> Gadget:
    """Digraph whose curve graph is A3* with path a-b-c and isolated g-cycle.

    A rose at x carrying the a-, c- and g-cycles; the g-cycle passes
    through a second base vertex m, where the b-cycle hangs.  The a-cycle
    is closed by the distinguished unit edge.
    """
    for name, v in (("a", a), ("b", b), ("c", c), ("g", g)):
        _require_int(name, v, 1)
    if g < 2 or 2 * a + b != 2 * g or b + c != 2 * g or a > g - 1:
        raise InvalidArgument(f"need 2a + b = 2g, b + c = 2g, a <= g - 1: {(a, b, c, g)}")
    x, m = 0, 1
    edges = [Edge(x, m, 1, 1), Edge(m, x, g - 1, 1), Edge(x, x, c, 1), Edge(m, m, b, 1)]
    dist, fresh = _petal(edges, x, a, 2)
    graph = Digraph(fresh, tuple(edges))
    Q = shape_clique_poly(ShapeId("A3*", (a, b, c, g)))
    reduced = _sum_terms((0, 1), (b, -1), (g, -1), (c, -1), (2 * g, 1))
    return Gadget(graph, dist, Q, reduced)


def gamma_abd_instances(g_max: int) -> list[tuple[int, int, int, int]]:
    """All valid (a, b, d, g) with g <= g_max."""
    out = []
    for g in range(2, g_max + 1):
        for b in range(1, 2 * g):
            d = 2 * g - b
            for a in range(1, min(b, d)):
                if d < a + b and a + b <= 2 * g - 2:
                    out.append((a, b, d, g))
    return out


def gamma_prime_instances(g_max: int) -> list[tuple[int, int, int, int]]:
    out = []
    for g in range(2, g_max + 1):
        for a in range(1, g):
            b = 2 * g - 2 * a
            out.append((a, b, 2 * g - b, g))
    return out
