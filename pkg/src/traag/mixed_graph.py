"""Mixed graphs: simplicial graphs with some edges oriented.

An oriented edge ``arrow u v`` has origin ``u`` and target ``v`` and stands for
the relation ``v u v^-1 = u^-1`` (the target dominates the origin).  A plain
edge ``edge u v`` stands for ``u v = v u``.

Everything iterates in declaration order so that certificates are reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    BadIdentifier,
    DuplicateEdge,
    DuplicateVertex,
    EmptyGraph,
    ParseError,
    SelfLoop,
    UnknownVertex,
)

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

# exchange kinds, seen from a vertex x looking at a neighbour y
PLAIN = 0
DOMINATES = 1  # x is the target of [y, x>, so x conjugates y to y^-1
DOMINATED = 2  # x is the origin of [x, y>


@dataclass(frozen=True)
class Edge:
    """An edge ``{u, v}``; when ``oriented``, ``u`` is the origin and ``v`` the target."""

    u: str
    v: str
    oriented: bool = False

    @property
    def endpoints(self) -> frozenset[str]:
        return frozenset((self.u, self.v))

    @property
    def origin(self) -> str:
        if not self.oriented:
            raise AttributeError("plain edge has no origin")
        return self.u

    @property
    def target(self) -> str:
        if not self.oriented:
            raise AttributeError("plain edge has no target")
        return self.v

    def __str__(self) -> str:
        return f"[{self.u},{self.v}>" if self.oriented else f"[{self.u},{self.v}]"


class Declaration(NamedTuple):
    kind: str  # "vertex" | "edge" | "arrow"
    names: tuple[str, ...]
    line: int | None = None
    column: int | None = None


@dataclass(frozen=True)
class MixedGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)
    _link: dict[str, dict[str, int]] = field(init=False, repr=False, compare=False)
    _by_pair: dict[frozenset[str], Edge] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise DuplicateVertex("vertex names must be unique")
        link: dict[str, dict[str, int]] = {v: {} for v in self.vertices}
        by_pair: dict[frozenset[str], Edge] = {}
        for e in self.edges:
            for x in (e.u, e.v):
                if x not in index:
                    raise UnknownVertex(f"edge {e} uses undeclared vertex {x!r}")
            if e.u == e.v:
                raise SelfLoop(f"self-loop at {e.u!r}")
            if e.endpoints in by_pair:
                raise DuplicateEdge(f"edge {e} duplicates {by_pair[e.endpoints]}")
            by_pair[e.endpoints] = e
            if e.oriented:
                link[e.v][e.u] = DOMINATES
                link[e.u][e.v] = DOMINATED
            else:
                link[e.u][e.v] = PLAIN
                link[e.v][e.u] = PLAIN
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_link", link)
        object.__setattr__(self, "_by_pair", by_pair)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def link(self, v: str) -> frozenset[str]:
        self.index(v)
        return frozenset(self._link[v])

    def exchange_table(self) -> dict[str, dict[str, int]]:
        """Neighbour map ``x -> {y: kind}`` used by the rewriting engine (read-only)."""
        return self._link

    def edge_between(self, u: str, v: str) -> Edge | None:
        return self._by_pair.get(frozenset((u, v)))

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._link.get(u, ())

    @property
    def oriented_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.oriented)

    def is_source(self, v: str) -> bool:
        self.index(v)
        return all(kind != DOMINATES for kind in self._link[v].values())

    def induced(self, keep: Iterable[str]) -> MixedGraph:
        """Full subgraph on ``keep``; order follows this graph's declaration order."""
        keep = set(keep)
        for v in keep:
            self.index(v)
        return MixedGraph(
            tuple(v for v in self.vertices if v in keep),
            tuple(e for e in self.edges if e.u in keep and e.v in keep),
        )

    def without(self, v: str) -> MixedGraph:
        self.index(v)
        return self.induced(u for u in self.vertices if u != v)


# --------------------------------------------------------------------------- #
# text format


def parse_declarations(text: str) -> list[Declaration]:
    """Tokenise the line-based graph format into declarations.

    Lines are ``vertex <name>``, ``edge <u> <v>``, ``arrow <u> <v>``, blank,
    or comments starting with ``#``.
    """
    arity = {"vertex": 1, "edge": 2, "arrow": 2}
    decls = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        (keyword, col), args = tokens[0], tokens[1:]
        if keyword not in arity:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, col)
        if len(args) != arity[keyword]:
            where = args[arity[keyword]][1] if len(args) > arity[keyword] else col + len(keyword)
            raise ParseError(
                f"{keyword!r} takes {arity[keyword]} name(s), got {len(args)}", lineno, where
            )
        for name, c in args:
            if not IDENTIFIER.match(name):
                raise BadIdentifier(f"bad identifier {name!r}", lineno, c)
        decls.append(Declaration(keyword, tuple(n for n, _ in args), lineno, col))
    return decls


def build_graph(decls: Sequence[Declaration | tuple]) -> MixedGraph:
    """Validate declarations and build the graph.

    Edges may reference vertices declared later in the file.  Vertex order is
    declaration order.
    """
    decls = [d if isinstance(d, Declaration) else Declaration(d[0], tuple(d[1:])) for d in decls]
    vertices: dict[str, Declaration] = {}
    for d in decls:
        for name in d.names:
            if not IDENTIFIER.match(name):
                raise BadIdentifier(f"bad identifier {name!r}", d.line, d.column)
        if d.kind == "vertex":
            (name,) = d.names
            if name in vertices:
                raise DuplicateVertex(f"vertex {name!r} declared twice", d.line, d.column)
            vertices[name] = d
        elif d.kind not in ("edge", "arrow"):
            raise ParseError(f"unknown declaration kind {d.kind!r}", d.line, d.column)
    if not vertices:
        raise EmptyGraph("a graph needs at least one vertex")

    edges: list[Edge] = []
    seen: dict[frozenset[str], Declaration] = {}
    for d in decls:
        if d.kind == "vertex":
            continue
        u, v = d.names
        for x in (u, v):
            if x not in vertices:
                where = f"line {d.line}: " if d.line is not None else ""
                raise UnknownVertex(f"{where}{d.kind} uses undeclared vertex {x!r}")
        if u == v:
            raise SelfLoop(f"self-loop at {u!r}", d.line, d.column)
        pair = frozenset((u, v))
        if pair in seen:
            prev = seen[pair]
            where = f" (first declared on line {prev.line})" if prev.line is not None else ""
            raise DuplicateEdge(f"pair {{{u}, {v}}} already has an edge{where}", d.line, d.column)
        seen[pair] = d
        edges.append(Edge(u, v, oriented=d.kind == "arrow"))
    return MixedGraph(tuple(vertices), tuple(edges))


def parse_graph(text: str) -> MixedGraph:
    return build_graph(parse_declarations(text))


def format_graph(g: MixedGraph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"{'arrow' if e.oriented else 'edge'} {e.u} {e.v}" for e in g.edges]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------- #
# predicates and searches


def star(g: MixedGraph, v: str) -> frozenset[str]:
    return g.link(v) | {v}


def relators(g: MixedGraph) -> list[tuple[tuple[str, int], ...]]:
    """One relator per edge, in edge order: ``u v u^-1 v^-1`` or ``o t o t^-1``."""
    out = []
    for e in g.edges:
        if e.oriented:
            out.append(((e.u, 1), (e.v, 1), (e.u, 1), (e.v, -1)))
        else:
            out.append(((e.u, 1), (e.v, 1), (e.u, -1), (e.v, -1)))
    return out


@dataclass(frozen=True)
class OrientedCycleCert:
    edges: tuple[Edge, ...]

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(e.u for e in self.edges)

    def validate(self, g: MixedGraph) -> bool:
        if not self.edges:
            return False
        for e, nxt in zip(self.edges, self.edges[1:] + self.edges[:1]):
            if not e.oriented or g.edge_between(e.u, e.v) != e or e.v != nxt.u:
                return False
        return len(set(self.vertices)) == len(self.edges)

    def __str__(self) -> str:
        return " -> ".join(self.vertices + self.vertices[:1])


@dataclass(frozen=True)
class CliqueCycleCert:
    cycle: OrientedCycleCert
    support: tuple[str, ...]

    def validate(self, g: MixedGraph) -> bool:
        if not self.cycle.validate(g) or set(self.support) != set(self.cycle.vertices):
            return False
        s = self.support
        return all(g.adjacent(s[i], s[j]) for i in range(len(s)) for j in range(i + 1, len(s)))


@dataclass(frozen=True)
class PolyFreeTower:
    """Vertices in elimination order; each is a source once its predecessors are removed."""

    vertices: tuple[str, ...]

    def validate(self, g: MixedGraph) -> bool:
        if sorted(self.vertices) != sorted(g.vertices):
            return False
        residual = g
        for v in self.vertices:
            if not residual.is_source(v):
                return False
            if len(residual) > 1:
                residual = residual.without(v)
        return True

    def __str__(self) -> str:
        return ", ".join(self.vertices)


def _successors(g: MixedGraph) -> dict[str, list[Edge]]:
    out: dict[str, list[Edge]] = {v: [] for v in g.vertices}
    for e in g.edges:
        if e.oriented:
            out[e.u].append(e)
    return out


def find_oriented_cycle(g: MixedGraph) -> OrientedCycleCert | None:
    """Return a simple directed cycle among the oriented edges, or None.

    Depth-first search from each vertex in declaration order, following
    oriented edges in declaration order.
    """
    succ = _successors(g)
    state = dict.fromkeys(g.vertices, 0)  # 0 new, 1 on stack, 2 done
    for root in g.vertices:
        if state[root]:
            continue
        path: list[Edge] = []
        on_path = {root: 0}
        state[root] = 1
        stack: list[Iterator[Edge]] = [iter(succ[root])]
        while stack:
            e = next(stack[-1], None)
            if e is None:
                stack.pop()
                done = path.pop().v if path else root
                state[done] = 2
                del on_path[done]
                continue
            if state[e.v] == 1:
                return OrientedCycleCert(tuple(path[on_path[e.v]:]) + (e,))
            if state[e.v] == 0:
                state[e.v] = 1
                on_path[e.v] = len(path) + 1
                path.append(e)
                stack.append(iter(succ[e.v]))
    return None


def maximal_cliques(g: MixedGraph) -> list[tuple[str, ...]]:
    """Bron-Kerbosch with pivoting on the underlying undirected graph.

    Cliques are returned with their vertices in declaration order, and the
    list itself is sorted by those index tuples.
    """
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [set() for _ in g.vertices]
    for e in g.edges:
        adj[idx[e.u]].add(idx[e.v])
        adj[idx[e.v]].add(idx[e.u])
    found: list[tuple[int, ...]] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            found.append(tuple(sorted(r)))
            return
        pivot = max(sorted(p | x), key=lambda u: len(adj[u] & p))
        for u in sorted(p - adj[pivot]):
            expand(r + [u], p & adj[u], x & adj[u])
            p.discard(u)
            x.add(u)

    expand([], set(range(len(g.vertices))), set())
    return [tuple(g.vertices[i] for i in c) for c in sorted(found)]


def find_clique_supported_cycle(g: MixedGraph) -> CliqueCycleCert | None:
    """Return an oriented cycle whose vertices are pairwise adjacent, or None.

    Any such cycle lives inside some maximal clique, so it is enough to search
    the oriented sub-digraph of each maximal clique.
    """
    for clique in maximal_cliques(g):
        if len(clique) < 3:
            continue
        cycle = find_oriented_cycle(g.induced(clique))
        if cycle is not None:
            return CliqueCycleCert(cycle, tuple(v for v in g.vertices if v in set(cycle.vertices)))
    return None


def source_elimination_order(g: MixedGraph) -> PolyFreeTower | OrientedCycleCert:
    """Peel off sources one at a time, or exhibit the oriented cycle that blocks it.

    When the residual graph has no source, walk backwards along incoming
    oriented edges from its first vertex; finiteness forces a repeat.
    """
    remaining = list(g.vertices)
    alive = set(remaining)
    incoming: dict[str, list[Edge]] = {v: [] for v in g.vertices}
    for e in g.edges:
        if e.oriented:
            incoming[e.v].append(e)

    def blocked(v: str) -> Edge | None:
        return next((e for e in incoming[v] if e.u in alive), None)

    order: list[str] = []
    while remaining:
        src = next((v for v in remaining if blocked(v) is None), None)
        if src is None:
            walk = [remaining[0]]
            via: list[Edge] = []
            seen = {remaining[0]: 0}
            while True:
                e = blocked(walk[-1])
                via.append(e)
                if e.u in seen:
                    # via[k] enters walk[k]; the cycle runs forward along reversed via
                    cyc = via[seen[e.u]:]
                    return OrientedCycleCert(tuple(reversed(cyc)))
                seen[e.u] = len(walk)
                walk.append(e.u)
        order.append(src)
        remaining.remove(src)
        alive.discard(src)
    return PolyFreeTower(tuple(order))
