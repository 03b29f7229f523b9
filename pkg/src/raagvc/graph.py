"""Finite simplicial graphs and the link/star/domination predicates built on them.

Vertices are named by strings; their declaration order fixes the total order
used by every canonical form in the package.  Internally each vertex has an
index ``0..n-1`` and vertex sets are handled as integer bitmasks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ParseError, UnknownVertexError

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]] = frozenset()
    index: dict[str, int] = field(init=False, repr=False, compare=False)
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        object.__setattr__(self, "vertices", vertices)
        index: dict[str, int] = {}
        for i, name in enumerate(vertices):
            if name in index:
                raise ValueError(f"duplicate vertex {name!r}")
            index[name] = i
        edges = frozenset(frozenset(e) for e in self.edges)
        adj = [0] * len(vertices)
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"loop edge {sorted(e)!r}")
            u, v = e
            if u not in index:
                raise UnknownVertexError(u)
            if v not in index:
                raise UnknownVertexError(v)
            adj[index[u]] |= 1 << index[v]
            adj[index[v]] |= 1 << index[u]
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()) -> "Graph":
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))

    # -- basic views -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertex_index(self, v: str | int) -> int:
        if isinstance(v, int):
            if 0 <= v < self.n:
                return v
            raise UnknownVertexError(v)
        try:
            return self.index[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def mask_of(self, vs: Iterable[str | int]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.vertex_index(v)
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        """Vertex names of ``mask`` in vertex order."""
        return tuple(self.vertices[i] for i in iter_bits(mask))

    def sorted_edges(self) -> list[tuple[str, str]]:
        pairs = []
        for e in self.edges:
            u, v = sorted(e, key=self.index.__getitem__)
            pairs.append((u, v))
        pairs.sort(key=lambda p: (self.index[p[0]], self.index[p[1]]))
        return pairs

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, i: int) -> int:
        return bin(self.adj[i]).count("1")

    # -- links, stars, components ----------------------------------------

    def link_mask(self, i: int) -> int:
        return self.adj[i]

    def star_mask(self, i: int) -> int:
        return self.adj[i] | (1 << i)

    def link(self, v: str | int) -> frozenset[str]:
        return frozenset(self.names(self.link_mask(self.vertex_index(v))))

    def star(self, v: str | int) -> frozenset[str]:
        return frozenset(self.names(self.star_mask(self.vertex_index(v))))

    def components_of(self, mask: int) -> list[int]:
        """Connected components of the induced subgraph on ``mask``, ordered by least vertex."""
        comps = []
        remaining = mask
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for j in iter_bits(frontier):
                    nxt |= self.adj[j]
                nxt &= mask & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            remaining &= ~comp
        return comps

    def component_masks(self, i: int) -> tuple[int, ...]:
        return self._component_table[i]

    @cached_property
    def _component_table(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(self.components_of(self.full_mask & ~self.star_mask(i)))
            for i in range(self.n)
        )

    def components_minus_star(self, v: str | int) -> tuple[tuple[str, ...], ...]:
        """Components of Γ ∖ st(v), each listed in vertex order."""
        i = self.vertex_index(v)
        return tuple(self.names(c) for c in self.component_masks(i))

    def dominates(self, v: str | int, w: str | int) -> bool:
        """``v ≥ w``: lk(w) ⊆ st(v), containment read non-strictly."""
        i, j = self.vertex_index(v), self.vertex_index(w)
        return self.link_mask(j) & ~self.star_mask(i) == 0

    def equivalent(self, v: str | int, w: str | int) -> bool:
        return self.dominates(v, w) and self.dominates(w, v)

    def center_mask(self) -> int:
        m = self.full_mask
        for i in range(self.n):
            m &= self.star_mask(i)
        return m

    def center_vertices(self) -> frozenset[str]:
        return frozenset(self.names(self.center_mask()))

    def induced(self, mask: int) -> "Graph":
        keep = self.names(mask)
        keep_set = set(keep)
        return Graph(keep, frozenset(e for e in self.edges if e <= keep_set))

    def gamma_prime(self) -> "Graph":
        """Full subgraph spanned by the non-central vertices."""
        return self.induced(self.full_mask & ~self.center_mask())

    # -- symmetries ------------------------------------------------------

    def graph_automorphisms(self) -> list[tuple[int, ...]]:
        """All edge-preserving vertex permutations, lexicographically ordered.

        ``perm[i]`` is the index of the image of vertex ``i``.  Backtracking
        assigns images vertex by vertex in increasing order, pruning on degree
        and on adjacency to the vertices already placed.
        """
        return list(self._automorphisms)

    @cached_property
    def _automorphisms(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        degrees = [self.degree(i) for i in range(n)]
        out: list[tuple[int, ...]] = []
        perm: list[int] = []
        used = [False] * n

        def extend(i: int) -> None:
            if i == n:
                out.append(tuple(perm))
                return
            for c in range(n):
                if used[c] or degrees[c] != degrees[i]:
                    continue
                if any(self.adjacent(i, k) != self.adjacent(c, perm[k]) for k in range(i)):
                    continue
                used[c] = True
                perm.append(c)
                extend(i + 1)
                perm.pop()
                used[c] = False

        extend(0)
        return tuple(out)

    def __str__(self) -> str:
        edges = " ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"vertices: {' '.join(self.vertices)}\nedges: {edges}".rstrip() + "\n"


def parse_graph(text: str) -> Graph:
    """Read the ``vertices:`` / ``edges:`` text format (``#`` starts a comment line)."""
    vertices: list[str] | None = None
    edge_tokens: list[tuple[str, int]] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("vertices", "edges"):
            raise ParseError(f"malformed line {raw!r}", lineno)
        if key == "vertices":
            if vertices is not None:
                raise ParseError("second 'vertices:' line", lineno)
            vertices = []
            seen = set()
            for tok in rest.split():
                if not NAME_RE.match(tok):
                    raise ParseError(f"bad vertex name {tok!r}", lineno)
                if tok in seen:
                    raise ParseError(f"duplicate vertex {tok!r}", lineno)
                seen.add(tok)
                vertices.append(tok)
        else:
            if edge_tokens is not None:
                raise ParseError("second 'edges:' line", lineno)
            edge_tokens = [(tok, lineno) for tok in rest.split()]
    if vertices is None:
        raise ParseError("missing 'vertices:' line")
    if edge_tokens is None:
        raise ParseError("missing 'edges:' line")
    declared = set(vertices)
    edges = set()
    for tok, lineno in edge_tokens:
        u, sep, v = tok.partition("-")
        if not sep or not NAME_RE.match(u) or not NAME_RE.match(v):
            raise ParseError(f"malformed edge {tok!r}", lineno)
        for end in (u, v):
            if end not in declared:
                raise ParseError(f"edge {tok!r} references undeclared vertex {end!r}", lineno)
        if u == v:
            raise ParseError(f"loop edge {tok!r}", lineno)
        edges.add(frozenset((u, v)))
    return Graph(tuple(vertices), frozenset(edges))


# -- named graph families used throughout the tests and examples --------------

def _names(n: int) -> list[str]:
    return [chr(ord("a") + i) for i in range(n)]


def discrete(n: int) -> Graph:
    return Graph.from_edges(_names(n))


def complete(n: int) -> Graph:
    vs = _names(n)
    return Graph.from_edges(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> Graph:
    vs = _names(n)
    return Graph.from_edges(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    vs = _names(n)
    return Graph.from_edges(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; the hub is the first vertex."""
    vs = _names(leaves + 1)
    return Graph.from_edges(vs, [(vs[0], v) for v in vs[1:]])
