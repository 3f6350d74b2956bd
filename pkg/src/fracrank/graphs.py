"""Immutable labeled graphs, standard constructions, and graph6 / JSON codecs.

Vertices are string labels kept in declaration order; edges are unordered
label pairs with no loops or multiplicities.  Display follows the 1-based
labels used by the small worked examples ("1".."n" from the generators),
while graph6 parsing yields the canonical labels "0".."n-1".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """A graph serialization could not be decoded."""


def _canonical_edge(u: str, v: str, index: dict[str, int]) -> tuple[str, str]:
    return (u, v) if index[u] < index[v] else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with ordered string vertex labels."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self):
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            seen: set[str] = set()
            for pos, v in enumerate(self.vertices):
                if v in seen:
                    raise GraphFormatError(f"duplicate vertex label {v!r} at position {pos}")
                seen.add(v)
        for e in self.edges:
            u, v = e
            if u not in index or v not in index:
                raise GraphFormatError(f"edge {e} references an undeclared vertex")
            if u == v:
                raise GraphFormatError(f"loop edge at vertex {u!r} is not allowed")
            if index[u] > index[v]:
                raise GraphFormatError(f"edge {e} is not in canonical vertex order")

    @staticmethod
    def build(vertices: Sequence[str], edges: Iterable[Sequence[str]]) -> "Graph":
        """Construct a graph, canonicalizing edge orientation and deduplicating."""
        verts = tuple(str(v) for v in vertices)
        index = {v: i for i, v in enumerate(verts)}
        if len(index) != len(verts):
            seen: set[str] = set()
            for pos, v in enumerate(verts):
                if v in seen:
                    raise GraphFormatError(f"duplicate vertex label {v!r} at position {pos}")
                seen.add(v)
        canon = set()
        for pos, e in enumerate(edges):
            u, v = str(e[0]), str(e[1])
            if u not in index:
                raise GraphFormatError(f"edge #{pos} endpoint {u!r} is not a declared vertex")
            if v not in index:
                raise GraphFormatError(f"edge #{pos} endpoint {v!r} is not a declared vertex")
            if u == v:
                raise GraphFormatError(f"edge #{pos} is a loop at vertex {u!r}")
            canon.add(_canonical_edge(u, v, index))
        return Graph(verts, frozenset(canon))

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def adjacency_masks(self) -> list[int]:
        """Neighbor bitmasks in vertex order (used by the exact searches)."""
        idx = self.index
        masks = [0] * self.n
        for u, v in self.edges:
            masks[idx[u]] |= 1 << idx[v]
            masks[idx[v]] |= 1 << idx[u]
        return masks

    def has_edge(self, u: str, v: str) -> bool:
        if u == v:
            return False
        return _canonical_edge(u, v, self.index) in self.edges

    def neighbors(self, u: str) -> frozenset[str]:
        return self.adjacency[u]

    def degree(self, u: str) -> int:
        return len(self.adjacency[u])

    def sorted_edges(self) -> list[tuple[str, str]]:
        idx = self.index
        return sorted(self.edges, key=lambda e: (idx[e[0]], idx[e[1]]))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph({list(self.vertices)}, {self.sorted_edges()})"


# -- constructions -------------------------------------------------------


def complement(g: Graph) -> Graph:
    """Same vertices; uv is an edge iff u != v and uv is not an edge of g."""
    edges = []
    for i, u in enumerate(g.vertices):
        for v in g.vertices[i + 1:]:
            if not g.has_edge(u, v):
                edges.append((u, v))
    return Graph.build(g.vertices, edges)


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    keep_list = list(keep)
    for v in keep_list:
        if v not in g.index:
            raise GraphFormatError(f"unknown vertex label {v!r}")
    keep_set = set(keep_list)
    verts = tuple(v for v in g.vertices if v in keep_set)
    edges = [e for e in g.edges if e[0] in keep_set and e[1] in keep_set]
    return Graph.build(verts, edges)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Disjoint union; if any label collides, every label is namespaced 'i:label'."""
    all_labels: list[str] = []
    for p in parts:
        all_labels.extend(p.vertices)
    collide = len(set(all_labels)) != len(all_labels)

    def name(i: int, v: str) -> str:
        return f"{i}:{v}" if collide else v

    verts: list[str] = []
    edges: list[tuple[str, str]] = []
    for i, p in enumerate(parts):
        verts.extend(name(i, v) for v in p.vertices)
        edges.extend((name(i, u), name(i, v)) for u, v in p.edges)
    return Graph.build(verts, edges)


def union(g1: Graph, g2: Graph) -> Graph:
    """Union of vertex and edge sets; shared labels denote shared vertices."""
    verts = list(g1.vertices) + [v for v in g2.vertices if v not in g1.index]
    edges = list(g1.edges) + list(g2.edges)
    return Graph.build(verts, edges)


def clique_sum(g1: Graph, g2: Graph, t: int) -> tuple[Graph, tuple[str, ...]]:
    """Union of g1 and g2 whose shared vertices induce a common K_t.

    Returns the glued graph together with the shared clique (the metadata
    callers need to undo or audit the gluing).
    """
    shared = tuple(v for v in g1.vertices if v in g2.index)
    if len(shared) != t:
        raise GraphFormatError(
            f"shared vertex set {shared} has size {len(shared)}, expected t={t}")
    for i, u in enumerate(shared):
        for v in shared[i + 1:]:
            if not g1.has_edge(u, v):
                raise GraphFormatError(f"shared pair ({u},{v}) is not an edge of the first part")
            if not g2.has_edge(u, v):
                raise GraphFormatError(f"shared pair ({u},{v}) is not an edge of the second part")
    return union(g1, g2), shared


def generate(kind: str, n: int) -> Graph:
    """Standard graphs with 1-based labels: path, cycle, complete, empty."""
    if kind == "cycle":
        if n < 3:
            raise GraphFormatError("cycle requires n >= 3")
    elif n < 1:
        raise GraphFormatError(f"{kind} requires n >= 1")
    labels = [str(i) for i in range(1, n + 1)]
    if kind == "path":
        edges = [(labels[i], labels[i + 1]) for i in range(n - 1)]
    elif kind == "cycle":
        edges = [(labels[i], labels[(i + 1) % n]) for i in range(n)]
    elif kind == "complete":
        edges = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    elif kind == "empty":
        edges = []
    else:
        raise GraphFormatError(f"unknown graph kind {kind!r}")
    return Graph.build(labels, edges)


# -- connectivity --------------------------------------------------------


def connected_components(g: Graph) -> list[Graph]:
    """Induced subgraphs on the connected components, in vertex order."""
    seen: set[str] = set()
    comps: list[Graph] = []
    for root in g.vertices:
        if root in seen:
            continue
        stack = [root]
        comp = {root}
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(induced_subgraph(g, [v for v in g.vertices if v in comp]))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def cut_vertex_components(g: Graph, v: str) -> list[Graph]:
    """The induced pieces G[V(H_i) + v] over the components H_i of g - v."""
    if v not in g.index:
        raise GraphFormatError(f"unknown vertex label {v!r}")
    if g.n < 2:
        raise GraphFormatError("graph must have at least 2 vertices")
    if not is_connected(g):
        raise GraphFormatError("graph is not connected")
    rest = induced_subgraph(g, [u for u in g.vertices if u != v])
    pieces = connected_components(rest)
    if len(pieces) < 2:
        raise GraphFormatError(f"vertex {v!r} is not a cut-vertex")
    out = []
    for piece in pieces:
        keep = [u for u in g.vertices if u in piece.index or u == v]
        out.append(induced_subgraph(g, keep))
    return out


# -- edge-list JSON codec -------------------------------------------------


def parse_graph_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise GraphFormatError('expected an object with "vertices" and "edges"')
    verts = doc["vertices"]
    edges = doc["edges"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise GraphFormatError('"vertices" must be a list of strings')
    if not isinstance(edges, list):
        raise GraphFormatError('"edges" must be a list of label pairs')
    for pos, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise GraphFormatError(f"edge #{pos} must be a pair of vertex labels")
    return Graph.build(verts, edges)


def graph_to_json(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_json(doc) -> Graph:
    """Build a graph from an already-decoded edge-list JSON object."""
    return parse_graph_json(json.dumps(doc))


# -- graph6 codec ---------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_decode_size(data: str) -> tuple[int, int]:
    """Return (n, index of first adjacency char)."""
    if not data:
        raise GraphFormatError("empty graph6 string")
    c0 = ord(data[0]) - 63
    if c0 < 0 or c0 > 63:
        raise GraphFormatError(f"invalid graph6 byte at position 0: {data[0]!r}")
    if c0 < 63:
        return c0, 1
    # 126 == '~': extended sizes
    if len(data) >= 2 and data[1] == "~":
        chunk, start = data[2:8], 8
        width = 6
    else:
        chunk, start = data[1:4], 4
        width = 3
    if len(chunk) != width:
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for i, ch in enumerate(chunk):
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise GraphFormatError(f"invalid graph6 byte at position {i + (start - width)}: {ch!r}")
        n = (n << 6) | v
    return n, start


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; vertices become the labels "0".."n-1"."""
    data = text.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    n, start = _g6_decode_size(data)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = data[start:]
    if len(body) < nchars:
        raise GraphFormatError(
            f"truncated graph6 adjacency data: need {nchars} bytes, found {len(body)}")
    if len(body) > nchars:
        raise GraphFormatError(f"trailing data after position {start + nchars}")
    bits: list[int] = []
    for i, ch in enumerate(body):
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise GraphFormatError(f"invalid graph6 byte at position {start + i}: {ch!r}")
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 data")
    labels = [str(i) for i in range(n)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((labels[i], labels[j]))
            k += 1
    return Graph.build(labels, edges)


def to_graph6(g: Graph) -> str:
    """Encode in standard graph6 with the shortest size form."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise GraphFormatError("graph too large for the supported graph6 sizes")
    idx = g.index
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(g.vertices[i], g.vertices[j]) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return head + "".join(chars)


def parse_graph(text: str, fmt: str) -> Graph:
    """Parse a graph in the declared format: 'edge-list-json' or 'graph6'."""
    if fmt == "edge-list-json":
        return parse_graph_json(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise GraphFormatError(f"unknown graph format {fmt!r}")
