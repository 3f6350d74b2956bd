"""Shared test utilities: naive oracles and seeded random generators.

The naive oracles deliberately use straight exhaustive enumeration (subsets
for independent sets and cliques, backtracking over all colorings) so they
are independent of the branch-and-bound engines they check.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from fracrank import (
    Graph,
    Subspace,
    SubspaceRepresentation,
    canonical_faithful_rep,
    chi_with_coloring,
    coloring_to_osr,
    combine_fold,
    complement,
)


def naive_alpha(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for subset in combinations(g.vertices, size):
            if all(not g.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return best


def naive_omega(g: Graph) -> int:
    return naive_alpha(complement(g))


def naive_chi(g: Graph) -> int:
    if g.n == 0:
        return 0
    verts = list(g.vertices)

    def colorable(c: int) -> bool:
        colors: dict[str, int] = {}

        def place(i: int, used: int) -> bool:
            if i == len(verts):
                return True
            v = verts[i]
            banned = {colors[w] for w in g.adjacency[v] if w in colors}
            for col in range(1, min(c, used + 1) + 1):
                if col not in banned:
                    colors[v] = col
                    if place(i + 1, max(used, col)):
                        return True
                    del colors[v]
            return False

        return place(0, 0)

    for c in range(1, g.n + 1):
        if colorable(c):
            return c
    raise AssertionError("unreachable")


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    labels = [str(i) for i in range(1, n + 1)]
    edges = [(labels[i], labels[j])
             for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph.build(labels, edges)


def random_chordal(rng: np.random.Generator, n_target: int) -> Graph:
    """Chordal graph grown by clique-summing complete graphs."""
    k0 = int(rng.integers(1, 4))
    verts = [str(i) for i in range(k0)]
    edges = [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:]]
    nxt = k0
    while len(verts) < n_target:
        clique_size = int(rng.integers(1, 4))
        # pick an existing clique to share: a subset of one vertex's closed
        # neighborhood that is itself a clique (grown greedily)
        base = verts[int(rng.integers(0, len(verts)))]
        shared = [base]
        adj = {v: set() for v in verts}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        cands = list(adj[base])
        rng.shuffle(cands)
        for c in cands:
            if len(shared) >= clique_size:
                break
            if all(c in adj[s] or c == s for s in shared):
                shared.append(c)
        fresh_count = max(1, int(rng.integers(1, 4)))
        fresh = [str(nxt + i) for i in range(fresh_count)]
        nxt += fresh_count
        newpart = shared + fresh
        verts.extend(fresh)
        for i, u in enumerate(newpart):
            for v in newpart[i + 1:]:
                if (u, v) not in edges and (v, u) not in edges:
                    edges.append((u, v))
    return Graph.build(verts[:], edges)


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rotate_rep(rep: SubspaceRepresentation, u: np.ndarray) -> SubspaceRepresentation:
    assignment = {v: Subspace(u @ rep.basis(v)) for v in rep.graph.vertices}
    return SubspaceRepresentation(rep.graph, rep.d, rep.r, assignment, rep.faithful)


def random_osr(rng: np.random.Generator, g: Graph, r: int) -> SubspaceRepresentation:
    """A verified plain certificate: coloring-based, then randomly rotated."""
    _, col = chi_with_coloring(g)
    rep = coloring_to_osr(g, col, r)
    return rotate_rep(rep, random_unitary(rng, rep.d))


def random_fosr(rng: np.random.Generator, g: Graph, r: int) -> SubspaceRepresentation:
    """A verified faithful certificate: folded canonical reps, rotated."""
    rep = canonical_faithful_rep(g)
    out = rep
    for _ in range(r - 1):
        out = combine_fold(out, rep)
    return rotate_rep(out, random_unitary(rng, out.d))
