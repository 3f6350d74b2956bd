"""Exact combinatorial graph parameters: alpha, omega, chi, chi_b, chi_f.

Everything here is exact and deterministic: clique/independent-set searches
use branch and bound over bitmasks with label-order tie-breaks, coloring uses
backtracking with clique lower bounds, and the fractional chromatic number is
solved as a rational linear program over all maximal independent sets.
Intended for small graphs (roughly n <= 24; n <= 16 for chi_f).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .graphs import Graph, complement

Rational = Fraction


@dataclass(frozen=True)
class Coloring:
    """A b-fold coloring: every vertex gets exactly b colors from [1..c]."""

    palette: int
    fold: int
    assignment: dict[str, frozenset[int]]

    def is_proper(self, g: Graph) -> bool:
        for v in g.vertices:
            cols = self.assignment.get(v)
            if cols is None or len(cols) != self.fold:
                return False
            if any(c < 1 or c > self.palette for c in cols):
                return False
        for u, v in g.edges:
            if self.assignment[u] & self.assignment[v]:
                return False
        return True


# -- maximum clique / independent set ------------------------------------


def _max_clique_masks(adj: list[int], n: int) -> int:
    """Maximum clique as a bitmask, via branch and bound with a greedy
    coloring bound.  Deterministic: candidates are processed in index order.
    """
    best_mask = 0
    best_size = 0

    def coloring_bound(cand: int) -> int:
        # Number of greedy color classes covering cand; an upper bound on
        # the largest clique inside cand.
        colors = 0
        rest = cand
        while rest:
            colors += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                rest &= ~bit
                avail &= ~(adj[v] | bit)
        return colors

    def expand(current: int, size: int, cand: int):
        nonlocal best_mask, best_size
        if size > best_size:
            best_size, best_mask = size, current
        if not cand or size + coloring_bound(cand) <= best_size:
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            cand &= ~bit
            if size + 1 + bin(cand & adj[v]).count("1") > best_size:
                expand(current | bit, size + 1, cand & adj[v])
            if size + bin(cand).count("1") <= best_size:
                return

    expand(0, 0, (1 << n) - 1)
    return best_mask


def max_clique(g: Graph) -> tuple[str, ...]:
    """A maximum clique, deterministic for a fixed vertex order."""
    if g.n == 0:
        return ()
    mask = _max_clique_masks(g.adjacency_masks, g.n)
    return tuple(v for i, v in enumerate(g.vertices) if mask >> i & 1)


def max_independent_set(g: Graph) -> tuple[str, ...]:
    return max_clique(complement(g))


def alpha(g: Graph) -> int:
    """Independence number (exact)."""
    return len(max_independent_set(g))


def omega(g: Graph) -> int:
    """Clique number, computed as alpha of the complement."""
    return alpha(complement(g))


# -- chromatic number -----------------------------------------------------


def _greedy_coloring(g: Graph) -> dict[str, int]:
    """DSATUR greedy proper coloring (colors 1..c); deterministic."""
    colors: dict[str, int] = {}
    uncolored = set(g.vertices)
    while uncolored:
        def key(v: str):
            sat = len({colors[w] for w in g.adjacency[v] if w in colors})
            return (-sat, -g.degree(v), g.index[v])
        v = min(uncolored, key=key)
        used = {colors[w] for w in g.adjacency[v] if w in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
        uncolored.discard(v)
    return colors


def _exact_coloring(g: Graph, c: int) -> Optional[dict[str, int]]:
    """Backtracking c-coloring; new colors introduced in order (symmetry cut)."""
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), g.index[v]))
    colors: dict[str, int] = {}

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        banned = {colors[w] for w in g.adjacency[v] if w in colors}
        limit = min(c, used + 1)
        for col in range(1, limit + 1):
            if col in banned:
                continue
            colors[v] = col
            if place(i + 1, max(used, col)):
                return True
            del colors[v]
        return False

    return dict(colors) if place(0, 0) else None


def chi_with_coloring(g: Graph) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal proper coloring witness."""
    if g.n == 0:
        return 0, Coloring(0, 1, {})
    lower = omega(g)
    greedy = _greedy_coloring(g)
    upper = max(greedy.values())
    best = greedy
    for c in range(lower, upper):
        attempt = _exact_coloring(g, c)
        if attempt is not None:
            best = attempt
            upper = c
            break
    assignment = {v: frozenset({col}) for v, col in best.items()}
    return upper, Coloring(upper, 1, assignment)


def chi(g: Graph) -> int:
    """Chromatic number (exact, branch and bound with clique lower bound)."""
    return chi_with_coloring(g)[0]


# -- b-fold coloring -------------------------------------------------------


def b_fold_coloring(g: Graph, c: int, b: int) -> Optional[Coloring]:
    """A c:b-coloring (b disjoint colors per vertex across edges) or None.

    Exhaustive backtracking; the first vertex is pinned to {1..b} as a
    symmetry cut.
    """
    if b < 1 or c < b:
        raise ValueError("need c >= b >= 1")
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), g.index[v]))
    assignment: dict[str, frozenset[int]] = {}

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        banned: set[int] = set()
        for w in g.adjacency[v]:
            if w in assignment:
                banned |= assignment[w]
        avail = [col for col in range(1, c + 1) if col not in banned]
        if len(avail) < b:
            return False
        if i == 0:
            choices = [tuple(range(1, b + 1))]
        else:
            choices = combinations(avail, b)
        for combo in choices:
            assignment[v] = frozenset(combo)
            if place(i + 1):
                return True
            del assignment[v]
        return False

    if g.n == 0:
        return Coloring(c, b, {})
    return Coloring(c, b, dict(assignment)) if place(0) else None


def chi_b(g: Graph, b: int) -> int:
    """b-fold chromatic number: smallest c admitting a c:b-coloring."""
    if g.n == 0:
        return 0
    c = max(b, b * omega(g))
    while b_fold_coloring(g, c, b) is None:
        c += 1
    return c


# -- fractional chromatic number ------------------------------------------


def maximal_independent_sets(g: Graph) -> list[frozenset[str]]:
    """All maximal independent sets (Bron-Kerbosch with pivot on non-edges)."""
    n = g.n
    if n == 0:
        return []
    non_adj = [0] * n
    full = (1 << n) - 1
    for i in range(n):
        non_adj[i] = full & ~g.adjacency_masks[i] & ~(1 << i)
    out: list[int] = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        u = (pivot_pool & -pivot_pool).bit_length() - 1
        best_u, best_cnt = u, -1
        pool = pivot_pool
        while pool:
            cand = (pool & -pool).bit_length() - 1
            pool &= pool - 1
            cnt = bin(p & non_adj[cand]).count("1")
            if cnt > best_cnt:
                best_u, best_cnt = cand, cnt
        ext = p & ~non_adj[best_u]
        while ext:
            v = (ext & -ext).bit_length() - 1
            bit = 1 << v
            ext &= ~bit
            bk(r | bit, p & non_adj[v], x & non_adj[v])
            p &= ~bit
            x |= bit

    bk(0, full, 0)
    sets = [frozenset(g.vertices[i] for i in range(n) if m >> i & 1) for m in out]
    sets.sort(key=lambda s: sorted(g.index[v] for v in s))
    return sets


def _simplex_max(table: list[list[Fraction]], n_vars: int) -> Fraction:
    """Primal simplex (Bland's rule) for max c.x s.t. Ax <= b, x >= 0, b >= 0.

    `table` is the standard tableau with the objective row last (negated
    costs) and slack columns already appended; returns the optimal value.
    """
    rows = len(table) - 1
    cols = len(table[0]) - 1
    basis = list(range(n_vars, n_vars + rows))
    while True:
        obj = table[-1]
        piv_col = next((j for j in range(cols) if obj[j] < 0), None)
        if piv_col is None:
            return obj[-1]
        piv_row, best = None, None
        for i in range(rows):
            a = table[i][piv_col]
            if a > 0:
                ratio = table[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[piv_row]):
                    piv_row, best = i, ratio
        if piv_row is None:
            raise ArithmeticError("unbounded linear program")
        piv = table[piv_row][piv_col]
        table[piv_row] = [x / piv for x in table[piv_row]]
        for i in range(rows + 1):
            if i != piv_row and table[i][piv_col] != 0:
                f = table[i][piv_col]
                table[i] = [x - f * y for x, y in zip(table[i], table[piv_row])]
        basis[piv_row] = piv_col


def chi_f(g: Graph) -> Fraction:
    """Fractional chromatic number, exact.

    Solves the fractional clique LP (the dual of the independent-set covering
    LP) in rational arithmetic; by strong duality its optimum equals chi_f.
    """
    if g.n == 0:
        return Fraction(0)
    sets = maximal_independent_sets(g)
    n = g.n
    m = len(sets)
    # maximize sum(y_v) subject to sum_{v in S} y_v <= 1 for each maximal
    # independent set S, y >= 0.  Slack start is feasible because b = 1 >= 0.
    table: list[list[Fraction]] = []
    for S in sets:
        row = [Fraction(1 if v in S else 0) for v in g.vertices]
        row += [Fraction(1 if j == len(table) else 0) for j in range(m)]
        row.append(Fraction(1))
        table.append(row)
    obj = [Fraction(-1)] * n + [Fraction(0)] * m + [Fraction(0)]
    table.append(obj)
    return _simplex_max(table, n)


# -- chordality -----------------------------------------------------------


@dataclass(frozen=True)
class ChordalityReport:
    chordal: bool
    elimination_ordering: Optional[tuple[str, ...]]
    hole: Optional[tuple[str, ...]]


def _mcs_ordering(g: Graph) -> list[str]:
    """Maximum cardinality search; returns a candidate elimination ordering."""
    weight = {v: 0 for v in g.vertices}
    unnumbered = set(g.vertices)
    rev: list[str] = []
    while unnumbered:
        v = min(unnumbered, key=lambda u: (-weight[u], g.index[u]))
        rev.append(v)
        unnumbered.discard(v)
        for w in g.adjacency[v]:
            if w in unnumbered:
                weight[w] += 1
    rev.reverse()
    return rev


def _find_hole(g: Graph) -> Optional[tuple[str, ...]]:
    """An induced cycle of length >= 4, if one exists.

    For every vertex v and non-adjacent pair x, y of its neighbors, a
    shortest x-y path avoiding the rest of N[v] closes an induced cycle
    through v.
    """
    for v in g.vertices:
        nbrs = sorted(g.adjacency[v], key=g.index.__getitem__)
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                if g.has_edge(x, y):
                    continue
                blocked = (g.adjacency[v] | {v}) - {x, y}
                prev = {x: None}
                queue = deque([x])
                while queue:
                    u = queue.popleft()
                    if u == y:
                        break
                    for w in sorted(g.adjacency[u], key=g.index.__getitem__):
                        if w not in prev and w not in blocked:
                            prev[w] = u
                            queue.append(w)
                if y in prev:
                    path = [y]
                    while path[-1] != x:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return tuple([v] + path)
    return None


def is_chordal(g: Graph) -> ChordalityReport:
    """Chordality with a witness: an elimination ordering or an induced hole."""
    order = _mcs_ordering(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        for i, x in enumerate(later):
            for y in later[i + 1:]:
                if not g.has_edge(x, y):
                    hole = _find_hole(g)
                    return ChordalityReport(False, None, hole)
    return ChordalityReport(True, tuple(order), None)
