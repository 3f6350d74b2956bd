"""Certificates assigning subspaces or projectors to graph vertices.

Two certificate families live here, each with a plain and a faithful
variant:

* subspace representations: every vertex gets an r-dimensional subspace of
  C^d; edges must be orthogonal (plain), or orthogonality must hold exactly
  on non-edges (faithful);
* projective representations: every vertex gets a rank-r orthogonal
  projector; products vanish on edges (plain) or exactly on non-edges
  (faithful).

Faithfulness is a declared flag, never inferred: the same assignment can be
a valid plain certificate for one graph and an invalid faithful certificate
for another, so objects are checked against the semantics they claim.

All constructive transformations (folding, padding, stacking, clique
standardization and gluing, coloring-derived certificates, and the k-fold
faithful construction) verify their output before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

import numpy as np

from .graphs import (
    Graph,
    clique_sum,
    complement,
    disjoint_union,
    graph_from_json,
    graph_to_json,
)
from .invariants import Coloring
from .linalg import (
    DEFAULT_TOL,
    Subspace,
    Tolerances,
    align_to_standard,
    as_cmatrix,
    basis_from_projector,
    direct_sum,
    frobenius,
    gram,
    matrix_from_json,
    matrix_to_json,
    orthonormalize,
    projector_from_basis,
    psd_factor,
)


@dataclass(frozen=True)
class Violation:
    where: tuple[str, ...]
    condition: str
    residual: float


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple[Violation, ...]

    @staticmethod
    def from_violations(violations: Sequence[Violation]) -> "VerificationReport":
        vs = tuple(violations)
        return VerificationReport(not vs, vs)

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [
                {"where": list(v.where), "condition": v.condition, "residual": v.residual}
                for v in self.violations
            ],
        }


@dataclass(frozen=True, eq=False)
class SubspaceRepresentation:
    """A (d; r) assignment of subspaces to the vertices of a graph."""

    graph: Graph
    d: int
    r: int
    assignment: Mapping[str, Subspace]
    faithful: bool

    def basis(self, v: str) -> np.ndarray:
        return self.assignment[v].basis

    def kind(self) -> str:
        return "fosr" if self.faithful else "osr"


@dataclass(frozen=True, eq=False)
class ProjectiveRepresentation:
    """A d/r assignment of rank-r projectors to the vertices of a graph."""

    graph: Graph
    d: int
    r: int
    assignment: Mapping[str, np.ndarray]
    faithful: bool

    def projector(self, v: str) -> np.ndarray:
        return self.assignment[v]

    def kind(self) -> str:
        return "faithful-projective" if self.faithful else "projective"


# -- verification ----------------------------------------------------------


def _subspace_structure(rep: SubspaceRepresentation, tol: Tolerances) -> list[Violation]:
    out: list[Violation] = []
    for v in rep.graph.vertices:
        sub = rep.assignment.get(v)
        if sub is None:
            out.append(Violation((v,), "missing-vertex", float("inf")))
            continue
        if sub.d != rep.d:
            out.append(Violation((v,), "ambient-dimension", float(abs(sub.d - rep.d))))
            continue
        if sub.r != rep.r:
            out.append(Violation((v,), "subspace-dimension", float(abs(sub.r - rep.r))))
            continue
        defect = sub.orthonormality_defect()
        if defect > tol.orth_tol:
            out.append(Violation((v,), "orthonormality", defect))
    return out


def _pair_residual(rep: SubspaceRepresentation, u: str, v: str) -> float:
    return frobenius(rep.basis(u).conj().T @ rep.basis(v))


def verify_osr(rep: SubspaceRepresentation, tol: Tolerances = DEFAULT_TOL) -> VerificationReport:
    """Edges must receive orthogonal subspaces."""
    if rep.faithful:
        raise ValueError("certificate declares faithful semantics; use verify_fosr")
    out = _subspace_structure(rep, tol)
    if not out:
        zero = tol.orth_tol * rep.r
        for u, v in rep.graph.sorted_edges():
            resid = _pair_residual(rep, u, v)
            if resid > zero:
                out.append(Violation((u, v), "edge-orthogonality", resid))
    return VerificationReport.from_violations(out)


def verify_fosr(rep: SubspaceRepresentation, tol: Tolerances = DEFAULT_TOL) -> VerificationReport:
    """Subspaces must be orthogonal exactly on non-edges."""
    if not rep.faithful:
        raise ValueError("certificate declares plain semantics; use verify_osr")
    out = _subspace_structure(rep, tol)
    if not out:
        zero = tol.orth_tol * rep.r
        verts = rep.graph.vertices
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                resid = _pair_residual(rep, u, v)
                if rep.graph.has_edge(u, v):
                    if resid <= tol.orth_tol:
                        out.append(Violation((u, v), "edge-nonorthogonality", resid))
                elif resid > zero:
                    out.append(Violation((u, v), "nonedge-orthogonality", resid))
    return VerificationReport.from_violations(out)


def _projector_structure(rep: ProjectiveRepresentation, tol: Tolerances) -> list[Violation]:
    out: list[Violation] = []
    scale = max(1.0, float(np.sqrt(rep.d)))
    for v in rep.graph.vertices:
        p = rep.assignment.get(v)
        if p is None:
            out.append(Violation((v,), "missing-vertex", float("inf")))
            continue
        p = as_cmatrix(p)
        if p.shape != (rep.d, rep.d):
            out.append(Violation((v,), "shape", float("inf")))
            continue
        herm = frobenius(p - p.conj().T)
        if herm > tol.orth_tol:
            out.append(Violation((v,), "hermitian", herm))
            continue
        idem = frobenius(p @ p - p)
        if idem > tol.orth_tol * scale:
            out.append(Violation((v,), "idempotent", idem))
            continue
        eigs = np.linalg.eigvalsh((p + p.conj().T) / 2)
        got = int(np.sum(eigs > 0.5))
        if got != rep.r:
            out.append(Violation((v,), "rank", float(abs(got - rep.r))))
    return out


def verify_projective(rep: ProjectiveRepresentation,
                      tol: Tolerances = DEFAULT_TOL) -> VerificationReport:
    """Rank-r projectors whose products vanish on edges."""
    if rep.faithful:
        raise ValueError("certificate declares faithful semantics; "
                         "use verify_faithful_projective")
    out = _projector_structure(rep, tol)
    if not out:
        zero = tol.orth_tol * rep.r
        for u, v in rep.graph.sorted_edges():
            resid = frobenius(rep.assignment[u] @ rep.assignment[v])
            if resid > zero:
                out.append(Violation((u, v), "edge-product", resid))
    return VerificationReport.from_violations(out)


def verify_faithful_projective(rep: ProjectiveRepresentation,
                               tol: Tolerances = DEFAULT_TOL) -> VerificationReport:
    """Projector products vanish exactly on non-edges."""
    if not rep.faithful:
        raise ValueError("certificate declares plain semantics; use verify_projective")
    out = _projector_structure(rep, tol)
    if not out:
        zero = tol.orth_tol * rep.r
        verts = rep.graph.vertices
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                resid = frobenius(rep.assignment[u] @ rep.assignment[v])
                if rep.graph.has_edge(u, v):
                    if resid <= tol.orth_tol:
                        out.append(Violation((u, v), "edge-product-vanishes", resid))
                elif resid > zero:
                    out.append(Violation((u, v), "nonedge-product", resid))
    return VerificationReport.from_violations(out)


def verify(rep, tol: Tolerances = DEFAULT_TOL) -> VerificationReport:
    """Dispatch to the verifier matching the certificate type and flag."""
    if isinstance(rep, SubspaceRepresentation):
        return verify_fosr(rep, tol) if rep.faithful else verify_osr(rep, tol)
    if isinstance(rep, ProjectiveRepresentation):
        if rep.faithful:
            return verify_faithful_projective(rep, tol)
        return verify_projective(rep, tol)
    if isinstance(rep, FoldedFaithfulRepresentation):
        return rep.verify(tol)
    raise TypeError(f"not a certificate: {type(rep).__name__}")


def _require_valid(rep, tol: Tolerances, what: str):
    report = verify(rep, tol)
    if not report.valid:
        first = report.violations[0]
        raise ValueError(
            f"{what} fails verification: {first.condition} at {first.where} "
            f"(residual {first.residual:.3e}; {len(report.violations)} violation(s))")


# -- conversions -----------------------------------------------------------


def osr_to_projective(rep: SubspaceRepresentation,
                      tol: Tolerances = DEFAULT_TOL) -> ProjectiveRepresentation:
    """P_u = X_u X_u*; keeps the faithful flag."""
    _require_valid(rep, tol, "input representation")
    assignment = {v: projector_from_basis(rep.assignment[v]) for v in rep.graph.vertices}
    return ProjectiveRepresentation(rep.graph, rep.d, rep.r, assignment, rep.faithful)


def projective_to_osr(rep: ProjectiveRepresentation,
                      tol: Tolerances = DEFAULT_TOL) -> SubspaceRepresentation:
    """S_u = range(P_u); keeps the faithful flag."""
    _require_valid(rep, tol, "input representation")
    assignment = {v: basis_from_projector(rep.assignment[v], tol) for v in rep.graph.vertices}
    return SubspaceRepresentation(rep.graph, rep.d, rep.r, assignment, rep.faithful)


# -- constructions ----------------------------------------------------------


def combine_fold(rep_a: SubspaceRepresentation, rep_b: SubspaceRepresentation,
                 tol: Tolerances = DEFAULT_TOL) -> SubspaceRepresentation:
    """Block-diagonal fold: (d_a; r_a) and (d_b; r_b) into (d_a+d_b; r_a+r_b).

    For faithful inputs the fold stays faithful: on an edge either diagonal
    block is already nonzero, and on a non-edge both vanish.
    """
    if rep_a.graph != rep_b.graph:
        raise ValueError("representations are over different graphs")
    if rep_a.faithful != rep_b.faithful:
        raise ValueError("faithful flags disagree")
    _require_valid(rep_a, tol, "first input")
    _require_valid(rep_b, tol, "second input")
    assignment = {
        v: Subspace(direct_sum([rep_a.basis(v), rep_b.basis(v)]))
        for v in rep_a.graph.vertices
    }
    out = SubspaceRepresentation(rep_a.graph, rep_a.d + rep_b.d, rep_a.r + rep_b.r,
                                 assignment, rep_a.faithful)
    _require_valid(out, tol, "folded output")
    return out


def pad_disjoint_union(parts: Sequence[SubspaceRepresentation],
                       tol: Tolerances = DEFAULT_TOL) -> SubspaceRepresentation:
    """Plain representation of the disjoint union, in ambient dim max_i d_i.

    Faithful inputs are rejected: padding makes cross-component pairs
    orthogonal, which is what plain semantics wants on the (absent) cross
    edges, but a faithful disjoint union must instead go through fit-matrix
    direct sums.
    """
    if not parts:
        raise ValueError("need at least one part")
    r = parts[0].r
    for p in parts:
        if p.faithful:
            raise ValueError("padding applies to plain (non-faithful) representations only")
        if p.r != r:
            raise ValueError("parts have different subspace dimensions")
        _require_valid(p, tol, "input part")
    big = disjoint_union([p.graph for p in parts])
    d = max(p.d for p in parts)
    collide = len({v for p in parts for v in p.graph.vertices}) != sum(
        p.graph.n for p in parts)
    assignment: dict[str, Subspace] = {}
    for i, p in enumerate(parts):
        for v in p.graph.vertices:
            label = f"{i}:{v}" if collide else v
            x = p.basis(v)
            padded = np.vstack([x, np.zeros((d - p.d, r), dtype=np.complex128)])
            assignment[label] = Subspace(padded)
    out = SubspaceRepresentation(big, d, r, assignment, False)
    _require_valid(out, tol, "padded union output")
    return out


def stack_union(rep1: SubspaceRepresentation, rep2: SubspaceRepresentation,
                g: Graph, tol: Tolerances = DEFAULT_TOL) -> SubspaceRepresentation:
    """Plain representation of g = G1 (union) G2 by stacking shared vertices.

    Shared vertices get [X^1_u; X^2_u] / sqrt(2) (the stacked block has Gram
    2I, so the scaling restores orthonormal columns); exclusive vertices are
    zero-padded on the other side.
    """
    if rep1.faithful or rep2.faithful:
        raise ValueError("stacking applies to plain (non-faithful) representations only")
    if rep1.r != rep2.r:
        raise ValueError("subspace dimensions differ")
    g1, g2 = rep1.graph, rep2.graph
    if set(g.vertices) != set(g1.vertices) | set(g2.vertices):
        raise ValueError("g is not the union of the two vertex sets")
    def undirected(edges):
        return {frozenset(e) for e in edges}
    if undirected(g.edges) != undirected(g1.edges) | undirected(g2.edges):
        raise ValueError("g is not the union of the two edge sets")
    for gi in (g1, g2):
        for i, u in enumerate(gi.vertices):
            for v in gi.vertices[i + 1:]:
                if g.has_edge(u, v) != gi.has_edge(u, v):
                    raise ValueError(f"part is not induced in g (pair {u},{v})")
    _require_valid(rep1, tol, "first input")
    _require_valid(rep2, tol, "second input")
    r = rep1.r
    d1, d2 = rep1.d, rep2.d
    assignment: dict[str, Subspace] = {}
    for v in g.vertices:
        top = rep1.basis(v) if v in g1.index else np.zeros((d1, r), dtype=np.complex128)
        bot = rep2.basis(v) if v in g2.index else np.zeros((d2, r), dtype=np.complex128)
        x = np.vstack([top, bot])
        if v in g1.index and v in g2.index:
            x = x / np.sqrt(2.0)
        assignment[v] = Subspace(x)
    out = SubspaceRepresentation(g, d1 + d2, r, assignment, False)
    _require_valid(out, tol, "stacked union output")
    return out


def standardize_clique(rep: SubspaceRepresentation, clique: Sequence[str],
                       tol: Tolerances = DEFAULT_TOL) -> SubspaceRepresentation:
    """Rotate so clique vertex #i spans coordinates (i-1)r+1 .. ir.

    A single unitary is applied to every subspace, so all pairwise inner
    products (and hence the verification verdict) are preserved.
    """
    clique = list(clique)
    g = rep.graph
    for i, u in enumerate(clique):
        if u not in g.index:
            raise ValueError(f"unknown clique vertex {u!r}")
        for v in clique[i + 1:]:
            if not g.has_edge(u, v):
                raise ValueError(f"vertices {u!r}, {v!r} are not adjacent: not a clique")
    t = len(clique)
    if rep.d < rep.r * t:
        raise ValueError(f"ambient dimension {rep.d} below r*t = {rep.r * t}")
    _require_valid(rep, tol, "input representation")
    m = np.hstack([rep.basis(u) for u in clique]) if t else np.zeros(
        (rep.d, 0), dtype=np.complex128)
    u_rot = align_to_standard(m, tol)
    assignment = {v: Subspace(u_rot @ rep.basis(v)) for v in g.vertices}
    out = SubspaceRepresentation(g, rep.d, rep.r, assignment, rep.faithful)
    _require_valid(out, tol, "standardized output")
    return out


def glue_clique_sum(rep1: SubspaceRepresentation, rep2: SubspaceRepresentation,
                    clique: Sequence[str],
                    tol: Tolerances = DEFAULT_TOL) -> SubspaceRepresentation:
    """Plain representation of the clique-sum, in ambient dim max(d1, d2).

    Both inputs are rotated so the shared clique sits on the standard
    coordinates; the clique then agrees across parts and everything merges.
    """
    if rep1.faithful or rep2.faithful:
        raise ValueError("clique-sum gluing applies to plain representations only")
    if rep1.r != rep2.r:
        raise ValueError("subspace dimensions differ")
    clique = list(clique)
    g1, g2 = rep1.graph, rep2.graph
    shared = set(g1.vertices) & set(g2.vertices)
    if shared != set(clique):
        raise ValueError(f"shared vertices {sorted(shared)} differ from the given clique")
    _require_valid(rep1, tol, "first input")
    _require_valid(rep2, tol, "second input")
    std1 = standardize_clique(rep1, clique, tol) if clique else rep1
    std2 = standardize_clique(rep2, clique, tol) if clique else rep2
    glued, _ = clique_sum(g1, g2, len(clique))
    d = max(rep1.d, rep2.d)
    r = rep1.r

    def pad(x: np.ndarray, dim: int) -> np.ndarray:
        return np.vstack([x, np.zeros((d - dim, r), dtype=np.complex128)])

    assignment: dict[str, Subspace] = {}
    for v in glued.vertices:
        if v in g1.index:
            assignment[v] = Subspace(pad(std1.basis(v), rep1.d))
        else:
            assignment[v] = Subspace(pad(std2.basis(v), rep2.d))
    out = SubspaceRepresentation(glued, d, r, assignment, False)
    _require_valid(out, tol, "glued output")
    return out


def coloring_to_osr(g: Graph, col: Coloring, r: int,
                    tol: Tolerances = DEFAULT_TOL) -> SubspaceRepresentation:
    """Proper c-coloring into an (rc; r) plain representation.

    Color class j spans standard coordinates (j-1)r+1 .. jr, witnessing that
    the r-fold parameter is at most r times the chromatic number.
    """
    if col.fold != 1:
        raise ValueError("need a 1-fold coloring")
    if not col.is_proper(g):
        raise ValueError("coloring is not a proper coloring of the graph")
    c = col.palette
    d = r * c
    eye = np.eye(d, dtype=np.complex128)
    assignment = {}
    for v in g.vertices:
        (j,) = col.assignment[v]
        assignment[v] = Subspace(eye[:, (j - 1) * r: j * r])
    out = SubspaceRepresentation(g, d, r, assignment, False)
    _require_valid(out, tol, "coloring-derived output")
    return out


def canonical_faithful_rep(g: Graph, tol: Tolerances = DEFAULT_TOL) -> SubspaceRepresentation:
    """A guaranteed (n; 1) faithful representation from I + t*Adjacency.

    With t = 1 / (2 max(1, lambda_max)) the matrix is positive definite with
    unit diagonal and is nonzero exactly on edges, so its Gram factor columns
    give unit vectors with the faithful orthogonality pattern.
    """
    n = g.n
    if n == 0:
        return SubspaceRepresentation(g, 1, 1, {}, True)
    adj = np.zeros((n, n), dtype=np.complex128)
    for u, v in g.edges:
        i, j = g.index[u], g.index[v]
        adj[i, j] = adj[j, i] = 1.0
    lam = float(np.linalg.eigvalsh(adj)[-1]) if g.edges else 0.0
    t = 1.0 / (2.0 * max(1.0, lam))
    a = np.eye(n, dtype=np.complex128) + t * adj
    x = psd_factor(a, tol)
    assignment = {v: Subspace(x[:, g.index[v]].reshape(-1, 1)) for v in g.vertices}
    out = SubspaceRepresentation(g, x.shape[0], 1, assignment, True)
    _require_valid(out, tol, "canonical faithful output")
    return out


# -- the k-fold faithful construction ---------------------------------------


def choose_k(d: int, r: int, b: int, eps: float) -> int:
    """Smallest positive integer strictly exceeding (|d-rb| / (r^2 eps) - 1/r).

    Guarantees |d/r - (kd+b)/(kr+1)| < eps; exact rational arithmetic keeps
    the choice deterministic.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if r > d or r < 1 or b < 1:
        raise ValueError("need 1 <= r <= d and b >= 1")
    bound = Fraction(abs(d - r * b)) / (r * r * Fraction(eps)) - Fraction(1, r)
    if bound < 1:
        return 1
    return int(bound) + 1  # floor(bound) + 1: smallest integer strictly above


@dataclass(frozen=True, eq=False)
class FoldedFaithfulRepresentation:
    """k copies of a plain projective rep of the complement, plus one
    faithful b/1 base: Q_u = (P_u oplus ... oplus P_u) oplus R_u.

    Stored in factored form; products, ranks, and projector conditions all
    decompose over the direct sum, so verification never materializes the
    (kd+b) x (kd+b) matrices.
    """

    graph: Graph
    k: int
    complement_rep: ProjectiveRepresentation
    base: ProjectiveRepresentation

    @property
    def d(self) -> int:
        return self.k * self.complement_rep.d + self.base.d

    @property
    def r(self) -> int:
        return self.k * self.complement_rep.r + 1

    @property
    def value(self) -> Fraction:
        return Fraction(self.d, self.r)

    def kind(self) -> str:
        return "folded-faithful-projective"

    def verify(self, tol: Tolerances = DEFAULT_TOL) -> VerificationReport:
        out: list[Violation] = []
        if self.complement_rep.graph != complement(self.graph):
            out.append(Violation((), "complement-graph-mismatch", float("inf")))
        if self.base.graph != self.graph:
            out.append(Violation((), "base-graph-mismatch", float("inf")))
        if self.base.r != 1:
            out.append(Violation((), "base-rank", float(self.base.r)))
        if not self.base.faithful or self.complement_rep.faithful:
            out.append(Violation((), "flag-mismatch", float("inf")))
        if out:
            return VerificationReport.from_violations(out)
        out.extend(_projector_structure(self.complement_rep, tol))
        out.extend(_projector_structure(self.base, tol))
        if out:
            return VerificationReport.from_violations(out)
        zero = tol.orth_tol * self.r
        verts = self.graph.vertices
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                pp = frobenius(self.complement_rep.assignment[u]
                               @ self.complement_rep.assignment[v])
                rr = frobenius(self.base.assignment[u] @ self.base.assignment[v])
                resid = float(np.sqrt(self.k * pp * pp + rr * rr))
                if self.graph.has_edge(u, v):
                    if resid <= tol.orth_tol:
                        out.append(Violation((u, v), "edge-product-vanishes", resid))
                elif resid > zero:
                    out.append(Violation((u, v), "nonedge-product", resid))
        return VerificationReport.from_violations(out)

    def to_projective(self, max_dim: int = 600) -> ProjectiveRepresentation:
        """Materialize the dense projectors (guarded: dimension can be huge)."""
        if self.d > max_dim:
            raise ValueError(
                f"materializing would create {self.d}x{self.d} projectors; "
                f"raise max_dim to force")
        assignment = {}
        for v in self.graph.vertices:
            blocks = [self.complement_rep.assignment[v]] * self.k + [self.base.assignment[v]]
            assignment[v] = direct_sum(blocks)
        return ProjectiveRepresentation(self.graph, self.d, self.r, assignment, True)


def faithful_from_pair(p: ProjectiveRepresentation, rf: ProjectiveRepresentation,
                       eps: float,
                       tol: Tolerances = DEFAULT_TOL) -> FoldedFaithfulRepresentation:
    """Faithful (kd+b)/(kr+1) representation within eps of the value d/r.

    `p` is a plain d/r representation of the complement of the target graph;
    `rf` is a faithful b/1 representation of the target graph itself.
    """
    g = rf.graph
    if p.graph != complement(g):
        raise ValueError("first input is not a representation of the complement graph")
    if rf.r != 1:
        raise ValueError("faithful base must have rank 1")
    _require_valid(p, tol, "complement representation")
    _require_valid(rf, tol, "faithful base")
    k = choose_k(p.d, p.r, rf.d, eps)
    out = FoldedFaithfulRepresentation(g, k, p, rf)
    gap = abs(Fraction(p.d, p.r) - out.value)
    if gap >= Fraction(eps):
        raise AssertionError(f"value gap {gap} not within eps; k selection broken")
    report = out.verify(tol)
    if not report.valid:
        first = report.violations[0]
        raise ValueError(f"folded output fails verification: {first.condition} at {first.where}")
    return out


# -- fixtures ----------------------------------------------------------------


def _p4() -> Graph:
    return Graph.build(["1", "2", "3", "4"], [["1", "2"], ["2", "3"], ["3", "4"]])


def fixture_p4_fosr(r: int) -> SubspaceRepresentation:
    """The explicit (2r+1; r) faithful ladder certificate for the 4-path.

    For r >= 2 the four subspaces are overlapping standard-coordinate
    windows.  The window construction degenerates at r = 1 (the first two
    windows stop overlapping), so that case uses a hand-checked triple of
    tilted unit vectors in C^3.
    """
    if r < 1:
        raise ValueError("r must be positive")
    g = _p4()
    d = 2 * r + 1
    if r == 1:
        s = np.sqrt(0.5)
        vecs = {
            "1": [1, 0, 0],
            "2": [s, s, 0],
            "3": [0, s, s],
            "4": [0, 0, 1],
        }
        assignment = {
            v: Subspace(np.array(vec, dtype=np.complex128).reshape(3, 1))
            for v, vec in vecs.items()
        }
        return SubspaceRepresentation(g, 3, 1, assignment, True)
    eye = np.eye(d, dtype=np.complex128)
    windows = {
        "1": (0, r),
        "2": (1, r + 1),
        "3": (r, 2 * r),
        "4": (r + 1, 2 * r + 1),
    }
    assignment = {v: Subspace(eye[:, a:b]) for v, (a, b) in windows.items()}
    return SubspaceRepresentation(g, d, r, assignment, True)


def fixture_p4_osr(r: int) -> SubspaceRepresentation:
    """The (2r; r) plain certificate for the 4-path: S1 = S3, S2 = S4."""
    if r < 1:
        raise ValueError("r must be positive")
    g = _p4()
    d = 2 * r
    eye = np.eye(d, dtype=np.complex128)
    low = Subspace(eye[:, :r])
    high = Subspace(eye[:, r:])
    assignment = {"1": low, "3": low, "2": high, "4": high}
    return SubspaceRepresentation(g, d, r, assignment, False)


# -- JSON --------------------------------------------------------------------


def rep_to_json(rep) -> dict:
    if isinstance(rep, SubspaceRepresentation):
        return {
            "kind": rep.kind(),
            "graph": graph_to_json(rep.graph),
            "d": rep.d,
            "r": rep.r,
            "assignment": {v: matrix_to_json(rep.basis(v)) for v in rep.graph.vertices},
        }
    if isinstance(rep, ProjectiveRepresentation):
        return {
            "kind": rep.kind(),
            "graph": graph_to_json(rep.graph),
            "d": rep.d,
            "r": rep.r,
            "assignment": {v: matrix_to_json(rep.projector(v)) for v in rep.graph.vertices},
        }
    if isinstance(rep, FoldedFaithfulRepresentation):
        return {
            "kind": rep.kind(),
            "graph": graph_to_json(rep.graph),
            "d": rep.d,
            "r": rep.r,
            "k": rep.k,
            "complement": rep_to_json(rep.complement_rep),
            "base": rep_to_json(rep.base),
        }
    raise TypeError(f"not a certificate: {type(rep).__name__}")


def rep_from_json(doc: dict):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValueError('certificate JSON must be an object with a "kind"')
    kind = doc["kind"]
    if kind == "folded-faithful-projective":
        graph = graph_from_json(doc["graph"])
        inner = rep_from_json(doc["complement"])
        base = rep_from_json(doc["base"])
        return FoldedFaithfulRepresentation(graph, int(doc["k"]), inner, base)
    if kind not in ("osr", "fosr", "projective", "faithful-projective"):
        raise ValueError(f"unknown certificate kind {kind!r}")
    graph = graph_from_json(doc["graph"])
    d, r = int(doc["d"]), int(doc["r"])
    faithful = kind in ("fosr", "faithful-projective")
    raw = doc["assignment"]
    if set(raw) != set(graph.vertices):
        raise ValueError("assignment labels do not match the graph vertices")
    if kind in ("osr", "fosr"):
        assignment = {v: Subspace(matrix_from_json(raw[v])) for v in graph.vertices}
        return SubspaceRepresentation(graph, d, r, assignment, faithful)
    assignment_p = {v: matrix_from_json(raw[v]) for v in graph.vertices}
    return ProjectiveRepresentation(graph, d, r, assignment_p, faithful)
