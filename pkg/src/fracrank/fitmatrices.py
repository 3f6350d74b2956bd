"""Block matrices that fit a graph: the PSD-matrix view of faithful
subspace representations.

An nr x nr Hermitian matrix, read as n x n blocks of size r x r, *r-fits* a
graph when its diagonal blocks are identities and an off-diagonal block is
nonzero exactly when the corresponding pair is an edge.  *Weak* fitting
relaxes the diagonal to strictly positive diagonal blocks; a diagonal
congruence renormalizes a weak fit without touching rank or zero pattern.
Gram factorization moves back and forth between fitting matrices and
faithful subspace representations, and direct sums / positive combinations
realize the disjoint-union and union constructions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, disjoint_union, graph_from_json, graph_to_json
from .linalg import (
    DEFAULT_TOL,
    Subspace,
    Tolerances,
    as_cmatrix,
    frobenius,
    is_psd,
    matrix_from_json,
    matrix_to_json,
    psd_factor,
    rank,
)
from .representations import (
    SubspaceRepresentation,
    VerificationReport,
    Violation,
    verify_fosr,
)


class BetaSearchExhausted(RuntimeError):
    """The union combination could not find a cancellation-free coefficient."""


@dataclass(frozen=True, eq=False)
class FitMatrix:
    """An nr x nr matrix paired with its graph and block size r."""

    graph: Graph
    r: int
    matrix: np.ndarray

    def __post_init__(self):
        m = as_cmatrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        want = self.graph.n * self.r
        if m.shape != (want, want):
            raise ValueError(f"matrix shape {m.shape} does not match n*r = {want}")

    def block(self, u: str, v: str) -> np.ndarray:
        i, j, r = self.graph.index[u], self.graph.index[v], self.r
        return self.matrix[i * r:(i + 1) * r, j * r:(j + 1) * r]


@dataclass(frozen=True, eq=False)
class BlockScaling:
    """Per-vertex positive diagonal r x r blocks (one diagonal per vertex)."""

    diagonals: dict[str, np.ndarray]

    def __post_init__(self):
        for v, diag in self.diagonals.items():
            if np.any(np.asarray(diag).real <= 0) or np.any(np.abs(np.asarray(diag).imag) > 0):
                raise ValueError(f"scaling block at {v!r} is not strictly positive")


def _pattern_violations(fm: FitMatrix, tol: Tolerances, weak: bool) -> list[Violation]:
    out: list[Violation] = []
    g, r = fm.graph, fm.r
    herm = frobenius(fm.matrix - fm.matrix.conj().T)
    if herm > tol.orth_tol * max(1.0, np.sqrt(fm.matrix.shape[0])):
        out.append(Violation((), "hermitian", herm))
    eye = np.eye(r)
    for v in g.vertices:
        b = fm.block(v, v)
        if weak:
            off = frobenius(b - np.diag(np.diag(b)))
            if off > tol.orth_tol:
                out.append(Violation((v,), "diagonal-block-not-diagonal", off))
                continue
            entries = np.diag(b).real
            if np.min(entries) <= tol.orth_tol:
                out.append(Violation((v,), "diagonal-entry-not-positive", float(np.min(entries))))
        else:
            resid = frobenius(b - eye)
            if resid > tol.orth_tol:
                out.append(Violation((v,), "diagonal-block-not-identity", resid))
    verts = g.vertices
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            resid = frobenius(fm.block(u, v))
            if g.has_edge(u, v):
                if resid <= tol.orth_tol:
                    out.append(Violation((u, v), "edge-block-zero", resid))
            elif resid > tol.orth_tol:
                out.append(Violation((u, v), "nonedge-block-nonzero", resid))
    return out


def r_fits(fm: FitMatrix, tol: Tolerances = DEFAULT_TOL) -> VerificationReport:
    """Identity diagonal blocks; off-diagonal blocks follow the edge pattern."""
    return VerificationReport.from_violations(_pattern_violations(fm, tol, weak=False))


def weakly_r_fits(fm: FitMatrix, tol: Tolerances = DEFAULT_TOL) -> VerificationReport:
    """Positive diagonal blocks; off-diagonal blocks follow the edge pattern."""
    return VerificationReport.from_violations(_pattern_violations(fm, tol, weak=True))


def block_scaling_of(fm: FitMatrix, tol: Tolerances = DEFAULT_TOL) -> BlockScaling:
    """The inverse square roots of the diagonal blocks of a weak fit."""
    report = weakly_r_fits(fm, tol)
    if not report.valid:
        first = report.violations[0]
        raise ValueError(f"matrix does not weakly fit: {first.condition} at {first.where}")
    diags = {}
    for v in fm.graph.vertices:
        entries = np.diag(fm.block(v, v)).real
        diags[v] = 1.0 / np.sqrt(entries)
    return BlockScaling(diags)


def normalize_weak_fit(fm: FitMatrix, tol: Tolerances = DEFAULT_TOL) -> FitMatrix:
    """Diagonal congruence D A D with D_i = A_ii^(-1/2); rank and zero
    pattern are untouched, and the result fits strictly."""
    if not is_psd(fm.matrix, tol):
        raise ValueError("matrix is not positive semidefinite within tolerance")
    scaling = block_scaling_of(fm, tol)
    d = np.concatenate([scaling.diagonals[v] for v in fm.graph.vertices])
    out = FitMatrix(fm.graph, fm.r, d[:, None] * fm.matrix * d[None, :])
    report = r_fits(out, tol)
    if not report.valid:
        first = report.violations[0]
        raise ValueError(f"normalization failed: {first.condition} at {first.where}")
    return out


def fosr_to_fit(rep: SubspaceRepresentation, tol: Tolerances = DEFAULT_TOL) -> FitMatrix:
    """Gram matrix of the concatenated basis matrices of a faithful rep."""
    report = verify_fosr(rep, tol)
    if not report.valid:
        first = report.violations[0]
        raise ValueError(f"input fails verification: {first.condition} at {first.where}")
    x = np.hstack([rep.basis(v) for v in rep.graph.vertices])
    return FitMatrix(rep.graph, rep.r, x.conj().T @ x)


def fit_to_fosr(fm: FitMatrix, tol: Tolerances = DEFAULT_TOL) -> SubspaceRepresentation:
    """Factor a PSD fitting matrix into a (rank; r) faithful representation."""
    report = r_fits(fm, tol)
    if not report.valid:
        first = report.violations[0]
        raise ValueError(f"matrix does not r-fit: {first.condition} at {first.where}")
    if not is_psd(fm.matrix, tol):
        raise ValueError("matrix is not positive semidefinite within tolerance")
    x = psd_factor(fm.matrix, tol)
    ell, r = x.shape[0], fm.r
    assignment = {}
    for v in fm.graph.vertices:
        i = fm.graph.index[v]
        block = x[:, i * r:(i + 1) * r]
        sub = Subspace(block)
        if sub.orthonormality_defect() > 1e-12:
            # near-identity column cleanup; spans and zero patterns survive
            q, _ = np.linalg.qr(block)
            sub = Subspace(q[:, :r])
        assignment[v] = sub
    out = SubspaceRepresentation(fm.graph, ell, r, assignment, True)
    rep2 = verify_fosr(out, tol)
    if not rep2.valid:
        first = rep2.violations[0]
        raise ValueError(f"factorization output invalid: {first.condition} at {first.where}")
    return out


def direct_sum_fits(parts, tol: Tolerances = DEFAULT_TOL) -> FitMatrix:
    """Block-diagonal sum fitting the disjoint union; rank is additive."""
    parts = list(parts)
    if not parts:
        raise ValueError("need at least one part")
    r = parts[0].r
    for p in parts:
        if p.r != r:
            raise ValueError("parts have different block sizes r")
    big = disjoint_union([p.graph for p in parts])
    n = big.n
    out = np.zeros((n * r, n * r), dtype=np.complex128)
    off = 0
    for p in parts:
        w = p.graph.n * r
        out[off:off + w, off:off + w] = p.matrix
        off += w
    return FitMatrix(big, r, out)


def union_combine(a1: FitMatrix, a2: FitMatrix, g: Graph, seed: int,
                  tol: Tolerances = DEFAULT_TOL, max_retries: int = 32) -> FitMatrix:
    """Weak fit of g = G1 (union) G2 as hat(A1) + beta * hat(A2).

    beta is drawn from a seeded uniform(0.5, 1.5) and re-drawn until no block
    that is nonzero in either embedded summand cancels in the sum; the
    cancellation set has measure zero, so a handful of retries suffices.
    """
    for a, name in ((a1, "first"), (a2, "second")):
        report = weakly_r_fits(a, tol)
        if not report.valid:
            first = report.violations[0]
            raise ValueError(f"{name} input does not weakly fit its graph: "
                             f"{first.condition} at {first.where}")
        if not is_psd(a.matrix, tol):
            raise ValueError(f"{name} input is not positive semidefinite")
    if a1.r != a2.r:
        raise ValueError("block sizes differ")
    g1, g2 = a1.graph, a2.graph
    if set(g.vertices) != set(g1.vertices) | set(g2.vertices):
        raise ValueError("g is not the union of the two vertex sets")
    def undirected(edges):
        return {frozenset(e) for e in edges}
    if undirected(g.edges) != undirected(g1.edges) | undirected(g2.edges):
        raise ValueError("g is not the union of the two edge sets")
    r = a1.r
    n = g.n

    def embed(a: FitMatrix) -> np.ndarray:
        out = np.zeros((n * r, n * r), dtype=np.complex128)
        idx = [g.index[v] for v in a.graph.vertices]
        for bi, gi in enumerate(idx):
            for bj, gj in enumerate(idx):
                out[gi * r:(gi + 1) * r, gj * r:(gj + 1) * r] = \
                    a.matrix[bi * r:(bi + 1) * r, bj * r:(bj + 1) * r]
        return out

    hat1, hat2 = embed(a1), embed(a2)
    rng = np.random.default_rng(seed)
    worst: tuple[str, str] | None = None
    for _ in range(max_retries):
        beta = float(rng.uniform(0.5, 1.5))
        total = hat1 + beta * hat2
        ok = True
        for i, u in enumerate(g.vertices):
            for v in g.vertices[i:]:
                iu, iv = g.index[u], g.index[v]
                b1 = hat1[iu * r:(iu + 1) * r, iv * r:(iv + 1) * r]
                b2 = hat2[iu * r:(iu + 1) * r, iv * r:(iv + 1) * r]
                if frobenius(b1) > tol.orth_tol or frobenius(b2) > tol.orth_tol:
                    bsum = total[iu * r:(iu + 1) * r, iv * r:(iv + 1) * r]
                    if frobenius(bsum) <= tol.orth_tol:
                        ok = False
                        worst = (u, v)
                        break
            if not ok:
                break
        if ok:
            out = FitMatrix(g, r, total)
            report = weakly_r_fits(out, tol)
            if report.valid:
                return out
            worst = tuple(report.violations[0].where)  # type: ignore[assignment]
    raise BetaSearchExhausted(
        f"no cancellation-free beta found in {max_retries} draws; "
        f"conflicting block at {worst}")


# -- JSON --------------------------------------------------------------------


def fit_to_json(fm: FitMatrix, weak: bool = False) -> dict:
    return {
        "kind": "weak-fit" if weak else "fit",
        "graph": graph_to_json(fm.graph),
        "r": fm.r,
        "matrix": matrix_to_json(fm.matrix),
    }


def fit_from_json(doc: dict) -> tuple[FitMatrix, bool]:
    """Decode a fit-matrix document; returns (matrix, weak_flag)."""
    if not isinstance(doc, dict) or "matrix" not in doc or "graph" not in doc:
        raise ValueError('fit JSON must carry "graph", "r", and "matrix"')
    kind = doc.get("kind", "fit")
    if kind not in ("fit", "weak-fit"):
        raise ValueError(f"unknown fit kind {kind!r}")
    graph = graph_from_json(doc["graph"])
    fm = FitMatrix(graph, int(doc["r"]), matrix_from_json(doc["matrix"]))
    return fm, kind == "weak-fit"
