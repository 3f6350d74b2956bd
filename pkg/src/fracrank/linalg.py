"""Complex dense matrix primitives with explicit numerical tolerances.

All certificate checking reduces to a handful of operations here: rank with
a relative singular-value cutoff, PSD tests, Gram factorizations, projector
round trips, and unitary alignment of orthonormal frames to standard
coordinates.  Matrices are numpy complex128 arrays throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Tolerances:
    """Thresholds realizing exact algebraic conditions in floating point."""

    orth_tol: float = 1e-9       # Frobenius threshold for "zero product"
    rank_rel_tol: float = 1e-8   # relative singular-value cutoff
    psd_tol: float = 1e-9        # eigenvalue floor

    def __post_init__(self):
        if min(self.orth_tol, self.rank_rel_tol, self.psd_tol) < 0:
            raise ValueError("tolerances must be nonnegative")


DEFAULT_TOL = Tolerances()


def as_cmatrix(data) -> np.ndarray:
    """Coerce to a finite 2-D complex128 array."""
    m = np.asarray(data, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


@dataclass(frozen=True)
class Subspace:
    """An r-dimensional subspace of C^d held as a d x r orthonormal basis."""

    basis: np.ndarray

    def __post_init__(self):
        b = as_cmatrix(self.basis)
        object.__setattr__(self, "basis", b)
        d, r = b.shape
        if r > d:
            raise ValueError(f"subspace dimension {r} exceeds ambient dimension {d}")

    @property
    def d(self) -> int:
        return self.basis.shape[0]

    @property
    def r(self) -> int:
        return self.basis.shape[1]

    def orthonormality_defect(self) -> float:
        g = self.basis.conj().T @ self.basis
        return float(np.linalg.norm(g - np.eye(self.r)))


def frobenius(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def is_hermitian(m: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> bool:
    m = as_cmatrix(m)
    if m.shape[0] != m.shape[1]:
        return False
    return frobenius(m - m.conj().T) <= tol.orth_tol


def orthonormalize(m, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """Subspace spanned by the columns of m; errors on rank deficiency."""
    m = as_cmatrix(m)
    if m.shape[1] == 0:
        return Subspace(m)
    s = np.linalg.svd(m, compute_uv=False)
    if s[-1] <= tol.rank_rel_tol * s[0]:
        raise ValueError("columns are linearly dependent within tolerance")
    q, _ = np.linalg.qr(m)
    return Subspace(q[:, : m.shape[1]])


def rank(m, tol: Tolerances = DEFAULT_TOL) -> int:
    """Singular values above rank_rel_tol x largest (0 for the zero matrix)."""
    m = as_cmatrix(m)
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol.rank_rel_tol * s[0]))


def is_psd(m, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Hermitian within orth_tol and minimum eigenvalue >= -psd_tol."""
    m = as_cmatrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError("is_psd requires a square matrix")
    if m.shape[0] == 0:
        return True
    if not is_hermitian(m, tol):
        return False
    w = np.linalg.eigvalsh((m + m.conj().T) / 2)
    return bool(w[0] >= -tol.psd_tol)


def subspaces_orthogonal(s1: Subspace, s2: Subspace, tol: Tolerances = DEFAULT_TOL) -> bool:
    if s1.d != s2.d:
        raise ValueError(f"ambient dimensions differ: {s1.d} vs {s2.d}")
    prod = s1.basis.conj().T @ s2.basis
    return frobenius(prod) <= tol.orth_tol * np.sqrt(s1.r * s2.r)


def direct_sum(blocks) -> np.ndarray:
    """Block-diagonal assembly of complex matrices."""
    blocks = [as_cmatrix(b) for b in blocks]
    if not blocks:
        return np.zeros((0, 0), dtype=np.complex128)
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=np.complex128)
    i = j = 0
    for b in blocks:
        out[i:i + b.shape[0], j:j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def gram(x) -> np.ndarray:
    """B = X* X."""
    x = as_cmatrix(x)
    return x.conj().T @ x


def psd_factor(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """A factor X with rank(A) rows and X* X ~= A, via eigendecomposition.

    Rank-deficient input is fine; eigenvalues below the relative cutoff are
    dropped, tiny negatives (>= -psd_tol) are tolerated.
    """
    a = as_cmatrix(a)
    if not is_psd(a, tol):
        raise ValueError("matrix is not positive semidefinite within tolerance")
    if a.shape[0] == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    w, v = np.linalg.eigh((a + a.conj().T) / 2)
    wmax = max(w[-1], 0.0)
    keep = w > tol.rank_rel_tol * wmax
    if not np.any(keep):
        return np.zeros((0, a.shape[0]), dtype=np.complex128)
    wk = w[keep]
    vk = v[:, keep]
    return (np.sqrt(wk)[:, None] * vk.conj().T)


def projector_from_basis(s: Subspace) -> np.ndarray:
    """P = X X*, the orthogonal projector onto the subspace."""
    x = s.basis
    return x @ x.conj().T


def basis_from_projector(p, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """Range of an orthogonal projector, as a Subspace."""
    p = as_cmatrix(p)
    if p.shape[0] != p.shape[1]:
        raise ValueError("projector must be square")
    if not is_hermitian(p, tol):
        raise ValueError("projector must be Hermitian within tolerance")
    if frobenius(p @ p - p) > tol.orth_tol * max(1.0, np.sqrt(p.shape[0])):
        raise ValueError("matrix is not idempotent within tolerance")
    w, v = np.linalg.eigh((p + p.conj().T) / 2)
    keep = w > 0.5
    return Subspace(v[:, keep])


def align_to_standard(m, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """A unitary U with U m = [e_1 .. e_l], for m with orthonormal columns.

    The completion extends m greedily with standard basis vectors (largest
    residual first, ties by index), so the result is deterministic.
    """
    m = as_cmatrix(m)
    d, ell = m.shape
    if ell > d:
        raise ValueError("more columns than ambient dimension")
    g = m.conj().T @ m
    if frobenius(g - np.eye(ell)) > tol.orth_tol * max(1, ell):
        raise ValueError("columns are not orthonormal within tolerance")
    cols = [m[:, j] for j in range(ell)]
    while len(cols) < d:
        w = np.column_stack(cols) if cols else np.zeros((d, 0), dtype=np.complex128)
        best_vec, best_norm = None, -1.0
        for j in range(d):
            e = np.zeros(d, dtype=np.complex128)
            e[j] = 1.0
            resid = e - w @ (w.conj().T @ e) if cols else e
            nrm = float(np.linalg.norm(resid))
            if nrm > best_norm + 1e-12:
                best_vec, best_norm = resid, nrm
        v = best_vec / best_norm
        # one re-orthogonalization pass for numerical hygiene
        v = v - w @ (w.conj().T @ v)
        v = v / np.linalg.norm(v)
        cols.append(v)
    u = np.column_stack(cols).conj().T
    return u


# -- JSON encoding ---------------------------------------------------------


def matrix_to_json(m) -> list:
    """Row-major nested lists with [re, im] entry pairs."""
    m = as_cmatrix(m)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def matrix_from_json(doc) -> np.ndarray:
    if not isinstance(doc, list) or any(not isinstance(row, list) for row in doc):
        raise ValueError("matrix JSON must be a list of rows")
    rows = []
    for row in doc:
        entries = []
        for z in row:
            if not (isinstance(z, list) and len(z) == 2):
                raise ValueError("matrix entries must be [re, im] pairs")
            entries.append(complex(float(z[0]), float(z[1])))
        rows.append(entries)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows have inconsistent lengths")
    if not rows:
        return np.zeros((0, 0), dtype=np.complex128)
    return as_cmatrix(rows)
