"""Dense symmetric eigendecomposition with a packed-storage matrix type.

Eigenvalues are reported in non-increasing order throughout the package, so
m(A) is the last entry and M(A) the first.  The backing solver is LAPACK's
symmetric driver via numpy; results are deterministic for identical inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError

TOL_DEFAULT = 1e-10
_TOL_MIN, _TOL_MAX = 1e-14, 1e-6


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not (_TOL_MIN <= tol <= _TOL_MAX):
        raise ValueError(f"tol must lie in [{_TOL_MIN:g}, {_TOL_MAX:g}], got {tol:g}")
    return tol


@dataclass(frozen=True)
class SymMatrix:
    """A real symmetric matrix stored as the upper triangle, row-major."""

    size: int
    entries: np.ndarray

    def __post_init__(self):
        n = int(self.size)
        if n < 1:
            raise ValueError("size must be positive")
        packed = np.asarray(self.entries, dtype=float)
        if packed.shape != (n * (n + 1) // 2,):
            raise ValueError(
                f"expected {n * (n + 1) // 2} packed entries for size {n}, "
                f"got shape {packed.shape}"
            )
        if not np.all(np.isfinite(packed)):
            raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "size", n)
        object.__setattr__(self, "entries", packed)

    @classmethod
    def from_dense(cls, a, atol: float = 1e-12) -> "SymMatrix":
        a = np.asarray(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("expected a square matrix")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite")
        scale = max(1.0, float(np.abs(a).max(initial=0.0)))
        if np.abs(a - a.T).max(initial=0.0) > atol * scale:
            raise ValueError("matrix is not symmetric within tolerance")
        iu = np.triu_indices(a.shape[0])
        return cls(a.shape[0], a[iu])

    def to_dense(self) -> np.ndarray:
        n = self.size
        a = np.zeros((n, n))
        iu = np.triu_indices(n)
        a[iu] = self.entries
        a.T[iu] = self.entries
        return a

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.to_dense()))

    def is_zero(self) -> bool:
        return not np.any(self.entries)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order; column i of eigenvectors pairs with
    eigenvalue i.  Eigenvectors may be None when only the range was requested."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None

    def __post_init__(self):
        vals = np.asarray(self.eigenvalues, dtype=float)
        if vals.ndim != 1 or vals.size == 0:
            raise ValueError("eigenvalues must be a nonempty vector")
        if np.any(np.diff(vals) > 0.0):
            raise ValueError("eigenvalues must be sorted non-increasing")
        if self.eigenvectors is not None:
            vecs = np.asarray(self.eigenvectors, dtype=float)
            if vecs.shape != (vals.size, vals.size):
                raise ValueError("eigenvector array must be square of matching size")
            object.__setattr__(self, "eigenvectors", vecs)
        object.__setattr__(self, "eigenvalues", vals)

    @property
    def max(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def min(self) -> float:
        return float(self.eigenvalues[-1])


def eigen_decompose(a: SymMatrix, tol: float = TOL_DEFAULT) -> Spectrum:
    """Full eigendecomposition of a SymMatrix.

    tol is the accepted residual scale relative to the Frobenius norm; the
    LAPACK driver normally lands far below it.  Raises ConvergenceError if the
    QL/QR iteration inside LAPACK fails to converge.
    """
    _check_tol(tol)
    dense = a.to_dense()
    try:
        vals, vecs = np.linalg.eigh(dense)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - hardware dependent
        raise ConvergenceError(f"eigensolver did not converge: {exc}") from exc
    return Spectrum(vals[::-1].copy(), vecs[:, ::-1].copy())


def numerical_range(a: SymMatrix, tol: float = TOL_DEFAULT) -> tuple[float, float]:
    """(m, M): the extreme eigenvalues, computed without eigenvectors."""
    _check_tol(tol)
    try:
        vals = np.linalg.eigvalsh(a.to_dense())
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceError(f"eigensolver did not converge: {exc}") from exc
    return float(vals[0]), float(vals[-1])
