"""Dense complex Hermitian matrix kernel.

Everything downstream (entropies, ensemble bounds) reduces to the operations
here: eigendecomposition, trace norm, trace distance, and the split of a
Hermitian operator into its positive and negative parts.  Matrices are dense
double-precision arrays; operators are immutable once constructed, so all
functions in this module are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Max-entry deviation ||A - A^dag||_max accepted before symmetrization.
HERMITICITY_TOL = 1e-10
# Eigenvalues within [-PSD_TOL, PSD_TOL] are treated as exact zeros.
PSD_TOL = 1e-10
# Eigendecomposition residual accepted at desk-scale dimensions.
RECON_TOL = 1e-9
# |Tr(rho) - 1| accepted for density operators.
TRACE_TOL = 1e-9


class EigensolverError(RuntimeError):
    """Eigendecomposition failed, or its residual exceeded tolerance."""

    def __init__(self, message: str, *, dim: int, residual: float | None = None):
        super().__init__(message)
        self.dim = dim
        self.residual = residual


def _frozen(mat: np.ndarray, dtype) -> np.ndarray:
    out = np.array(mat, dtype=dtype)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """A dense complex square matrix, exactly Hermitian after construction.

    Input must be Hermitian to within HERMITICITY_TOL in the max-entry norm
    (file-sourced matrices carry rounding noise); it is then symmetrized to
    (A + A^dag)/2 and frozen.
    """

    mat: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {mat.shape}")
        if mat.shape[0] < 1:
            raise ValueError("matrix dimension must be at least 1")
        deviation = float(np.max(np.abs(mat - mat.conj().T)))
        if not deviation <= HERMITICITY_TOL:
            raise ValueError(
                f"matrix is not Hermitian: max |A - A^dag| = {deviation:.3e} "
                f"exceeds {HERMITICITY_TOL:.0e}"
            )
        object.__setattr__(self, "mat", _frozen((mat + mat.conj().T) / 2.0, complex))

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def trace(self) -> float:
        return float(self.mat.trace().real)

    def _check_same_dim(self, other: "HermitianOperator") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "HermitianOperator") -> "HermitianOperator":
        self._check_same_dim(other)
        return HermitianOperator(self.mat + other.mat)

    def __sub__(self, other: "HermitianOperator") -> "HermitianOperator":
        self._check_same_dim(other)
        return HermitianOperator(self.mat - other.mat)

    def __mul__(self, scalar: float) -> "HermitianOperator":
        return HermitianOperator(self.mat * float(scalar))

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class DensityOperator(HermitianOperator):
    """A quantum state: Hermitian, positive semidefinite, unit trace.

    Eigenvalues down to -PSD_TOL are accepted (eigensolvers return tiny
    negatives for PSD matrices) and treated as zero by all consumers.
    """

    def __post_init__(self):
        super().__post_init__()
        smallest = float(hermitian_eigenvalues(self)[0])
        if smallest < -PSD_TOL:
            raise ValueError(
                f"state is not positive semidefinite: min eigenvalue {smallest:.3e}"
            )
        tr = self.trace()
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"state trace {tr!r} is not 1 within {TRACE_TOL:.0e}")

    @classmethod
    def from_pure(cls, amplitudes) -> "DensityOperator":
        """Projector onto the normalized state vector `amplitudes`."""
        vec = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            raise ValueError("state vector must be nonzero")
        vec = vec / norm
        return cls(np.outer(vec, vec.conj()))


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Ascending eigenvalues paired with a unitary matrix of eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eigenvalues(a: HermitianOperator) -> np.ndarray:
    """Ascending eigenvalues of `a` (values-only fast path)."""
    try:
        return np.linalg.eigvalsh(a.mat)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(
            f"eigenvalue computation failed at dim {a.dim}: {exc}", dim=a.dim
        ) from exc


def hermitian_eig(a: HermitianOperator) -> EigenSystem:
    """Full eigendecomposition of `a` with a verified reconstruction.

    Raises EigensolverError when LAPACK fails or when the reconstruction
    residual max(||V diag(w) V^dag - A||_max, ||V^dag V - I||_max) exceeds
    RECON_TOL.
    """
    try:
        w, v = np.linalg.eigh(a.mat)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(
            f"eigendecomposition failed at dim {a.dim}: {exc}", dim=a.dim
        ) from exc
    recon_err = float(np.max(np.abs((v * w) @ v.conj().T - a.mat)))
    ortho_err = float(np.max(np.abs(v.conj().T @ v - np.eye(a.dim))))
    residual = max(recon_err, ortho_err)
    if residual > RECON_TOL:
        raise EigensolverError(
            f"eigendecomposition residual {residual:.3e} exceeds "
            f"{RECON_TOL:.0e} at dim {a.dim}",
            dim=a.dim,
            residual=residual,
        )
    return EigenSystem(_frozen(w, float), _frozen(v, complex))


def trace_norm(a: HermitianOperator) -> float:
    """Trace norm ||A||_1, the sum of absolute eigenvalues."""
    return float(np.abs(hermitian_eigenvalues(a)).sum())


def trace_distance(rho: DensityOperator, sigma: DensityOperator) -> float:
    """Trace distance (1/2)||rho - sigma||_1; in [0, 1] for states."""
    return 0.5 * trace_norm(rho - sigma)


def jordan_parts(a: HermitianOperator) -> tuple[HermitianOperator, HermitianOperator]:
    """Split A into PSD parts (A_plus, A_minus) with A = A_plus - A_minus.

    The split follows the sign of the eigenvalues; eigenvalues within
    [-PSD_TOL, PSD_TOL] count as exact zeros and contribute to neither part.
    The two parts have orthogonal supports, so A_plus A_minus = 0 and
    Tr A_plus + Tr A_minus = ||A||_1 up to solver noise.
    """
    system = hermitian_eig(a)
    w, v = system.eigenvalues, system.eigenvectors
    pos = w > PSD_TOL
    neg = w < -PSD_TOL
    plus = (v[:, pos] * w[pos]) @ v[:, pos].conj().T
    minus = (v[:, neg] * (-w[neg])) @ v[:, neg].conj().T
    return HermitianOperator(plus), HermitianOperator(minus)
