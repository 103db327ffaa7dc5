"""Dense complex Hermitian linear algebra.

Thin, validated layer over LAPACK (via numpy) providing the
eigendecomposition and the +-1/2 matrix powers that every overlap-matrix
computation downstream relies on. All functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, NotHermitian, NotPositiveDefinite

# Eigenvalues at or below this floor are treated as numerically singular.
LAMBDA_FLOOR = 1e-12


def _as_square_complex(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains non-finite entries")
    return a


def hermiticity_tolerance(m: np.ndarray) -> float:
    """Absolute tolerance used when deciding whether m is Hermitian."""
    return 1e-10 * max(1.0, float(np.linalg.norm(m, "fro")))


@dataclass(frozen=True)
class HermitianEigenDecomposition:
    """Eigendecomposition m = U diag(eigenvalues) U+ with eigenvalues ascending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.conj().T


def hermitian_eig(m) -> HermitianEigenDecomposition:
    """Diagonalize a Hermitian matrix.

    Raises NotHermitian if the input deviates from Hermiticity beyond
    tolerance, and ConvergenceFailure if the underlying solver gives up.
    The returned eigenvalues are sorted ascending and the eigenvector
    matrix is unitary.
    """
    a = _as_square_complex(m)
    tol = hermiticity_tolerance(a)
    dev = float(np.max(np.abs(a - a.conj().T)))
    if dev > tol:
        raise NotHermitian(f"max |m_ij - conj(m_ji)| = {dev:.3e} exceeds {tol:.3e}")
    # Work on the Hermitian part so roundoff-level asymmetry cannot leak
    # into the decomposition.
    sym = 0.5 * (a + a.conj().T)
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    eigenvalues = eigenvalues.copy()
    eigenvalues.setflags(write=False)
    eigenvectors = eigenvectors.copy()
    eigenvectors.setflags(write=False)
    return HermitianEigenDecomposition(eigenvalues, eigenvectors)


def matrix_function(m, exponent: float) -> np.ndarray:
    """Hermitian matrix power m**exponent for exponent in {1/2, -1/2}.

    The input must be positive definite: any eigenvalue at or below
    LAMBDA_FLOOR raises NotPositiveDefinite.
    """
    if exponent not in (0.5, -0.5):
        raise ValueError(f"exponent must be +-1/2, got {exponent!r}")
    eig = hermitian_eig(m)
    lam_min = float(eig.eigenvalues[0])
    if lam_min <= LAMBDA_FLOOR:
        raise NotPositiveDefinite(
            f"smallest eigenvalue {lam_min:.3e} is at or below {LAMBDA_FLOOR:.0e}"
        )
    u = eig.eigenvectors
    powered = (u * eig.eigenvalues**exponent) @ u.conj().T
    # Re-Hermitize: exact symmetry is part of the contract.
    return 0.5 * (powered + powered.conj().T)


def frobenius_norm(m) -> float:
    """sqrt(sum |m_ij|^2)."""
    a = np.asarray(m, dtype=complex)
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains non-finite entries")
    return float(np.linalg.norm(a, "fro"))


def condition_number(m) -> float:
    """lambda_max / lambda_min of a Hermitian positive-definite matrix."""
    eig = hermitian_eig(m)
    lam_min = float(eig.eigenvalues[0])
    lam_max = float(eig.eigenvalues[-1])
    if lam_min <= LAMBDA_FLOOR:
        raise NotPositiveDefinite(
            f"smallest eigenvalue {lam_min:.3e} is at or below {LAMBDA_FLOOR:.0e}"
        )
    return lam_max / lam_min
