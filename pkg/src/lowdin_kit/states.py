"""Pure states and density operators over non-orthogonal bases.

Coefficients live in the non-orthogonal basis; the symmetric
orthogonalizer O^{1/2} maps them onto the orthonormal (computational)
frame, where the squared magnitudes form the Lowdin weight distribution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTrace, InvalidParameters, ZeroState
from .gram import GramMatrix, OverlapSpec, gram_from_overlaps
from .linalg import hermitian_eig, hermiticity_tolerance

_PSD_TOL = 1e-10
_TRACE_TOL = 1e-9
_WEIGHT_SUM_TOL = 1e-9


def _frozen_array(obj, name: str, value: np.ndarray):
    value.setflags(write=False)
    object.__setattr__(obj, name, value)


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized pure state: coefficients a over a basis with overlap O,
    satisfying a+ O a = 1."""

    gram: GramMatrix
    coeffs: np.ndarray

    def __post_init__(self):
        a = np.array(self.coeffs, dtype=complex, copy=True).reshape(-1)
        if a.shape[0] != self.gram.dim:
            raise ValueError(
                f"coefficient length {a.shape[0]} != overlap dimension {self.gram.dim}"
            )
        norm2 = float(np.real(a.conj() @ self.gram.matrix @ a))
        if abs(norm2 - 1.0) > _TRACE_TOL:
            raise ValueError(f"state norm a+Oa = {norm2!r} is not 1 within {_TRACE_TOL}")
        _frozen_array(self, "coeffs", a)

    @property
    def dim(self) -> int:
        return self.gram.dim


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian PSD coefficient matrix rho with Tr(rho) = 1 over a
    non-orthogonal basis."""

    gram: GramMatrix
    coeffs: np.ndarray

    def __post_init__(self):
        rho = np.asarray(self.coeffs, dtype=complex)
        d = self.gram.dim
        if rho.shape != (d, d):
            raise ValueError(f"coefficient matrix shape {rho.shape} != ({d}, {d})")
        dev = float(np.max(np.abs(rho - rho.conj().T)))
        if dev > hermiticity_tolerance(rho):
            raise InvalidParameters(f"coefficient matrix asymmetry {dev:.3e}")
        rho = 0.5 * (rho + rho.conj().T)
        tr = float(np.real(np.trace(rho)))
        if abs(tr - 1.0) > _TRACE_TOL:
            raise InvalidParameters(f"Tr(rho) = {tr!r} is not 1 within {_TRACE_TOL}")
        lam_min = float(hermitian_eig(rho).eigenvalues[0])
        if lam_min < -_PSD_TOL:
            raise InvalidParameters(
                f"coefficient matrix has eigenvalue {lam_min:.3e} below -{_PSD_TOL:.0e}"
            )
        metric_tr = float(np.real(np.trace(self.gram.matrix @ rho)))
        if metric_tr <= 0.0:
            raise InvalidParameters(f"Tr(O rho) = {metric_tr!r} must be positive")
        _frozen_array(self, "coeffs", rho)

    @property
    def dim(self) -> int:
        return self.gram.dim


@dataclass(frozen=True, eq=False)
class LowdinTransformedState:
    """Trace-1 Hermitian PSD matrix in the orthonormal Lowdin frame."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        dev = float(np.max(np.abs(m - m.conj().T)))
        if dev > hermiticity_tolerance(m):
            raise InvalidParameters(f"transformed state asymmetry {dev:.3e}")
        m = 0.5 * (m + m.conj().T)
        tr = float(np.real(np.trace(m)))
        if abs(tr - 1.0) > _TRACE_TOL:
            raise InvalidParameters(f"transformed state trace {tr!r} is not 1")
        lam_min = float(hermitian_eig(m).eigenvalues[0])
        if lam_min < -_PSD_TOL:
            raise InvalidParameters(f"transformed state eigenvalue {lam_min:.3e} < 0")
        _frozen_array(self, "matrix", m)


@dataclass(frozen=True, eq=False)
class WeightDistribution:
    """Probability vector of Lowdin weights."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        if w.size == 0 or not np.all(np.isfinite(w)):
            raise ValueError("weights must be a non-empty finite vector")
        if np.any(w < -1e-12):
            raise ValueError(f"negative weight {float(w.min()):.3e}")
        w = np.clip(w, 0.0, None)
        total = float(w.sum())
        if abs(total - 1.0) > _WEIGHT_SUM_TOL:
            raise ValueError(f"weights sum to {total!r}, not 1 within {_WEIGHT_SUM_TOL}")
        _frozen_array(self, "weights", w)

    def __len__(self) -> int:
        return self.weights.shape[0]


def normalize_pure(gram: GramMatrix, raw) -> PureState:
    """Scale a raw coefficient vector so that a+ O a = 1."""
    a = np.asarray(raw, dtype=complex).reshape(-1)
    if a.shape[0] != gram.dim:
        raise ValueError(f"coefficient length {a.shape[0]} != overlap dimension {gram.dim}")
    norm2 = float(np.real(a.conj() @ gram.matrix @ a))
    if norm2 <= 1e-24:
        raise ZeroState("raw coefficient vector has zero norm under the overlap metric")
    return PureState(gram, a / np.sqrt(norm2))


def lowdin_coeffs(state: PureState) -> np.ndarray:
    """Coefficients b = O^{1/2} a of the state in the orthonormal frame."""
    return state.gram.sqrt @ state.coeffs


def weights_pure(state: PureState) -> WeightDistribution:
    """Lowdin weights w_k = |[O^{1/2} a]_k|^2 of a pure state."""
    b = lowdin_coeffs(state)
    return WeightDistribution(np.abs(b) ** 2)


def _lowdin_transform(gram: GramMatrix, rho: np.ndarray) -> LowdinTransformedState:
    half = gram.sqrt
    m = half @ rho @ half
    tr = float(np.real(np.trace(m)))
    if tr <= 1e-12:
        raise DegenerateTrace(f"Tr(O rho) = {tr!r} is too small to normalize")
    return LowdinTransformedState(m / tr)


def lowdin_density(op: DensityOperator) -> LowdinTransformedState:
    """rho_L = O^{1/2} rho O^{1/2} / Tr(O^{1/2} rho O^{1/2})."""
    return _lowdin_transform(op.gram, op.coeffs)


def weights_density(op: DensityOperator) -> WeightDistribution:
    """Diagonal of rho_L; coincides with weights_pure on rank-1 projectors."""
    return WeightDistribution(np.real(np.diag(lowdin_density(op).matrix)))


def closed_form_2d_weights(p: float, q: float, s: float) -> WeightDistribution:
    """Closed-form Lowdin weights for rho = [[p, q], [q, 1-p]] with real
    overlap s:

        w_1 = [1 + (2p - 1) sqrt(1 - s^2) + 2 q s] / (2 + 4 q s)

    Raises InvalidParameters when rho is not PSD or the denominator is
    not positive.
    """
    p, q, s = float(p), float(q), float(s)
    if not (0.0 <= p <= 1.0):
        raise InvalidParameters(f"p = {p} outside [0, 1]")
    if not (-1.0 < s < 1.0):
        raise InvalidParameters(f"s = {s} outside (-1, 1)")
    if q * q > p * (1.0 - p) + 1e-15:
        raise InvalidParameters(f"rho(p={p}, q={q}) is not positive semi-definite")
    denom = 2.0 + 4.0 * q * s
    if denom <= 0.0:
        raise InvalidParameters(f"denominator 2 + 4qs = {denom} is not positive")
    w1 = (1.0 + (2.0 * p - 1.0) * np.sqrt(1.0 - s * s) + 2.0 * q * s) / denom
    return WeightDistribution(np.array([w1, 1.0 - w1]))


def _offdiag(m: np.ndarray) -> np.ndarray:
    return m - np.diag(np.diag(m))


def offdiagonal_decomposition(op: DensityOperator) -> tuple[np.ndarray, np.ndarray]:
    """Split the off-diagonals of rho_L into overlap artifacts and genuine
    superposition content.

    The artifact part is what the diagonal (superposition-free) part of
    rho alone produces in the Lowdin frame; the genuine part is the
    remainder.
    """
    diag = np.diag(np.diag(op.coeffs))
    diag = diag / np.real(np.trace(diag))
    artifact = _offdiag(_lowdin_transform(op.gram, diag).matrix)
    genuine = _offdiag(lowdin_density(op).matrix) - artifact
    return artifact, genuine


def chirgwin_coulson_weights(state: PureState) -> np.ndarray:
    """Chirgwin-Coulson populations w_k = Re(a_k* [O a]_k).

    They sum to 1 but, unlike Lowdin weights, may be negative or exceed
    1; provided as a comparison baseline.
    """
    a = state.coeffs
    return np.real(np.conj(a) * (state.gram.matrix @ a))


def golden_state_3d(s: float) -> PureState:
    """Representative maximal superposition state in dimension 3.

    Built over the overlap pattern <c1|c2> = s, <c1|c3> = <c2|c3> = -s
    with s in (-1/2, 0]; its Lowdin weights are uniform.
    """
    s = float(s)
    if not (-0.5 < s <= 0.0):
        raise InvalidParameters(f"s = {s} outside (-1/2, 0]")
    g = gram_from_overlaps(OverlapSpec(3, [(1, 2, s), (1, 3, -s), (2, 3, -s)]))
    coeffs = np.array([1.0, 1.0, -1.0]) / np.sqrt(3.0 * (1.0 + 2.0 * s))
    return PureState(g, coeffs)
