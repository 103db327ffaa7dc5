"""Orthogonalization engines and the inverse Lowdin construction.

Basis vectors are matrix columns throughout, so every transform acts on
the right: E = C T. Three engines are provided (sequential Gram-Schmidt
and the symmetric / canonical Lowdin transforms) together with the
inverse map that manufactures a non-orthogonal basis realizing a given
overlap matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from .errors import (
    DegenerateStep,
    DimensionMismatch,
    InvalidParameters,
    UnsupportedDimension,
)
from .gram import GramMatrix, gram_from_vectors
from .states import PureState

_ORTHONORMALITY_TOL = 1e-8


class OrthoMethod(Enum):
    GRAM_SCHMIDT = "gram-schmidt"
    LOWDIN_SYMMETRIC = "lowdin-sym"
    LOWDIN_CANONICAL = "lowdin-can"


@dataclass(frozen=True, eq=False)
class BasisSet:
    """Unit-norm, linearly independent column vectors in an ambient
    orthonormal coordinate system."""

    vectors: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[1] < 1:
            raise ValueError(f"expected a matrix of column vectors, got shape {v.shape}")
        if v.shape[0] < v.shape[1]:
            raise ValueError(
                f"{v.shape[1]} vectors cannot be independent in ambient dimension {v.shape[0]}"
            )
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)
        # Populate the overlap cache eagerly; this also performs the
        # unit-norm and independence validation.
        self.__dict__["gram"] = gram_from_vectors(v)

    @cached_property
    def gram(self) -> GramMatrix:
        return gram_from_vectors(self.vectors)

    @property
    def ambient_dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def num_vectors(self) -> int:
        return self.vectors.shape[1]


@dataclass(frozen=True, eq=False)
class OrthoResult:
    """Orthonormal basis E, the transform T with E = C T, and the
    Frobenius distance of E from the input."""

    basis: BasisSet
    transform: np.ndarray
    method: OrthoMethod
    distortion: float

    def __post_init__(self):
        t = np.asarray(self.transform, dtype=complex)
        t.setflags(write=False)
        object.__setattr__(self, "transform", t)
        residual = np.linalg.norm(self.basis.gram.matrix - np.eye(self.basis.num_vectors))
        if residual > _ORTHONORMALITY_TOL:
            raise InvalidParameters(f"result basis not orthonormal, residual {residual:.3e}")
        if self.distortion < 0:
            raise ValueError("distortion must be non-negative")


def _resolve_order(d: int, order) -> np.ndarray:
    if order is None:
        return np.arange(d)
    idx = np.asarray(order, dtype=int)
    if sorted(idx.tolist()) != list(range(d)):
        raise ValueError(f"order {list(order)} is not a permutation of 0..{d - 1}")
    return idx


def _gram_schmidt_columns(cols: np.ndarray, order: np.ndarray) -> np.ndarray:
    """Classical Gram-Schmidt on the given columns, processed in order.

    Output column k is the orthonormalized image of input column
    order[k]. Projections use the ambient inner product, conjugate-linear
    in the first slot.
    """
    out = np.zeros_like(cols)
    for k, src in enumerate(order):
        v = cols[:, src].copy()
        for i in range(k):
            v -= out[:, i] * (out[:, i].conj() @ cols[:, src])
        norm = np.linalg.norm(v)
        if norm <= 1e-10:
            raise DegenerateStep(f"residual norm {norm:.3e} at step {k + 1}")
        out[:, k] = v / norm
    return out


def gram_schmidt(basis: BasisSet, order=None) -> OrthoResult:
    """Sequential Gram-Schmidt orthogonalization.

    order is a 0-based permutation; the k-th output vector is built from
    input column order[k], so the result depends on the ordering. The
    first processed vector is returned unchanged (it is already unit
    norm).
    """
    idx = _resolve_order(basis.num_vectors, order)
    cols = basis.vectors
    out = _gram_schmidt_columns(cols, idx)
    # Recover T with E = C T through the overlap metric.
    transform = np.linalg.solve(basis.gram.matrix, cols.conj().T @ out)
    return OrthoResult(
        basis=BasisSet(out),
        transform=transform,
        method=OrthoMethod.GRAM_SCHMIDT,
        distortion=float(np.linalg.norm(out - cols)),
    )


def lowdin_symmetric(basis: BasisSet) -> OrthoResult:
    """Symmetric (Lowdin) orthogonalization E = C O^{-1/2}.

    Among all orthonormal frames this one minimizes the total Frobenius
    distortion from the input; it is order-independent and preserves any
    permutation symmetry of the overlap matrix.
    """
    transform = basis.gram.inv_sqrt
    out = basis.vectors @ transform
    return OrthoResult(
        basis=BasisSet(out),
        transform=transform,
        method=OrthoMethod.LOWDIN_SYMMETRIC,
        distortion=float(np.linalg.norm(out - basis.vectors)),
    )


def lowdin_canonical(basis: BasisSet) -> OrthoResult:
    """Canonical orthogonalization E = C U D^{-1/2}.

    Aligns the output with the eigenvectors of the overlap matrix; the
    variant of choice when the smallest overlap eigenvalue approaches
    zero.
    """
    eig = basis.gram.eigen
    transform = eig.eigenvectors / np.sqrt(eig.eigenvalues)
    out = basis.vectors @ transform
    return OrthoResult(
        basis=BasisSet(out),
        transform=transform,
        method=OrthoMethod.LOWDIN_CANONICAL,
        distortion=float(np.linalg.norm(out - basis.vectors)),
    )


def induce_nonorthogonal(gram: GramMatrix) -> BasisSet:
    """Non-orthogonal basis C = O^{1/2} realizing the given overlaps.

    Fixes the orthonormal frame to the computational basis, so the k-th
    basis vector is the k-th column of O^{1/2}; symmetric
    orthogonalization of the result recovers the computational basis.
    """
    return BasisSet(gram.sqrt)


def distortion(a: BasisSet, b: BasisSet) -> float:
    """Frobenius distance sqrt(sum_k ||a_k - b_k||^2), columns paired by index."""
    if a.vectors.shape != b.vectors.shape:
        raise DimensionMismatch(
            f"basis shapes {a.vectors.shape} and {b.vectors.shape} differ"
        )
    return float(np.linalg.norm(a.vectors - b.vectors))


def maximally_coherent_image(d2_gram: GramMatrix, sign: int) -> PureState:
    """Image of the 2-d maximally coherent state (|1> +- |2>)/sqrt(2) in
    the non-orthogonal basis: coefficients (1, +-1)/sqrt(2 (1 +- s)).
    """
    if d2_gram.dim != 2:
        raise UnsupportedDimension(f"defined for dimension 2, got {d2_gram.dim}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    s = d2_gram.matrix[0, 1]
    if abs(s.imag) > 1e-12:
        raise InvalidParameters("requires a real overlap between the two basis states")
    lam = 1.0 + sign * s.real
    coeffs = np.array([1.0, float(sign)]) / np.sqrt(2.0 * lam)
    return PureState(d2_gram, coeffs)
