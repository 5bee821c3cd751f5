"""Dense eigensolvers: full symmetric decomposition and leading-eigenpair iteration."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParamsError

DEFAULT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenvalues in ascending order with column-orthonormal eigenvectors."""

    eigenvalues: np.ndarray = field(repr=False)
    eigenvectors: np.ndarray = field(repr=False)


@dataclass(frozen=True, eq=False)
class LeadingEigenpair:
    value: float
    vector: np.ndarray = field(repr=False)
    residual: float = 0.0
    iterations: int = 0


def sym_eig(m, tol=DEFAULT_TOL):
    """Full eigendecomposition of a symmetric matrix.

    Raises if the input deviates from symmetry by more than ``tol`` relative
    to its magnitude.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidParamsError("sym_eig needs a square matrix")
    scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
    if float(np.max(np.abs(m - m.T))) > tol * scale:
        raise InvalidParamsError("matrix is not symmetric within tolerance")
    evals, evecs = np.linalg.eigh(0.5 * (m + m.T))
    return SpectralDecomposition(eigenvalues=evals, eigenvectors=evecs)


def _sign_fix(v):
    idx = int(np.argmax(np.abs(v)))
    return -v if v[idx] < 0 else v


def _dense_leading(m):
    """Fallback: dense nonsymmetric eigensolve, largest real eigenvalue.

    Needed when the dominant eigenvalue is defective or tied in modulus with
    complex eigenvalues (cycles are the canonical case), where power iteration
    stalls.
    """
    evals, evecs = np.linalg.eig(m)
    scale = 1.0 + np.abs(evals)
    # Defective real roots split into conjugate pairs with imaginary parts of
    # roughly sqrt(machine epsilon); the realness cut must stay above that.
    real_mask = np.abs(evals.imag) <= 1e-6 * scale
    if not np.any(real_mask):
        real_mask = np.abs(evals.imag) == np.min(np.abs(evals.imag))
    candidates = np.where(real_mask)[0]
    best = candidates[int(np.argmax(evals.real[candidates]))]
    value = float(evals.real[best])
    vec = np.real(evecs[:, best])
    nrm = np.linalg.norm(vec)
    if nrm == 0:
        raise InvalidParamsError("degenerate eigenvector in dense fallback")
    vec = _sign_fix(vec / nrm)
    residual = float(np.max(np.abs(m @ vec - value * vec)))
    return value, vec, residual


def leading_eig(m, tol=DEFAULT_TOL, max_iter=None, shift=None):
    """Leading (largest real) eigenpair of a square matrix by power iteration.

    The iteration runs on ``m + shift*I`` so that the target eigenvalue is
    strictly dominant; the shift is subtracted from the reported value and the
    residual is computed against the unshifted matrix.  If the iteration does
    not reach ``tol`` (e.g. defective or modulus-tied spectra), a dense
    eigensolve fallback is used.  The vector has unit 2-norm and its
    largest-magnitude entry is positive.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidParamsError("leading_eig needs a square matrix")
    n = m.shape[0]
    if not np.any(m):
        raise InvalidParamsError("leading_eig called on a zero matrix")
    if max_iter is None:
        max_iter = 100 * n
    if shift is None:
        # Half the max absolute row sum keeps sign-symmetric spectra
        # (bipartite adjacency) from producing a modulus tie.
        shift = 0.5 * float(np.max(np.sum(np.abs(m), axis=1)))
    ms = m + shift * np.eye(n)
    # Deterministic generic start; structured vectors (e.g. all-ones) can be
    # exact non-dominant eigenvectors and freeze the iteration.
    v = np.random.default_rng(0x5EED).random(n) + 0.5
    v /= np.linalg.norm(v)
    value = 0.0
    residual = np.inf
    it = 0
    check_every = 8
    while it < max_iter:
        for _ in range(check_every):
            w = ms @ v
            nw = np.linalg.norm(w)
            if nw == 0:
                # Iterate fell into the nullspace; restart from a basis vector.
                w = np.zeros(n)
                w[it % n] = 1.0
                nw = 1.0
            v = w / nw
            it += 1
        w = ms @ v
        value = float(v @ w) - shift
        residual = float(np.max(np.abs(m @ v - value * v)))
        if residual <= tol * max(1.0, abs(value)):
            break
    if residual > tol * max(1.0, abs(value)):
        value, v, residual = _dense_leading(m)
    v = _sign_fix(v)
    return LeadingEigenpair(value=value, vector=v, residual=residual, iterations=it)
