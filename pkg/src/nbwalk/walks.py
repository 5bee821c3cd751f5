"""Transition matrices, stationary distributions, and the IPR metric."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParamsError, NotConnectedError, ZeroDenominatorError
from .graph import validate
from .nbcentrality import nb_centrality
from .spectral import DEFAULT_TOL, sym_eig


class WalkKind(str, enum.Enum):
    TURW = "turw"
    MERW = "merw"
    NBCRW = "nbcrw"


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    kind: WalkKind
    p: np.ndarray = field(repr=False)
    fingerprint: str = ""


@dataclass(frozen=True, eq=False)
class StationaryDistribution:
    kind: WalkKind
    pi: np.ndarray = field(repr=False)
    method: str = "closed_form"


def turw_transition(g):
    """Uniform transition over neighbors: p_ij = a_ij / d_i."""
    degs = g.degrees
    if np.any(degs == 0):
        raise NotConnectedError("isolated node: unbiased walk is undefined")
    p = g.adjacency / degs[:, None]
    return TransitionMatrix(kind=WalkKind.TURW, p=p, fingerprint=g.fingerprint())


def adjacency_leading_eigvec(g, tol=DEFAULT_TOL):
    """Leading eigenvalue and positive unit eigenvector of the adjacency matrix."""
    if not validate(g).connected:
        raise NotConnectedError("graph is not connected")
    dec = sym_eig(g.adjacency, tol=tol)
    lam1 = float(dec.eigenvalues[-1])
    psi1 = dec.eigenvectors[:, -1]
    if psi1[int(np.argmax(np.abs(psi1)))] < 0:
        psi1 = -psi1
    return lam1, psi1


def merw_transition(g, tol=DEFAULT_TOL):
    """Eigenvector-centrality biased walk: p_ij = (a_ij/lambda1) psi1_j/psi1_i."""
    lam1, psi1 = adjacency_leading_eigvec(g, tol)
    p = g.adjacency * psi1[None, :] / (lam1 * psi1[:, None])
    return TransitionMatrix(kind=WalkKind.MERW, p=p, fingerprint=g.fingerprint())


def nbcrw_transition(g, tol=DEFAULT_TOL, regularize=None):
    """Non-backtracking-centrality biased walk: p_ij = a_ij x_j / sum_k a_ik x_k.

    If a node's neighborhood carries vanishing centrality the construction
    errors; ``regularize`` substitutes x <- x + delta before weighting, which
    deviates from the defining formula and is flagged for that reason.
    """
    nc = nb_centrality(g, tol=tol)
    x = nc.x
    if regularize is not None:
        if regularize <= 0:
            raise InvalidParamsError("regularization delta must be positive")
        x = x + regularize
    a = g.adjacency
    denom = a @ x
    eps = 1e-12 * max(float(denom.max()), 1e-300)
    bad = np.where(denom <= eps)[0]
    if bad.size:
        raise ZeroDenominatorError(int(bad[0]))
    p = a * x[None, :] / denom[:, None]
    return TransitionMatrix(kind=WalkKind.NBCRW, p=p, fingerprint=g.fingerprint())


def stationary_closed(kind, g, tol=DEFAULT_TOL):
    """Closed-form stationary distribution for each walk kind."""
    kind = WalkKind(kind)
    if kind is WalkKind.TURW:
        degs = g.degrees.astype(float)
        if np.any(degs == 0):
            raise NotConnectedError("isolated node: unbiased walk is undefined")
        pi = degs / degs.sum()
    elif kind is WalkKind.MERW:
        _, psi1 = adjacency_leading_eigvec(g, tol)
        pi = psi1**2
        pi = pi / pi.sum()
    else:
        nc = nb_centrality(g, tol=tol)
        kappa = nc.kappa
        weights = ((kappa**2 - 1.0) / kappa + g.degrees / kappa) * nc.x**2
        q = weights.sum()
        if q <= 0:
            raise ZeroDenominatorError(-1, "degenerate stationary normalization")
        pi = weights / q
    return StationaryDistribution(kind=kind, pi=pi, method="closed_form")


def stationary_generic(p, tol=DEFAULT_TOL):
    """Oracle: solve pi P = pi with the normalization row appended."""
    mat = p.p
    n = mat.shape[0]
    a = np.vstack([mat.T - np.eye(n), np.ones((1, n))])
    b = np.zeros(n + 1)
    b[-1] = 1.0
    pi, _, rank, _ = np.linalg.lstsq(a, b, rcond=None)
    if rank < n:
        raise InvalidParamsError("singular stationary system: chain is reducible")
    res = float(np.max(np.abs(a @ pi - b)))
    if res > 1e-8:
        raise InvalidParamsError(f"stationary solve residual {res:.3e} too large")
    return StationaryDistribution(kind=p.kind, pi=pi, method="linear_solve")


def detailed_balance_residual(pi, p):
    """max_ij |pi_i p_ij - pi_j p_ji|."""
    pi = np.asarray(pi, dtype=float)
    flux = pi[:, None] * p.p
    return float(np.max(np.abs(flux - flux.T)))


def ipr(pi):
    """Inverse participation ratio sum(pi^2); in [1/N, 1] for a distribution."""
    pi = np.asarray(pi, dtype=float)
    return float(np.sum(pi * pi))


def transition(kind, g, tol=DEFAULT_TOL):
    """Transition matrix dispatch by walk kind."""
    kind = WalkKind(kind)
    if kind is WalkKind.TURW:
        return turw_transition(g)
    if kind is WalkKind.MERW:
        return merw_transition(g, tol)
    return nbcrw_transition(g, tol)
