"""Non-backtracking matrix, its 2Nx2N reduction, and node centralities."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceFailureError, InvalidParamsError, NotConnectedError, TreeGraphError
from .graph import validate
from .spectral import DEFAULT_TOL, _dense_leading, leading_eig


@dataclass(frozen=True, eq=False)
class NbMatrix:
    """Explicit 2Ex2E non-backtracking matrix.

    ``edge_index`` lists the directed edges (i, j) in lexicographic order;
    row/column k of ``b`` corresponds to ``edge_index[k]``.
    """

    edge_index: tuple
    b: np.ndarray = field(repr=False)


@dataclass(frozen=True, eq=False)
class NbCentrality:
    """Leading eigenvalue kappa with outgoing (x) and incoming (y) centralities.

    Normalization: the stacked vector (x | x/kappa) has unit 2-norm.
    """

    kappa: float
    x: np.ndarray = field(repr=False)
    y: np.ndarray = field(repr=False)
    residual: float = 0.0


def directed_edges(g):
    """All 2E directed edges in lexicographic order."""
    out = []
    for (u, v) in g.edges:
        out.append((u, v))
        out.append((v, u))
    return tuple(sorted(out))


def build_nb_matrix(g):
    """Entry (i->j, k->l) is 1 iff j == k and i != l."""
    if g.num_edges < 1:
        raise InvalidParamsError("graph has no edges")
    idx = directed_edges(g)
    pos = {e: k for k, e in enumerate(idx)}
    m = len(idx)
    b = np.zeros((m, m))
    adj = [[] for _ in range(g.n)]
    for (u, v) in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for (i, j) in idx:
        row = pos[(i, j)]
        for l in adj[j]:
            if l != i:
                b[row, pos[(j, l)]] = 1.0
    return NbMatrix(edge_index=idx, b=b)


def build_m_matrix(g):
    """2Nx2N block matrix [[A, I-D], [I, 0]] sharing B's real spectrum."""
    a = g.adjacency
    n = g.n
    eye = np.eye(n)
    top = np.hstack([a, eye - np.diag(g.degrees.astype(float))])
    bottom = np.hstack([eye, np.zeros((n, n))])
    return np.vstack([top, bottom])


def _reduced_residual(g, kappa, x):
    """Max-norm residual of (A + (I - D)/kappa - kappa*I) x, scaled to unit x."""
    nrm = float(np.linalg.norm(x))
    if nrm == 0.0 or kappa <= 0.0:
        return np.inf
    r = g.adjacency @ x + (1.0 - g.degrees) * x / kappa - kappa * x
    return float(np.max(np.abs(r))) / nrm


def _polish_kappa(g, x, kappa0):
    """Refine kappa from an accurate vector via the exact quadratic identity.

    The true pair satisfies kappa^2 (x.x) - kappa (x.Ax) + x.(D - I)x = 0, so
    the larger root is second-order accurate in the vector error.  That matters
    when the dominant eigenvalue is defective (cycles and other graphs whose
    2-core is a single cycle), where eigensolvers lose half the available
    digits on the eigenvalue itself.
    """
    qa = float(x @ x)
    if qa <= 0.0:
        return kappa0
    qb = float(x @ (g.adjacency @ x))
    qc = float(((g.degrees - 1.0) * x) @ x)
    disc = max(qb * qb - 4.0 * qa * qc, 0.0)
    root = (qb + np.sqrt(disc)) / (2.0 * qa)
    if root <= 0.0:
        return kappa0
    # Near a defective (double) root the residual is flat in kappa, so it
    # cannot arbitrate; take the quadratic root unless it is clearly worse.
    if _reduced_residual(g, root, x) > 2.0 * _reduced_residual(g, kappa0, x) + 1e-15:
        return kappa0
    return root


def _stacked_gap(kappa, z, n):
    """How far z is from the (x | x/kappa) block structure of a true M pair."""
    if kappa <= 0.0:
        return np.inf
    return float(np.max(np.abs(kappa * z[n:] - z[:n])))


def _leading_m_pair(g, tol):
    """Leading eigenpair of the M matrix with a structural validity check.

    Power iteration on a defective spectrum can return a pseudo-pair with a
    deceptively small residual, or settle into an invariant subspace of a
    smaller eigenvalue.  A true pair has its bottom block equal to the top
    block divided by kappa; violations force the dense solve.
    """
    m = build_m_matrix(g)
    n = g.n
    pair = leading_eig(m, tol=tol, max_iter=100 * 2 * n, shift=float(g.degrees.max()))
    kappa, z = pair.value, pair.vector
    if kappa <= 1e-9 or _stacked_gap(kappa, z, n) > 1e-6:
        kappa, z, _ = _dense_leading(m)
        if kappa <= 1e-9 or _stacked_gap(kappa, z, n) > 1e-4:
            raise ConvergenceFailureError(
                "leading eigenpair violates the stacked-vector structure",
                residual=_stacked_gap(kappa, z, n),
            )
    return kappa, z


def _clean_nonnegative(x):
    """Orient a Perron-like vector positively and wipe sign noise."""
    if np.sum(x) < 0:
        x = -x
    mx = float(np.max(np.abs(x)))
    if mx == 0.0:
        raise ConvergenceFailureError("centrality vector is identically zero")
    x = x.copy()
    x[np.abs(x) < 1e-14 * mx] = 0.0
    return np.maximum(x, 0.0)


def _leading_node_pair(g, tol):
    """Kappa and cleaned node vector from M, robust to defective spectra.

    A connected non-tree graph has exactly one cycle iff E == N, and then the
    dominant eigenvalue is kappa = 1 with a defective M -- the one regime
    where iterative and dense eigensolvers alike lose half the available
    digits, because the vector can absorb the eigenvalue error while keeping
    the residual small.  In that case the eigen-equation at kappa = 1 reduces
    to (A - D) x = 0, whose kernel on a connected graph is the constant
    vector, so the exact pair is available in closed form.
    """
    n = g.n
    if g.num_edges == n:
        x = np.full(n, 1.0 / np.sqrt(n))
        return 1.0, x, _reduced_residual(g, 1.0, x)
    kappa, z = _leading_m_pair(g, tol)
    x = _clean_nonnegative(z[:n])
    kappa = _polish_kappa(g, x, kappa)
    return kappa, x, _reduced_residual(g, kappa, x)


def nb_centrality(g, tol=DEFAULT_TOL):
    """Kappa and centralities via the leading eigenpair of the M matrix.

    Requires a connected non-tree graph; otherwise kappa would be zero and
    the transition construction downstream is undefined.
    """
    flags = validate(g)
    if not flags.connected:
        raise NotConnectedError("graph is not connected")
    if flags.is_tree:
        raise TreeGraphError("graph is a tree; non-backtracking eigenvalue is zero")
    kappa, x, residual = _leading_node_pair(g, tol)
    gate = 1e3 * tol * max(1.0, kappa)
    if residual > gate:
        raise ConvergenceFailureError(
            f"reduced eigen-equation residual {residual:.3e} exceeds tol", residual=residual
        )
    # Unit norm of the stacked (x | x/kappa) vector.
    scale = np.sqrt(np.sum(x * x) * (1.0 + 1.0 / kappa**2))
    x = x / scale
    y = (g.degrees - 1.0) * x / kappa
    return NbCentrality(kappa=kappa, x=x, y=y, residual=residual)


def verify_b_vs_m(g, tol=DEFAULT_TOL, max_directed_edges=400):
    """Cross-check: leading eigenvalue of explicit B vs the M reduction.

    The explicit-B side is quadratic in 2E memory, so a cap guards it.
    """
    if 2 * g.num_edges > max_directed_edges:
        raise InvalidParamsError(
            f"2E = {2 * g.num_edges} exceeds cap {max_directed_edges} for explicit B"
        )
    nb = build_nb_matrix(g)
    pair_b = leading_eig(nb.b, tol=tol, shift=1.0)
    # Summing the edge-vector over outgoing edges gives the node vector, so
    # both sides can be polished through the same quadratic identity.
    x_b = np.zeros(g.n)
    for k, (i, _j) in enumerate(nb.edge_index):
        x_b[i] += pair_b.vector[k]
    if g.num_edges == g.n:
        # Unicyclic graphs make the eigenvalue a double root of the quadratic
        # identity; the discriminant is then pure noise and the sqrt term in
        # the generic polish amplifies it, so use the noise-free double root.
        kappa_b = float(x_b @ (g.adjacency @ x_b)) / (2.0 * float(x_b @ x_b))
    else:
        kappa_b = _polish_kappa(g, x_b, pair_b.value)
    kappa_m, _x, _res = _leading_node_pair(g, tol)
    return {
        "kappa_b": kappa_b,
        "kappa_m": kappa_m,
        "max_gap": abs(kappa_b - kappa_m),
    }
