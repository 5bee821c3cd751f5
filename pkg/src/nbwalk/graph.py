"""Simple undirected graphs: parsing, validation, and derived matrices."""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParamsError, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with dense adjacency.

    Nodes are dense 0-indexed internally; ``labels`` maps the internal id
    back to the id used in the input file.
    """

    n: int
    edges: tuple  # tuple of (u, v) pairs with u < v
    labels: tuple = None

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParamsError(f"node count must be >= 1, got {self.n}")
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        for (u, v) in self.edges:
            if u == v:
                raise InvalidParamsError(f"self-loop at node {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParamsError(f"edge ({u}, {v}) out of range for n={self.n}")

    @property
    def num_edges(self):
        return len(self.edges)

    @property
    def adjacency(self):
        a = np.zeros((self.n, self.n))
        for (u, v) in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    @property
    def degrees(self):
        d = np.zeros(self.n, dtype=np.int64)
        for (u, v) in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def fingerprint(self):
        h = hashlib.sha256()
        h.update(str(self.n).encode())
        for (u, v) in self.edges:
            h.update(f"{u},{v};".encode())
        return h.hexdigest()

    @staticmethod
    def from_edges(n, edges, labels=None):
        """Build a graph from an iterable of (u, v) pairs, collapsing duplicates."""
        seen = set()
        out = []
        for (u, v) in edges:
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                continue
            seen.add((u, v))
            out.append((u, v))
        return Graph(n=n, edges=tuple(sorted(out)), labels=labels)


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Symmetric nonnegative edge weights with zero diagonal."""

    n: int
    weights: np.ndarray = field(repr=False)

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.shape != (self.n, self.n):
            raise InvalidParamsError("weight matrix shape mismatch")
        if np.any(w < 0):
            raise InvalidParamsError("negative edge weight")
        if np.max(np.abs(w - w.T)) > 0:
            raise InvalidParamsError("weight matrix must be symmetric")
        if np.any(np.diag(w) != 0):
            raise InvalidParamsError("weight matrix must have zero diagonal")
        object.__setattr__(self, "weights", w)

    @property
    def strengths(self):
        return self.weights.sum(axis=1)

    @property
    def total_strength(self):
        return float(self.strengths.sum())


@dataclass(frozen=True)
class GraphValidation:
    connected: bool
    is_tree: bool
    min_degree: int
    node_count: int
    edge_count: int


def parse_edge_list(text, index_base=0, delimiter=None):
    """Parse an edge-list text into a :class:`Graph`.

    Lines hold two integer node ids, ``#`` starts a comment, blank lines are
    ignored.  An optional ``%N <count>`` header fixes the node count, which
    allows isolated nodes.  ``delimiter=None`` splits on whitespace; pass
    ``","`` for comma-separated input.  Duplicate edges collapse to one with
    a warning; self-loops are rejected.
    """
    if index_base not in (0, 1):
        raise InvalidParamsError(f"index_base must be 0 or 1, got {index_base}")
    header_n = None
    raw_edges = []
    max_id = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("%N"):
            try:
                header_n = int(line[2:].strip())
            except ValueError:
                raise ParseError("malformed %N header", lineno)
            if header_n < 1:
                raise ParseError("node count in %N header must be >= 1", lineno)
            continue
        tokens = line.split(delimiter)
        tokens = [t for t in (tok.strip() for tok in tokens) if t]
        if len(tokens) != 2:
            raise ParseError(f"expected two node ids, got {len(tokens)} tokens", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer node id in {tokens!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at node {u}", lineno)
        if u < index_base or v < index_base:
            raise ParseError(f"node id below index base {index_base}", lineno)
        u -= index_base
        v -= index_base
        raw_edges.append((u, v))
        top = max(u, v)
        max_id = top if max_id is None else max(max_id, top)
    if header_n is None and max_id is None:
        raise ParseError("empty edge list and no %N header")
    n = header_n if header_n is not None else max_id + 1
    if max_id is not None and max_id >= n:
        raise ParseError(f"node id {max_id + index_base} out of range for %N {n}")
    dedup = set()
    edges = []
    for (u, v) in raw_edges:
        key = (min(u, v), max(u, v))
        if key in dedup:
            logger.warning("duplicate edge (%d, %d) collapsed", u + index_base, v + index_base)
            continue
        dedup.add(key)
        edges.append(key)
    labels = tuple(range(index_base, n + index_base))
    return Graph(n=n, edges=tuple(sorted(edges)), labels=labels)


def validate(g):
    """Connectivity/tree flags used to gate the walk constructions."""
    adj = [[] for _ in range(g.n)]
    for (u, v) in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    connected = count == g.n
    is_tree = connected and g.num_edges == g.n - 1
    degs = g.degrees
    return GraphValidation(
        connected=connected,
        is_tree=is_tree,
        min_degree=int(degs.min()) if g.n else 0,
        node_count=g.n,
        edge_count=g.num_edges,
    )


def laplacian(g):
    """Combinatorial Laplacian: degree matrix minus adjacency."""
    a = g.adjacency
    return np.diag(a.sum(axis=1)) - a


def weighted_from_centrality(g, x):
    """Weighted graph with w_ij = a_ij * x_i * x_j for a nonnegative vector x."""
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise InvalidParamsError(f"centrality vector length {x.shape} != {g.n}")
    if np.any(x < 0):
        raise InvalidParamsError("negative centrality entry")
    w = g.adjacency * np.outer(x, x)
    return WeightedGraph(n=g.n, weights=w)


def weighted_laplacian(w):
    """Laplacian of a weighted graph: strengths on the diagonal minus weights."""
    return np.diag(w.strengths) - w.weights
