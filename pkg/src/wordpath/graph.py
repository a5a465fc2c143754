"""Growing undirected simple graph with degree-proportional sampling.

Node ids are dense integers in insertion order.  The structure keeps, besides
adjacency sets and degrees, a flat endpoint list in which node ``i`` appears
``k_i`` times; a uniform draw from it is an exact linear-preferential draw.
"""

from __future__ import annotations

import bisect
import math

import numpy as np

from ._rng import SplitMix64
from .errors import InsufficientDataError


class Graph:
    """Undirected simple graph; no self-loops, no multi-edges."""

    __slots__ = ("adj", "degrees", "endpoints", "edges_u", "edges_v")

    def __init__(self):
        self.adj: list[set[int]] = []
        self.degrees: list[int] = []
        # endpoint list: every edge contributes both ends; len == 2E
        self.endpoints: list[int] = []
        # edges in insertion order (rewiring mutates slots in place)
        self.edges_u: list[int] = []
        self.edges_v: list[int] = []

    @property
    def n_nodes(self) -> int:
        return len(self.adj)

    @property
    def n_edges(self) -> int:
        return len(self.edges_u)

    def add_node(self) -> int:
        self.adj.append(set())
        self.degrees.append(0)
        return len(self.adj) - 1

    def add_edge(self, i: int, j: int) -> bool:
        """Insert edge (i, j); returns False as a no-op if it already exists."""
        n = len(self.adj)
        if i == j:
            raise ValueError(f"self-loop at node {i} not allowed")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) references a missing node (N={n})")
        if j in self.adj[i]:
            return False
        self.adj[i].add(j)
        self.adj[j].add(i)
        self.degrees[i] += 1
        self.degrees[j] += 1
        self.endpoints.append(i)
        self.endpoints.append(j)
        self.edges_u.append(i)
        self.edges_v.append(j)
        return True

    def rewire_edge(self, slot: int, kept: int, new_target: int) -> None:
        """Replace one endpoint of the edge stored at ``slot``.

        The edge keeps ``kept`` and moves its other end to ``new_target``.
        Endpoint-list entries live at fixed positions 2*slot and 2*slot+1
        because edges are never deleted, so the swap is O(1) and the list
        stays exactly degree-proportional.
        """
        u, v = self.edges_u[slot], self.edges_v[slot]
        if kept == u:
            removed = v
        elif kept == v:
            removed = u
        else:
            raise ValueError(f"node {kept} is not an endpoint of edge slot {slot}")
        if new_target == kept:
            raise ValueError(f"rewire would create self-loop at {kept}")
        if not 0 <= new_target < len(self.adj):
            raise ValueError(f"rewire target {new_target} out of range")
        if new_target in self.adj[kept]:
            raise ValueError(f"rewire would duplicate edge ({kept}, {new_target})")
        self.adj[kept].discard(removed)
        self.adj[removed].discard(kept)
        self.adj[kept].add(new_target)
        self.adj[new_target].add(kept)
        self.degrees[removed] -= 1
        self.degrees[new_target] += 1
        if removed == self.edges_u[slot]:
            self.edges_u[slot] = new_target
            self.endpoints[2 * slot] = new_target
        else:
            self.edges_v[slot] = new_target
            self.endpoints[2 * slot + 1] = new_target

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def neighbors(self, i: int) -> set[int]:
        return self.adj[i]

    def edges(self):
        """Edges in insertion order as (u, v) pairs."""
        return zip(self.edges_u, self.edges_v)

    def check_handshake(self) -> None:
        """Assert sum of degrees == 2E; cheap structural sanity check."""
        if sum(self.degrees) != 2 * self.n_edges:
            raise AssertionError("handshake violated: sum(k) != 2E")

    def to_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr int64, indices int32) adjacency in CSR layout for BFS.

        Rows are filled from the adjacency sets; neighbor order within a row
        is unspecified, which BFS distances do not depend on.
        """
        n = self.n_nodes
        indptr = np.zeros(n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(np.asarray(self.degrees, dtype=np.int64))
        indices = np.empty(int(indptr[-1]), dtype=np.int32)
        pos = 0
        for nbrs in self.adj:
            ln = len(nbrs)
            indices[pos:pos + ln] = np.fromiter(nbrs, dtype=np.int32, count=ln)
            pos += ln
        return indptr, indices


def chain_graph(n0: int) -> Graph:
    """Path graph on n0 serially connected nodes (the standard network seed)."""
    if n0 < 1:
        raise ValueError("chain seed needs at least one node")
    g = Graph()
    for _ in range(n0):
        g.add_node()
    for i in range(n0 - 1):
        g.add_edge(i, i + 1)
    return g


def star_graph(n: int) -> Graph:
    """Hub node 0 connected to n-1 leaves."""
    if n < 1:
        raise ValueError("star needs at least one node")
    g = Graph()
    g.adj = [set(range(1, n))] + [{0} for _ in range(n - 1)]
    g.degrees = [n - 1] + [1] * (n - 1)
    g.edges_u = [0] * (n - 1)
    g.edges_v = list(range(1, n))
    g.endpoints = [x for i in range(1, n) for x in (0, i)]
    return g


def complete_graph(n: int) -> Graph:
    """All pairs connected.  Bulk-built: add_edge would be quadratic calls."""
    if n < 1:
        raise ValueError("complete graph needs at least one node")
    g = Graph()
    full = frozenset(range(n))
    g.adj = [set(full - {i}) for i in range(n)]
    g.degrees = [n - 1] * n
    iu, iv = np.triu_indices(n, 1)
    g.edges_u = iu.tolist()
    g.edges_v = iv.tolist()
    g.endpoints = np.column_stack((iu, iv)).ravel().tolist()
    return g


class PreferentialSampler:
    """Degree-weighted node sampler.

    Linear mode draws uniformly from the endpoint list, which is exactly
    proportional to degree.  Nonlinear mode weights node i by k_i**xi and
    draws by inverse CDF over a prefix-sum array; call :meth:`refresh` after
    the graph (or xi) changes -- weights are deliberately not tracked live
    because growth models rebuild at most once per step anyway.
    """

    def __init__(self, g: Graph, xi: float | None = None):
        self.g = g
        self.xi = xi
        self._cum: list[float] | None = None
        self._total = 0.0
        if xi is not None:
            self.refresh()

    def refresh(self, xi: float | None = None) -> None:
        if xi is not None:
            self.xi = xi
        if self.xi is None:
            return
        if self.xi < 0:
            raise ValueError("preference exponent must be >= 0")
        cum = []
        total = 0.0
        for k in self.g.degrees:
            if k > 0:
                total += math.pow(k, self.xi)
            cum.append(total)
        self._cum = cum
        self._total = total

    def draw(self, rng: SplitMix64) -> int:
        if self.xi is None:
            if not self.g.endpoints:
                raise ValueError("linear preferential draw on a graph with no edges")
            return self.g.endpoints[rng.below(len(self.g.endpoints))]
        if self._cum is None:
            self.refresh()
        if self._total <= 0.0:
            raise ValueError("nonlinear preferential draw with all degrees zero")
        u = rng.random() * self._total
        idx = bisect.bisect_right(self._cum, u)
        if idx >= len(self._cum):
            idx = len(self._cum) - 1
        return idx


def sample_preferential(g: Graph, rng: SplitMix64, xi: float | None = None) -> int:
    """Draw a node with probability k_i/2E (linear) or k_i**xi-weighted.

    Raises ValueError when no positive-degree node exists; callers that can
    encounter an isolated seed fall back to a uniform node draw themselves.
    """
    return PreferentialSampler(g, xi).draw(rng)


def sample_edge_pair(g: Graph, rng: SplitMix64, max_tries: int = 10_000):
    """Draw a non-adjacent pair (i, j) with probability proportional to k_i*k_j.

    Both endpoints are drawn independently degree-proportionally; draws that
    hit a self-pair or an existing edge are rejected and retried.  Returns
    None ("exhausted") if the cap is reached or no non-edge exists, so growth
    steps near the complete-graph attractor can skip the edge and proceed.
    """
    n, e = g.n_nodes, g.n_edges
    if e < 1:
        raise ValueError("edge pair draw needs at least one edge")
    if e >= n * (n - 1) // 2:
        return None
    endpoints = g.endpoints
    m = len(endpoints)
    adj = g.adj
    for _ in range(max_tries):
        i = endpoints[rng.below(m)]
        j = endpoints[rng.below(m)]
        if i != j and j not in adj[i]:
            return (i, j)
    return None


def fit_degree_exponent(degrees, kmin: int, gamma_max: float = 20.0) -> float:
    """Discrete power-law exponent by maximum likelihood over {k >= kmin}.

    Maximizes the zeta-distribution likelihood P(k) = k**-gamma / zeta(gamma,
    kmin).  Needs at least 100 tail observations.  Degenerate inputs (all
    degrees equal) push the optimum to ``gamma_max``, which callers should
    read as "not scale-free".
    """
    from scipy.optimize import minimize_scalar
    from scipy.special import zeta

    tail = np.asarray([k for k in degrees if k >= kmin], dtype=np.float64)
    if tail.size < 100:
        raise InsufficientDataError(
            f"need >=100 degrees >= kmin={kmin}, got {tail.size}"
        )
    mean_log = float(np.mean(np.log(tail)))

    def neg_loglike(gamma: float) -> float:
        return gamma * mean_log + math.log(zeta(gamma, kmin))

    res = minimize_scalar(neg_loglike, bounds=(1.05, gamma_max), method="bounded")
    return float(res.x)


def degree_exponent(g: Graph, kmin: int) -> float:
    """Maximum-likelihood power-law exponent of the degree distribution tail."""
    return fit_degree_exponent(g.degrees, kmin)


def synthetic_power_law_degrees(gamma: float, n: int, seed: int, kmin: int = 1,
                                kmax: int = 10_000) -> np.ndarray:
    """Sample n degrees from a discrete power law (test oracle for the MLE)."""
    ks = np.arange(kmin, kmax + 1, dtype=np.float64)
    pmf = ks ** -gamma
    cdf = np.cumsum(pmf / pmf.sum())
    rng = SplitMix64(seed)
    u = np.array([rng.random() for _ in range(n)])
    idx = np.minimum(np.searchsorted(cdf, u, side="right"), len(ks) - 1)
    return kmin + idx
